use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Frac;
use crate::error::{Error, Result};
use crate::lie::{Vector4, DIM};

use super::exterior::{basis_masks, mask_index, Ext};

/// A homogeneous component of one of the three superalgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GradedComponent {
    /// `a`-vectors, grade `a - 1`.
    MultiVector(usize),
    /// `p`-forms, grade `-(p + 1)`.
    Form(usize),
    /// The Lie algebra itself inside the extended algebra, grade 0.
    VectorPart,
}

impl GradedComponent {
    pub fn grade(&self) -> i32 {
        match *self {
            GradedComponent::MultiVector(a) => a as i32 - 1,
            GradedComponent::Form(p) => -(p as i32 + 1),
            GradedComponent::VectorPart => 0,
        }
    }

    /// Superalgebra parity, `grade mod 2`.
    pub fn parity(&self) -> u8 {
        self.grade().rem_euclid(2) as u8
    }

    pub fn dim(&self) -> usize {
        match *self {
            GradedComponent::MultiVector(a) | GradedComponent::Form(a) => binomial(DIM, a),
            GradedComponent::VectorPart => DIM,
        }
    }

    /// Exterior degree; a `VectorPart` element has degree 1.
    pub fn degree(&self) -> usize {
        match *self {
            GradedComponent::MultiVector(a) | GradedComponent::Form(a) => a,
            GradedComponent::VectorPart => 1,
        }
    }

    pub fn short_name(&self) -> String {
        match *self {
            GradedComponent::MultiVector(a) => format!("{a}-vectors"),
            GradedComponent::Form(p) => format!("{p}-forms"),
            GradedComponent::VectorPart => "vectors".into(),
        }
    }

    fn letter(&self) -> char {
        match self {
            GradedComponent::Form(_) => 'z',
            _ => 'y',
        }
    }

    /// Name of the `idx`-th canonical basis element, e.g. `y1∧y3` or `z2`.
    pub fn basis_name(&self, idx: usize) -> String {
        let masks = basis_masks(self.degree());
        format_mask(masks[idx], self.letter())
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn format_mask(mask: u8, letter: char) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..DIM).filter(|i| mask >> i & 1 == 1).map(|i| format!("{letter}{}", i + 1)).collect::<Vec<_>>().join("∧")
}

/// A linear combination of canonical basis words of one component.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedElement {
    component: GradedComponent,
    coords: Vec<Frac>,
}

impl GradedElement {
    pub fn new(component: GradedComponent, coords: Vec<Frac>) -> Result<Self> {
        if coords.len() != component.dim() {
            return Err(Error::Arithmetic(format!(
                "{} has dimension {}, got {} coordinates",
                component.short_name(),
                component.dim(),
                coords.len()
            )));
        }
        Ok(GradedElement { component, coords })
    }

    pub fn zero(component: GradedComponent) -> Self {
        GradedElement { component, coords: vec![Frac::zero(); component.dim()] }
    }

    pub fn basis(component: GradedComponent, idx: usize) -> Self {
        let mut e = Self::zero(component);
        e.coords[idx] = Frac::one();
        e
    }

    /// Basis word with the given 1-based indices, in the given order.
    pub fn word(component: GradedComponent, indices: &[usize]) -> Self {
        let mut ext = Ext::one();
        for &i in indices {
            ext = ext.wedge(&Ext::single(1 << (i - 1), Frac::one()));
        }
        Self::from_ext(component, &ext)
    }

    pub fn vector(v: &Vector4) -> Self {
        GradedElement { component: GradedComponent::VectorPart, coords: v.0.to_vec() }
    }

    pub fn multivector(v: &Vector4) -> Self {
        GradedElement { component: GradedComponent::MultiVector(1), coords: v.0.to_vec() }
    }

    pub fn component(&self) -> GradedComponent {
        self.component
    }

    pub fn coords(&self) -> &[Frac] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Frac::is_zero)
    }

    pub fn to_vector(&self) -> Option<Vector4> {
        match self.component {
            GradedComponent::VectorPart | GradedComponent::MultiVector(1) => {
                Some(Vector4(std::array::from_fn(|k| self.coords[k].clone())))
            }
            _ => None,
        }
    }

    pub fn add(&self, other: &GradedElement) -> Result<GradedElement> {
        if self.component != other.component {
            return Err(Error::MixedKinds(format!(
                "cannot add {} and {}",
                self.component.short_name(),
                other.component.short_name()
            )));
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(GradedElement { component: self.component, coords })
    }

    pub fn scale(&self, c: &Frac) -> GradedElement {
        GradedElement { component: self.component, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> GradedElement {
        self.scale(&Frac::int(-1))
    }

    /// Nonzero coordinates as `(basis index, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Frac)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub(crate) fn to_ext(&self) -> Ext {
        let masks = basis_masks(self.component.degree());
        let mut map = BTreeMap::new();
        for (i, c) in self.terms() {
            map.insert(masks[i], c.clone());
        }
        Ext::from_map(map)
    }

    /// Keeps only the part of `ext` in this component's degree.
    pub(crate) fn from_ext(component: GradedComponent, ext: &Ext) -> Self {
        let mut e = Self::zero(component);
        let deg = component.degree();
        for (mask, c) in ext.terms() {
            if mask.count_ones() as usize == deg {
                e.coords[mask_index(mask)] = c.clone();
            }
        }
        e
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.component;
        f.write_str(&crate::lie::algebra::format_combination(&self.coords, |i| c.basis_name(i)))
    }
}
