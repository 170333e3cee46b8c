//! Basis letters of each superalgebra and their bracket table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::Frac;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra4;

use super::element::{GradedComponent, GradedElement};
use super::ops::{extended_bracket, form_bracket, schouten_bracket};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Tangent,
    Cotangent,
    Extended,
}

impl ComplexKind {
    pub const ALL: [ComplexKind; 3] = [ComplexKind::Tangent, ComplexKind::Cotangent, ComplexKind::Extended];

    pub fn components(&self) -> Vec<GradedComponent> {
        match self {
            ComplexKind::Tangent => (1..=4).map(GradedComponent::MultiVector).collect(),
            ComplexKind::Cotangent => (0..=4).map(GradedComponent::Form).collect(),
            ComplexKind::Extended => std::iter::once(GradedComponent::VectorPart)
                .chain((0..=4).map(GradedComponent::Form))
                .collect(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ComplexKind::Tangent => "tangent",
            ComplexKind::Cotangent => "cotangent",
            ComplexKind::Extended => "extended",
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tangent" => Ok(ComplexKind::Tangent),
            "cotangent" => Ok(ComplexKind::Cotangent),
            "extended" => Ok(ComplexKind::Extended),
            _ => Err(Error::Parse(format!("unknown complex kind `{s}`"))),
        }
    }
}

/// The superalgebra bracket of the given structure.
pub fn super_bracket(kind: ComplexKind, u: &GradedElement, v: &GradedElement, l: &LieAlgebra4) -> Result<GradedElement> {
    match kind {
        ComplexKind::Tangent => schouten_bracket(u, v, l),
        ComplexKind::Cotangent => form_bracket(u, v, l),
        ComplexKind::Extended => extended_bracket(u, v, l),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub component: GradedComponent,
    pub index: usize,
}

impl Letter {
    pub fn grade(&self) -> i32 {
        self.component.grade()
    }

    pub fn element(&self) -> GradedElement {
        GradedElement::basis(self.component, self.index)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.component.basis_name(self.index))
    }
}

/// All basis letters of a structure, with `[letter_a, letter_b]` expanded
/// back into letters.
#[derive(Clone, Debug)]
pub struct LetterTable {
    kind: ComplexKind,
    letters: Vec<Letter>,
    table: Vec<Vec<Vec<(usize, Frac)>>>,
}

impl LetterTable {
    pub fn new(kind: ComplexKind, l: &LieAlgebra4) -> Result<Self> {
        let letters = Self::letters_of(kind);
        let mut table = vec![vec![Vec::new(); letters.len()]; letters.len()];
        for (a, la) in letters.iter().enumerate() {
            for (b, lb) in letters.iter().enumerate() {
                let r = super_bracket(kind, &la.element(), &lb.element(), l)?;
                let comp = r.component();
                table[a][b] = r
                    .terms()
                    .map(|(i, c)| {
                        let idx = letters
                            .iter()
                            .position(|x| x.component == comp && x.index == i)
                            .expect("bracket stays inside the structure");
                        (idx, c.clone())
                    })
                    .collect();
            }
        }
        Ok(LetterTable { kind, letters, table })
    }

    pub fn letters_of(kind: ComplexKind) -> Vec<Letter> {
        kind.components()
            .into_iter()
            .flat_map(|c| (0..c.dim()).map(move |index| Letter { component: c, index }))
            .collect()
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Frac)] {
        &self.table[a][b]
    }
}
