use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Assignment, Frac, Poly, Rational, Var};
use crate::error::{Error, Result};

pub const DIM: usize = 4;

/// Index of the unordered pair `i < j` among the six pairs of `0..4`.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < DIM);
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!(),
    }
}

pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A vector in the basis `y1..y4` with parameter-dependent coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector4(pub [Frac; DIM]);

impl Vector4 {
    pub fn zero() -> Self {
        Vector4::default()
    }

    /// The basis vector `y_{k+1}`.
    pub fn basis(k: usize) -> Self {
        let mut v = Self::zero();
        v.0[k] = Frac::one();
        v
    }

    pub fn from_rationals(xs: &[Rational; DIM]) -> Self {
        Vector4(std::array::from_fn(|k| Frac::constant(xs[k].clone())))
    }

    pub fn from_polys(xs: [Poly; DIM]) -> Self {
        Vector4(xs.map(Frac::from))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Frac::is_zero)
    }

    pub fn add(&self, other: &Vector4) -> Vector4 {
        Vector4(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }

    pub fn scale(&self, c: &Frac) -> Vector4 {
        Vector4(std::array::from_fn(|k| &self.0[k] * c))
    }

    pub fn coord(&self, k: usize) -> &Frac {
        &self.0[k]
    }
}

impl fmt::Debug for Vector4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Vector4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.0, |k| format!("y{}", k + 1)))
    }
}

/// Renders `Σ c_k · name(k)` as e.g. `C143*y3 + C144*y4`.
pub fn format_combination(coeffs: &[Frac], name: impl Fn(usize) -> String) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let n = name(k);
        let s = if c == &Frac::one() {
            n
        } else if c == &-Frac::one() {
            format!("-{n}")
        } else if c.is_poly() && c.num().num_terms() == 1 {
            format!("{c}*{n}")
        } else {
            format!("({c})*{n}")
        };
        parts.push(s);
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        match p.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    out
}

/// A four-dimensional Lie algebra (or bracket candidate) by structure
/// constants `[y_i, y_j] = Σ_k c_{ijk} y_k`. Only `i < j` is stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra4 {
    name: String,
    consts: [Vector4; 6],
    nonzero: Vec<Poly>,
}

/// One Jacobi residual: the `y_{coord+1}` coefficient of the cyclic sum
/// over the basis triple `triple` (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiResidual {
    pub triple: (usize, usize, usize),
    pub coord: usize,
    pub value: Frac,
}

impl LieAlgebra4 {
    pub fn new(name: impl Into<String>, consts: [Vector4; 6], nonzero: Vec<Poly>) -> Self {
        LieAlgebra4 { name: name.into(), consts, nonzero }
    }

    pub fn abelian() -> Self {
        Self::new("abelian", Default::default(), Vec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn nonzero(&self) -> &[Poly] {
        &self.nonzero
    }

    /// `[y_i, y_j]` for any 0-based `i, j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector4 {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.consts[pair_index(i, j)].clone(),
            std::cmp::Ordering::Equal => Vector4::zero(),
            std::cmp::Ordering::Greater => self.consts[pair_index(j, i)].scale(&-Frac::one()),
        }
    }

    /// `c_{ijk}` with 0-based indices.
    pub fn c(&self, i: usize, j: usize, k: usize) -> Frac {
        self.basis_bracket(i, j).0[k].clone()
    }

    pub fn structure(&self) -> &[Vector4; 6] {
        &self.consts
    }

    pub fn params(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        for v in &self.consts {
            for c in &v.0 {
                out.extend(c.vars());
            }
        }
        for p in &self.nonzero {
            out.extend(p.vars());
        }
        out
    }

    /// True when every structure constant is a rational number.
    pub fn is_numeric(&self) -> bool {
        self.consts.iter().all(|v| v.0.iter().all(|c| c.constant_value().is_some()))
    }

    pub fn bracket(&self, x: &Vector4, y: &Vector4) -> Vector4 {
        let mut out = Vector4::zero();
        for a in 0..DIM {
            if x.0[a].is_zero() {
                continue;
            }
            for b in 0..DIM {
                if a == b || y.0[b].is_zero() {
                    continue;
                }
                let coeff = &x.0[a] * &y.0[b];
                out = out.add(&self.basis_bracket(a, b).scale(&coeff));
            }
        }
        out
    }

    pub fn jacobi_residuals(&self) -> Vec<JacobiResidual> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    let (yi, yj, yk) = (Vector4::basis(i), Vector4::basis(j), Vector4::basis(k));
                    let s = self
                        .bracket(&self.bracket(&yi, &yj), &yk)
                        .add(&self.bracket(&self.bracket(&yj, &yk), &yi))
                        .add(&self.bracket(&self.bracket(&yk, &yi), &yj));
                    for (m, value) in s.0.into_iter().enumerate() {
                        out.push(JacobiResidual { triple: (i, j, k), coord: m, value });
                    }
                }
            }
        }
        out
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_residuals().iter().all(|r| r.value.is_zero())
    }

    /// Substitute parameter values; unassigned parameters stay symbolic.
    pub fn specialize(&self, point: &Assignment) -> Result<LieAlgebra4> {
        let mut consts: [Vector4; 6] = Default::default();
        for (dst, src) in consts.iter_mut().zip(&self.consts) {
            for k in 0..DIM {
                dst.0[k] = src.0[k].partial_eval(point)?;
            }
        }
        let mut nonzero = Vec::new();
        for p in &self.nonzero {
            let q = p.partial_eval(point);
            if q.is_zero() {
                return Err(Error::Degenerate(p.to_string()));
            }
            if q.constant_value().is_none() {
                nonzero.push(q);
            }
        }
        Ok(LieAlgebra4 { name: self.name.clone(), consts, nonzero })
    }

    /// Structure constants in the basis `e_i = Σ_a g[a][i] y_a`
    /// (the columns of `g`). Requires numeric structure constants.
    pub fn change_basis(&self, g: &[[Rational; DIM]; DIM]) -> Result<LieAlgebra4> {
        if !self.is_numeric() {
            return Err(Error::InvalidMode("change_basis needs numeric structure constants".into()));
        }
        let ginv = invert4(g)?;
        let cols: Vec<Vector4> = (0..DIM)
            .map(|i| Vector4::from_rationals(&std::array::from_fn(|a| g[a][i].clone())))
            .collect();
        let mut consts: [Vector4; 6] = Default::default();
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            let br = self.bracket(&cols[i], &cols[j]);
            let ys: [Rational; DIM] =
                std::array::from_fn(|k| br.0[k].constant_value().expect("numeric"));
            let new: [Rational; DIM] = std::array::from_fn(|l| {
                (0..DIM).fold(Rational::zero(), |acc, k| acc + &ginv[l][k] * &ys[k])
            });
            consts[p] = Vector4::from_rationals(&new);
        }
        Ok(LieAlgebra4 { name: self.name.clone(), consts, nonzero: Vec::new() })
    }
}

impl fmt::Debug for LieAlgebra4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LieAlgebra4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            if p > 0 {
                writeln!(f)?;
            }
            write!(f, "[y{},y{}] = {}", i + 1, j + 1, self.consts[p])?;
        }
        Ok(())
    }
}

/// Inverse of a 4x4 rational matrix by Gauss-Jordan elimination.
pub fn invert4(g: &[[Rational; DIM]; DIM]) -> Result<[[Rational; DIM]; DIM]> {
    let mut a: Vec<Vec<Rational>> = (0..DIM)
        .map(|i| {
            let mut row = g[i].to_vec();
            row.extend((0..DIM).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..DIM {
        let p = (c..DIM).find(|&r| !a[r][c].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(c, p);
        let inv = Rational::one() / &a[c][c];
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..DIM {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * DIM {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| a[i][DIM + j].clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn heisenberg_plus() -> LieAlgebra4 {
        // [y1,y2] = y3, others zero
        let mut c: [Vector4; 6] = Default::default();
        c[0] = Vector4::basis(2);
        LieAlgebra4::new("h3+R", c, vec![])
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let l = heisenberg_plus();
        let x = Vector4::from_rationals(&[int(1), int(2), int(0), int(5)]);
        assert!(l.bracket(&x, &x).is_zero());
        assert_eq!(l.bracket(&Vector4::basis(1), &Vector4::basis(0)), Vector4::basis(2).scale(&Frac::int(-1)));
    }

    #[test]
    fn abelian_residuals_vanish() {
        let r = LieAlgebra4::abelian().jacobi_residuals();
        assert_eq!(r.len(), 16);
        assert!(r.iter().all(|x| x.value.is_zero()));
    }

    #[test]
    fn singular_basis_change() {
        let z = std::array::from_fn(|_| std::array::from_fn(|_| int(0)));
        assert_eq!(heisenberg_plus().change_basis(&z).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn identity_and_swap() {
        let id: [[Rational; 4]; 4] =
            std::array::from_fn(|i| std::array::from_fn(|j| if i == j { int(1) } else { int(0) }));
        let l = heisenberg_plus();
        assert_eq!(l.change_basis(&id).unwrap(), l);
        let mut swap = id.clone();
        swap.swap(2, 3);
        let ab = LieAlgebra4::abelian().change_basis(&swap).unwrap();
        assert!(ab.structure().iter().all(Vector4::is_zero));
        // in the swapped basis [e1,e2] = e4
        let t = l.change_basis(&swap).unwrap();
        assert_eq!(t.basis_bracket(0, 1), Vector4::basis(3));
    }

    #[test]
    fn display_lines() {
        let s = heisenberg_plus().to_string();
        assert!(s.starts_with("[y1,y2] = y3\n[y1,y3] = 0"));
    }
}
