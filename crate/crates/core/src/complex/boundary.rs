use std::collections::BTreeMap;

use crate::algebra::{Frac, Monomial, PolyMatrix};
use crate::error::Result;
use crate::lie::LieAlgebra4;
use crate::superalg::{ComplexKind, LetterTable};

use super::chain::{chain_basis, chain_parity, WeightedChainBasis};

/// Precomputed data for assembling boundary matrices of one algebra.
pub struct BoundaryBuilder {
    table: LetterTable,
    parity: Vec<u8>,
    grade_odd: Vec<bool>,
    nonzero: Vec<crate::algebra::Poly>,
}

impl BoundaryBuilder {
    pub fn new(kind: ComplexKind, l: &LieAlgebra4) -> Result<Self> {
        let table = LetterTable::new(kind, l)?;
        let parity = table.letters().iter().map(|x| chain_parity(x.grade())).collect();
        let grade_odd = table.letters().iter().map(|x| x.grade().rem_euclid(2) == 1).collect();
        Ok(BoundaryBuilder { table, parity, grade_odd, nonzero: l.nonzero().to_vec() })
    }

    pub fn kind(&self) -> ComplexKind {
        self.table.kind()
    }

    /// `∂` applied to one word, as `(target word, coefficient)` pairs.
    pub fn apply(&self, w: &[u8]) -> BTreeMap<Vec<u8>, Frac> {
        let pi = |x: u8| self.parity[x as usize] as usize;
        let mut out: BTreeMap<Vec<u8>, Frac> = BTreeMap::new();
        let m = w.len();
        for i in 0..m {
            let before_i: usize = w[..i].iter().map(|&x| pi(x)).sum();
            for j in i + 1..m {
                let before_j: usize = before_i + w[i + 1..j].iter().map(|&x| pi(x)).sum::<usize>();
                let mut sign = pi(w[i]) * before_i + pi(w[j]) * before_j;
                if self.grade_odd[w[i] as usize] {
                    sign += 1;
                }
                let rest: Vec<u8> = w.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
                for (z, c) in self.table.bracket(w[i] as usize, w[j] as usize) {
                    let z = *z as u8;
                    let pos = rest.partition_point(|&x| x < z);
                    if pi(z) == 1 && rest.get(pos) == Some(&z) {
                        continue;
                    }
                    let passed: usize = rest[..pos].iter().map(|&x| pi(x)).sum();
                    let s = sign + pi(z) * passed;
                    let mut target = rest.clone();
                    target.insert(pos, z);
                    let coeff = if s % 2 == 1 { -c.clone() } else { c.clone() };
                    let e = out.entry(target).or_default();
                    *e = &*e + &coeff;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Matrix of `∂: C_m -> C_{m-1}` (columns index the source basis),
    /// scaled by one monomial to clear denominators.
    pub fn matrix(&self, source: &WeightedChainBasis, target: &WeightedChainBasis) -> PolyMatrix {
        let mut entries: Vec<(usize, usize, Frac)> = Vec::new();
        let mut den = Monomial::one();
        for (col, w) in source.words.iter().enumerate() {
            for (t, c) in self.apply(w) {
                let row = target.index_of(&t).expect("boundary preserves weight");
                den = den.lcm(c.den());
                entries.push((row, col, c));
            }
        }
        let mut m = PolyMatrix::zeros(target.dim(), source.dim());
        for (r, c, x) in entries {
            m.set(r, c, x.times_monomial(&den).expect("denominator divides the common multiple"));
        }
        m.with_nonzero(self.nonzero.clone())
    }
}

pub fn boundary_matrix(kind: ComplexKind, weight: i32, m: usize, l: &LieAlgebra4) -> Result<PolyMatrix> {
    let b = BoundaryBuilder::new(kind, l)?;
    let source = chain_basis(kind, weight, m);
    let target = chain_basis(kind, weight, m.saturating_sub(1));
    if m == 0 {
        return Ok(PolyMatrix::zeros(0, source.dim()).with_nonzero(l.nonzero().to_vec()));
    }
    Ok(b.matrix(&source, &target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::family;

    #[test]
    fn first_boundary_vanishes_at_weight_zero() {
        for id in 1..=6 {
            let l = family(id).unwrap();
            assert!(boundary_matrix(ComplexKind::Tangent, 0, 1, &l).unwrap().is_zero());
        }
    }

    #[test]
    fn abelian_boundaries_vanish() {
        let l = LieAlgebra4::abelian();
        for kind in ComplexKind::ALL {
            for w in [-3, 0, 2] {
                for m in 1..=4 {
                    assert!(boundary_matrix(kind, w, m, &l).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn squares_to_zero_with_denominators() {
        let l = family(3).unwrap();
        for m in 2..=4 {
            let a = boundary_matrix(ComplexKind::Cotangent, -5, m, &l).unwrap();
            let b = boundary_matrix(ComplexKind::Cotangent, -5, m - 1, &l).unwrap();
            assert!(b.mul(&a).is_zero(), "m = {m}");
        }
    }
}
