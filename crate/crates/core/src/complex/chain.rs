//! Weighted chain spaces as super-exterior words in basis letters.
//!
//! A letter of grade `g` has chain parity `(g + 1) mod 2`. Letters of
//! chain parity 1 (even grade) anticommute and cannot repeat; letters of
//! chain parity 0 commute.

use std::collections::HashMap;
use std::fmt;

use crate::superalg::{binomial, ComplexKind, GradedComponent, LetterTable};

/// Chain parity of a letter of the given grade.
pub fn chain_parity(grade: i32) -> u8 {
    (grade + 1).rem_euclid(2) as u8
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSignature {
    /// Nonzero letter counts, in the kind's component order.
    pub occupancy: Vec<(GradedComponent, usize)>,
    pub m: usize,
    pub weight: i32,
}

impl WeightSignature {
    pub fn dim(&self) -> usize {
        self.occupancy
            .iter()
            .map(|&(c, k)| {
                if chain_parity(c.grade()) == 1 {
                    binomial(c.dim(), k)
                } else {
                    binomial(c.dim() + k - 1, k)
                }
            })
            .product()
    }

    pub fn count(&self, c: GradedComponent) -> usize {
        self.occupancy.iter().find(|(x, _)| *x == c).map_or(0, |&(_, k)| k)
    }
}

impl fmt::Display for WeightSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.occupancy.iter().map(|(c, k)| format!("{}:{k}", c.short_name())).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// All occupancies with `m` letters of total grade `weight`.
pub fn enumerate_signatures(kind: ComplexKind, weight: i32, m: usize) -> Vec<WeightSignature> {
    let comps = kind.components();
    let mut out = Vec::new();
    let mut counts = vec![0usize; comps.len()];
    fn rec(
        comps: &[GradedComponent],
        idx: usize,
        left: usize,
        wleft: i64,
        counts: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if idx == comps.len() {
            if left == 0 && wleft == 0 {
                out.push(counts.clone());
            }
            return;
        }
        let c = comps[idx];
        let cap = if chain_parity(c.grade()) == 1 { c.dim().min(left) } else { left };
        for k in 0..=cap {
            counts[idx] = k;
            rec(comps, idx + 1, left - k, wleft - k as i64 * c.grade() as i64, counts, out);
        }
        counts[idx] = 0;
    }
    let mut raw = Vec::new();
    rec(&comps, 0, m, weight as i64, &mut counts, &mut raw);
    for counts in raw {
        let occupancy = comps.iter().zip(&counts).filter(|(_, &k)| k > 0).map(|(&c, &k)| (c, k)).collect();
        out.push(WeightSignature { occupancy, m, weight });
    }
    out
}

/// A chain word: sorted global letter indices.
pub type Word = Vec<u8>;

#[derive(Clone, Debug)]
pub struct WeightedChainBasis {
    pub kind: ComplexKind,
    pub weight: i32,
    pub m: usize,
    pub signatures: Vec<WeightSignature>,
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl WeightedChainBasis {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Human-readable word, e.g. `z1·z1·z2∧z3`.
    pub fn word_name(&self, w: &[u8]) -> String {
        let letters = LetterTable::letters_of(self.kind);
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&i| format!("({})", letters[i as usize])).collect::<Vec<_>>().join("")
    }
}

fn combos(n: usize, k: usize, repeat: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, repeat: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, if repeat { i } else { i + 1 }, repeat, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, repeat, &mut cur, &mut out);
    out
}

pub fn chain_basis(kind: ComplexKind, weight: i32, m: usize) -> WeightedChainBasis {
    let comps = kind.components();
    let mut offsets = Vec::with_capacity(comps.len());
    let mut acc = 0;
    for c in &comps {
        offsets.push(acc);
        acc += c.dim();
    }
    let signatures = enumerate_signatures(kind, weight, m);
    let mut words = Vec::new();
    for sig in &signatures {
        let mut partial: Vec<Word> = vec![Vec::new()];
        for (ci, c) in comps.iter().enumerate() {
            let k = sig.count(*c);
            if k == 0 {
                continue;
            }
            let choices = combos(c.dim(), k, chain_parity(c.grade()) == 0);
            let mut next = Vec::with_capacity(partial.len() * choices.len());
            for p in &partial {
                for ch in &choices {
                    let mut w = p.clone();
                    w.extend(ch.iter().map(|&i| (offsets[ci] + i) as u8));
                    next.push(w);
                }
            }
            partial = next;
        }
        words.extend(partial);
    }
    let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    WeightedChainBasis { kind, weight, m, signatures, words, index }
}

/// Largest letter count that can occur at this weight: nonzero grades
/// have absolute value at least 1 and grade-0 letters anticommute.
pub fn max_length(kind: ComplexKind, weight: i32) -> usize {
    let zero_grade: usize = kind.components().iter().filter(|c| c.grade() == 0).map(|c| c.dim()).sum();
    weight.unsigned_abs() as usize + zero_grade
}

#[cfg(test)]
mod tests {
    use super::*;
    use GradedComponent::*;

    fn dims(kind: ComplexKind, w: i32, ms: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        ms.map(|m| chain_basis(kind, w, m).dim()).collect()
    }

    #[test]
    fn signatures() {
        let s = enumerate_signatures(ComplexKind::Cotangent, -5, 3);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].occupancy, vec![(Form(0), 1), (Form(1), 2)]);
        assert_eq!(s[1].occupancy, vec![(Form(0), 2), (Form(2), 1)]);
        for m in 0..=4 {
            let t = enumerate_signatures(ComplexKind::Tangent, 0, m);
            assert_eq!(t.len(), 1);
            assert_eq!(t[0].count(MultiVector(1)), m);
        }
        assert!(enumerate_signatures(ComplexKind::Tangent, 0, 5).is_empty());
        assert!(enumerate_signatures(ComplexKind::Cotangent, 0, 1).is_empty());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dims(ComplexKind::Tangent, 0, 0..=4), [1, 4, 6, 4, 1]);
        assert_eq!(dims(ComplexKind::Tangent, 1, 1..=5), [6, 24, 36, 24, 6]);
        assert_eq!(dims(ComplexKind::Tangent, 2, 1..=6), [4, 37, 108, 142, 88, 21]);
        assert_eq!(dims(ComplexKind::Cotangent, -5, 1..=5), [1, 28, 12, 4, 1]);
        assert_eq!(dims(ComplexKind::Cotangent, -6, 1..=6), [0, 38, 32, 12, 4, 1]);
        assert_eq!(dims(ComplexKind::Extended, -2, 1..=6), [4, 17, 28, 22, 8, 1]);
        for (kind, w) in [(ComplexKind::Tangent, 2), (ComplexKind::Cotangent, -7), (ComplexKind::Extended, -3)] {
            for m in 0..=max_length(kind, w) + 2 {
                let b = chain_basis(kind, w, m);
                assert_eq!(b.dim(), b.signatures.iter().map(WeightSignature::dim).sum::<usize>());
            }
            assert_eq!(chain_basis(kind, w, max_length(kind, w) + 1).dim(), 0);
        }
    }
}
