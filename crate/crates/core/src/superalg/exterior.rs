//! The exterior algebra on four generators, indexed by bitmasks.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::algebra::{int, Frac};
use crate::lie::DIM;

/// Masks of exterior degree `deg` in lexicographic order of their index tuples.
pub fn basis_masks(deg: usize) -> &'static [u8] {
    static TABLE: OnceLock<Vec<Vec<u8>>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        (0..=DIM)
            .map(|d| {
                let mut ms: Vec<u8> = (0u8..16).filter(|m| m.count_ones() as usize == d).collect();
                ms.sort_by_key(|&m| (0..DIM).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>());
                ms
            })
            .collect()
    });
    t.get(deg).map_or(&[], Vec::as_slice)
}

pub fn mask_index(mask: u8) -> usize {
    basis_masks(mask.count_ones() as usize).iter().position(|&m| m == mask).expect("valid mask")
}

/// Sign of `e_s ∧ e_t = ± e_{s|t}`, or `None` if they overlap.
pub fn wedge_sign(s: u8, t: u8) -> Option<i64> {
    if s & t != 0 {
        return None;
    }
    let mut inv = 0;
    for i in 0..DIM {
        if s >> i & 1 == 1 {
            inv += (t & ((1u8 << i) - 1)).count_ones();
        }
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

/// Position of index `i` inside mask `s` (number of smaller members).
pub fn position(s: u8, i: usize) -> usize {
    (s & ((1u8 << i) - 1)).count_ones() as usize
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ext(BTreeMap<u8, Frac>);

impl Ext {
    pub fn zero() -> Self {
        Ext::default()
    }

    pub fn one() -> Self {
        Self::single(0, Frac::one())
    }

    pub fn single(mask: u8, c: Frac) -> Self {
        let mut e = Ext::zero();
        e.add_term(mask, c);
        e
    }

    pub fn from_map(map: BTreeMap<u8, Frac>) -> Self {
        Ext(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, &Frac)> {
        self.0.iter().map(|(&m, c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, mask: u8, c: Frac) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(mask).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.0.remove(&mask);
        }
    }

    pub fn add(&self, other: &Ext) -> Ext {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Frac) -> Ext {
        Ext::from_map(self.0.iter().map(|(&m, x)| (m, x * c)).collect())
    }

    pub fn wedge(&self, other: &Ext) -> Ext {
        let mut out = Ext::zero();
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                if let Some(sign) = wedge_sign(s, t) {
                    out.add_term(s | t, (a * b).scale(&int(sign)));
                }
            }
        }
        out
    }

    /// Contraction with the basis vector `y_i` in the first slot.
    pub fn contract(&self, i: usize) -> Ext {
        let mut out = Ext::zero();
        for (s, c) in self.terms() {
            if s >> i & 1 == 1 {
                let sign: i64 = if position(s, i) % 2 == 0 { 1 } else { -1 };
                out.add_term(s & !(1 << i), c.scale(&int(sign)));
            }
        }
        out
    }
}
