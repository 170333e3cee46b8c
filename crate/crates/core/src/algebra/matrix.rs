//! Sparse matrices with polynomial or rational entries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::poly::{Assignment, Poly, Var};
use super::rational::{Integer, Rational};
use crate::error::Result;

/// Sparse matrix of [`Poly`] entries. Rows are stored as ordered maps from
/// column index to a nonzero entry.
///
/// `nonzero` lists polynomials assumed not to vanish (inherited from the
/// algebra the matrix was built from); randomized rank evaluation never
/// samples a point on their zero locus.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Poly>>,
    nonzero: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![BTreeMap::new(); rows], nonzero: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, x) in r.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nonzero_assumptions(&self) -> &[Poly] {
        &self.nonzero
    }

    pub fn with_nonzero(mut self, polys: Vec<Poly>) -> Self {
        self.nonzero = polys;
        self
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Poly> {
        self.data[i].get(&j)
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, Poly> {
        &self.data[i]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Poly) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if x.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, x);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Poly) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        let e = self.data[i].entry(j).or_default();
        *e += x;
        if e.is_zero() {
            self.data[i].remove(&j);
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(&j, x)| (i, j, x)))
    }

    /// Parameters occurring in entries or nondegeneracy assumptions.
    pub fn params(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        for (_, _, x) in self.entries() {
            out.extend(x.vars());
        }
        for p in &self.nonzero {
            out.extend(p.vars());
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.cols, self.rows);
        for (i, j, x) in self.entries() {
            t.set(j, i, x.clone());
        }
        t.nonzero = self.nonzero.clone();
        t
    }

    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows, self.cols);
        for (i, j, x) in self.entries() {
            out.set(row_perm[i], col_perm[j], x.clone());
        }
        out.nonzero = self.nonzero.clone();
        out
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (&k, a) in row {
                for (&j, b) in &rhs.data[k] {
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn eval(&self, point: &Assignment) -> Result<QMatrix> {
        let mut q = QMatrix::zeros(self.rows, self.cols);
        for (i, j, x) in self.entries() {
            let v = x.eval(point)?;
            if !v.is_zero() {
                q.data[i].push((j, v));
            }
        }
        Ok(q)
    }

    /// Substitute a partial assignment.
    pub fn partial_eval(&self, point: &Assignment) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows, self.cols);
        for (i, j, x) in self.entries() {
            out.set(i, j, x.partial_eval(point));
        }
        out.nonzero = self.nonzero.iter().map(|p| p.partial_eval(point)).collect();
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for (i, j, x) in self.entries() {
            writeln!(f, "  ({i},{j}) {x}")?;
        }
        write!(f, "]")
    }
}

/// Sparse rational matrix; each row holds `(col, nonzero value)` sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn from_dense(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows
            .into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect::<Vec<Vec<_>>>();
        QMatrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                out[i][*j] = x.clone();
            }
        }
        out
    }

    /// Rows scaled by the lcm of their denominators; same row space.
    pub fn integer_rows(&self) -> Vec<Vec<(usize, Integer)>> {
        self.data
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let l = r.iter().fold(Integer::one(), |acc, (_, x)| acc.lcm(x.denom()));
                r.iter().map(|(j, x)| (*j, x.numer() * (&l / x.denom()))).collect()
            })
            .collect()
    }
}
