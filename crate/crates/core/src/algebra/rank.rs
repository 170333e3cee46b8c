//! Rank and kernel of polynomial matrices in three modes.
//!
//! * `SymbolicGeneric`: rank over the field of rational functions in the
//!   parameters, by fraction-free (Bareiss) elimination on polynomials.
//! * `Randomized`: maximum exact rank over several random rational points.
//!   A lower bound on the generic rank that is tight with high probability.
//! * `Specialized`: exact rank over Q at one point.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::matrix::{PolyMatrix, QMatrix};
use super::modular::integer_rank;
use super::poly::{Assignment, Poly, Var};
use super::rational::{int, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 20_210_731;
pub const DEFAULT_TRIALS: u32 = 3;
pub const DEFAULT_RANGE: i64 = 10_000;
const MAX_RESAMPLES: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankMode {
    SymbolicGeneric,
    Randomized { seed: u64, trials: u32, range: i64 },
    Specialized(Assignment),
}

impl Default for RankMode {
    fn default() -> Self {
        RankMode::Randomized { seed: DEFAULT_SEED, trials: DEFAULT_TRIALS, range: DEFAULT_RANGE }
    }
}

impl RankMode {
    pub fn randomized(seed: u64, trials: u32, range: i64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidMode("randomized mode needs at least one trial".into()));
        }
        if range <= 0 {
            return Err(Error::InvalidMode("coefficient range must be positive".into()));
        }
        Ok(RankMode::Randomized { seed, trials, range })
    }

    pub fn record(&self) -> ModeRecord {
        match self {
            RankMode::SymbolicGeneric => {
                ModeRecord { variant: "symbolic".into(), seed: None, trials: None, range: None }
            }
            RankMode::Randomized { seed, trials, range } => ModeRecord {
                variant: "randomized".into(),
                seed: Some(*seed),
                trials: Some(*trials),
                range: Some(*range),
            },
            RankMode::Specialized(_) => {
                ModeRecord { variant: "specialized".into(), seed: None, trials: None, range: None }
            }
        }
    }
}

/// Serializable summary of a rank mode, embedded in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeRecord {
    pub variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub range: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankInfo {
    pub rank: usize,
    pub kernel_dim: usize,
}

impl RankInfo {
    fn new(rank: usize, cols: usize) -> Self {
        RankInfo { rank, kernel_dim: cols - rank }
    }
}

pub fn matrix_rank(m: &PolyMatrix, mode: &RankMode) -> Result<RankInfo> {
    if m.is_zero() {
        return Ok(RankInfo::new(0, m.cols()));
    }
    let rank = match mode {
        RankMode::SymbolicGeneric => bareiss_rank(m),
        RankMode::Randomized { seed, trials, range } => {
            if *trials == 0 {
                return Err(Error::InvalidMode("randomized mode needs at least one trial".into()));
            }
            randomized_rank(m, *seed, *trials, *range)?
        }
        RankMode::Specialized(point) => {
            check_nondegenerate(m, point)?;
            rational_rank(&m.eval(point)?)
        }
    };
    Ok(RankInfo::new(rank, m.cols()))
}

fn check_nondegenerate(m: &PolyMatrix, point: &Assignment) -> Result<()> {
    for p in m.nonzero_assumptions() {
        if p.eval(point)?.is_zero() {
            return Err(Error::Degenerate(p.to_string()));
        }
    }
    Ok(())
}

pub fn rational_rank(q: &QMatrix) -> usize {
    integer_rank(&q.integer_rows(), q.cols())
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Deterministic random point; each variable's value depends only on its
/// name, the seed, the trial and the resample attempt, so matrices sharing
/// parameters are evaluated at consistent points.
pub fn sample_point(vars: &BTreeSet<Var>, seed: u64, trial: u32, attempt: u32, range: i64) -> Assignment {
    vars.iter()
        .map(|v| {
            let key = fnv1a(v.name().as_bytes())
                ^ seed.rotate_left(17)
                ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
                ^ (attempt as u64).wrapping_mul(0xc2b2_ae3d_27d4_eb4f);
            let mut rng = ChaCha8Rng::seed_from_u64(key);
            (*v, int(rng.gen_range(-range..=range)))
        })
        .collect()
}

/// A random point avoiding the zero loci of `nonzero`.
pub fn admissible_point(
    vars: &BTreeSet<Var>,
    nonzero: &[Poly],
    seed: u64,
    trial: u32,
    range: i64,
) -> Result<Assignment> {
    for attempt in 0..MAX_RESAMPLES {
        let pt = sample_point(vars, seed, trial, attempt, range);
        let mut ok = true;
        for p in nonzero {
            if p.eval(&pt)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(pt);
        }
    }
    Err(Error::Arithmetic("could not sample a nondegenerate point".into()))
}

fn randomized_rank(m: &PolyMatrix, seed: u64, trials: u32, range: i64) -> Result<usize> {
    let vars = m.params();
    let full = m.rows().min(m.cols());
    if vars.is_empty() {
        return Ok(rational_rank(&m.eval(&Assignment::new())?));
    }
    let ranks = (0..trials)
        .into_par_iter()
        .map(|t| {
            let pt = admissible_point(&vars, m.nonzero_assumptions(), seed, t, range)?;
            Ok(rational_rank(&m.eval(&pt)?))
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(ranks.into_iter().max().unwrap_or(0).min(full))
}

/// Rank over the parameter field by fraction-free elimination with
/// lowest-degree pivoting (ties broken by sparsity).
pub fn bareiss_rank(m: &PolyMatrix) -> usize {
    let mut a: Vec<Vec<Poly>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).cloned().unwrap_or_default()).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = Poly::one();
    let mut rank = 0;
    while rank < rows.min(cols) {
        // pivot search over the trailing submatrix
        let mut best: Option<(u32, usize, usize, usize)> = None;
        for i in rank..rows {
            let row_nnz = a[i][rank..].iter().filter(|x| !x.is_zero()).count();
            for j in rank..cols {
                let x = &a[i][j];
                if x.is_zero() {
                    continue;
                }
                let key = (x.degree(), row_nnz, i, j);
                if best.as_ref().is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                    best = Some(key);
                }
            }
        }
        let Some((_, _, pi, pj)) = best else { break };
        a.swap(rank, pi);
        for row in a.iter_mut() {
            row.swap(rank, pj);
        }
        let pivot = a[rank][rank].clone();
        for i in rank + 1..rows {
            let lead = a[i][rank].clone();
            for j in rank + 1..cols {
                let v = &(&pivot * &a[i][j]) - &(&lead * &a[rank][j]);
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][rank] = Poly::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Basis of the kernel over Q at a fully specified point.
pub fn kernel_basis(m: &PolyMatrix, point: &Assignment) -> Result<Vec<Vec<Rational>>> {
    check_nondegenerate(m, point)?;
    let q = m.eval(point)?;
    Ok(rational_kernel(&q.to_dense(), m.cols()))
}

/// Reduced row echelon form over Q, then one kernel vector per free column.
pub fn rational_kernel(dense: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a = dense.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[k][f].clone();
            }
            v
        })
        .collect()
}
