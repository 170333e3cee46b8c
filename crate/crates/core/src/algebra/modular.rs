//! Exact rank of integer matrices by reduction modulo many primes.
//!
//! For an integer matrix `A` and any prime `p`, `rank_p(A) <= rank_Q(A)`.
//! Conversely, a nonzero `r x r` minor of `A` has absolute value at most the
//! Hadamard bound `H`; it cannot be divisible by every prime of a set whose
//! product exceeds `H`. Taking the maximum rank over such a set is therefore
//! exactly `rank_Q(A)`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::rational::Integer;

const PRIME_BITS: u64 = 30;

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            return n == p;
        }
    }
    let n64 = n as u64;
    let mut d = n64 - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic below 4_759_123_141
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a % n64, d, n64);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n64;
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Primes just below 2^31, largest first.
fn primes(count: usize) -> Vec<u64> {
    static CACHE: OnceLock<std::sync::Mutex<Vec<u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(Vec::new()));
    let mut list = cache.lock().expect("prime cache poisoned");
    let mut n = list.last().map_or((1u64 << 31) - 1, |&p| p - 2);
    while list.len() < count {
        if is_prime_u32(n as u32) {
            list.push(n);
        }
        n -= 2;
    }
    list[..count].to_vec()
}

#[derive(Clone)]
enum Entry {
    Small(i128),
    Big(BigInt),
}

impl Entry {
    fn residue(&self, p: u64) -> u64 {
        match self {
            Entry::Small(x) => x.rem_euclid(p as i128) as u64,
            Entry::Big(x) => {
                let r = x % BigInt::from(p);
                let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                r.to_u64().expect("residue fits")
            }
        }
    }
}

/// Upper bound on log2 of the Hadamard bound for minors of size up to `k`,
/// from the given vector norms squared.
fn hadamard_bits(mut norm_sq_bits: Vec<u64>, k: usize) -> u64 {
    norm_sq_bits.sort_unstable_by(|a, b| b.cmp(a));
    norm_sq_bits.iter().take(k).map(|b| b.div_ceil(2)).sum()
}

/// Rank modulo `p` by incremental sparse elimination.
fn rank_mod_p(rows: &[Vec<(usize, Entry)>], cols: usize, p: u64) -> usize {
    let mut pivots: Vec<Option<Vec<(usize, u64)>>> = vec![None; cols];
    let mut rank = 0;
    let full = rows.len().min(cols);
    for r in rows {
        let mut row: Vec<(usize, u64)> =
            r.iter().map(|(j, x)| (*j, x.residue(p))).filter(|&(_, x)| x != 0).collect();
        while let Some(&(lead, lv)) = row.first() {
            match &pivots[lead] {
                Some(piv) => {
                    // row -= lv * piv, where piv has leading coefficient 1
                    let f = p - lv;
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (1, 1);
                    while i < row.len() || j < piv.len() {
                        if j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0) {
                            out.push(row[i]);
                            i += 1;
                        } else {
                            let add = f * piv[j].1 % p;
                            if i < row.len() && row[i].0 == piv[j].0 {
                                let v = (row[i].1 + add) % p;
                                if v != 0 {
                                    out.push((row[i].0, v));
                                }
                                i += 1;
                            } else {
                                out.push((piv[j].0, add));
                            }
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = pow_mod(lv, p - 2, p);
                    for e in row.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
        if rank == full {
            break;
        }
    }
    rank
}

/// Exact rank over Q of the integer matrix given by sparse rows.
pub fn integer_rank(rows: &[Vec<(usize, Integer)>], cols: usize) -> usize {
    let mut rows: Vec<Vec<(usize, Entry)>> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.iter()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (*j, x.to_i128().map_or_else(|| Entry::Big(x.clone()), Entry::Small)))
                .collect::<Vec<_>>()
        })
        .filter(|r: &Vec<_>| !r.is_empty())
        .collect();
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let full = rows.len().min(cols);

    let mut col_sq = vec![BigInt::zero(); cols];
    let mut row_bits = Vec::with_capacity(rows.len());
    for r in &rows {
        let mut s = BigInt::zero();
        for (j, x) in r {
            let v = match x {
                Entry::Small(v) => BigInt::from(*v),
                Entry::Big(v) => v.clone(),
            };
            let sq = &v * &v;
            col_sq[*j] += &sq;
            s += sq;
        }
        row_bits.push(s.bits());
    }
    let col_bits = col_sq.iter().filter(|s| !s.is_zero()).map(|s| s.bits()).collect();
    let bound = hadamard_bits(row_bits, full).min(hadamard_bits(col_bits, full)) + 1;

    // sparser rows first keeps fill-in down
    rows.sort_by_key(Vec::len);

    let needed = (bound / PRIME_BITS + 1) as usize;
    let mut best = 0;
    for p in primes(needed) {
        best = best.max(rank_mod_p(&rows, cols, p));
        if best == full {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(dense: &[&[i64]]) -> (Vec<Vec<(usize, Integer)>>, usize) {
        let cols = dense.first().map_or(0, |r| r.len());
        let r = dense
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, BigInt::from(x))).collect())
            .collect();
        (r, cols)
    }

    #[test]
    fn primes_are_prime() {
        let ps = primes(5);
        assert_eq!(ps[0], 2147483647);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(!is_prime_u32(2147483645));
    }

    #[test]
    fn small_ranks() {
        let (r, c) = rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(integer_rank(&r, c), 2);
        let (r, c) = rows(&[&[0, 0], &[0, 0]]);
        assert_eq!(integer_rank(&r, c), 0);
        let (r, c) = rows(&[&[1, 0], &[0, 1]]);
        assert_eq!(integer_rank(&r, c), 2);
    }

    #[test]
    fn rank_survives_a_determinant_divisible_by_the_first_prime() {
        // det = 2147483647 = the first prime used; a single prime would report rank 1
        let p = 2147483647i64;
        let (r, c) = rows(&[&[p, 0], &[0, 1]]);
        assert_eq!(integer_rank(&r, c), 2);
        let big = BigInt::from(p) * BigInt::from(p) * BigInt::from(2147483629i64);
        let r = vec![vec![(0, big)], vec![(1, BigInt::from(1))]];
        assert_eq!(integer_rank(&r, 2), 2);
    }
}
