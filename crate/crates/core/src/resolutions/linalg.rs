//! Exact rank of sparse integer matrices.
//!
//! Columns are reduced one at a time against previously found pivot columns,
//! keyed by their first nonzero row. Reduction is fraction-free: `c <- b*c - a*p`
//! followed by division by the content of `c`. The rank over `Z` equals the
//! rank over `Q`, so this is the characteristic-zero rank. Arithmetic runs in
//! `i128` with overflow checks and is redone in `BigInt` if any step overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// A sparse column: `(row, value)` pairs with strictly increasing rows and nonzero values.
pub type SparseColumn = Vec<(usize, i64)>;

pub fn rank(columns: &[SparseColumn]) -> usize {
    reduce::<i128>(columns)
        .or_else(|| reduce::<BigInt>(columns))
        .expect("arbitrary precision reduction cannot overflow")
}

trait Scalar: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64>> Scalar for T {}

fn reduce<T: Scalar>(columns: &[SparseColumn]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for col in columns {
        let mut c: Vec<(usize, T)> = col.iter().map(|&(r, v)| (r, T::from(v))).collect();
        loop {
            let Some((lead_row, lead)) = c.first().cloned() else {
                break;
            };
            let Some(p) = pivots.get(&lead_row) else {
                pivots.insert(lead_row, c);
                break;
            };
            let b = p[0].1.clone();
            c = combine(&c, &b, p, &lead)?;
            normalize(&mut c);
        }
    }
    Some(pivots.len())
}

/// `b * c - a * p`, dropping zero entries.
fn combine<T: Scalar>(c: &[(usize, T)], b: &T, p: &[(usize, T)], a: &T) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(c.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < p.len() {
        let take_c = j >= p.len() || (i < c.len() && c[i].0 < p[j].0);
        let take_p = i >= c.len() || (j < p.len() && p[j].0 < c[i].0);
        let (row, value) = if take_c {
            let v = c[i].1.checked_mul(b)?;
            i += 1;
            (c[i - 1].0, v)
        } else if take_p {
            let v = T::zero().checked_sub(&p[j].1.checked_mul(a)?)?;
            j += 1;
            (p[j - 1].0, v)
        } else {
            let v = c[i].1.checked_mul(b)?.checked_sub(&p[j].1.checked_mul(a)?)?;
            i += 1;
            j += 1;
            (c[i - 1].0, v)
        };
        if !value.is_zero() {
            out.push((row, value));
        }
    }
    Some(out)
}

fn normalize<T: Scalar>(c: &mut [(usize, T)]) {
    let Some(first) = c.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in c.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if !g.is_one() {
        for (_, v) in c.iter_mut() {
            *v = v.div_floor(&g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseColumn> {
        let ncols = rows.first().map_or(0, |r| r.len());
        (0..ncols)
            .map(|c| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, r)| r[c] != 0)
                    .map(|(i, r)| (i, r[c]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&dense(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
        // 2 is a zero divisor mod 2 but the rank over Q is full
        assert_eq!(rank(&dense(&[&[1, 1], &[1, -1]])), 2);
        assert_eq!(rank(&dense(&[&[2, 4, 6], &[3, 6, 9], &[1, 0, 1]])), 2);
    }

    #[test]
    fn large_entries_fall_back_to_bigint() {
        let big = 1i64 << 62;
        let cols = dense(&[&[big, big - 1, 3], &[big - 3, big, 5], &[7, big - 11, big]]);
        assert_eq!(reduce::<BigInt>(&cols), Some(3));
        assert_eq!(rank(&cols), 3);
    }

    #[test]
    fn rank_matches_brute_force_on_small_integer_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let r = rng.gen_range(1..5);
            let c = rng.gen_range(1..5);
            let m: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-2..=2)).collect()).collect();
            let rows: Vec<&[i64]> = m.iter().map(|v| v.as_slice()).collect();
            assert_eq!(rank(&dense(&rows)), brute_rank(&m));
        }
    }

    /// Rank as the largest nonvanishing minor, via exact Laplace expansion.
    fn brute_rank(m: &[Vec<i64>]) -> usize {
        use itertools::Itertools;
        let r = m.len();
        let c = m[0].len();
        for k in (1..=r.min(c)).rev() {
            for rows in (0..r).combinations(k) {
                for cols in (0..c).combinations(k) {
                    let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                    if det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }
}
