//! Pascal ideals: the t-spread complete intersections whose generators are
//! the residue classes of `[n]` modulo `t`, with their closed-form
//! invariants, f_t-vectors, Hilbert series and t-lex companions.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{check_degree_bound_args, is_regular_sequence, FtVector, MonomialIdeal};
use crate::monomials::{binomial, SquarefreeMonomial};

/// The Pascal ideal of type `(n, t)`.
///
/// `generators[r - 1]` is the product of the `x_j` with `j ≡ r (mod t)`.
/// The first `residue` generators have degree `k + 1`, the remaining
/// `t - residue` have degree `k`, where `n = residue + k t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalIdeal {
    pub n: u32,
    pub t: u32,
    /// `i` in `[t]` with `n ≡ i (mod t)`.
    pub residue: u32,
    /// `floor((n - 1) / t)`.
    pub k: u32,
    /// Generators in residue-class order.
    pub generators: Vec<SquarefreeMonomial>,
    pub ideal: MonomialIdeal,
}

fn check_pascal_args(n: u32, t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroSpread);
    }
    if n < t {
        return Err(Error::Precondition(format!("need n >= t, got n = {n}, t = {t}")));
    }
    Ok(())
}

pub fn pascal_ideal(n: u32, t: u32) -> Result<PascalIdeal> {
    check_pascal_args(n, t)?;
    let generators: Vec<SquarefreeMonomial> = (1..=t)
        .map(|r| SquarefreeMonomial::from_indices((r..=n).step_by(t as usize)))
        .collect::<Result<_>>()?;
    let ideal = MonomialIdeal::minimalize(n, generators.iter().copied())?;
    Ok(PascalIdeal {
        n,
        t,
        residue: (n - 1) % t + 1,
        k: (n - 1) / t,
        generators,
        ideal,
    })
}

/// Total Betti numbers of `S/I`: the `t`-th row of Pascal's triangle.
pub fn pascal_total_betti(n: u32, t: u32) -> Result<Vec<u64>> {
    check_pascal_args(n, t)?;
    Ok((0..=t as i64).map(|i| binomial(t as i64, i)).collect())
}

/// Closed-form f_t-vector, entries indexed by degree `0..=k+1`.
pub fn pascal_ft_vector(n: u32, t: u32) -> Result<FtVector> {
    check_pascal_args(n, t)?;
    let (k, i) = ((n - 1) / t, (n - 1) % t + 1);
    let count = |j: u32| binomial(n as i64 - (j as i64 - 1) * (t as i64 - 1), j as i64);
    let by_degree = (0..=k + 1)
        .map(|j| {
            if j == k {
                count(j) - (t - i) as u64
            } else if j == k + 1 {
                count(j) - i as u64
            } else {
                count(j)
            }
        })
        .collect();
    Ok(FtVector { t, by_degree })
}

/// A Hilbert series `numerator(z) / (1 - z)^denominator_exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub denominator_exponent: u32,
}

impl HilbertSeries {
    /// Cancels common factors `(1 - z)` between numerator and denominator.
    pub fn normalized(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut e = self.denominator_exponent;
        while e > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            // divide by (1 - z): quotient coefficients are prefix sums
            let mut acc = 0;
            let mut q: Vec<i64> = num
                .iter()
                .map(|&c| {
                    acc += c;
                    acc
                })
                .collect();
            q.pop();
            num = q;
            e -= 1;
        }
        while num.len() > 1 && num.last() == Some(&0) {
            num.pop();
        }
        HilbertSeries {
            numerator: num,
            denominator_exponent: e,
        }
    }

    /// Coefficient of `z^d` in the power series expansion.
    pub fn coefficient(&self, d: usize) -> i128 {
        let e = self.denominator_exponent as i64;
        self.numerator
            .iter()
            .enumerate()
            .take(d + 1)
            .map(|(a, &c)| {
                let ways = if e == 0 {
                    u64::from(a == d)
                } else {
                    binomial(d as i64 - a as i64 + e - 1, e - 1)
                };
                c as i128 * ways as i128
            })
            .sum()
    }

    /// The Hilbert function in degrees `0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: usize) -> Vec<i128> {
        (0..=max_degree).map(|d| self.coefficient(d)).collect()
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `prod_{u in G(I)} (1 + z + ... + z^{deg u - 1}) / (1 - z)^{n - |G(I)|}`.
pub fn hilbert_series_ci(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    ideal.require_proper()?;
    if !is_regular_sequence(ideal) {
        return Err(Error::NotRegularSequence);
    }
    let numerator = ideal
        .gens()
        .iter()
        .fold(vec![1i64], |acc, g| poly_mul(&acc, &vec![1; g.degree()]));
    Ok(HilbertSeries {
        numerator,
        denominator_exponent: ideal.n() - ideal.num_gens() as u32,
    })
}

/// `(1 + ... + z^k)^i (1 + ... + z^{k-1})^{t-i} / (1 - z)^{n-t}`.
pub fn pascal_hilbert_series(n: u32, t: u32) -> Result<HilbertSeries> {
    check_pascal_args(n, t)?;
    let (k, i) = ((n - 1) / t, (n - 1) % t + 1);
    let long = vec![1i64; k as usize + 1];
    let short = vec![1i64; k as usize];
    let mut numerator = vec![1i64];
    for _ in 0..i {
        numerator = poly_mul(&numerator, &long);
    }
    if k > 0 {
        for _ in 0..t - i {
            numerator = poly_mul(&numerator, &short);
        }
    }
    Ok(HilbertSeries {
        numerator,
        denominator_exponent: n - t,
    })
}

/// `|V|`, the size of the t-shadow of the candidate lex generators in
/// degree `k`; a t-lex companion exists iff it equals the residue `i`.
pub fn shadow_discrepancy(n: u32, t: u32) -> Result<u64> {
    check_pascal_args(n, t)?;
    let i = (n - 1) % t + 1;
    if i == t {
        return Err(Error::Precondition(
            "shadow discrepancy needs n ≢ 0 (mod t)".into(),
        ));
    }
    let terms = if t - i <= i { t - i } else { i };
    Ok((0..terms).map(|j| (i - j) as u64).sum())
}

/// Result of the t-lex companion construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TlexOutcome {
    Exists(MonomialIdeal),
    /// No t-spread lexsegment ideal has the same f_t-vector: the shadow has
    /// `discrepancy` elements where `residue` were needed.
    Absent { discrepancy: u64, residue: u32 },
}

fn product(indices: impl IntoIterator<Item = u32>) -> SquarefreeMonomial {
    SquarefreeMonomial::from_indices(indices).expect("indices bounded by n <= 64")
}

/// The t-spread lexsegment ideal with the f_t-vector of the Pascal ideal,
/// when it exists (`i ∈ {1, t-1, t}`).
pub fn pascal_tlex(n: u32, t: u32) -> Result<TlexOutcome> {
    check_pascal_args(n, t)?;
    let (k, i) = ((n - 1) / t, (n - 1) % t + 1);
    let lead = |len: u32| (0..len).map(|j| 1 + j * t);
    let gens: Vec<SquarefreeMonomial> = if i == t {
        std::iter::once(product(lead(k + 1)))
            .chain((2..=t).map(|q| product(lead(k).chain([q + k * t]))))
            .collect()
    } else {
        let discrepancy = shadow_discrepancy(n, t)?;
        if discrepancy != i as u64 {
            return Ok(TlexOutcome::Absent {
                discrepancy,
                residue: i,
            });
        }
        std::iter::once(product(lead(k)))
            .chain((2..=t - i).map(|q| product(lead(k - 1).chain([q + (k - 1) * t]))))
            .collect()
    };
    Ok(TlexOutcome::Exists(MonomialIdeal::minimalize(n, gens)?))
}

/// An ideal generated in degrees at most `d` attaining the largest
/// regularity among t-spread ideals in `n` variables: the Pascal ideal of
/// type `(n, max(ceil(n / d), t))`.
pub fn max_reg_witness(n: u32, d: u32, t: u32) -> Result<MonomialIdeal> {
    check_degree_bound_args(n, d, t)?;
    let spread = n.div_ceil(d).max(t);
    Ok(pascal_ideal(n, spread)?.ideal)
}

/// Summary record for a Pascal ideal, as emitted by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct PascalReport {
    pub n: u32,
    pub t: u32,
    pub residue: u32,
    pub k: u32,
    pub generators: Vec<String>,
    pub total_betti: Vec<u64>,
    pub ft_vector: Vec<u64>,
    pub hilbert_numerator: Vec<i64>,
    pub hilbert_denominator_exponent: u32,
    pub pd: usize,
    pub reg: usize,
    pub tlex: Option<Vec<String>>,
    pub tlex_witness: Option<TlexWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TlexWitness {
    pub shadow_size: u64,
    pub residue: u32,
}

pub fn pascal_report(n: u32, t: u32) -> Result<PascalReport> {
    let p = pascal_ideal(n, t)?;
    let hs = pascal_hilbert_series(n, t)?;
    let (tlex, tlex_witness) = match pascal_tlex(n, t)? {
        TlexOutcome::Exists(l) => (Some(l.gens().iter().map(|g| g.to_string()).collect()), None),
        TlexOutcome::Absent {
            discrepancy,
            residue,
        } => (
            None,
            Some(TlexWitness {
                shadow_size: discrepancy,
                residue,
            }),
        ),
    };
    Ok(PascalReport {
        n,
        t,
        residue: p.residue,
        k: p.k,
        generators: p.generators.iter().map(|g| g.to_string()).collect(),
        total_betti: pascal_total_betti(n, t)?,
        ft_vector: pascal_ft_vector(n, t)?.by_degree,
        hilbert_numerator: hs.numerator,
        hilbert_denominator_exponent: hs.denominator_exponent,
        pd: t as usize - 1,
        reg: (n - t + 1) as usize,
        tlex,
        tlex_witness,
    })
}

/// Renders a numerator polynomial as `1 + 3z + 6z^2 + ...`.
pub fn format_polynomial(coefficients: &[i64]) -> String {
    let terms = coefficients
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| match e {
            0 => c.to_string(),
            1 if c == 1 => "z".to_string(),
            1 => format!("{c}z"),
            _ if c == 1 => format!("z^{e}"),
            _ => format!("{c}z^{e}"),
        })
        .join(" + ");
    if terms.is_empty() {
        "0".into()
    } else {
        terms.replace("+ -", "- ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{ci_invariants, ft_vector};

    fn mono(ix: &[u32]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn pascal_examples() {
        let p = pascal_ideal(10, 3).unwrap();
        assert_eq!(p.generators, vec![mono(&[1, 4, 7, 10]), mono(&[2, 5, 8]), mono(&[3, 6, 9])]);
        assert_eq!((p.residue, p.k), (1, 3));
        let m = pascal_ideal(4, 4).unwrap();
        assert_eq!(m.generators, vec![mono(&[1]), mono(&[2]), mono(&[3]), mono(&[4])]);
        assert_eq!(pascal_ideal(5, 1).unwrap().generators, vec![mono(&[1, 2, 3, 4, 5])]);
        assert!(pascal_ideal(3, 4).is_err());
        assert_eq!(ci_invariants(&p.ideal).unwrap(), (2, 8));
    }

    #[test]
    fn total_betti_rows() {
        assert_eq!(pascal_total_betti(10, 3).unwrap(), vec![1, 3, 3, 1]);
        assert_eq!(pascal_total_betti(6, 1).unwrap(), vec![1, 1]);
        assert_eq!(pascal_total_betti(9, 4).unwrap(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn ft_vector_closed_form() {
        assert_eq!(pascal_ft_vector(10, 3).unwrap().by_degree, vec![1, 10, 28, 18, 0]);
        assert_eq!(pascal_ft_vector(5, 5).unwrap().by_degree, vec![1, 0]);
        let p = pascal_ideal(7, 2).unwrap();
        assert_eq!(pascal_ft_vector(7, 2).unwrap(), ft_vector(&p.ideal, 2).unwrap());
    }

    #[test]
    fn hilbert_series_forms() {
        let hs = pascal_hilbert_series(10, 3).unwrap();
        let expected = poly_mul(&poly_mul(&[1, 1, 1, 1], &[1, 1, 1]), &[1, 1, 1]);
        assert_eq!(hs.numerator, expected);
        assert_eq!(hs.denominator_exponent, 7);
        assert_eq!(hilbert_series_ci(&pascal_ideal(10, 3).unwrap().ideal).unwrap(), hs);
        let point = pascal_hilbert_series(3, 3).unwrap();
        assert_eq!(point.numerator, vec![1]);
        assert_eq!(point.denominator_exponent, 0);
        assert_eq!(point.hilbert_function(3), vec![1, 0, 0, 0]);
        assert_eq!(format_polynomial(&[1, 3, 0, 1]), "1 + 3z + z^3");
    }

    #[test]
    fn normalization_cancels_one_minus_z() {
        // (1 - z^2) / (1 - z)^3 = (1 + z) / (1 - z)^2
        let hs = HilbertSeries {
            numerator: vec![1, 0, -1],
            denominator_exponent: 3,
        };
        let n = hs.normalized();
        assert_eq!(n.numerator, vec![1, 1]);
        assert_eq!(n.denominator_exponent, 2);
        assert_eq!(hs.hilbert_function(6), n.hilbert_function(6));
    }

    #[test]
    fn tlex_examples() {
        let l = match pascal_tlex(10, 3).unwrap() {
            TlexOutcome::Exists(l) => l,
            other => panic!("expected a t-lex ideal, got {other:?}"),
        };
        assert_eq!(l.gens(), &[mono(&[1, 4, 7]), mono(&[1, 4, 8])]);
        assert!(matches!(pascal_tlex(9, 3).unwrap(), TlexOutcome::Exists(_)));
        assert_eq!(
            pascal_tlex(12, 5).unwrap(),
            TlexOutcome::Absent {
                discrepancy: 3,
                residue: 2
            }
        );
    }

    #[test]
    fn discrepancy_examples() {
        assert_eq!(shadow_discrepancy(10, 3).unwrap(), 1);
        assert_eq!(shadow_discrepancy(11, 3).unwrap(), 2);
        assert_eq!(shadow_discrepancy(7, 5).unwrap(), 3);
        assert!(shadow_discrepancy(9, 3).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = max_reg_witness(10, 3, 2).unwrap();
        assert_eq!(w.num_gens(), 4);
        assert_eq!(ci_invariants(&w).unwrap().1, 7);
        assert_eq!(max_reg_witness(11, 3, 5).unwrap(), pascal_ideal(11, 5).unwrap().ideal);
        let even = max_reg_witness(8, 2, 4).unwrap();
        assert_eq!(even.gens(), &[mono(&[1, 5]), mono(&[2, 6]), mono(&[3, 7]), mono(&[4, 8])]);
    }
}
