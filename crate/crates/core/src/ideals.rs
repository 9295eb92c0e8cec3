//! Squarefree monomial ideals and the invariants read off their generators:
//! support index, bcos, cosize, the Taylor-based bounds, complete-intersection
//! invariants, f_t-vectors, stability predicates and Alexander duality.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomials::{
    count_t_spread, enumerate_t_spread, generator_order, is_t_spread, max_t_spread_degree,
    SquarefreeMonomial, MAX_VARS,
};

/// Generator count above which the literal bcos subset scan is refused.
pub const BCOS_SCAN_LIMIT: usize = 20;

/// A squarefree monomial ideal given by its minimal generating set.
///
/// Generators are kept sorted by degree and then slex-descending. The unit
/// ideal is the single generator `1`; the zero ideal cannot be represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: u32,
    gens: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw_gens`, discarding non-minimal generators.
    pub fn minimalize(n: u32, raw_gens: impl IntoIterator<Item = SquarefreeMonomial>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::AmbientTooLarge(n));
        }
        let mut raw: Vec<_> = raw_gens.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if let Some(bad) = raw.iter().find(|g| !g.fits(n)) {
            return Err(Error::IndexOutOfRange {
                index: bad.max_index(),
                n,
            });
        }
        raw.sort_by(generator_order);
        raw.dedup();
        let mut gens: Vec<SquarefreeMonomial> = Vec::with_capacity(raw.len());
        for g in raw {
            if !gens.iter().any(|h| h.divides(g)) {
                gens.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn gens(&self) -> &[SquarefreeMonomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// The same generators viewed in a ring with `n` variables.
    pub fn with_ambient(&self, n: u32) -> Result<Self> {
        MonomialIdeal::minimalize(n, self.gens.iter().copied())
    }

    /// `lcm` of all generators; its support is the union of generator supports.
    pub fn lcm(&self) -> SquarefreeMonomial {
        self.gens
            .iter()
            .fold(SquarefreeMonomial::ONE, |acc, &g| acc.lcm_with(g))
    }

    pub fn max_degree(&self) -> usize {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.gens.iter().map(|g| g.degree()).min().unwrap_or(0)
    }

    /// Membership of a squarefree monomial: some generator divides it.
    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_t_spread(&self, t: u32) -> bool {
        self.gens.iter().all(|&g| is_t_spread(g, t))
    }

    pub fn support_family(&self) -> SupportFamily {
        SupportFamily {
            omegas: self.gens.clone(),
            omega: self.lcm(),
        }
    }

    fn masks(&self) -> Vec<u64> {
        self.gens.iter().map(|g| g.mask()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) in {} variables", self.n)
    }
}

/// The supports of the generators together with their union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFamily {
    pub omegas: Vec<SquarefreeMonomial>,
    pub omega: SquarefreeMonomial,
}

/// Number of t-spread monomials outside the ideal, one entry per degree.
///
/// Entry `j` (degree `j`, `0 <= j <= max_t_spread_degree`) is the classical
/// `f_{t, j-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FtVector {
    pub t: u32,
    pub by_degree: Vec<u64>,
}

impl FtVector {
    /// `f_{t,k}` in the convention indexed from `-1`.
    pub fn f(&self, k: i64) -> Option<u64> {
        usize::try_from(k + 1).ok().and_then(|j| self.by_degree.get(j).copied())
    }
}

impl fmt::Display for FtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.by_degree.iter().join(", "))
    }
}

/// The squarefree Veronese ideal generated by all squarefree monomials of degree `d`.
pub fn squarefree_veronese(n: u32, d: u32) -> Result<MonomialIdeal> {
    if d > n {
        return Err(Error::ZeroIdeal);
    }
    MonomialIdeal::minimalize(n, enumerate_t_spread(n, d, 1).iter())
}

/// Support index: least `i` such that every union of `i + 1` generator
/// supports is the full union.
///
/// A set of generators fails to cover the full support exactly when all of
/// them avoid a common variable `v` of that support, so the largest
/// non-covering family has `max_v |{g : v not in supp(g)}|` members and the
/// support index equals that count. Linear in the number of generators.
pub fn support_index(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_proper()?;
    let omega = ideal.lcm();
    Ok(omega
        .indices()
        .map(|v| ideal.gens().iter().filter(|g| !g.contains(v)).count())
        .max()
        .unwrap_or(0))
}

/// Smallest `l` such that every `l`-subset of generators has the full lcm.
///
/// Literal subset scan over increasing `l`, stopping each level at its first
/// counterexample. Refuses ideals with more than [`BCOS_SCAN_LIMIT`] generators.
pub fn bcos(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_proper()?;
    let p = ideal.num_gens();
    if p > BCOS_SCAN_LIMIT {
        return Err(Error::SizeLimit {
            limit_name: "bcos generator",
            value: p,
            limit: BCOS_SCAN_LIMIT,
        });
    }
    let full = ideal.lcm().mask();
    let masks = ideal.masks();
    for l in 1..=p {
        let all_full = masks
            .iter()
            .combinations(l)
            .all(|c| c.into_iter().fold(0, |acc, m| acc | m) == full);
        if all_full {
            return Ok(l);
        }
    }
    unreachable!("the full generator set always attains the lcm")
}

/// Fewest generators whose lcm is the lcm of all generators.
pub fn min_covering_generators(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_proper()?;
    let mut masks = ideal.masks();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let full = ideal.lcm().mask();
    let mut best = masks.len();
    cover_search(&masks, full, 0, 0, &mut best);
    Ok(best)
}

fn cover_search(masks: &[u64], full: u64, covered: u64, used: usize, best: &mut usize) {
    if covered == full {
        *best = (*best).min(used);
        return;
    }
    if used + 1 >= *best {
        return;
    }
    let missing = full & !covered;
    let pivot = missing & missing.wrapping_neg();
    for &m in masks.iter().filter(|&&m| m & pivot != 0) {
        cover_search(masks, full, covered | m, used + 1, best);
    }
}

/// `deg lcm(G(I)) - w` where `w` is the fewest generators attaining that lcm.
pub fn cosize(ideal: &MonomialIdeal) -> Result<usize> {
    let w = min_covering_generators(ideal)?;
    Ok(ideal.lcm().degree() - w)
}

/// Upper bound `min(s, n)` on the projective dimension of the ideal.
pub fn pd_bound(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(support_index(ideal)?.min(ideal.n() as usize))
}

/// Upper bound `cosize + 1` on the regularity of the ideal.
pub fn reg_bound(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(cosize(ideal)? + 1)
}

/// Squarefree monomials form a regular sequence iff their supports are pairwise disjoint.
pub fn is_regular_sequence(ideal: &MonomialIdeal) -> bool {
    if ideal.is_unit() {
        return false;
    }
    let mut seen = 0u64;
    for g in ideal.gens() {
        if seen & g.mask() != 0 {
            return false;
        }
        seen |= g.mask();
    }
    true
}

/// `(pd(I), reg(I))` for an ideal generated by a regular sequence.
pub fn ci_invariants(ideal: &MonomialIdeal) -> Result<(usize, usize)> {
    ideal.require_proper()?;
    if !is_regular_sequence(ideal) {
        return Err(Error::NotRegularSequence);
    }
    let p = ideal.num_gens();
    Ok((p - 1, ideal.lcm().degree() - (p - 1)))
}

/// Largest possible regularity `n - (t - 1)` of a t-spread ideal.
pub fn reg_bound_tspread(n: u32, t: u32) -> Result<u32> {
    if t == 0 {
        return Err(Error::ZeroSpread);
    }
    if n < t {
        return Err(Error::Precondition(format!("need n >= t, got n = {n}, t = {t}")));
    }
    Ok(n - (t - 1))
}

/// Largest possible regularity of a t-spread ideal generated in degrees at
/// most `d`: `n + 1 - max(ceil(n / d), t)`.
pub fn reg_bound_degree_at_most_d(n: u32, d: u32, t: u32) -> Result<u32> {
    check_degree_bound_args(n, d, t)?;
    Ok(n + 1 - n.div_ceil(d).max(t))
}

pub(crate) fn check_degree_bound_args(n: u32, d: u32, t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroSpread);
    }
    if n == 0 || d == 0 {
        return Err(Error::Precondition("need n, d >= 1".into()));
    }
    if n < t {
        return Err(Error::Precondition(format!("need n >= t, got n = {n}, t = {t}")));
    }
    if (n as u64) < 1 + (d as u64 - 1) * t as u64 {
        return Err(Error::Precondition(format!(
            "need n >= 1 + (d - 1) t, got n = {n}, d = {d}, t = {t}"
        )));
    }
    Ok(())
}

/// The t-spread monomials of degree `d` lying in the ideal.
pub fn t_spread_component(ideal: &MonomialIdeal, d: u32, t: u32) -> Vec<SquarefreeMonomial> {
    enumerate_t_spread(ideal.n(), d, t)
        .iter()
        .filter(|&m| ideal.contains(m))
        .collect()
}

pub fn ft_vector(ideal: &MonomialIdeal, t: u32) -> Result<FtVector> {
    if t == 0 {
        return Err(Error::ZeroSpread);
    }
    let n = ideal.n();
    let top = if n == 0 { 0 } else { max_t_spread_degree(n, t) };
    let by_degree = (0..=top)
        .map(|j| count_t_spread(n, j, t) - t_spread_component(ideal, j, t).len() as u64)
        .collect();
    Ok(FtVector { t, by_degree })
}

fn require_t_spread_gens(ideal: &MonomialIdeal, t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroSpread);
    }
    match ideal.gens().iter().find(|&&g| !is_t_spread(g, t)) {
        Some(g) => Err(Error::NotTSpread(g.to_string(), t)),
        None => Ok(()),
    }
}

fn stable_degrees(ideal: &MonomialIdeal, t: u32) -> std::ops::RangeInclusive<u32> {
    let top = if ideal.n() == 0 { 0 } else { max_t_spread_degree(ideal.n(), t) };
    ideal.min_degree() as u32..=top
}

/// Exchange property on every degree: replacing `x_j` by `x_i`, `i < j`, in a
/// t-spread monomial of the ideal stays in the ideal whenever the result is t-spread.
pub fn is_t_spread_strongly_stable(ideal: &MonomialIdeal, t: u32) -> Result<bool> {
    require_t_spread_gens(ideal, t)?;
    for d in stable_degrees(ideal, t) {
        let component: HashSet<_> = t_spread_component(ideal, d, t).into_iter().collect();
        for &u in &component {
            for j in u.indices() {
                let rest = u.without_var(j);
                for i in (1..j).filter(|&i| !u.contains(i)) {
                    let v = rest.with_var(i);
                    if is_t_spread(v, t) && !component.contains(&v) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Every degree component of t-spread monomials is an initial slex segment.
pub fn is_t_spread_lexsegment(ideal: &MonomialIdeal, t: u32) -> Result<bool> {
    require_t_spread_gens(ideal, t)?;
    for d in stable_degrees(ideal, t) {
        let mut outside_seen = false;
        for m in enumerate_t_spread(ideal.n(), d, t).iter() {
            match (ideal.contains(m), outside_seen) {
                (true, true) => return Ok(false),
                (false, _) => outside_seen = true,
                _ => {}
            }
        }
    }
    Ok(true)
}

/// `(pd(I), reg(I))` of a t-spread strongly stable ideal from its generators.
pub fn strongly_stable_invariants(ideal: &MonomialIdeal, t: u32) -> Result<(usize, usize)> {
    ideal.require_proper()?;
    if !is_t_spread_strongly_stable(ideal, t)? {
        return Err(Error::NotStronglyStable(t));
    }
    let pd = ideal
        .gens()
        .iter()
        .map(|u| u.max_index() as i64 - t as i64 * (u.degree() as i64 - 1) - 1)
        .max()
        .unwrap_or(0);
    Ok((pd.max(0) as usize, ideal.max_degree()))
}

/// Minimal transversals (hitting sets) of a family of nonempty sets.
pub(crate) fn minimal_transversals(family: &[u64]) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &edge in family {
        let mut next: Vec<u64> = Vec::new();
        for &tr in &current {
            if tr & edge != 0 {
                next.push(tr);
                continue;
            }
            let mut rest = edge;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                next.push(tr | bit);
            }
        }
        next.sort_by_key(|m| (m.count_ones(), *m));
        next.dedup();
        let mut minimal: Vec<u64> = Vec::with_capacity(next.len());
        for m in next {
            if !minimal.iter().any(|&k| k & !m == 0) {
                minimal.push(m);
            }
        }
        current = minimal;
    }
    current
}

/// Alexander dual: generated by the minimal vertex covers of the generator supports.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.require_proper()?;
    let covers = minimal_transversals(&ideal.masks());
    MonomialIdeal::minimalize(ideal.n(), covers.into_iter().map(SquarefreeMonomial::from_mask))
}
