//! Free resolutions and graded Betti numbers.
//!
//! The Taylor and Koszul complexes are built only as degree bookkeeping (the
//! shifts of their basis elements). Exact Betti numbers come from Hochster's
//! formula, `beta_{i,j}(S/I) = sum_{|W| = j} dim H~_{j-i-1}(Delta_W; Q)`, summed
//! over the vertex sets `W` that are unions of generator supports; every other
//! `W` restricts the Stanley–Reisner complex to a cone.

mod betti;
mod linalg;
mod simplicial;

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

pub use betti::{BettiTable, Subject};
pub use linalg::{rank, SparseColumn};
pub use simplicial::{complex_to_ideal, stanley_reisner_complex, SimplicialComplex};

use crate::error::{Error, Result};
use crate::ideals::{is_regular_sequence, MonomialIdeal};
use simplicial::{faces_restricted, reduced_homology};

/// Default ambient-size guard for the Betti oracle.
pub const DEFAULT_ORACLE_MAX_N: u32 = 14;

/// Generator-count guard for the Taylor complex (it has `2^p - 1` basis elements).
pub const TAYLOR_MAX_GENERATORS: usize = 20;

/// Degrees of the basis elements of each free module in a resolution of an ideal.
///
/// Step `i` holds the shifts of the `i`-th free module, step 0 being the
/// generators. Each step maps degree to multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedComplex {
    pub steps: Vec<BTreeMap<usize, u64>>,
}

impl GradedComplex {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Sorted multiset of shifts at step `i`.
    pub fn degrees(&self, i: usize) -> Vec<usize> {
        self.steps.get(i).map_or_else(Vec::new, |step| {
            step.iter()
                .flat_map(|(&d, &m)| std::iter::repeat_n(d, m as usize))
                .collect()
        })
    }

    pub fn rank(&self, i: usize) -> u64 {
        self.steps.get(i).map_or(0, |s| s.values().sum())
    }

    /// `b_{i,j}`: multiplicity of the shift `j` at step `i`.
    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.steps.get(i).and_then(|s| s.get(&j)).copied().unwrap_or(0)
    }

    /// The shifts as a table for the ideal.
    pub fn to_betti_table(&self) -> BettiTable {
        BettiTable::new(
            Subject::Ideal,
            self.steps
                .iter()
                .enumerate()
                .flat_map(|(i, s)| s.iter().map(move |(&j, &m)| ((i, j), m))),
        )
    }
}

/// Taylor complex: the basis element for a nonempty generator subset `F`
/// sits at step `|F| - 1` in degree `deg lcm(F)`.
pub fn taylor_complex(ideal: &MonomialIdeal) -> Result<GradedComplex> {
    ideal.require_proper()?;
    let masks: Vec<u64> = ideal.gens().iter().map(|g| g.mask()).collect();
    let p = masks.len();
    if p > TAYLOR_MAX_GENERATORS {
        return Err(Error::SizeLimit {
            limit_name: "Taylor generator",
            value: p,
            limit: TAYLOR_MAX_GENERATORS,
        });
    }
    let mut lcms = vec![0u64; 1 << p];
    let mut steps = vec![BTreeMap::new(); p];
    for subset in 1usize..(1 << p) {
        let low = subset.trailing_zeros() as usize;
        lcms[subset] = lcms[subset & (subset - 1)] | masks[low];
        let step = subset.count_ones() as usize - 1;
        *steps[step].entry(lcms[subset].count_ones() as usize).or_insert(0) += 1;
    }
    Ok(GradedComplex { steps })
}

/// Koszul complex on a regular sequence of squarefree monomials: step `i`
/// has one basis element per `(i+1)`-subset `T`, in degree `sum_{u in T} deg u`.
pub fn koszul_complex(ideal: &MonomialIdeal) -> Result<GradedComplex> {
    ideal.require_proper()?;
    if !is_regular_sequence(ideal) {
        return Err(Error::NotRegularSequence);
    }
    // counts[k][d]: number of k-subsets with total degree d
    let mut counts: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::from([(0, 1)])];
    for g in ideal.gens() {
        let deg = g.degree();
        counts.push(BTreeMap::new());
        for k in (1..counts.len()).rev() {
            let shifted: Vec<(usize, u64)> = counts[k - 1].iter().map(|(&d, &m)| (d + deg, m)).collect();
            for (d, m) in shifted {
                *counts[k].entry(d).or_insert(0) += m;
            }
        }
    }
    Ok(GradedComplex {
        steps: counts.into_iter().skip(1).collect(),
    })
}

/// All unions of generator supports, including the empty union.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::from([0]);
    let mut elements = vec![0u64];
    for g in ideal.gens() {
        let fresh: Vec<u64> = elements
            .iter()
            .map(|&w| w | g.mask())
            .filter(|w| !seen.contains(w))
            .collect();
        for w in fresh {
            if seen.insert(w) {
                elements.push(w);
            }
        }
    }
    elements.sort_unstable();
    elements
}

/// Exact graded Betti numbers of `S/I` over `Q`, guarded at
/// [`DEFAULT_ORACLE_MAX_N`] variables.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with_limit(ideal, DEFAULT_ORACLE_MAX_N)
}

pub fn betti_table_with_limit(ideal: &MonomialIdeal, max_n: u32) -> Result<BettiTable> {
    ideal.require_proper()?;
    if ideal.n() > max_n {
        return Err(Error::SizeLimit {
            limit_name: "Betti oracle ambient size",
            value: ideal.n() as usize,
            limit: max_n as usize,
        });
    }
    let gens: Vec<u64> = ideal.gens().iter().map(|g| g.mask()).collect();
    let contributions: Vec<Vec<((usize, usize), u64)>> = lcm_lattice(ideal)
        .into_par_iter()
        .map(|w| {
            let nonfaces: Vec<u64> = gens.iter().copied().filter(|&g| g & !w == 0).collect();
            let faces = faces_restricted(w, &nonfaces);
            let j = w.count_ones() as usize;
            reduced_homology(&faces)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(|(size, h)| {
                    // H~ in dimension size - 1 contributes to beta_{i,j} with i = j - size
                    ((j - size, j), h as u64)
                })
                .collect()
        })
        .collect();
    Ok(BettiTable::new(Subject::Quotient, contributions.into_iter().flatten()))
}

/// Projective dimension of the ideal.
pub fn pd(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_table(ideal)?.convert(Subject::Ideal).pd())
}

/// Castelnuovo–Mumford regularity of the ideal.
pub fn reg(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_table(ideal)?.convert(Subject::Ideal).reg())
}

/// `depth(I) = n - pd(I)`.
pub fn depth_of(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.n() as usize - pd(ideal)?)
}

/// `pd`, `reg` and `depth` of the ideal read off one oracle table.
pub fn homological_invariants(table: &BettiTable, n: u32) -> (usize, usize, usize) {
    let ideal_table = table.convert(Subject::Ideal);
    let pd = ideal_table.pd();
    (pd, ideal_table.reg(), n as usize - pd)
}
