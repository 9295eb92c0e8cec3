//! Serializable summaries of everything computable for an ideal or graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{edge_ideal, forest_regularity, induced_matching_number, is_forest, Graph};
use crate::ideals::{
    bcos, ci_invariants, cosize, ft_vector, is_regular_sequence, is_t_spread_lexsegment,
    is_t_spread_strongly_stable, pd_bound, reg_bound, reg_bound_degree_at_most_d, reg_bound_tspread,
    strongly_stable_invariants, support_index, MonomialIdeal,
};
use crate::resolutions::{betti_table_with_limit, homological_invariants, BettiTable, Subject};

/// Bounds computed from the generators alone.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub generators: Vec<String>,
    pub support_index: usize,
    /// Absent when the generator count exceeds the subset-scan limit.
    pub bcos: Option<usize>,
    pub cosize: usize,
    pub pd_bound: usize,
    pub reg_bound: usize,
    pub regular_sequence: bool,
    pub ci_pd: Option<usize>,
    pub ci_reg: Option<usize>,
    pub tspread: Option<TSpreadReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TSpreadReport {
    pub t: u32,
    pub is_t_spread: bool,
    pub ft_vector: Vec<u64>,
    pub reg_bound_tspread: Option<u32>,
    pub reg_bound_degree: Option<u32>,
    pub strongly_stable: Option<bool>,
    pub lexsegment: Option<bool>,
    pub strongly_stable_pd: Option<usize>,
    pub strongly_stable_reg: Option<usize>,
}

/// Bounds plus the exact oracle values.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    #[serde(flatten)]
    pub bounds: BoundsReport,
    pub pd: usize,
    pub reg: usize,
    pub depth: usize,
    pub betti: BettiTable,
    pub extremal: Vec<[u64; 3]>,
}

pub fn bounds_report(ideal: &MonomialIdeal, t: Option<u32>) -> Result<BoundsReport> {
    let bcos = match bcos(ideal) {
        Ok(b) => Some(b),
        Err(Error::SizeLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let ci = ci_invariants(ideal).ok();
    let tspread = t.map(|t| tspread_report(ideal, t)).transpose()?;
    Ok(BoundsReport {
        n: ideal.n(),
        generators: ideal.gens().iter().map(|g| g.to_string()).collect(),
        support_index: support_index(ideal)?,
        bcos,
        cosize: cosize(ideal)?,
        pd_bound: pd_bound(ideal)?,
        reg_bound: reg_bound(ideal)?,
        regular_sequence: is_regular_sequence(ideal),
        ci_pd: ci.map(|c| c.0),
        ci_reg: ci.map(|c| c.1),
        tspread,
    })
}

fn tspread_report(ideal: &MonomialIdeal, t: u32) -> Result<TSpreadReport> {
    let spread = ideal.is_t_spread(t);
    let (strongly_stable, lexsegment) = if spread {
        (
            Some(is_t_spread_strongly_stable(ideal, t)?),
            Some(is_t_spread_lexsegment(ideal, t)?),
        )
    } else {
        (None, None)
    };
    let ss = if strongly_stable == Some(true) {
        strongly_stable_invariants(ideal, t).ok()
    } else {
        None
    };
    let d = ideal.max_degree() as u32;
    Ok(TSpreadReport {
        t,
        is_t_spread: spread,
        ft_vector: ft_vector(ideal, t)?.by_degree,
        reg_bound_tspread: if spread { reg_bound_tspread(ideal.n(), t).ok() } else { None },
        reg_bound_degree: if spread {
            reg_bound_degree_at_most_d(ideal.n(), d, t).ok()
        } else {
            None
        },
        strongly_stable,
        lexsegment,
        strongly_stable_pd: ss.map(|s| s.0),
        strongly_stable_reg: ss.map(|s| s.1),
    })
}

pub fn invariants_report(ideal: &MonomialIdeal, t: Option<u32>, max_n: u32) -> Result<InvariantsReport> {
    let bounds = bounds_report(ideal, t)?;
    let betti = betti_table_with_limit(ideal, max_n)?;
    let (pd, reg, depth) = homological_invariants(&betti, ideal.n());
    let extremal = betti
        .convert(Subject::Ideal)
        .extremal()
        .into_iter()
        .map(|((i, j), v)| [i as u64, j as u64, v])
        .collect();
    Ok(InvariantsReport {
        bounds,
        pd,
        reg,
        depth,
        betti,
        extremal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
    pub generators: Vec<String>,
    pub induced_matching_number: usize,
    pub is_forest: bool,
    pub forest_regularity: Option<usize>,
    pub reg: usize,
    pub pd: usize,
    pub reg_bound_half: u32,
}

pub fn graph_report(graph: &Graph, max_n: u32) -> Result<GraphReport> {
    let ideal = edge_ideal(graph)?;
    let betti = betti_table_with_limit(&ideal, max_n)?;
    let (pd, reg, _) = homological_invariants(&betti, ideal.n());
    Ok(GraphReport {
        n: graph.n,
        edges: graph.edges.clone(),
        generators: ideal.gens().iter().map(|g| g.to_string()).collect(),
        induced_matching_number: induced_matching_number(graph)?,
        is_forest: is_forest(graph),
        forest_regularity: forest_regularity(graph).ok(),
        reg,
        pd,
        reg_bound_half: graph.n / 2 + 1,
    })
}
