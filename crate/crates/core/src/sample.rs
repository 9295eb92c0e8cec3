//! Random ideals and graphs for property checks and fuzzing.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graphs::Graph;
use crate::ideals::MonomialIdeal;
use crate::monomials::{enumerate_t_spread, is_t_spread, max_t_spread_degree, SquarefreeMonomial};

/// A uniformly chosen t-spread monomial of degree `d`, if any exists.
pub fn random_t_spread_monomial<R: Rng + ?Sized>(rng: &mut R, n: u32, d: u32, t: u32) -> Option<SquarefreeMonomial> {
    enumerate_t_spread(n, d, t).members().choose(rng).copied()
}

/// A t-spread ideal with between 1 and `max_gens` generators of degree
/// `1..=max_degree` (capped at the largest t-spread degree).
pub fn random_t_spread_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    n: u32,
    t: u32,
    max_gens: usize,
    max_degree: u32,
) -> MonomialIdeal {
    let top = max_degree.min(max_t_spread_degree(n, t)).max(1);
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<SquarefreeMonomial> = (0..count)
        .filter_map(|_| {
            let d = rng.gen_range(1..=top);
            random_t_spread_monomial(rng, n, d, t)
        })
        .collect();
    MonomialIdeal::minimalize(n, gens).expect("at least one variable exists")
}

/// An ideal whose generators all have degree `d`.
pub fn random_equigenerated<R: Rng + ?Sized>(rng: &mut R, n: u32, t: u32, d: u32, max_gens: usize) -> Option<MonomialIdeal> {
    let pool = enumerate_t_spread(n, d, t);
    if pool.is_empty() {
        return None;
    }
    let count = rng.gen_range(1..=max_gens.min(pool.len()));
    let gens: Vec<_> = pool.members().choose_multiple(rng, count).copied().collect();
    MonomialIdeal::minimalize(n, gens).ok()
}

/// The t-spread strongly stable ideal generated by the closure of a few
/// random t-spread monomials under the moves `x_j -> x_i`, `i < j`.
pub fn random_strongly_stable<R: Rng + ?Sized>(rng: &mut R, n: u32, t: u32, seeds: usize, max_degree: u32) -> MonomialIdeal {
    let top = max_degree.min(max_t_spread_degree(n, t)).max(1);
    let mut closed: HashSet<SquarefreeMonomial> = HashSet::new();
    let mut stack: Vec<SquarefreeMonomial> = (0..seeds.max(1))
        .filter_map(|_| {
            let d = rng.gen_range(1..=top);
            random_t_spread_monomial(rng, n, d, t)
        })
        .collect();
    while let Some(u) = stack.pop() {
        if !closed.insert(u) {
            continue;
        }
        for j in u.indices() {
            let rest = u.without_var(j);
            for i in (1..j).filter(|&i| !u.contains(i)) {
                let v = rest.with_var(i);
                if is_t_spread(v, t) && !closed.contains(&v) {
                    stack.push(v);
                }
            }
        }
    }
    MonomialIdeal::minimalize(n, closed).expect("closure of a nonempty seed set")
}

/// A random forest on `[n]` with at least one edge (`n >= 2`).
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, n: u32) -> Graph {
    assert!(n >= 2, "a forest with an edge needs two vertices");
    loop {
        let mut order: Vec<u32> = (1..=n).collect();
        order.shuffle(rng);
        let mut edges = Vec::new();
        for k in 1..order.len() {
            if rng.gen_bool(0.75) {
                let parent = order[rng.gen_range(0..k)];
                edges.push((parent, order[k]));
            }
        }
        if !edges.is_empty() {
            return Graph::new(n, edges).expect("tree edges are distinct");
        }
    }
}

/// An Erdős–Rényi graph with at least one edge.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: u32, p: f64) -> Graph {
    assert!(n >= 2);
    loop {
        let edges: Vec<(u32, u32)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if !edges.is_empty() {
            return Graph::new(n, edges).expect("pairs are distinct");
        }
    }
}
