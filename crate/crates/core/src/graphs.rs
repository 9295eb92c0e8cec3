//! Simple graphs, edge ideals, induced matchings and forest regularity.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::monomials::{SquarefreeMonomial, MAX_VARS};

/// An undirected simple graph on `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub n: u32,
    /// Edges `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Validates endpoints and rejects loops and repeated edges.
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::AmbientTooLarge(n));
        }
        let mut out: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidEdge(a, b));
            }
            let e = (a.min(b), a.max(b));
            if out.contains(&e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            out.push(e);
        }
        out.sort_unstable();
        Ok(Graph { n, edges: out })
    }

    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n as usize + 1];
        for &(a, b) in &self.edges {
            adj[a as usize] |= 1 << (b - 1);
            adj[b as usize] |= 1 << (a - 1);
        }
        adj
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn edge_ideal(graph: &Graph) -> Result<MonomialIdeal> {
    if graph.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    MonomialIdeal::minimalize(
        graph.n,
        graph
            .edges
            .iter()
            .map(|&(a, b)| SquarefreeMonomial::var(a).with_var(b)),
    )
}

/// Largest number of pairwise disjoint edges such that no other edge joins
/// two of their endpoints. Exhaustive branch over edges, pruning as soon as
/// a chosen edge would touch or be adjacent to an earlier one.
pub fn induced_matching_number(graph: &Graph) -> Result<usize> {
    if graph.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    let adj = graph.adjacency();
    let mut best = 0;
    search(&graph.edges, &adj, 0, 0, 0, &mut best);
    Ok(best)
}

fn search(edges: &[(u32, u32)], adj: &[u64], from: usize, used: u64, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    if size + (edges.len() - from) <= *best {
        return;
    }
    for (k, &(a, b)) in edges.iter().enumerate().skip(from) {
        let ends = (1u64 << (a - 1)) | (1u64 << (b - 1));
        let blocked = used & (ends | adj[a as usize] | adj[b as usize]) != 0;
        if !blocked {
            search(edges, adj, k + 1, used | ends, size + 1, best);
        }
    }
}

pub fn is_forest(graph: &Graph) -> bool {
    let mut parent: Vec<u32> = (0..=graph.n).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for &(a, b) in &graph.edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra as usize] = rb;
    }
    true
}

/// `reg(I(G)) = im(G) + 1` for a forest.
pub fn forest_regularity(graph: &Graph) -> Result<usize> {
    if !is_forest(graph) {
        return Err(Error::NotForest);
    }
    Ok(induced_matching_number(graph)? + 1)
}

/// Edges `{i, i + n/2}` for even `n`; for odd `n` the edges
/// `{i, i + floor(n/2)}` together with `{1, n}`.
pub fn corollary_graph(n: u32) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let half = n / 2;
    let mut edges: Vec<(u32, u32)> = (1..=half).map(|i| (i, i + half)).collect();
    if n % 2 == 1 {
        edges.push((1, n));
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> Graph {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        let triangle = Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(edge_ideal(&triangle).unwrap().to_string(), "x1*x2, x1*x3, x2*x3");
        assert_eq!(edge_ideal(&corollary_graph(6).unwrap()).unwrap().to_string(), "x1*x4, x2*x5, x3*x6");
        assert_eq!(edge_ideal(&corollary_graph(5).unwrap()).unwrap().to_string(), "x1*x3, x1*x5, x2*x4");
        assert_eq!(edge_ideal(&Graph::new(3, []).unwrap()), Err(Error::EdgelessGraph));
    }

    #[test]
    fn parse_level_rejections() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::InvalidEdge(1, 1)));
        assert_eq!(Graph::new(3, [(1, 2), (2, 1)]), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(Graph::new(3, [(1, 4)]), Err(Error::InvalidEdge(1, 4)));
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(induced_matching_number(&path(4)).unwrap(), 1);
        assert_eq!(induced_matching_number(&path(5)).unwrap(), 2);
        let disjoint = Graph::new(8, [(1, 2), (3, 4), (5, 6), (7, 8)]).unwrap();
        assert_eq!(induced_matching_number(&disjoint).unwrap(), 4);
        assert_eq!(induced_matching_number(&corollary_graph(5).unwrap()).unwrap(), 2);
        let c5 = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert_eq!(induced_matching_number(&c5).unwrap(), 1);
    }

    #[test]
    fn forest_examples() {
        assert!(is_forest(&path(6)));
        assert!(!is_forest(&Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap()));
        assert!(is_forest(&corollary_graph(6).unwrap()));
        assert!(is_forest(&corollary_graph(7).unwrap()));
        assert_eq!(forest_regularity(&Graph::new(2, [(1, 2)]).unwrap()).unwrap(), 2);
        assert_eq!(forest_regularity(&corollary_graph(8).unwrap()).unwrap(), 5);
        assert_eq!(
            forest_regularity(&Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap()),
            Err(Error::NotForest)
        );
        assert!(corollary_graph(1).is_err());
    }
}
