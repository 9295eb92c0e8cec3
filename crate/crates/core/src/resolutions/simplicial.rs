//! Stanley–Reisner complexes and their reduced homology over `Q`.

use std::collections::HashMap;

use serde::Serialize;

use super::linalg::{rank, SparseColumn};
use crate::error::{Error, Result};
use crate::ideals::{minimal_transversals, MonomialIdeal};
use crate::monomials::SquarefreeMonomial;

/// A simplicial complex on `[n]` given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    pub n: u32,
    pub facets: Vec<SquarefreeMonomial>,
}

impl SimplicialComplex {
    pub fn new(n: u32, facets: impl IntoIterator<Item = SquarefreeMonomial>) -> Result<Self> {
        let mut facets: Vec<_> = facets.into_iter().collect();
        if let Some(f) = facets.iter().find(|f| !f.fits(n)) {
            return Err(Error::IndexOutOfRange {
                index: f.max_index(),
                n,
            });
        }
        facets.sort_by_key(|f| f.indices().collect::<Vec<_>>());
        facets.dedup();
        let maximal: Vec<_> = facets
            .iter()
            .copied()
            .filter(|&f| !facets.iter().any(|&g| g != f && f.divides(g)))
            .collect();
        Ok(SimplicialComplex { n, facets: maximal })
    }

    pub fn contains_face(&self, face: SquarefreeMonomial) -> bool {
        self.facets.iter().any(|&f| face.divides(f))
    }

    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.degree() as i64 - 1).max().unwrap_or(-1)
    }
}

/// The complex of subsets of `[n]` containing no generator support.
///
/// Facets are the complements of the minimal vertex covers of the generators.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let n = ideal.n();
    let full = full_mask(n);
    let masks: Vec<u64> = ideal.gens().iter().map(|g| g.mask()).collect();
    if masks.contains(&0) {
        return Err(Error::UnitIdeal);
    }
    let facets = minimal_transversals(&masks)
        .into_iter()
        .map(|cover| SquarefreeMonomial::from_mask(full & !cover));
    SimplicialComplex::new(n, facets)
}

/// Inverse of [`stanley_reisner_complex`]: the minimal non-faces of the complex.
pub fn complex_to_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let full = full_mask(complex.n);
    let complements: Vec<u64> = complex.facets.iter().map(|f| full & !f.mask()).collect();
    if complements.contains(&0) {
        // the full simplex has no non-faces
        return Err(Error::ZeroIdeal);
    }
    let nonfaces = minimal_transversals(&complements);
    MonomialIdeal::minimalize(complex.n, nonfaces.into_iter().map(SquarefreeMonomial::from_mask))
}

pub(crate) fn full_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Faces of the complex on vertex set `w` whose minimal non-faces are
/// `nonfaces`, grouped by cardinality (index `k` holds the `k`-subsets).
pub(crate) fn faces_restricted(w: u64, nonfaces: &[u64]) -> Vec<Vec<u64>> {
    let vertices: Vec<u64> = (0..64).map(|b| 1u64 << b).filter(|bit| w & bit != 0).collect();
    let mut by_size: Vec<Vec<u64>> = vec![vec![0]];
    fn grow(face: u64, from: usize, vertices: &[u64], nonfaces: &[u64], by_size: &mut Vec<Vec<u64>>) {
        for (k, &v) in vertices.iter().enumerate().skip(from) {
            let next = face | v;
            if nonfaces.iter().any(|&g| g & !next == 0) {
                continue;
            }
            let size = next.count_ones() as usize;
            if by_size.len() <= size {
                by_size.push(Vec::new());
            }
            by_size[size].push(next);
            grow(next, k + 1, vertices, nonfaces, by_size);
        }
    }
    grow(0, 0, &vertices, nonfaces, &mut by_size);
    for level in &mut by_size {
        level.sort_unstable();
    }
    by_size
}

/// Reduced homology ranks `dim H~_k` for `k = -1, 0, 1, ...`; entry `k + 1`.
pub(crate) fn reduced_homology(faces: &[Vec<u64>]) -> Vec<usize> {
    // boundary ranks: ranks[k] = rank of the map from k-subsets to (k-1)-subsets
    let mut ranks = vec![0usize; faces.len() + 1];
    for size in 1..faces.len() {
        let index: HashMap<u64, usize> = faces[size - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let columns: Vec<SparseColumn> = faces[size]
            .iter()
            .map(|&f| {
                let mut col: SparseColumn = Vec::with_capacity(size);
                let mut rest = f;
                let mut pos = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    col.push((index[&(f & !bit)], sign));
                    pos += 1;
                }
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        ranks[size] = rank(&columns);
    }
    (0..faces.len())
        .map(|size| faces[size].len() - ranks[size] - ranks[size + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: u32, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            n,
            gens.iter()
                .map(|g| SquarefreeMonomial::from_indices(g.iter().copied()).unwrap()),
        )
        .unwrap()
    }

    fn facets(c: &SimplicialComplex) -> Vec<Vec<u32>> {
        c.facets.iter().map(|f| f.indices().collect()).collect()
    }

    #[test]
    fn stanley_reisner_examples() {
        let c = stanley_reisner_complex(&ideal(2, &[&[1, 2]])).unwrap();
        assert_eq!(facets(&c), vec![vec![1], vec![2]]);
        let c = stanley_reisner_complex(&ideal(3, &[&[1, 2], &[2, 3]])).unwrap();
        assert_eq!(facets(&c), vec![vec![1, 3], vec![2]]);
        let sets = ideal(11, &[&[2, 4], &[1, 5, 7], &[3, 7, 9, 11]]);
        let c = stanley_reisner_complex(&sets).unwrap();
        assert_eq!(complex_to_ideal(&c).unwrap(), sets);
    }

    #[test]
    fn faces_avoid_every_nonface() {
        let faces = faces_restricted(0b111, &[0b011, 0b110]);
        assert_eq!(faces, vec![vec![0], vec![0b001, 0b010, 0b100], vec![0b101]]);
    }

    #[test]
    fn homology_of_basic_spaces() {
        // two points: H~_0 = 1
        assert_eq!(reduced_homology(&faces_restricted(0b11, &[0b11])), vec![0, 1]);
        // hollow triangle: H~_1 = 1
        assert_eq!(reduced_homology(&faces_restricted(0b111, &[0b111])), vec![0, 0, 1]);
        // void complex: H~_{-1} = 1
        assert_eq!(reduced_homology(&faces_restricted(0, &[])), vec![1]);
        // solid simplex is contractible
        assert_eq!(reduced_homology(&faces_restricted(0b1111, &[])), vec![0, 0, 0, 0, 0]);
        // boundary of the octahedron is a 2-sphere
        let octa = faces_restricted(0b111111, &[0b000011, 0b001100, 0b110000]);
        assert_eq!(reduced_homology(&octa), vec![0, 0, 0, 1]);
    }
}
