mod common;

use itertools::Itertools;
use proptest::prelude::*;

use common::{ideal, squarefree_ideal, t_spread_ideal};
use tspread::ideals::{
    alexander_dual, bcos, ci_invariants, cosize, ft_vector, is_regular_sequence, is_t_spread_lexsegment,
    is_t_spread_strongly_stable, squarefree_veronese, support_index,
};
use tspread::monomials::{binomial, count_t_spread};
use tspread::Error;

/// Largest number of generators whose supports miss part of the full support.
fn support_index_by_scan(i: &tspread::MonomialIdeal) -> usize {
    let masks: Vec<u64> = i.gens().iter().map(|g| g.mask()).collect();
    let full = masks.iter().fold(0, |a, m| a | m);
    (1..=masks.len())
        .filter(|&k| {
            masks
                .iter()
                .combinations(k)
                .any(|c| c.into_iter().fold(0, |a, m| a | m) != full)
        })
        .max()
        .unwrap_or(0)
}

fn cosize_by_scan(i: &tspread::MonomialIdeal) -> usize {
    let masks: Vec<u64> = i.gens().iter().map(|g| g.mask()).collect();
    let full = masks.iter().fold(0, |a, m| a | m);
    let w = (1..=masks.len())
        .find(|&k| {
            masks
                .iter()
                .combinations(k)
                .any(|c| c.into_iter().fold(0, |a, m| a | m) == full)
        })
        .unwrap();
    full.count_ones() as usize - w
}

#[test]
fn veronese_support_index() {
    for n in 1..=8u32 {
        for d in 1..=n {
            let v = squarefree_veronese(n, d).unwrap();
            assert_eq!(support_index(&v).unwrap() as u64, binomial(n as i64 - 1, d as i64), "n={n} d={d}");
            if v.num_gens() <= 20 {
                assert_eq!(bcos(&v).unwrap(), support_index(&v).unwrap() + 1);
            }
        }
    }
}

#[test]
fn worked_examples() {
    let sets = ideal(11, &[&[2, 4], &[1, 5, 7], &[3, 7, 9, 11]]);
    assert_eq!((support_index(&sets).unwrap(), bcos(&sets).unwrap(), cosize(&sets).unwrap()), (2, 3, 5));
    let ci = ideal(8, &[&[8], &[1, 2], &[3, 4, 5, 7]]);
    assert_eq!(cosize(&ci).unwrap(), 4);
    assert_eq!(ci_invariants(&ci).unwrap(), (2, 5));
    assert_eq!(ci_invariants(&sets), Err(Error::NotRegularSequence));
    let not_ci = ideal(4, &[&[1, 2], &[2, 3]]);
    assert_eq!(ci_invariants(&not_ci), Err(Error::NotRegularSequence));
    assert!(is_t_spread_strongly_stable(&ideal(4, &[&[1, 3], &[1, 4], &[2, 4]]), 2).unwrap());
    assert!(is_t_spread_lexsegment(&ideal(10, &[&[1, 4, 7], &[1, 4, 8]]), 3).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn support_index_agrees_with_subset_scans(i in squarefree_ideal(10, 7)) {
        let s = support_index(&i).unwrap();
        prop_assert_eq!(s, bcos(&i).unwrap() - 1);
        prop_assert_eq!(s, support_index_by_scan(&i));
        prop_assert!(s < i.num_gens());
        if is_regular_sequence(&i) {
            prop_assert_eq!(s, i.num_gens() - 1);
        }
    }

    #[test]
    fn cosize_agrees_with_subset_scan(i in squarefree_ideal(12, 7)) {
        prop_assert_eq!(cosize(&i).unwrap(), cosize_by_scan(&i));
    }

    #[test]
    fn alexander_dual_is_an_involution(i in squarefree_ideal(10, 6)) {
        let dual = alexander_dual(&i).unwrap();
        for cover in dual.gens() {
            prop_assert!(i.gens().iter().all(|g| !g.is_coprime_to(*cover)));
        }
        prop_assert_eq!(alexander_dual(&dual).unwrap(), i);
    }

    #[test]
    fn ft_vector_entries_fit(pair in t_spread_ideal(12, 5, 3)) {
        let (i, t) = pair;
        let f = ft_vector(&i, t).unwrap();
        for (j, &fj) in f.by_degree.iter().enumerate() {
            prop_assert!(fj <= count_t_spread(i.n(), j as u32, t));
        }
        prop_assert_eq!(f.by_degree[0], 1);
    }
}
