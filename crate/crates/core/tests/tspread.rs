use tspread::ideals::{ci_invariants, ft_vector, is_regular_sequence, is_t_spread_lexsegment, reg_bound_degree_at_most_d};
use tspread::monomials::enumerate_t_spread;
use tspread::resolutions::{betti_table, depth_of, Subject};
use tspread::tspread::{
    hilbert_series_ci, max_reg_witness, pascal_ft_vector, pascal_hilbert_series, pascal_ideal, pascal_tlex,
    shadow_discrepancy, TlexOutcome,
};

#[test]
fn pascal_is_a_complete_intersection_with_extremal_regularity() {
    for t in 1..=4u32 {
        for n in t..=12u32 {
            let p = pascal_ideal(n, t).unwrap();
            assert!(is_regular_sequence(&p.ideal));
            assert_eq!(p.ideal.num_gens(), t as usize);
            let covered = p.generators.iter().fold(0u64, |a, g| a | g.mask());
            assert_eq!(covered.count_ones(), n);
            assert_eq!(ci_invariants(&p.ideal).unwrap(), ((t - 1) as usize, (n - t + 1) as usize));
            let q = betti_table(&p.ideal).unwrap();
            assert_eq!(q.extremal().len(), 1, "({n},{t})");
            assert_eq!(q.pd(), t as usize);
            let id = q.convert(Subject::Ideal);
            assert_eq!((id.pd(), id.reg()), ci_invariants(&p.ideal).unwrap());
            assert_eq!(depth_of(&p.ideal).unwrap(), (n - (t - 1)) as usize);
        }
    }
}

#[test]
fn ft_vector_closed_form_matches_enumeration() {
    for t in 1..=4u32 {
        for n in t..=14u32 {
            let p = pascal_ideal(n, t).unwrap();
            assert_eq!(pascal_ft_vector(n, t).unwrap(), ft_vector(&p.ideal, t).unwrap(), "({n},{t})");
        }
    }
    assert_eq!(pascal_ft_vector(10, 3).unwrap().by_degree, vec![1, 10, 28, 18, 0]);
}

#[test]
fn hilbert_series_routes_agree() {
    for t in 1..=4u32 {
        for n in t..=12u32 {
            let p = pascal_ideal(n, t).unwrap();
            let closed = pascal_hilbert_series(n, t).unwrap();
            let product = hilbert_series_ci(&p.ideal).unwrap();
            assert_eq!(closed.normalized(), product.normalized());
            assert_eq!(closed.hilbert_function(n as usize), product.hilbert_function(n as usize));
        }
    }
    let s = pascal_hilbert_series(10, 3).unwrap();
    assert_eq!(s.denominator_exponent, 7);
    assert_eq!(s.numerator, vec![1, 3, 6, 8, 8, 6, 3, 1]);
}

#[test]
fn companions_exist_exactly_for_small_residues() {
    for t in 1..=6u32 {
        for n in t..=20u32 {
            let i = (n - 1) % t + 1;
            match pascal_tlex(n, t).unwrap() {
                TlexOutcome::Exists(l) => {
                    assert!(i == 1 || i + 1 == t || i == t, "({n},{t})");
                    assert!(is_t_spread_lexsegment(&l, t).unwrap());
                    assert_eq!(ft_vector(&l, t).unwrap(), pascal_ft_vector(n, t).unwrap());
                }
                TlexOutcome::Absent { discrepancy, residue } => {
                    assert_eq!(residue, i);
                    assert_ne!(discrepancy, i as u64);
                    assert_eq!(discrepancy, shadow_discrepancy(n, t).unwrap());
                }
            }
        }
    }
    assert_eq!(shadow_discrepancy(12, 5).unwrap(), 3);
}

#[test]
fn witness_attains_the_degree_bound() {
    for t in 1..=4u32 {
        for d in 1..=5u32 {
            for n in (1 + (d - 1) * t).max(t)..=14 {
                let w = max_reg_witness(n, d, t).unwrap();
                assert!(w.is_t_spread(t));
                assert!(w.max_degree() <= d as usize, "({n},{d},{t}): {w}");
                let (_, reg) = ci_invariants(&w).unwrap();
                assert_eq!(reg as u32, reg_bound_degree_at_most_d(n, d, t).unwrap(), "({n},{d},{t})");
            }
        }
    }
    assert!(max_reg_witness(2, 1, 3).is_err());
    assert!(reg_bound_degree_at_most_d(2, 1, 3).is_err());
}

#[test]
fn top_lex_generators_for_divisible_case() {
    // n = kt + t: companion is the top t monomials of the largest degree
    for t in 2..=4u32 {
        for k in 0..=2u32 {
            let n = k * t + t;
            let TlexOutcome::Exists(l) = pascal_tlex(n, t).unwrap() else { panic!("({n},{t})") };
            let top: Vec<_> = enumerate_t_spread(n, k + 1, t).members()[..t as usize].to_vec();
            let mut gens = l.gens().to_vec();
            gens.sort();
            let mut expected = top.clone();
            expected.sort();
            assert_eq!(gens, expected, "({n},{t})");
        }
    }
}
