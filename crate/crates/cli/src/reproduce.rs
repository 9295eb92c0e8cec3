use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tspread::graphs::{corollary_graph, edge_ideal, is_forest};
use tspread::ideals::{
    alexander_dual, bcos, ci_invariants, cosize, is_regular_sequence, is_t_spread_lexsegment, pd_bound, reg_bound,
    reg_bound_degree_at_most_d, reg_bound_tspread, squarefree_veronese, support_index,
};
use tspread::io::parse_ideal;
use tspread::monomials::{is_t_spread, lcm, slex_cmp, t_shadow, MonomialSet};
use tspread::resolutions::{betti_table, depth_of, taylor_complex, BettiTable, Subject};
use tspread::sample::{random_equigenerated, random_t_spread_ideal};
use tspread::tspread::{
    max_reg_witness, pascal_hilbert_series, pascal_ideal, pascal_total_betti, pascal_tlex, shadow_discrepancy,
    TlexOutcome,
};
use tspread::{MonomialIdeal, SquarefreeMonomial};

type Check = Result<(), String>;

fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn ideal(text: &str) -> Result<MonomialIdeal, String> {
    parse_ideal(text, None).map_err(|e| e.to_string())
}

fn ideal_n(text: &str, n: u32) -> Result<MonomialIdeal, String> {
    parse_ideal(text, Some(n)).map_err(|e| e.to_string())
}

fn mono(text: &str) -> SquarefreeMonomial {
    text.parse().expect("hard-coded monomial")
}

fn ideal_table(i: &MonomialIdeal) -> Result<BettiTable, String> {
    Ok(betti_table(i).map_err(|e| e.to_string())?.convert(Subject::Ideal))
}

const SETS: &str = "x2*x4, x1*x5*x7, x3*x7*x9*x11";
const TAYLOR: &str = "x1*x4, x1*x3*x8, x2*x4*x6, x1*x3*x5*x7*x9";
const DISJOINT: &str = "x8, x1*x2, x3*x4*x5*x7";

const PASCAL_10_3_DIAGRAM: &str = concat!(
    "     0 1 2 3\n",
    "Tot: 1 3 3 1\n",
    "------------\n",
    "  0: 1 - - -\n",
    "  1: - - - -\n",
    "  2: - 2 - -\n",
    "  3: - 1 - -\n",
    "  4: - - 1 -\n",
    "  5: - - 2 -\n",
    "  6: - - - -\n",
    "  7: - - - 1\n",
);

fn examples() -> Vec<(&'static str, Box<dyn Fn() -> Check>)> {
    vec![
        ("2-spread test for x2*x4", Box::new(|| expect(is_t_spread(mono("x2*x4"), 2), true))),
        ("max index of the unit monomial", Box::new(|| expect(SquarefreeMonomial::ONE.max_index(), 0))),
        (
            "full support of the four-generator example",
            Box::new(|| {
                let i = ideal(TAYLOR)?;
                expect(lcm(i.gens()).map_err(|e| e.to_string())?.indices().collect::<Vec<_>>(), (1..=9).collect())
            }),
        ),
        (
            "empty shadow of the short Pascal(10, 3) generators",
            Box::new(|| {
                let set = MonomialSet::new(10, [mono("x2*x5*x8"), mono("x3*x6*x9")]).map_err(|e| e.to_string())?;
                expect(t_shadow(&set, 3).map_err(|e| e.to_string())?.len(), 0)
            }),
        ),
        (
            "squarefree lex: x1*x4*x7 above x1*x4*x8",
            Box::new(|| expect(slex_cmp(mono("x1*x4*x7"), mono("x1*x4*x8")).ok(), Some(std::cmp::Ordering::Greater))),
        ),
        (
            "support-set example: s = 2, bcos = 3",
            Box::new(|| {
                let i = ideal_n(SETS, 11)?;
                expect(
                    (support_index(&i).ok(), bcos(&i).ok(), cosize(&i).ok()),
                    (Some(2), Some(3), Some(5)),
                )
            }),
        ),
        (
            "support-set example: resolution shifts",
            Box::new(|| {
                let t = ideal_table(&ideal_n(SETS, 11)?)?;
                expect(
                    (t.degrees_at(0), t.degrees_at(1), t.degrees_at(2), t.pd(), t.reg()),
                    (vec![2, 3, 4], vec![5, 6, 6], vec![8], 2, 6),
                )
            }),
        ),
        (
            "four-generator example: s = 3 and bounds 3, 7",
            Box::new(|| {
                let i = ideal_n(TAYLOR, 9)?;
                expect((support_index(&i).ok(), pd_bound(&i).ok(), reg_bound(&i).ok()), (Some(3), Some(3), Some(7)))
            }),
        ),
        (
            "four-generator example: Taylor shifts",
            Box::new(|| {
                let c = taylor_complex(&ideal_n(TAYLOR, 9)?).map_err(|e| e.to_string())?;
                expect(
                    (0..c.len()).map(|k| c.degrees(k)).collect::<Vec<_>>(),
                    vec![vec![2, 3, 3, 5], vec![4, 4, 6, 6, 6, 8], vec![6, 7, 8, 9], vec![9]],
                )
            }),
        ),
        (
            "four-generator example: pd = 2, reg = 5",
            Box::new(|| {
                let t = ideal_table(&ideal_n(TAYLOR, 9)?)?;
                expect((t.pd(), t.reg()), (2, 5))
            }),
        ),
        (
            "squarefree Veronese I(5,4): pd bound 1",
            Box::new(|| expect(pd_bound(&squarefree_veronese(5, 4).map_err(|e| e.to_string())?).ok(), Some(1))),
        ),
        (
            "squarefree Veronese I(5,2): pd 3, reg 2",
            Box::new(|| {
                let t = ideal_table(&squarefree_veronese(5, 2).map_err(|e| e.to_string())?)?;
                expect((t.pd(), t.reg()), (3, 2))
            }),
        ),
        (
            "disjoint supports: regular sequence with (pd, reg) = (2, 5)",
            Box::new(|| {
                let i = ideal_n(DISJOINT, 8)?;
                let t = ideal_table(&i)?;
                expect(
                    (is_regular_sequence(&i), ci_invariants(&i).ok(), (t.pd(), t.reg())),
                    (true, Some((2, 5)), (2, 5)),
                )
            }),
        ),
        (
            "Pascal(10, 3) generators",
            Box::new(|| {
                let p = pascal_ideal(10, 3).map_err(|e| e.to_string())?;
                expect(p.ideal, ideal_n("x1*x4*x7*x10, x2*x5*x8, x3*x6*x9", 10)?)
            }),
        ),
        (
            "Pascal(3, 3) is the maximal ideal",
            Box::new(|| expect(pascal_ideal(3, 3).map_err(|e| e.to_string())?.ideal, ideal("x1, x2, x3")?)),
        ),
        (
            "Pascal(10, 3): regular sequence, (pd, reg) = (2, 8), depth 8",
            Box::new(|| {
                let i = pascal_ideal(10, 3).map_err(|e| e.to_string())?.ideal;
                expect(
                    (is_regular_sequence(&i), ci_invariants(&i).ok(), depth_of(&i).ok()),
                    (true, Some((2, 8)), Some(8)),
                )
            }),
        ),
        (
            "Pascal(10, 3): Betti diagram",
            Box::new(|| {
                let q = betti_table(&pascal_ideal(10, 3).map_err(|e| e.to_string())?.ideal).map_err(|e| e.to_string())?;
                expect(q.diagram().as_str(), PASCAL_10_3_DIAGRAM)
            }),
        ),
        (
            "Pascal(10, 3): one extremal Betti number at (3, 10)",
            Box::new(|| {
                let q = betti_table(&pascal_ideal(10, 3).map_err(|e| e.to_string())?.ideal).map_err(|e| e.to_string())?;
                expect(q.extremal(), vec![((3, 10), 1)])
            }),
        ),
        (
            "Pascal ideals: total Betti numbers form a binomial row",
            Box::new(|| {
                for (n, t) in [(10, 3), (9, 4), (7, 2), (12, 4)] {
                    let q = betti_table(&pascal_ideal(n, t).map_err(|e| e.to_string())?.ideal)
                        .map_err(|e| e.to_string())?;
                    expect(q.totals(), pascal_total_betti(n, t).map_err(|e| e.to_string())?)?;
                }
                Ok(())
            }),
        ),
        (
            "Pascal(10, 3): Hilbert series numerator",
            Box::new(|| {
                let h = pascal_hilbert_series(10, 3).map_err(|e| e.to_string())?;
                expect((h.numerator, h.denominator_exponent), (vec![1, 3, 6, 8, 8, 6, 3, 1], 7))
            }),
        ),
        (
            "Pascal(10, 3): t-lex companion (x1*x4*x7, x1*x4*x8)",
            Box::new(|| match pascal_tlex(10, 3).map_err(|e| e.to_string())? {
                TlexOutcome::Exists(l) => {
                    expect(is_t_spread_lexsegment(&l, 3).ok(), Some(true))?;
                    expect(l, ideal_n("x1*x4*x7, x1*x4*x8", 10)?)
                }
                other => Err(format!("no companion: {other:?}")),
            }),
        ),
        (
            "t-lex companions exist when the residue is t - 1",
            Box::new(|| {
                for (n, t) in [(8, 3), (11, 4), (14, 5)] {
                    expect(shadow_discrepancy(n, t).ok(), Some((t - 1) as u64))?;
                    if !matches!(pascal_tlex(n, t), Ok(TlexOutcome::Exists(_))) {
                        return Err(format!("({n}, {t}) has no companion"));
                    }
                }
                Ok(())
            }),
        ),
        (
            "regularity bound n - (t - 1): Pascal(10, 3) gives 8, t = 1 gives n",
            Box::new(|| expect((reg_bound_tspread(10, 3).ok(), reg_bound_tspread(7, 1).ok()), (Some(8), Some(7)))),
        ),
        (
            "degree bound at the top degree recovers n - (t - 1)",
            Box::new(|| {
                for (n, t) in [(10, 3), (9, 2), (12, 4)] {
                    let d = tspread::monomials::max_t_spread_degree(n, t);
                    expect(reg_bound_degree_at_most_d(n, d, t).ok(), Some(n - (t - 1)))?;
                }
                Ok(())
            }),
        ),
        (
            "degree-bound witness is Pascal(n, t) when ceil(n/d) < t",
            Box::new(|| {
                let w = max_reg_witness(10, 4, 3).map_err(|e| e.to_string())?;
                expect(w, pascal_ideal(10, 3).map_err(|e| e.to_string())?.ideal)
            }),
        ),
        (
            "degree-bound witness for n = 2t, d = 2 is the matching graph ideal",
            Box::new(|| {
                let w = max_reg_witness(6, 2, 3).map_err(|e| e.to_string())?;
                expect(w, edge_ideal(&corollary_graph(6).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?)
            }),
        ),
        (
            "matching graphs: edge ideals for n = 6 and n = 5",
            Box::new(|| {
                let even = edge_ideal(&corollary_graph(6).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                let odd = edge_ideal(&corollary_graph(5).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                expect((even, odd), (ideal_n("x1*x4, x2*x5, x3*x6", 6)?, ideal_n("x1*x3, x2*x4, x1*x5", 5)?))
            }),
        ),
        (
            "matching graphs are forests with reg = floor(n/2) + 1",
            Box::new(|| {
                for n in 2..=12 {
                    let g = corollary_graph(n).map_err(|e| e.to_string())?;
                    let reg = ideal_table(&edge_ideal(&g).map_err(|e| e.to_string())?)?.reg();
                    expect((is_forest(&g), reg), (true, (n / 2 + 1) as usize))?;
                }
                Ok(())
            }),
        ),
    ]
}

fn fuzz_one(rng: &mut ChaCha8Rng) -> Check {
    let t = rng.gen_range(1..=3u32);
    let n = rng.gen_range(t.max(2)..=10);
    let i = if rng.gen_bool(0.3) {
        match random_equigenerated(rng, n, t, 2, 5) {
            Some(i) => i,
            None => random_t_spread_ideal(rng, n, t, 5, 5),
        }
    } else {
        random_t_spread_ideal(rng, n, t, 5, 5)
    };
    let fail = |what: &str| Err(format!("{what} fails for ({i}) in {n} variables, t = {t}"));
    let table = ideal_table(&i)?;
    let taylor = taylor_complex(&i).map_err(|e| e.to_string())?;
    if table.entries().any(|((k, j), v)| v > taylor.multiplicity(k, j)) {
        return fail("Taylor domination");
    }
    let (pd, reg) = (table.pd(), table.reg());
    if pd > pd_bound(&i).map_err(|e| e.to_string())? {
        return fail("pd <= min(s, n)");
    }
    if reg > reg_bound(&i).map_err(|e| e.to_string())? {
        return fail("reg <= cosize + 1");
    }
    if reg as u32 > reg_bound_tspread(n, t).map_err(|e| e.to_string())? {
        return fail("reg <= n - (t - 1)");
    }
    let d = i.max_degree() as u32;
    if reg as u32 > reg_bound_degree_at_most_d(n, d, t).map_err(|e| e.to_string())? {
        return fail("degree bound");
    }
    let dual = alexander_dual(&i).map_err(|e| e.to_string())?;
    if ideal_table(&dual)?.pd() + 1 != reg {
        return fail("Terai duality");
    }
    if alexander_dual(&dual).map_err(|e| e.to_string())? != i {
        return fail("double dual");
    }
    Ok(())
}

/// Runs the examples (and the fuzz pass when asked); returns the report and
/// whether everything passed.
pub fn run(fuzz: Option<(u64, usize)>) -> (String, bool) {
    let mut out = String::new();
    let mut failures = 0;
    let mut total = 0;
    for (label, check) in examples() {
        total += 1;
        match check() {
            Ok(()) => out.push_str(&format!("PASS  {label}\n")),
            Err(why) => {
                failures += 1;
                out.push_str(&format!("FAIL  {label}: {why}\n"));
            }
        }
    }
    if let Some((seed, samples)) = fuzz {
        total += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match (0..samples).try_for_each(|_| fuzz_one(&mut rng)) {
            Ok(()) => out.push_str(&format!("PASS  random properties ({samples} ideals, seed {seed})\n")),
            Err(why) => {
                failures += 1;
                out.push_str(&format!("FAIL  random properties (seed {seed}): {why}\n"));
            }
        }
    }
    out.push_str(&format!("{} of {total} passed\n", total - failures));
    (out, failures == 0)
}
