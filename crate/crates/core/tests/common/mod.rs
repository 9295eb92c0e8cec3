#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tspread::sample::random_t_spread_ideal;
use tspread::{MonomialIdeal, SquarefreeMonomial};

pub fn ideal(n: u32, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        n,
        gens.iter()
            .map(|g| SquarefreeMonomial::from_indices(g.iter().copied()).unwrap()),
    )
    .unwrap()
}

/// Proper squarefree ideals on `2..=max_n` variables with up to `max_gens` generators.
pub fn squarefree_ideal(max_n: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=max_gens).prop_map(move |masks| {
            MonomialIdeal::minimalize(n, masks.into_iter().map(SquarefreeMonomial::from_mask)).unwrap()
        })
    })
}

/// `(ideal, t)` with a t-spread ideal from the library sampler, driven by a proptest seed.
pub fn t_spread_ideal(max_n: u32, max_gens: usize, max_t: u32) -> impl Strategy<Value = (MonomialIdeal, u32)> {
    (1..=max_t, any::<u64>()).prop_flat_map(move |(t, seed)| {
        (t.max(2)..=max_n).prop_map(move |n| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (random_t_spread_ideal(&mut rng, n, t, max_gens, 5), t)
        })
    })
}

/// `sum_A (-1)^|A| z^{deg lcm A}` over all generator subsets: the K-polynomial of `S/I`.
pub fn k_polynomial(ideal: &MonomialIdeal) -> Vec<i64> {
    let masks: Vec<u64> = ideal.gens().iter().map(|g| g.mask()).collect();
    let mut poly = vec![0i64; ideal.n() as usize + 1];
    for subset in 0u32..(1 << masks.len()) {
        let lcm = masks
            .iter()
            .enumerate()
            .filter(|(k, _)| subset >> k & 1 == 1)
            .fold(0u64, |acc, (_, m)| acc | m);
        let sign = if subset.count_ones() % 2 == 0 { 1 } else { -1 };
        poly[lcm.count_ones() as usize] += sign;
    }
    poly
}
