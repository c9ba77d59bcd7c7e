use std::ops::RangeInclusive;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GameGraph, Player};

/// Seeded random game on `n` vertices with priorities drawn uniformly from
/// `1..=d`, uniform ownership, and an out-degree drawn uniformly from
/// `out_degree` (clamped to `1..=n`) with distinct targets.
///
/// The stream comes from ChaCha8 seeded with `seed`, so the output is stable
/// for a given crate version. Priorities are normalized afterwards, which only
/// changes the game when every drawn priority exceeds 2.
///
/// # Panics
///
/// If `n == 0` or `d` is not a positive even number.
pub fn random_game(n: usize, d: u32, out_degree: RangeInclusive<usize>, seed: u64) -> GameGraph {
    assert!(n >= 1, "a game needs at least one vertex");
    assert!(
        d >= 2 && d.is_multiple_of(2),
        "d must be a positive even number"
    );
    let hi = (*out_degree.end()).clamp(1, n);
    let lo = (*out_degree.start()).clamp(1, hi);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut owner = Vec::with_capacity(n);
    let mut priority = Vec::with_capacity(n);
    let mut successors = Vec::with_capacity(n);
    for _ in 0..n {
        priority.push(rng.gen_range(1..=d));
        owner.push(if rng.gen_bool(0.5) {
            Player::Even
        } else {
            Player::Odd
        });
        let k = rng.gen_range(lo..=hi);
        let mut targets = index::sample(&mut rng, n, k).into_vec();
        targets.sort_unstable();
        successors.push(targets);
    }
    GameGraph::from_raw(owner, &priority, successors).expect("generator produces valid games")
}
