//! Generate a seeded corpus, solve it three ways and time each solver.

use std::time::Instant;

use paritree::game::random_game;
use paritree::solver::{brute_force_solve, zielonka, Solver};

fn main() {
    let games: Vec<_> = (0..300u64)
        .map(|s| random_game(6 + (s % 10) as usize, 6, 1..=3, s))
        .collect();

    let t = Instant::now();
    let lifting: Vec<_> = games.iter().map(|g| Solver::new(g).run().regions).collect();
    let t_lift = t.elapsed();
    let t = Instant::now();
    let reference: Vec<_> = games.iter().map(zielonka).collect();
    let t_ziel = t.elapsed();

    let mut brute_checked = 0;
    for (g, r) in games.iter().zip(&reference) {
        if let Ok(b) = brute_force_solve(g) {
            assert_eq!(&b, r);
            brute_checked += 1;
        }
    }
    let agree = lifting
        .iter()
        .zip(&reference)
        .filter(|(a, b)| a == b)
        .count();
    println!(
        "{} games: lifting agrees on {agree}, brute force checked {brute_checked}",
        games.len()
    );
    println!("lifting {t_lift:?}, zielonka {t_ziel:?}");
}
