//! Solve a game from a PGSolver file, or a built-in one, and cross-check it.
//!
//!     cargo run --example solve_game -- path/to/game.pg

use paritree::game::parse_pgsolver;
use paritree::solver::{zielonka, Solver};

const DEMO: &str = "parity 4;
0 1 0 1,2;
1 2 1 0,3;
2 3 0 2,4;
3 4 1 3,0;
4 5 1 4;
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => DEMO.as_bytes().to_vec(),
    };
    let game = parse_pgsolver(&text)?;
    let out = Solver::new(&game).run();
    println!("{}", out.regions);

    let s = &out.stats;
    println!(
        "measured {} over a width-{} tree of height {} (eta = {}), {} lifts, {} updates",
        s.player, s.tree_width, s.tree_height, s.eta, s.lifts, s.updates
    );
    for (v, m) in out.measure.iter().enumerate() {
        match m {
            Some(path) => println!("  mu({v}) = {path:?}"),
            None => println!("  mu({v}) = top"),
        }
    }
    assert_eq!(out.regions, zielonka(&game), "reference solver disagrees");
    Ok(())
}
