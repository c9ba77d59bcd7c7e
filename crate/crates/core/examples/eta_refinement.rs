//! How much smaller the tree gets when it is sized by the number of
//! opponent-parity vertices rather than by all vertices.

use paritree::game::random_game;
use paritree::solver::{Solver, TreeSizing};

fn main() {
    println!(
        "{:>4} {:>3} {:>4} {:>10} {:>10} {:>9} {:>10}",
        "n", "d", "eta", "eta width", "full width", "eta lifts", "full lifts"
    );
    for n in [20, 50, 100] {
        for d in [4, 8] {
            let g = random_game(n, d, 1..=3, 42);
            let small = Solver::new(&g).run();
            let full = Solver::with_sizing(&g, TreeSizing::Full).run();
            assert_eq!(small.regions, full.regions);
            println!(
                "{n:>4} {d:>3} {:>4} {:>10} {:>10} {:>9} {:>10}",
                small.stats.eta,
                small.stats.tree_width,
                full.stats.tree_width,
                small.stats.lifts,
                full.stats.lifts
            );
        }
    }
}
