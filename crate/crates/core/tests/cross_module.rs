use num_bigint::BigUint;
use paritree::game::random_game;
use paritree::solver::{Solver, TreeSizing};
use paritree::tree::{construct, verify_universal};
use paritree::widths::f_rec;

#[test]
fn construct_width_matches_recursion() {
    for n in 0..=64usize {
        for h in 0..=6usize {
            let t = construct(n, h);
            assert_eq!(
                BigUint::from(t.leaf_count()),
                f_rec(n as u64, h as u32),
                "n={n} h={h}"
            );
            assert_eq!(t.height(), h);
        }
    }
}

#[test]
fn solver_tree_is_universal_for_eta() {
    for seed in 0..40u64 {
        let g = random_game(8, 4, 1..=2, seed);
        let s = Solver::new(&g);
        let eta = g.priority_counts().opposing(s.player());
        assert!(eta <= g.vertex_count() / 2);
        assert!(verify_universal(s.tree(), eta.max(1)), "seed {seed}");
    }
}

#[test]
fn full_tree_has_vertex_count_width() {
    let g = random_game(9, 6, 1..=3, 5);
    let s = Solver::with_sizing(&g, TreeSizing::Full);
    assert_eq!(s.tree().leaf_count(), construct(9, 3).leaf_count());
}
