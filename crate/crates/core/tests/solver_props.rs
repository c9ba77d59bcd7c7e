use paritree::game::{random_game, Player};
use paritree::solver::{
    brute_force_solve, edge_ok, lift, zielonka, Measure, MeasureValue, Solver, TreeSizing, Worklist,
};
use paritree::tree::construct;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn agrees_with_references(n in 1usize..10, half_d in 1u32..4, hi in 1usize..4, seed: u64) {
        let g = random_game(n, 2 * half_d, 1..=hi, seed);
        let z = zielonka(&g);
        prop_assert_eq!(&Solver::new(&g).run().regions, &z);
        prop_assert_eq!(&Solver::with_sizing(&g, TreeSizing::Full).run().regions, &z);
        if n <= 6 {
            prop_assert_eq!(&brute_force_solve(&g).unwrap(), &z);
        }
    }

    #[test]
    fn either_player_can_be_measured(n in 1usize..12, half_d in 1u32..4, seed: u64) {
        let g = random_game(n, 2 * half_d, 1..=3, seed);
        let z = zielonka(&g);
        for player in [Player::Even, Player::Odd] {
            let tree = construct(n, (g.max_priority() / 2) as usize);
            prop_assert_eq!(&Solver::with_tree(&g, player, tree).run().regions, &z);
        }
    }

    #[test]
    fn final_measure_is_a_fixpoint(n in 1usize..15, half_d in 1u32..4, seed: u64) {
        let g = random_game(n, 2 * half_d, 1..=3, seed);
        let s = Solver::new(&g).worklist(Worklist::Random(seed));
        let out = s.run();
        let mut mu = Measure::least(s.tree(), s.player(), g.max_priority(), n);
        for v in g.vertices() {
            let value = match &out.measure[v] {
                Some(p) => MeasureValue::Node(s.tree().node_at(p).unwrap()),
                None => MeasureValue::Top,
            };
            mu.set(v, value);
        }
        for v in g.vertices() {
            prop_assert_eq!(lift(&g, &mu, v), mu.get(v));
            if !mu.get(v).is_top() {
                let ok = g.successors(v).iter().filter(|&&w| edge_ok(&g, &mu, v, w)).count();
                if g.owner(v) == s.player() {
                    prop_assert!(ok >= 1);
                } else {
                    prop_assert_eq!(ok, g.successors(v).len());
                }
            }
        }
    }
}
