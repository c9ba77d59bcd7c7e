//! Recursive attractor-based reference solver.

use super::WinningRegions;
use crate::game::{GameGraph, Player};

/// Winning regions by Zielonka's recursion.
pub fn zielonka(g: &GameGraph) -> WinningRegions {
    let ctx = Ctx {
        g,
        pred: g.predecessors(),
    };
    let all = vec![true; g.vertex_count()];
    let even = ctx.solve(&all);
    let winners = even
        .iter()
        .map(|&e| if e { Player::Even } else { Player::Odd })
        .collect();
    WinningRegions::from_winners(winners)
}

struct Ctx<'a> {
    g: &'a GameGraph,
    pred: Vec<Vec<usize>>,
}

impl Ctx<'_> {
    /// Vertices of the subgame `mask` from which `player` can force a visit
    /// to `target`.
    fn attractor(&self, mask: &[bool], target: &[bool], player: Player) -> Vec<bool> {
        let n = mask.len();
        let mut attr: Vec<bool> = (0..n).map(|v| mask[v] && target[v]).collect();
        let mut escapes: Vec<usize> = (0..n)
            .map(|v| self.g.successors(v).iter().filter(|&&w| mask[w]).count())
            .collect();
        let mut stack: Vec<usize> = (0..n).filter(|&v| attr[v]).collect();
        while let Some(w) = stack.pop() {
            for &v in &self.pred[w] {
                if !mask[v] || attr[v] {
                    continue;
                }
                if self.g.owner(v) == player {
                    attr[v] = true;
                    stack.push(v);
                } else {
                    escapes[v] -= 1;
                    if escapes[v] == 0 {
                        attr[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        attr
    }

    /// Even's winning region in the subgame `mask`.
    fn solve(&self, mask: &[bool]) -> Vec<bool> {
        let n = mask.len();
        let Some(top) = (0..n)
            .filter(|&v| mask[v])
            .map(|v| self.g.priority(v))
            .max()
        else {
            return vec![false; n];
        };
        let alpha = Player::of_priority(top);
        let tops: Vec<bool> = (0..n)
            .map(|v| mask[v] && self.g.priority(v) == top)
            .collect();
        let a = self.attractor(mask, &tops, alpha);
        let rest: Vec<bool> = (0..n).map(|v| mask[v] && !a[v]).collect();
        let sub_even = self.solve(&rest);
        // opponent's region in the subgame
        let sub_opp: Vec<bool> = (0..n)
            .map(|v| rest[v] && (sub_even[v] != (alpha == Player::Even)))
            .collect();
        if !sub_opp.iter().any(|&b| b) {
            return (0..n).map(|v| mask[v] && alpha == Player::Even).collect();
        }
        let b = self.attractor(mask, &sub_opp, alpha.opponent());
        let rest: Vec<bool> = (0..n).map(|v| mask[v] && !b[v]).collect();
        let sub_even = self.solve(&rest);
        // alpha keeps what it wins in the rest; the opponent gets b as well
        (0..n)
            .map(|v| {
                if !mask[v] {
                    false
                } else if b[v] {
                    alpha.opponent() == Player::Even
                } else {
                    sub_even[v]
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::parse_pgsolver;

    fn game(text: &str) -> GameGraph {
        parse_pgsolver(text.as_bytes()).unwrap()
    }

    #[test]
    fn trivial_games() {
        assert_eq!(zielonka(&game("0 2 0 0;")).even(), vec![0]);
        assert_eq!(zielonka(&game("0 1 0 0;")).odd(), vec![0]);
        assert_eq!(zielonka(&game("0 1 0 1;\n1 2 1 0;")).even(), vec![0, 1]);
    }

    #[test]
    fn choice_matters() {
        // v0 (Even, p1) can go to the p2 loop at v1 or the p3 loop at v2
        let g = game("0 1 0 1,2;\n1 2 0 1;\n2 3 0 2;");
        let r = zielonka(&g);
        assert_eq!(r.even(), vec![0, 1]);
        assert_eq!(r.odd(), vec![2]);
        // same but Odd chooses at v0
        let g = game("0 1 1 1,2;\n1 2 0 1;\n2 3 0 2;");
        assert_eq!(zielonka(&g).odd(), vec![0, 2]);
    }

    #[test]
    fn deterministic() {
        let g = crate::game::random_game(40, 8, 1..=3, 9);
        assert_eq!(zielonka(&g), zielonka(&g));
    }
}
