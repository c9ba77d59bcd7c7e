//! Reference solver enumerating Even's positional strategies.

use std::collections::VecDeque;

use super::{SolverError, WinningRegions};
use crate::game::{GameGraph, Player};

/// Largest number of Even strategies [`brute_force_solve`] will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 1_000_000;

/// Edge subset keeping exactly one outgoing edge at every vertex of `player`
/// and all outgoing edges elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionalStrategy {
    player: Player,
    successors: Vec<Vec<usize>>,
}

impl PositionalStrategy {
    /// `choice[v]` indexes into `g.successors(v)` for `player`'s vertices and
    /// is ignored for the others.
    pub fn new(g: &GameGraph, player: Player, choice: &[usize]) -> Self {
        let successors = g
            .vertices()
            .map(|v| {
                if g.owner(v) == player {
                    vec![g.successors(v)[choice[v]]]
                } else {
                    g.successors(v).to_vec()
                }
            })
            .collect();
        PositionalStrategy { player, successors }
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.successors[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(v, ws)| ws.iter().map(move |&w| (v, w)))
    }

    /// Vertices from which every infinite path in `(V, σ)` has a maximal
    /// recurring priority of the strategy owner's parity.
    pub fn winning_from(&self, g: &GameGraph) -> Vec<bool> {
        let n = g.vertex_count();
        // x is bad if its priority favours the opponent and x lies on a cycle
        // through vertices of priority <= priority(x)
        let bad: Vec<usize> = (0..n)
            .filter(|&x| Player::of_priority(g.priority(x)) != self.player)
            .filter(|&x| self.on_cycle_below(g, x))
            .collect();
        let mut reaches_bad = vec![false; n];
        let mut pred = vec![Vec::new(); n];
        for (v, w) in self.edges() {
            pred[w].push(v);
        }
        let mut queue: VecDeque<usize> = bad.into_iter().collect();
        for &x in &queue {
            reaches_bad[x] = true;
        }
        while let Some(w) = queue.pop_front() {
            for &v in &pred[w] {
                if !std::mem::replace(&mut reaches_bad[v], true) {
                    queue.push_back(v);
                }
            }
        }
        reaches_bad.into_iter().map(|b| !b).collect()
    }

    fn on_cycle_below(&self, g: &GameGraph, x: usize) -> bool {
        let cap = g.priority(x);
        let mut seen = vec![false; g.vertex_count()];
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            for &w in self.successors(v) {
                if g.priority(w) > cap {
                    continue;
                }
                if w == x {
                    return true;
                }
                if !std::mem::replace(&mut seen[w], true) {
                    stack.push(w);
                }
            }
        }
        false
    }
}

/// Winning regions by trying every positional strategy of Even. Even wins
/// from `v` iff some strategy wins from `v`; positional determinacy gives
/// Odd the rest.
pub fn brute_force_solve(g: &GameGraph) -> Result<WinningRegions, SolverError> {
    let n = g.vertex_count();
    let choosers: Vec<usize> = g
        .vertices()
        .filter(|&v| g.owner(v) == Player::Even)
        .collect();
    let strategies = choosers
        .iter()
        .try_fold(1u128, |acc, &v| {
            acc.checked_mul(g.successors(v).len() as u128)
        })
        .unwrap_or(u128::MAX);
    if strategies > BRUTE_FORCE_LIMIT {
        return Err(SolverError::TooLarge {
            strategies,
            limit: BRUTE_FORCE_LIMIT,
        });
    }

    let mut even_wins = vec![false; n];
    let mut choice = vec![0usize; n];
    loop {
        let sigma = PositionalStrategy::new(g, Player::Even, &choice);
        for (v, won) in sigma.winning_from(g).into_iter().enumerate() {
            even_wins[v] |= won;
        }
        // mixed-radix increment over the Even vertices
        let mut carried = true;
        for &v in &choosers {
            choice[v] += 1;
            if choice[v] < g.successors(v).len() {
                carried = false;
                break;
            }
            choice[v] = 0;
        }
        if carried {
            break;
        }
    }
    let winners = even_wins
        .into_iter()
        .map(|e| if e { Player::Even } else { Player::Odd })
        .collect();
    Ok(WinningRegions::from_winners(winners))
}
