//! Parity game solvers.
//!
//! [`solve`] is the progress-measure lifting solver over a universal tree
//! sized by the smaller priority-parity class. [`zielonka`] and
//! [`brute_force_solve`] are independent reference solvers used to check it.

mod brute;
mod lifting;
mod zielonka;

pub use brute::{brute_force_solve, PositionalStrategy, BRUTE_FORCE_LIMIT};
pub use lifting::{
    edge_ok, lift, solve, trunc_len, Measure, MeasureValue, SolveOutcome, SolveStats, Solver,
    TreeSizing, Worklist,
};
pub use zielonka::zielonka;

use std::fmt;

use thiserror::Error;

use crate::game::Player;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("priority {p} outside 1..={d}")]
    PriorityOutOfRange { p: u32, d: u32 },
    #[error("{strategies} positional strategies exceed the brute-force limit of {limit}")]
    TooLarge { strategies: u128, limit: u128 },
}

/// Partition of the vertices by winner.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WinningRegions {
    winners: Vec<Player>,
}

impl WinningRegions {
    pub fn from_winners(winners: Vec<Player>) -> Self {
        WinningRegions { winners }
    }

    pub fn winner(&self, v: usize) -> Player {
        self.winners[v]
    }

    pub fn winners(&self) -> &[Player] {
        &self.winners
    }

    /// Sorted vertices won by `player`.
    pub fn region(&self, player: Player) -> Vec<usize> {
        (0..self.winners.len())
            .filter(|&v| self.winners[v] == player)
            .collect()
    }

    pub fn even(&self) -> Vec<usize> {
        self.region(Player::Even)
    }

    pub fn odd(&self) -> Vec<usize> {
        self.region(Player::Odd)
    }

    /// Vertices on which `self` and `other` name different winners.
    pub fn disagreements(&self, other: &WinningRegions) -> Vec<usize> {
        (0..self.winners.len())
            .filter(|&v| self.winners.get(v) != other.winners.get(v))
            .collect()
    }
}

impl fmt::Display for WinningRegions {
    /// `EVEN: <ids>` and `ODD: <ids>` on two lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |p| {
            self.region(p)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let (even, odd) = (line(Player::Even), line(Player::Odd));
        writeln!(f, "EVEN:{}{even}", if even.is_empty() { "" } else { " " })?;
        write!(f, "ODD:{}{odd}", if odd.is_empty() { "" } else { " " })
    }
}
