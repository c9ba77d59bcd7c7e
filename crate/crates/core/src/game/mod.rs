//! Parity game graphs with priorities on vertices.
//!
//! A [`GameGraph`] always carries priorities in `1..=d` with `d` even, and
//! every vertex has at least one successor. Use [`GameGraph::from_raw`] to
//! build a game from arbitrary nonnegative priorities; it applies
//! [`normalize_priorities`] first.

mod pgsolver;
mod random;

pub use pgsolver::{parse_pgsolver, serialize_pgsolver, ParseError};
pub use random::random_game;

use std::fmt;

use thiserror::Error;

/// One of the two players. Also used as vertex ownership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player favoured by a priority of this parity.
    pub fn of_priority(p: u32) -> Player {
        if p.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }

    /// PGSolver owner code: 0 for Even, 1 for Odd.
    pub fn code(self) -> u8 {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => f.write_str("Even"),
            Player::Odd => f.write_str("Odd"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("game has no vertices")]
    Empty,
    #[error("maximum priority {0} is not a positive even number")]
    BadPriorityBound(u32),
    #[error("vertex {vertex} has priority {priority} outside 1..={d}")]
    PriorityOutOfRange {
        vertex: usize,
        priority: u32,
        d: u32,
    },
    #[error("vertex {0} has no successors")]
    NoSuccessors(usize),
    #[error("edge {from} -> {to} points outside the game ({n} vertices)")]
    BadEdge { from: usize, to: usize, n: usize },
    #[error("vertex {vertex} lists successor {to} twice")]
    DuplicateEdge { vertex: usize, to: usize },
    #[error("owner, priority and successor tables disagree on the vertex count")]
    LengthMismatch,
}

/// Number of odd- and even-priority vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PriorityCounts {
    pub odd: usize,
    pub even: usize,
}

impl PriorityCounts {
    /// The smaller of the two counts; never exceeds `n / 2`.
    pub fn eta(&self) -> usize {
        self.odd.min(self.even)
    }

    /// Count of vertices whose priority has the parity opposite to `player`.
    pub fn opposing(&self, player: Player) -> usize {
        match player {
            Player::Even => self.odd,
            Player::Odd => self.even,
        }
    }
}

/// Shifts priorities by a single even constant so that the minimum lands on 1
/// or 2, and returns the shifted priorities together with the smallest even
/// bound `d` covering them. Parities are untouched.
pub fn normalize_priorities(raw: &[u32]) -> (Vec<u32>, u32) {
    let Some(&min) = raw.iter().min() else {
        return (Vec::new(), 2);
    };
    let target = if min % 2 == 0 { 2 } else { 1 };
    let shift = i64::from(target) - i64::from(min);
    let shifted: Vec<u32> = raw.iter().map(|&p| (i64::from(p) + shift) as u32).collect();
    let max = shifted.iter().copied().max().unwrap_or(2);
    let d = max + max % 2;
    (shifted, d)
}

/// Immutable parity game: `(V, V_Even, E, d, priority)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameGraph {
    owner: Vec<Player>,
    priority: Vec<u32>,
    successors: Vec<Vec<usize>>,
    d: u32,
}

impl GameGraph {
    /// Builds a game, checking every structural invariant.
    pub fn new(
        owner: Vec<Player>,
        priority: Vec<u32>,
        successors: Vec<Vec<usize>>,
        d: u32,
    ) -> Result<Self, GameError> {
        let n = owner.len();
        if n == 0 {
            return Err(GameError::Empty);
        }
        if priority.len() != n || successors.len() != n {
            return Err(GameError::LengthMismatch);
        }
        if d == 0 || !d.is_multiple_of(2) {
            return Err(GameError::BadPriorityBound(d));
        }
        for (v, &p) in priority.iter().enumerate() {
            if p == 0 || p > d {
                return Err(GameError::PriorityOutOfRange {
                    vertex: v,
                    priority: p,
                    d,
                });
            }
        }
        for (v, succ) in successors.iter().enumerate() {
            if succ.is_empty() {
                return Err(GameError::NoSuccessors(v));
            }
            let mut seen = vec![false; n];
            for &w in succ {
                if w >= n {
                    return Err(GameError::BadEdge { from: v, to: w, n });
                }
                if std::mem::replace(&mut seen[w], true) {
                    return Err(GameError::DuplicateEdge { vertex: v, to: w });
                }
            }
        }
        let game = GameGraph {
            owner,
            priority,
            successors,
            d,
        };
        debug_assert!(game.priority_counts().eta() <= n / 2);
        Ok(game)
    }

    /// Builds a game from arbitrary nonnegative priorities, normalizing them
    /// into `1..=d` first.
    pub fn from_raw(
        owner: Vec<Player>,
        raw_priority: &[u32],
        successors: Vec<Vec<usize>>,
    ) -> Result<Self, GameError> {
        let (priority, d) = normalize_priorities(raw_priority);
        Self::new(owner, priority, successors, d)
    }

    pub fn vertex_count(&self) -> usize {
        self.owner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    /// The even priority bound `d`.
    pub fn max_priority(&self) -> u32 {
        self.d
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn priority(&self, v: usize) -> u32 {
        self.priority[v]
    }

    pub fn priorities(&self) -> &[u32] {
        &self.priority
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.successors[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Reverse adjacency lists.
    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.vertex_count()];
        for v in self.vertices() {
            for &w in &self.successors[v] {
                pred[w].push(v);
            }
        }
        pred
    }

    pub fn priority_counts(&self) -> PriorityCounts {
        let odd = self.priority.iter().filter(|&&p| p % 2 == 1).count();
        PriorityCounts {
            odd,
            even: self.vertex_count() - odd,
        }
    }
}

/// Free-function form of [`GameGraph::priority_counts`].
pub fn priority_counts(g: &GameGraph) -> PriorityCounts {
    g.priority_counts()
}
