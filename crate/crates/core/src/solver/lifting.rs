//! Progress-measure lifting over an ordered tree.
//!
//! A measure for player `P` (the *measured* player) assigns each vertex a
//! position in the tree, or `Top`. Tree levels correspond to the priorities
//! of the opponent's parity, highest first, so the tree has height `d / 2`.
//! Positions are ordered in preorder: lexicographically by path, with a
//! proper prefix below its extensions. A vertex `v` of priority `p` is
//! consistent along edge `(v, w)` when the length-`k` prefixes satisfy
//! `mu(v)|k >= mu(w)|k`, strictly if `p` has the opponent's parity, where
//! `k` counts the opponent-parity priorities `>= p`.
//!
//! Values are internal nodes as well as leaves. A vertex of `P`'s parity
//! only ever sits at the truncation of a successor's value, so in the least
//! fixpoint the leaves in use all belong to opponent-parity vertices and the
//! tree needs to be universal only for their count. Opponent-parity vertices
//! take nodes at depth exactly `k`.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SolverError, WinningRegions};
use crate::game::{GameGraph, Player};
use crate::tree::{construct, NodeId, OrderedTree};

/// Prefix length compared at a vertex of priority `p` in a measure for
/// `player`: the number of opponent-parity priorities in `p..=d`.
pub fn trunc_len(p: u32, player: Player, d: u32) -> Result<usize, SolverError> {
    if p == 0 || p > d {
        return Err(SolverError::PriorityOutOfRange { p, d });
    }
    let k = match player {
        Player::Even => (d - p).div_ceil(2),
        Player::Odd => (d - p) / 2 + 1,
    };
    Ok(k as usize)
}

/// A tree position, or `Top` above all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeasureValue {
    Node(NodeId),
    Top,
}

impl MeasureValue {
    pub fn is_top(self) -> bool {
        self == MeasureValue::Top
    }

    /// Child-index path of the position; `None` for `Top`.
    pub fn path(self, tree: &OrderedTree) -> Option<Vec<usize>> {
        match self {
            MeasureValue::Node(n) => Some(tree.path_of(n)),
            MeasureValue::Top => None,
        }
    }
}

/// Per-vertex measure values for one measured player over one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure<'t> {
    tree: &'t OrderedTree,
    player: Player,
    d: u32,
    values: Vec<MeasureValue>,
}

impl<'t> Measure<'t> {
    /// Every vertex at the root, the least position.
    pub fn least(tree: &'t OrderedTree, player: Player, d: u32, n: usize) -> Self {
        assert!(!tree.is_empty(), "measures need a nonempty tree");
        assert_eq!(tree.height() as u32 * 2, d, "tree height must be d / 2");
        Measure {
            tree,
            player,
            d,
            values: vec![MeasureValue::Node(tree.root()); n],
        }
    }

    pub fn tree(&self) -> &'t OrderedTree {
        self.tree
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn get(&self, v: usize) -> MeasureValue {
        self.values[v]
    }

    pub fn set(&mut self, v: usize, value: MeasureValue) {
        self.values[v] = value;
    }

    pub fn values(&self) -> &[MeasureValue] {
        &self.values
    }

    fn level(&self, p: u32) -> (usize, bool) {
        let k = trunc_len(p, self.player, self.d).expect("game priorities lie in 1..=d");
        (k, Player::of_priority(p) != self.player)
    }

    /// Least admissible value for `v` that is consistent along `(v, w)`.
    fn target(&self, game: &GameGraph, v: usize, w: usize) -> MeasureValue {
        let MeasureValue::Node(succ) = self.values[w] else {
            return MeasureValue::Top;
        };
        let (k, strict) = self.level(game.priority(v));
        let t = self.tree.truncate(succ, k);
        if !strict {
            return MeasureValue::Node(t);
        }
        let next = if self.tree.depth(t) < k {
            Some(t)
        } else {
            self.tree.after_subtree(t)
        };
        match next {
            Some(n) => MeasureValue::Node(self.tree.leftmost_at_depth(n, k)),
            None => MeasureValue::Top,
        }
    }
}

/// Whether `v` is consistent along the edge `(v, w)`.
pub fn edge_ok(game: &GameGraph, mu: &Measure<'_>, v: usize, w: usize) -> bool {
    let (MeasureValue::Node(a), b) = (mu.get(v), mu.get(w)) else {
        return true;
    };
    let MeasureValue::Node(b) = b else {
        return false;
    };
    let (k, strict) = mu.level(game.priority(v));
    let (a, b) = (mu.tree.truncate(a, k), mu.tree.truncate(b, k));
    if strict {
        a > b
    } else {
        a >= b
    }
}

/// The least value `>= mu(v)` that makes `v` consistent: the best edge for a
/// vertex of the measured player, the worst edge otherwise.
pub fn lift(game: &GameGraph, mu: &Measure<'_>, v: usize) -> MeasureValue {
    let targets = game.successors(v).iter().map(|&w| mu.target(game, v, w));
    let candidate = if game.owner(v) == mu.player {
        targets.min()
    } else {
        targets.max()
    }
    .expect("every vertex has a successor");
    candidate.max(mu.get(v))
}

/// Order in which inconsistent vertices are picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Worklist {
    #[default]
    Fifo,
    Lifo,
    /// Uniformly random pending vertex, ChaCha8 seeded.
    Random(u64),
}

/// How the tree is sized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TreeSizing {
    /// `construct(max(eta, 1), d / 2)` with `eta` the count of
    /// opponent-parity vertices.
    #[default]
    Eta,
    /// `construct(n, d / 2)`.
    Full,
}

/// Counters from one lifting run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveStats {
    pub player: Player,
    pub eta: usize,
    pub tree_width: usize,
    pub tree_height: usize,
    /// Lift applications, including those that changed nothing.
    pub lifts: u64,
    /// Lifts that raised a value.
    pub updates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub regions: WinningRegions,
    pub stats: SolveStats,
    /// Final value of every vertex, as child-index paths (`None` for `Top`).
    pub measure: Vec<Option<Vec<usize>>>,
}

/// Configurable lifting run on one game.
#[derive(Debug, Clone)]
pub struct Solver<'g> {
    game: &'g GameGraph,
    player: Player,
    eta: usize,
    tree: OrderedTree,
    worklist: Worklist,
}

impl<'g> Solver<'g> {
    /// Measures the player whose opponent owns fewer priorities (Even on
    /// ties) over the eta-sized tree, FIFO.
    pub fn new(game: &'g GameGraph) -> Self {
        Self::with_sizing(game, TreeSizing::Eta)
    }

    pub fn with_sizing(game: &'g GameGraph, sizing: TreeSizing) -> Self {
        let counts = game.priority_counts();
        let player = if counts.odd <= counts.even {
            Player::Even
        } else {
            Player::Odd
        };
        let eta = counts.opposing(player);
        let h = (game.max_priority() / 2) as usize;
        let tree = match sizing {
            TreeSizing::Eta => construct(eta.max(1), h),
            TreeSizing::Full => construct(game.vertex_count(), h),
        };
        Solver {
            game,
            player,
            eta,
            tree,
            worklist: Worklist::Fifo,
        }
    }

    /// Uses a caller-supplied tree of height `d / 2` and measured player.
    pub fn with_tree(game: &'g GameGraph, player: Player, tree: OrderedTree) -> Self {
        let eta = game.priority_counts().opposing(player);
        Solver {
            game,
            player,
            eta,
            tree,
            worklist: Worklist::Fifo,
        }
    }

    pub fn worklist(mut self, worklist: Worklist) -> Self {
        self.worklist = worklist;
        self
    }

    pub fn tree(&self) -> &OrderedTree {
        &self.tree
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn run(&self) -> SolveOutcome {
        self.run_observed(|_, _, _| {})
    }

    /// Runs to the least fixpoint, reporting every value change as
    /// `(vertex, old, new)`.
    pub fn run_observed(
        &self,
        mut observe: impl FnMut(usize, MeasureValue, MeasureValue),
    ) -> SolveOutcome {
        let game = self.game;
        let n = game.vertex_count();
        let pred = game.predecessors();
        let mut mu = Measure::least(&self.tree, self.player, game.max_priority(), n);
        let mut pending = Pending::new(self.worklist, n);
        let (mut lifts, mut updates) = (0u64, 0u64);

        while let Some(v) = pending.pop() {
            let old = mu.get(v);
            if old.is_top() {
                continue;
            }
            lifts += 1;
            let new = lift(game, &mu, v);
            if new != old {
                updates += 1;
                observe(v, old, new);
                mu.set(v, new);
                for &u in &pred[v] {
                    pending.push(u);
                }
            }
        }

        let winners = (0..n)
            .map(|v| {
                if mu.get(v).is_top() {
                    self.player.opponent()
                } else {
                    self.player
                }
            })
            .collect();
        SolveOutcome {
            regions: WinningRegions::from_winners(winners),
            stats: SolveStats {
                player: self.player,
                eta: self.eta,
                tree_width: self.tree.leaf_count(),
                tree_height: self.tree.height(),
                lifts,
                updates,
            },
            measure: mu.values().iter().map(|m| m.path(&self.tree)).collect(),
        }
    }
}

/// Solves `g` with the default configuration.
pub fn solve(g: &GameGraph) -> (WinningRegions, SolveStats) {
    let out = Solver::new(g).run();
    (out.regions, out.stats)
}

struct Pending {
    policy: Worklist,
    queue: VecDeque<usize>,
    queued: Vec<bool>,
    rng: Option<ChaCha8Rng>,
}

impl Pending {
    fn new(policy: Worklist, n: usize) -> Self {
        let rng = match policy {
            Worklist::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Pending {
            policy,
            queue: (0..n).collect(),
            queued: vec![true; n],
            rng,
        }
    }

    fn push(&mut self, v: usize) {
        if !std::mem::replace(&mut self.queued[v], true) {
            self.queue.push_back(v);
        }
    }

    fn pop(&mut self) -> Option<usize> {
        let v = match self.policy {
            Worklist::Fifo => self.queue.pop_front(),
            Worklist::Lifo => self.queue.pop_back(),
            Worklist::Random(_) => {
                if self.queue.is_empty() {
                    None
                } else {
                    let rng = self.rng.as_mut().expect("seeded");
                    let i = rng.gen_range(0..self.queue.len());
                    self.queue.swap_remove_back(i)
                }
            }
        }?;
        self.queued[v] = false;
        Some(v)
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
    fn truncation_lengths() {
        let even: Vec<usize> = (1..=4)
            .map(|p| trunc_len(p, Player::Even, 4).unwrap())
            .collect();
        assert_eq!(even, vec![2, 1, 1, 0]);
        assert_eq!(trunc_len(4, Player::Odd, 4).unwrap(), 1);
        assert_eq!(trunc_len(1, Player::Odd, 4).unwrap(), 2);
        assert_eq!(trunc_len(2, Player::Even, 2).unwrap(), 0);
        assert!(trunc_len(5, Player::Even, 4).is_err());
        assert!(trunc_len(0, Player::Even, 4).is_err());
        for d in [2, 4, 6, 8] {
            assert_eq!(trunc_len(1, Player::Even, d).unwrap(), d as usize / 2);
            assert_eq!(trunc_len(1, Player::Odd, d).unwrap(), d as usize / 2);
        }
    }

    #[test]
    fn edge_checks_on_single_leaf_tree() {
        let tree = OrderedTree::path(1);
        let leaf = MeasureValue::Node(tree.node_at(&[0]).unwrap());

        let g = game("0 1 0 0;");
        let mut mu = Measure::least(&tree, Player::Even, 2, 1);
        mu.set(0, leaf);
        assert!(!edge_ok(&g, &mu, 0, 0));
        assert_eq!(lift(&g, &mu, 0), MeasureValue::Top);
        mu.set(0, MeasureValue::Top);
        assert!(edge_ok(&g, &mu, 0, 0));

        let g = game("0 2 0 0;");
        let mut mu = Measure::least(&tree, Player::Even, 2, 1);
        assert!(edge_ok(&g, &mu, 0, 0));
        assert_eq!(lift(&g, &mu, 0), mu.get(0));
        mu.set(0, leaf);
        assert!(edge_ok(&g, &mu, 0, 0));
        assert_eq!(lift(&g, &mu, 0), leaf);
    }

    #[test]
    fn self_loops() {
        let (r, stats) = solve(&game("0 2 0 0;"));
        assert_eq!(r.even(), vec![0]);
        assert_eq!(stats.player, Player::Even);
        assert_eq!(stats.eta, 0);
        assert_eq!(stats.tree_width, 1);
        let (r, stats) = solve(&game("0 1 1 0;"));
        assert_eq!(r.odd(), vec![0]);
        assert_eq!(stats.player, Player::Odd);
    }

    #[test]
    fn odd_vertex_escaping_to_even_loop() {
        // v0 (p1) -> v1 (p2) -> v1: Even wins both with a one-leaf tree,
        // since v1 stays at the root and v0 takes the leaf.
        let g = game("0 1 0 1;\n1 2 0 1;");
        let out = Solver::new(&g).run();
        assert_eq!(out.stats.tree_width, 1);
        assert_eq!(out.regions.even(), vec![0, 1]);
        assert_eq!(out.measure, vec![Some(vec![0]), Some(vec![])]);
    }

    #[test]
    fn two_cycle_even_wins() {
        let g = game("0 1 0 1;\n1 2 1 0;");
        assert_eq!(solve(&g).0.even(), vec![0, 1]);
    }

    #[test]
    fn lift_is_noop_on_consistent_vertex() {
        let g = game("0 3 0 1;\n1 2 1 0,1;\n2 4 1 2;");
        let solver = Solver::new(&g);
        let out = solver.run();
        let tree = solver.tree();
        let mut mu = Measure::least(tree, solver.player(), g.max_priority(), g.vertex_count());
        for (v, path) in out.measure.iter().enumerate() {
            let value = match path {
                Some(p) => MeasureValue::Node(tree.node_at(p).unwrap()),
                None => MeasureValue::Top,
            };
            mu.set(v, value);
        }
        for v in g.vertices() {
            assert_eq!(lift(&g, &mu, v), mu.get(v));
        }
    }
}
