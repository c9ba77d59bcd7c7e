//! Universal trees and progress-measure lifting for parity games.
//!
//! - [`game`]: parity games with vertex priorities, PGSolver I/O and a
//!   seeded random generator.
//! - [`tree`]: ordered trees, the recursive `n`-universal construction,
//!   embeddings and exhaustive universality checks.
//! - [`widths`]: exact widths of the constructed trees and the bounds on
//!   them, with a CSV report.
//! - [`solver`]: the lifting solver over an `eta`-universal tree, plus
//!   Zielonka's algorithm and a strategy-enumeration solver as references.
//! - [`cli`]: the `paritree` command line.
//!
//! ```
//! use paritree::game::parse_pgsolver;
//! use paritree::solver::{solve, zielonka};
//!
//! let g = parse_pgsolver(b"parity 2;\n0 1 0 1,2;\n1 2 1 0;\n2 3 0 2;").unwrap();
//! let (regions, stats) = solve(&g);
//! assert_eq!(regions, zielonka(&g));
//! assert_eq!(regions.even(), vec![0, 1]);
//! assert!(stats.tree_width >= 1);
//! ```

pub mod cli;
pub mod game;
pub mod solver;
pub mod tree;
pub mod widths;
