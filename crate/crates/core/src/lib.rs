//! Survivor computation for the Josephus problem — `n` labels in a circle,
//! every `k`-th removed — together with the machinery to distrust it:
//! a brute-force oracle producing full elimination orders, Grundy analysis
//! of the maximum-Nim game the problem secretly is, verification suites
//! that machine-check the identities connecting the two, and a timing
//! harness comparing the algorithms.
//!
//! The headline solver, [`solve_orbit`], runs in O(k log n) time and O(1)
//! space by iterating the map `x -> x + x/(k-1) + 1` from zero until it
//! passes `n*(k-1)`; the survivor is `n*k - x`.

pub mod bench;
mod error;
pub mod grundy;
mod instance;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use instance::{Indexing, JosephusInstance};
pub use solver::{
    block_recursion_depth, h_step, solve, solve_block, solve_block_guarded, solve_linear,
    solve_orbit, solve_orbit_traced, Algorithm, OrbitTrace, DEFAULT_RECURSION_GUARD,
};
