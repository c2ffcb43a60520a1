//! Brute-force ground truth: runs the removal process literally and keeps
//! the full elimination order.
//!
//! Counting starts at label 1 and the first label removed is the k-th one
//! counted, so `(n=5, k=2)` removes 2 first. Deliberately naive — the
//! point is a trustworthy reference, not speed.

use crate::error::{Error, Result};
use crate::instance::JosephusInstance;

/// Default cap on the circle size the simulation will accept.
pub const DEFAULT_SIMULATION_CAP: u64 = 10_000_000;

/// The order in which labels leave the circle. `order[i - 1]` is the i-th
/// label removed; the last entry is the survivor, treated as "removed
/// last" so the sequence is a permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    n: u64,
    k: u64,
    order: Vec<u32>,
}

impl EliminationOrder {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Removal order, survivor last.
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// The label left after all removals (one-based).
    pub fn survivor(&self) -> u64 {
        *self.order.last().expect("order holds n >= 1 labels") as u64
    }

    /// Removal index of a label: 1 for the first label removed, `n` for
    /// the survivor.
    pub fn removal_index(&self, label: u64) -> Result<u64> {
        if label < 1 || label > self.n {
            return Err(Error::InvalidParameter("label out of range"));
        }
        let position = self
            .order
            .iter()
            .position(|&l| u64::from(l) == label)
            .expect("order is a permutation of 1..=n");
        Ok(position as u64 + 1)
    }
}

/// Simulate the removal process with the default size cap.
pub fn simulate(inst: JosephusInstance) -> Result<EliminationOrder> {
    simulate_capped(inst, DEFAULT_SIMULATION_CAP)
}

/// Simulate the removal process, refusing circles with more than `cap`
/// labels.
pub fn simulate_capped(inst: JosephusInstance, cap: u64) -> Result<EliminationOrder> {
    let (n, k) = (inst.n(), inst.k());
    let cap = cap.min(u64::from(u32::MAX));
    if n > cap {
        return Err(Error::SimulationCapExceeded { n, cap });
    }
    let mut live: Vec<u32> = (1..=n as u32).collect();
    let mut order = Vec::with_capacity(live.len());
    let mut cursor = 0usize;
    while !live.is_empty() {
        // count k labels around the live circle, starting at the cursor
        cursor = (cursor + ((k - 1) % live.len() as u64) as usize) % live.len();
        order.push(live.remove(cursor));
        if cursor == live.len() {
            cursor = 0;
        }
    }
    Ok(EliminationOrder { n, k, order })
}
