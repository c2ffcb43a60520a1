//! Machine checks tying the pieces together: cross-algorithm agreement on
//! survivors, the Grundy/Josephus identity, and the structural properties
//! of the orbit map. Checks accumulate violations into a report instead of
//! failing fast, so a broken build shows its full blast radius.

use std::fmt;

use crate::error::Result;
use crate::instance::{Indexing, JosephusInstance};
use crate::oracle::simulate;
use crate::solver::{solve_block, solve_linear, solve_orbit};

/// Outcome of a verification pass: how many identities were checked and
/// every one that failed.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.checks += 1;
        if !ok {
            self.violations.push(violation());
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }
}

/// A single failed identity, with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The three algorithms and the simulation did not all agree.
    SurvivorMismatch {
        n: u64,
        k: u64,
        simulated: u64,
        orbit: u64,
        linear: u64,
        block: u64,
    },
    /// `n - removal_index(m) != G(n*k - m)`.
    GrundyJosephusIdentity {
        n: u64,
        k: u64,
        label: u64,
        removal_index: u64,
        grundy: u32,
    },
    /// The orbit map failed to be strictly increasing.
    MapNotIncreasing {
        k: u64,
        x: u64,
        h_x: u64,
        h_next: u64,
    },
    /// The orbit map failed to advance past its argument.
    MapDoesNotAdvance { k: u64, x: u64, h: u64 },
    /// `h(x) != floor(h(x) / k) + x + 1`.
    FloorIdentityBroken { k: u64, x: u64, h: u64 },
    /// The Grundy value changed along one application of the map.
    GrundyNotInvariant {
        k: u64,
        x: u64,
        h: u64,
        g_x: u32,
        g_h: u32,
    },
    /// Positions sharing a Grundy value did not chain under the map.
    LevelSetChainBroken {
        k: u64,
        grundy: u32,
        from: u64,
        expected: u64,
        found: u64,
    },
    /// The Grundy-0 positions differ from the forward orbit of 0.
    ZeroLevelSetMismatch {
        k: u64,
        index: u64,
        in_orbit: Option<u64>,
        in_table: Option<u64>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::SurvivorMismatch {
                n,
                k,
                simulated,
                orbit,
                linear,
                block,
            } => write!(
                f,
                "survivor mismatch at n={n} k={k}: simulated={simulated} orbit={orbit} linear={linear} block={block}"
            ),
            Violation::GrundyJosephusIdentity {
                n,
                k,
                label,
                removal_index,
                grundy,
            } => write!(
                f,
                "identity broken at n={n} k={k} m={label}: n - o({label}) = {} but G({}) = {grundy}",
                n - removal_index,
                n * k - label
            ),
            Violation::MapNotIncreasing { k, x, h_x, h_next } => write!(
                f,
                "map not increasing for k={k}: h({x})={h_x} >= h({})={h_next}",
                x + 1
            ),
            Violation::MapDoesNotAdvance { k, x, h } => {
                write!(f, "map does not advance for k={k}: h({x})={h} < {}", x + 1)
            }
            Violation::FloorIdentityBroken { k, x, h } => write!(
                f,
                "floor identity broken for k={k}: h({x})={h} != {} + {x} + 1",
                h / k
            ),
            Violation::GrundyNotInvariant { k, x, h, g_x, g_h } => write!(
                f,
                "grundy changed along the map for k={k}: G({x})={g_x} but G({h})={g_h}"
            ),
            Violation::LevelSetChainBroken {
                k,
                grundy,
                from,
                expected,
                found,
            } => write!(
                f,
                "level set {grundy} breaks for k={k}: after {from} expected h = {expected}, table has {found}"
            ),
            Violation::ZeroLevelSetMismatch {
                k,
                index,
                in_orbit,
                in_table,
            } => write!(
                f,
                "grundy-0 positions differ from the orbit of 0 for k={k} at entry {index}: orbit={in_orbit:?} table={in_table:?}"
            ),
        }
    }
}

/// Check that orbit, linear, block, and the simulation produce the same
/// one-based survivor for every `n` in `1..=n_max` and every `k` in `ks`.
pub fn cross_algorithm_agreement(n_max: u64, ks: &[u64]) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for &k in ks {
        for n in 1..=n_max {
            let inst = JosephusInstance::new(n, k)?;
            let simulated = simulate(inst)?.survivor();
            let orbit = solve_orbit(inst, Indexing::OneBased)?;
            let linear = solve_linear(inst, Indexing::OneBased)?;
            let block = solve_block(inst, Indexing::OneBased)?;
            report.record(
                orbit == simulated && linear == simulated && block == simulated,
                || Violation::SurvivorMismatch {
                    n,
                    k,
                    simulated,
                    orbit,
                    linear,
                    block,
                },
            );
        }
    }
    Ok(report)
}
