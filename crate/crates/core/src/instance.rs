use crate::error::{Error, Result};

/// Validated parameters of one Josephus problem: `n` labels in a circle,
/// every `k`-th removed.
///
/// Construction enforces `n >= 1`, `k >= 1`, and that `n * k` is
/// representable in 64 bits. Every intermediate value reached by the
/// solvers is bounded by `n * k`, so the single check at construction
/// rules out overflow everywhere downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JosephusInstance {
    n: u64,
    k: u64,
}

impl JosephusInstance {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1"));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1"));
        }
        if n.checked_mul(k).is_none() {
            return Err(Error::InstanceTooLarge { n, k });
        }
        Ok(Self { n, k })
    }

    /// Number of labels in the circle.
    pub fn n(self) -> u64 {
        self.n
    }

    /// Removal step: every `k`-th live label is removed.
    pub fn k(self) -> u64 {
        self.k
    }
}

/// Label convention for survivor output.
///
/// The circle holds labels `1..=n`; zero-based output shifts every label
/// down by one, so `ZeroBased == OneBased - 1` always.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indexing {
    OneBased,
    ZeroBased,
}

impl Indexing {
    /// Convert a one-based label to this convention.
    pub fn from_one_based(self, label: u64) -> u64 {
        match self {
            Indexing::OneBased => label,
            Indexing::ZeroBased => label - 1,
        }
    }

    /// Convert a zero-based label to this convention.
    pub fn from_zero_based(self, label: u64) -> u64 {
        match self {
            Indexing::OneBased => label + 1,
            Indexing::ZeroBased => label,
        }
    }
}
