//! The three survivor algorithms behind one interface.
//!
//! * [`solve_orbit`] — iterate `x <- x + x/(k-1) + 1` from 0 until
//!   `x >= n*(k-1)`, then the survivor is `n*k - x`. O(k log n) time,
//!   O(1) space, no recursion.
//! * [`solve_linear`] — the textbook recurrence `r <- (r + k) mod i`,
//!   O(n) time, O(1) space.
//! * [`solve_block`] — remove the k-th, 2k-th, ..., floor(n/k)*k-th labels
//!   as one recursive step. O(k log n) time, recursion-depth stack usage.
//!
//! All three agree on every input; the test suites pin that against the
//! brute-force simulation in [`crate::oracle`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::{Indexing, JosephusInstance};

/// Default cap on the block recursion depth.
pub const DEFAULT_RECURSION_GUARD: u64 = 1_000_000;

/// Deepest recursion run on the caller's stack. Anything deeper (but still
/// within the guard) is moved to a dedicated thread whose stack is sized
/// for the measured depth, so the guard fails cleanly instead of the OS
/// stack giving out first.
const INLINE_RECURSION_DEPTH: u64 = 4_096;

/// One application of the orbit map: `x + floor(x / (k - 1)) + 1`.
///
/// Requires `k >= 2`. The result is strictly greater than `x`; if it does
/// not fit in 64 bits an overflow error is returned.
pub fn h_step(x: u64, k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidParameter("h_step needs k >= 2"));
    }
    x.checked_add(x / (k - 1))
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::ArithmeticOverflow { x, k })
}

/// The iterates of the orbit map from a starting point: `x0, h(x0), h(h(x0)), ...`
///
/// Consecutive entries satisfy [`h_step`] exactly, so the sequence is
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTrace {
    k: u64,
    iterates: Vec<u64>,
}

impl OrbitTrace {
    pub(crate) fn new(k: u64, iterates: Vec<u64>) -> Self {
        debug_assert!(k >= 2 && !iterates.is_empty());
        Self { k, iterates }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn iterates(&self) -> &[u64] {
        &self.iterates
    }

    /// Number of map applications recorded (one less than the entry count).
    pub fn steps(&self) -> u64 {
        self.iterates.len() as u64 - 1
    }

    /// The last iterate.
    pub fn end(&self) -> u64 {
        *self.iterates.last().expect("trace is never empty")
    }
}

/// Survivor via orbit iteration: constant working state, no recursion.
///
/// Starting from `x = 0`, applies [`h_step`] until `x >= n*(k-1)` and
/// returns `n*k - x` (one-based). `k = 1` short-circuits to `n` (the last
/// label counted off is simply the highest) and `n = 1` to label 1.
pub fn solve_orbit(inst: JosephusInstance, indexing: Indexing) -> Result<u64> {
    let (n, k) = (inst.n(), inst.k());
    if k == 1 {
        return Ok(indexing.from_one_based(n));
    }
    if n == 1 {
        return Ok(indexing.from_one_based(1));
    }
    let threshold = n * (k - 1);
    let mut x = 0u64;
    while x < threshold {
        // cannot overflow: every iterate below the threshold maps to at
        // most n*k, which the instance guarantees is representable
        x = h_step(x, k)?;
    }
    Ok(indexing.from_one_based(n * k - x))
}

/// Like [`solve_orbit`] but retains every iterate, for inspection and
/// testing. Requires `k >= 2` (the map divides by `k - 1`), and unlike the
/// default path it allocates the full trace and does not short-circuit
/// `n = 1`.
pub fn solve_orbit_traced(inst: JosephusInstance, indexing: Indexing) -> Result<(u64, OrbitTrace)> {
    let (n, k) = (inst.n(), inst.k());
    if k < 2 {
        return Err(Error::InvalidParameter("orbit trace needs k >= 2"));
    }
    let threshold = n * (k - 1);
    let mut iterates = vec![0u64];
    let mut x = 0u64;
    while x < threshold {
        x = h_step(x, k)?;
        iterates.push(x);
    }
    let survivor = indexing.from_one_based(n * k - x);
    Ok((survivor, OrbitTrace::new(k, iterates)))
}

/// Survivor via the O(n) recurrence `r <- (r + k) mod i` for `i = 2..=n`,
/// iteratively (no recursion).
pub fn solve_linear(inst: JosephusInstance, indexing: Indexing) -> Result<u64> {
    let (n, k) = (inst.n(), inst.k());
    let mut r = 0u64;
    for i in 2..=n {
        // r < i and k <= u64::MAX / n, so the sum stays in range
        r = (r + k) % i;
    }
    Ok(indexing.from_zero_based(r))
}

/// Survivor via block removal with the default recursion guard.
pub fn solve_block(inst: JosephusInstance, indexing: Indexing) -> Result<u64> {
    solve_block_guarded(inst, indexing, DEFAULT_RECURSION_GUARD)
}

/// Survivor via block removal: each recursive step removes the k-th,
/// 2k-th, ..., floor(n/k)*k-th labels at once.
///
/// The recursion depth is computed up front; if it exceeds `guard` the
/// call fails with a depth error instead of exhausting the stack.
pub fn solve_block_guarded(inst: JosephusInstance, indexing: Indexing, guard: u64) -> Result<u64> {
    let (n, k) = (inst.n(), inst.k());
    let depth = block_recursion_depth(n, k);
    if depth > guard {
        return Err(Error::RecursionDepthExceeded {
            required: depth,
            guard,
        });
    }
    let r = if depth <= INLINE_RECURSION_DEPTH {
        block_rec(n, k)
    } else {
        // 256 bytes comfortably covers one frame in debug builds
        let stack = 4 * 1024 * 1024 + depth as usize * 256;
        std::thread::Builder::new()
            .stack_size(stack)
            .spawn(move || block_rec(n, k))
            .expect("spawning the recursion thread failed")
            .join()
            .expect("block recursion panicked")
    };
    Ok(indexing.from_zero_based(r))
}

/// Number of stack frames the block recursion needs for `(n, k)` —
/// measured by replaying its descent, not assumed from a complexity bound.
pub fn block_recursion_depth(n: u64, k: u64) -> u64 {
    let mut n = n;
    let mut depth = 1u64;
    while n > 1 && k > 1 {
        if n < k {
            n -= 1;
        } else {
            n -= n / k;
        }
        depth += 1;
    }
    depth
}

fn block_rec(n: u64, k: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    if k == 1 {
        return n - 1;
    }
    if n < k {
        return (block_rec(n - 1, k) + k) % n;
    }
    let cnt = n / k;
    let mut result = block_rec(n - cnt, k) as i128 - (n % k) as i128;
    if result < 0 {
        result += n as i128;
    } else {
        result += result / (k as i128 - 1);
    }
    result as u64
}

/// Selector for the three survivor algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Orbit,
    Linear,
    Block,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Orbit, Algorithm::Linear, Algorithm::Block];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Orbit => "orbit",
            Algorithm::Linear => "linear",
            Algorithm::Block => "block",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orbit" => Ok(Algorithm::Orbit),
            "linear" => Ok(Algorithm::Linear),
            "block" => Ok(Algorithm::Block),
            _ => Err(Error::InvalidParameter("unknown algorithm name")),
        }
    }
}

/// Run the selected algorithm on an instance.
pub fn solve(inst: JosephusInstance, algo: Algorithm, indexing: Indexing) -> Result<u64> {
    match algo {
        Algorithm::Orbit => solve_orbit(inst, indexing),
        Algorithm::Linear => solve_linear(inst, indexing),
        Algorithm::Block => solve_block(inst, indexing),
    }
}
