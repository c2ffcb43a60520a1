//! Grundy numbers for maximum Nim with the rule function `f(x) = floor(x / k)`:
//! from a pile of `x` stones a move removes between 1 and `f(x)` stones, so
//! position `x` reaches exactly the interval `[x - f(x), x - 1]`.
//!
//! These values tie directly into the Josephus solvers: `n - o(m) = G(n*k - m)`
//! where `o(m)` is the removal index of label `m`, and positions sharing a
//! Grundy value are exactly the orbits of the map in [`crate::solver::h_step`].
//! [`verify_grundy_josephus`] and [`verify_hk_properties`] machine-check both
//! facts over finite windows.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::instance::JosephusInstance;
use crate::oracle::simulate;
use crate::solver::{h_step, OrbitTrace};
use crate::verify::{VerificationReport, Violation};

/// Default cap on Grundy table size, in entries.
pub const DEFAULT_TABLE_CAP: u64 = 10_000_000;

/// Minimum excluded value: the smallest non-negative integer absent from
/// `values` (read as a set; duplicates are harmless).
pub fn mex(values: &[u32]) -> u32 {
    // the mex of w values is at most w, so presence beyond that is irrelevant
    let mut seen = vec![false; values.len() + 1];
    for &v in values {
        if let Some(slot) = seen.get_mut(v as usize) {
            *slot = true;
        }
    }
    seen.iter().position(|&s| !s).unwrap() as u32
}

/// Grundy values of maximum-Nim positions `0..=limit` for a fixed `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    k: u64,
    values: Vec<u32>,
}

impl GrundyTable {
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Highest position held.
    pub fn limit(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, x: u64) -> u32 {
        self.values[x as usize]
    }

    /// Recheck every entry against the defining recurrence using the plain
    /// presence-buffer [`mex`], independent of how the table was built.
    /// Returns the first nonconforming position, if any.
    pub fn first_mex_violation(&self) -> Option<u64> {
        first_mex_violation(self.k, &self.values)
    }
}

/// Recurrence check behind [`GrundyTable::first_mex_violation`], usable on
/// a raw slice.
pub fn first_mex_violation(k: u64, values: &[u32]) -> Option<u64> {
    for x in 0..values.len() {
        let window = x / k as usize;
        if mex(&values[x - window..x]) != values[x] {
            return Some(x as u64);
        }
    }
    None
}

/// Build the Grundy table for positions `0..=limit` under the default cap.
pub fn grundy_table(k: u64, limit: u64) -> Result<GrundyTable> {
    grundy_table_capped(k, limit, DEFAULT_TABLE_CAP)
}

/// Build the Grundy table for positions `0..=limit`, refusing to allocate
/// more than `cap` entries.
///
/// The move window of position `x` is `[x - floor(x/k), x - 1]`; as `x`
/// grows, both window edges only move right, so the table is filled with a
/// sliding multiset of window values plus the set of values currently
/// absent. Each position costs one ordered-set lookup.
pub fn grundy_table_capped(k: u64, limit: u64, cap: u64) -> Result<GrundyTable> {
    if k < 2 {
        return Err(Error::InvalidParameter("grundy table needs k >= 2"));
    }
    let entries = limit.checked_add(1).ok_or(Error::TableCapExceeded {
        entries: u64::MAX,
        cap,
    })?;
    if entries > cap {
        return Err(Error::TableCapExceeded { entries, cap });
    }
    // every value is bounded by its window size, so by limit / k
    let value_bound =
        u32::try_from(limit / k + 1).map_err(|_| Error::TableCapExceeded { entries, cap })?;

    let len = entries as usize;
    let k = k as usize;
    let mut values: Vec<u32> = Vec::with_capacity(len);
    let mut counts = vec![0u32; value_bound as usize + 1];
    let mut absent: BTreeSet<u32> = (0..=value_bound).collect();
    let mut lo = 0usize;

    for x in 0..len {
        if x > 0 {
            // the window's right edge reaches the value just computed
            let v = values[x - 1];
            counts[v as usize] += 1;
            if counts[v as usize] == 1 {
                absent.remove(&v);
            }
        }
        while lo + x / k < x {
            let v = values[lo];
            counts[v as usize] -= 1;
            if counts[v as usize] == 0 {
                absent.insert(v);
            }
            lo += 1;
        }
        values.push(
            *absent
                .first()
                .expect("a value above the bound is always absent"),
        );
    }
    Ok(GrundyTable {
        k: k as u64,
        values,
    })
}

/// First `count` applications of the orbit map from `x0`, keeping every
/// iterate (`count + 1` entries).
pub fn orbit(x0: u64, k: u64, count: u64) -> Result<OrbitTrace> {
    if k < 2 {
        return Err(Error::InvalidParameter("orbit needs k >= 2"));
    }
    let mut iterates = Vec::with_capacity(count as usize + 1);
    iterates.push(x0);
    let mut x = x0;
    for _ in 0..count {
        x = h_step(x, k)?;
        iterates.push(x);
    }
    Ok(OrbitTrace::new(k, iterates))
}

/// Check `n - o(m) = G(n*k - m)` for every `n <= n_max`, `2 <= k <= k_max`,
/// and every label `m`, pitting the brute-force removal order against the
/// independently built Grundy table. Violations land in the report; the
/// only errors are cap overruns.
pub fn verify_grundy_josephus(n_max: u64, k_max: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for k in 2..=k_max {
        let top = n_max
            .checked_mul(k)
            .ok_or(Error::InstanceTooLarge { n: n_max, k })?;
        let table = grundy_table(k, top - 1)?;
        for n in 1..=n_max {
            let order = simulate(JosephusInstance::new(n, k)?)?;
            let mut removal_index = vec![0u64; n as usize + 1];
            for (i, &label) in order.order().iter().enumerate() {
                removal_index[label as usize] = i as u64 + 1;
            }
            for m in 1..=n {
                let o = removal_index[m as usize];
                let g = table.value(n * k - m);
                report.record(n - o == u64::from(g), || {
                    Violation::GrundyJosephusIdentity {
                        n,
                        k,
                        label: m,
                        removal_index: o,
                        grundy: g,
                    }
                });
            }
        }
    }
    Ok(report)
}

/// Check the structural properties of the orbit map against the Grundy
/// table over positions `0..=limit`:
///
/// * the map is strictly increasing and advances past its argument;
/// * `h(x) = floor(h(x)/k) + x + 1`;
/// * the Grundy value is invariant along the map (for images within the
///   window);
/// * positions sharing a Grundy value, sorted, chain under the map, and
///   the Grundy-0 positions are exactly the forward orbit of 0.
pub fn verify_hk_properties(k: u64, limit: u64) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::InvalidParameter("hk properties need k >= 2"));
    }
    let table = grundy_table(k, limit)?;
    let mut report = VerificationReport::default();

    let mut prev_h = None;
    for x in 0..=limit {
        let h = h_step(x, k)?;
        report.record(h > x, || Violation::MapDoesNotAdvance { k, x, h });
        if let Some(prev) = prev_h {
            report.record(prev < h, || Violation::MapNotIncreasing {
                k,
                x: x - 1,
                h_x: prev,
                h_next: h,
            });
        }
        prev_h = Some(h);
        report.record(h == h / k + x + 1, || Violation::FloorIdentityBroken {
            k,
            x,
            h,
        });
        if h <= limit {
            let (g_x, g_h) = (table.value(x), table.value(h));
            report.record(g_x == g_h, || Violation::GrundyNotInvariant {
                k,
                x,
                h,
                g_x,
                g_h,
            });
        }
    }

    // group positions by Grundy value; each group, already in ascending
    // order, must walk forward by exactly one map application
    let group_count = table.values().iter().max().copied().unwrap_or(0) as usize + 1;
    let mut groups: Vec<Vec<u64>> = vec![Vec::new(); group_count];
    for (x, &g) in table.values().iter().enumerate() {
        groups[g as usize].push(x as u64);
    }
    for (g, positions) in groups.iter().enumerate() {
        for pair in positions.windows(2) {
            let expected = h_step(pair[0], k)?;
            report.record(pair[1] == expected, || Violation::LevelSetChainBroken {
                k,
                grundy: g as u32,
                from: pair[0],
                expected,
                found: pair[1],
            });
        }
    }

    // the zero level set must coincide with the orbit of 0, element by element
    let mut zero_orbit = Vec::new();
    let mut x = 0u64;
    while x <= limit {
        zero_orbit.push(x);
        x = h_step(x, k)?;
    }
    let zero_group = &groups[0];
    let entries = zero_orbit.len().max(zero_group.len());
    for i in 0..entries {
        let in_orbit = zero_orbit.get(i).copied();
        let in_table = zero_group.get(i).copied();
        report.record(in_orbit == in_table, || Violation::ZeroLevelSetMismatch {
            k,
            index: i as u64,
            in_orbit,
            in_table,
        });
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mex_of_small_sets() {
        assert_eq!(mex(&[]), 0);
        assert_eq!(mex(&[0, 1, 3]), 2);
        assert_eq!(mex(&[1, 2]), 0);
        assert_eq!(mex(&[0, 0, 2, 5, 1]), 3);
    }

    #[test]
    fn tables_match_hand_computed_values() {
        assert_eq!(
            grundy_table(2, 10).unwrap().values(),
            &[0, 0, 1, 0, 2, 1, 3, 0, 4, 2, 5]
        );
        assert_eq!(
            grundy_table(3, 12).unwrap().values(),
            &[0, 0, 0, 1, 0, 1, 2, 0, 1, 3, 2, 0, 4]
        );
        assert_eq!(
            grundy_table(4, 12).unwrap().values(),
            &[0, 0, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 3]
        );
    }

    #[test]
    fn positions_below_k_have_no_moves() {
        let table = grundy_table(3, 2).unwrap();
        assert_eq!(table.values(), &[0, 0, 0]);
        for k in 2..=20u64 {
            let table = grundy_table(k, k - 1).unwrap();
            assert!(table.values().iter().all(|&g| g == 0));
        }
    }

    #[test]
    fn zero_positions_for_k_two_follow_the_orbit() {
        let table = grundy_table(2, 10).unwrap();
        assert_eq!(table.value(7), 0);
        assert_eq!(table.value(8), 4);
    }

    #[test]
    fn table_rejects_k_below_two() {
        assert!(matches!(
            grundy_table(1, 5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn table_cap_is_enforced() {
        assert!(matches!(
            grundy_table_capped(2, 100, 10),
            Err(Error::TableCapExceeded {
                entries: 101,
                cap: 10
            })
        ));
    }

    #[test]
    fn recheck_accepts_real_tables_and_catches_corruption() {
        let table = grundy_table(2, 2000).unwrap();
        assert_eq!(table.first_mex_violation(), None);

        let mut corrupted = table.values().to_vec();
        corrupted[1500] += 1;
        assert_eq!(first_mex_violation(2, &corrupted), Some(1500));
    }

    #[test]
    fn orbit_traces() {
        assert_eq!(orbit(0, 2, 4).unwrap().iterates(), &[0, 1, 3, 7, 15]);
        assert_eq!(orbit(0, 3, 5).unwrap().iterates(), &[0, 1, 2, 4, 7, 11]);
        assert_eq!(orbit(2, 2, 2).unwrap().iterates(), &[2, 5, 11]);
        assert!(orbit(0, 1, 3).is_err());
    }

    #[test]
    fn grundy_josephus_identity_on_a_small_grid() {
        let report = verify_grundy_josephus(5, 2).unwrap();
        // one check per label per n
        assert_eq!(report.checks, 15);
        assert!(report.passed());

        let report = verify_grundy_josephus(40, 6).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn hk_properties_hold_on_small_windows() {
        for k in 2..=6u64 {
            let report = verify_hk_properties(k, 2000).unwrap();
            assert!(report.passed(), "k={k}: {:?}", report.violations.first());
        }
    }

    #[test]
    fn hk_properties_at_limit_zero() {
        let report = verify_hk_properties(2, 0).unwrap();
        assert!(report.passed());
    }
}
