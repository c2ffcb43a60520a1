//! Shared inputs for the criterion benches.

use josephus::JosephusInstance;

/// Instances covering the regimes where the algorithms trade places:
/// small and large `n` at a mid-size `k`, `k` past `n`, and the
/// large-`n`/small-`k` corner where the orbit solver shines.
pub fn standard_cases() -> Vec<JosephusInstance> {
    [(500, 200), (4901, 200), (300, 10), (300, 300), (100_000, 2)]
        .into_iter()
        .map(|(n, k)| JosephusInstance::new(n, k).expect("static cases are valid"))
        .collect()
}
