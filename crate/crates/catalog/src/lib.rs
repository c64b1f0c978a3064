//! Reference data for the correlation toolkit: the printed annihilating
//! operators, elliptic-integral closed forms, sigma curves, and expansion
//! tables, shipped as checksummed JSON fixtures with typed loaders, plus
//! the closed formula for annihilator orders.
//!
//! The fixtures are stored as files rather than constructed in code so
//! that each transcription exists exactly once, is pinned by a sha256
//! manifest, and can be diffed or regenerated without touching source.
//! The integration tests recompute every object from first principles and
//! compare against the decoded fixtures.

pub mod payload;
mod registry;

pub use exactcore::{Error, Result};
pub use registry::{fixture, fixture_names, manifest_entries, Fixture, FixtureKind, ManifestEntry};

/// Order of the minimal annihilator of the pair correlation with index
/// gap |n - m|: (n + m + 2)(4 + c|n - m|)/8 with c = 2 for even gaps and
/// c = 4 for odd ones. The division is exact on the integer grid; the
/// error guards against edits that break that.
pub fn order_formula(n: u64, m: u64) -> Result<u64> {
    let gap = n.abs_diff(m);
    let weight = if gap % 2 == 0 { 2 } else { 4 };
    let product = (n + m + 2) * (4 + weight * gap);
    if product % 8 != 0 {
        return Err(Error::Unsupported(format!(
            "formula inapplicable for ({n}, {m}): {product} is not divisible by 8"
        )));
    }
    Ok(product / 8)
}
