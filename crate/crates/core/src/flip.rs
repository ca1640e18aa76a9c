//! The flip involution on hook+column partitions, flip-symmetry and
//! hook+column sequences.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::partition::{hook_column_decompose, hook_column_row, HookColumnShape, Partition};
use crate::symfunc::SchurExpansion;

/// `Σ(f, γ)`: entry `β` is `[s_{(n-2β-γ, 2^β, 1^γ)}] f`, over exactly the β
/// for which that tuple is a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HCSequence {
    degree: u32,
    gamma: u32,
    entries: Vec<BigInt>,
}

impl HCSequence {
    pub fn new(degree: u32, gamma: u32, entries: Vec<BigInt>) -> Self {
        debug_assert_eq!(entries.len(), hook_column_row(degree, gamma).len());
        HCSequence { degree, gamma, entries }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries as `i64`; panics on overflow. Convenient in tests and tables.
    pub fn to_i64s(&self) -> Vec<i64> {
        self.entries
            .iter()
            .map(|e| e.to_i64().expect("entry fits in i64"))
            .collect()
    }

    /// Entries with leading and trailing zeros removed.
    pub fn nonzero_core(&self) -> &[BigInt] {
        let Some(lo) = self.entries.iter().position(|e| !e.is_zero()) else {
            return &[];
        };
        let hi = self.entries.iter().rposition(|e| !e.is_zero()).unwrap_or(lo);
        &self.entries[lo..=hi]
    }

    /// The partition indexed by position `beta`.
    pub fn partition_at(&self, beta: usize) -> Option<Partition> {
        hook_column_row(self.degree, self.gamma)
            .get(beta)
            .map(HookColumnShape::to_partition)
    }
}

/// `Σ(f, γ)` read off a Schur expansion.
pub fn hc_sequence(f: &SchurExpansion, gamma: u32) -> HCSequence {
    let entries = hook_column_row(f.degree(), gamma)
        .iter()
        .map(|h| f.coefficient(&h.to_partition()))
        .collect();
    HCSequence::new(f.degree(), gamma, entries)
}

/// Image of a flip together with the δ of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipResult {
    pub image: Partition,
    pub delta: u32,
}

/// Whether offsets 0 and 1 are admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FlipMode {
    /// Offsets `r ≥ 2` only.
    #[default]
    Standard,
    /// Also offsets 0 and 1, where only the algebraic map is available.
    Extended,
}

impl FlipMode {
    fn admits(self, r: u32) -> bool {
        r >= 2 || self == FlipMode::Extended
    }

    fn min_offset(self) -> u32 {
        match self {
            FlipMode::Standard => 2,
            FlipMode::Extended => 0,
        }
    }
}

/// `(r + 2δ + γ, 2^β, 1^γ) ↦ (r + 2β + γ, 2^δ, 1^γ)`; `None` where undefined.
pub fn flip(r: u32, lam: &Partition, mode: FlipMode) -> Option<FlipResult> {
    if !mode.admits(r) {
        return None;
    }
    let h = hook_column_decompose(lam)?;
    let delta = twice_delta(r, &h)? / 2;
    let image = HookColumnShape::new(r + 2 * h.beta + h.gamma, delta, h.gamma)?;
    Some(FlipResult { image: image.to_partition(), delta })
}

fn twice_delta(r: u32, h: &HookColumnShape) -> Option<u32> {
    let d = h.alpha.checked_sub(r + h.gamma)?;
    (d % 2 == 0).then_some(d)
}

/// The same map computed as a tiled transposition: the first row is tiled
/// by one `1×r` brick, δ bricks `1×2` and γ bricks `1×1`, every other row
/// is a single brick; the tableau of brick widths is transposed and
/// re-expanded. Undefined for `r < 2`.
pub fn flip_via_tiling(r: u32, lam: &Partition) -> Option<FlipResult> {
    if r < 2 {
        return None;
    }
    let h = hook_column_decompose(lam)?;
    let delta = twice_delta(r, &h)? / 2;

    let mut first = vec![r];
    first.extend(core::iter::repeat_n(2, delta as usize));
    first.extend(core::iter::repeat_n(1, h.gamma as usize));
    let mut tableau = vec![first];
    tableau.extend(lam.parts()[1..].iter().map(|&w| vec![w]));

    let transposed = transpose(&tableau)?;
    let rows: Vec<u32> = transposed.iter().map(|row| row.iter().sum()).collect();
    let image = Partition::new(rows).ok()?;
    Some(FlipResult { image, delta })
}

/// Transposes a tableau whose row lengths form a partition.
fn transpose(tableau: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    if tableau.windows(2).any(|w| w[0].len() < w[1].len()) {
        return None;
    }
    let width = tableau.first().map_or(0, Vec::len);
    Some(
        (0..width)
            .map(|c| tableau.iter().map_while(|row| row.get(c).copied()).collect())
            .collect(),
    )
}

/// Outcome of a flip-symmetry test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipSymmetry {
    pub holds: bool,
    /// First hook+column support member where the flip is undefined or the
    /// coefficients differ.
    pub witness: Option<Partition>,
}

/// True iff every hook+column `μ` in the support has a defined flip and
/// `[μ]f = [flip(r; μ)]f`. Other support members are ignored.
pub fn is_flip_symmetric(f: &SchurExpansion, r: u32, mode: FlipMode) -> FlipSymmetry {
    if !mode.admits(r) {
        return FlipSymmetry { holds: false, witness: None };
    }
    for (mu, c) in f.iter_desc() {
        if !mu.is_hook_column() {
            continue;
        }
        let ok = flip(r, mu, mode).is_some_and(|img| f.coefficient(&img.image) == *c);
        if !ok {
            return FlipSymmetry { holds: false, witness: Some(mu.clone()) };
        }
    }
    FlipSymmetry { holds: true, witness: None }
}

/// A valid offset and whether it lies outside the standard range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Offset {
    pub r: u32,
    pub extended: bool,
}

/// Every `r` up to the largest first part of the hook+column support for
/// which `f` is flip-symmetric.
pub fn find_offsets(f: &SchurExpansion, mode: FlipMode) -> Vec<Offset> {
    let max_first = f
        .support()
        .filter(|mu| mu.is_hook_column())
        .map(|mu| mu.part(0))
        .max();
    let Some(max_first) = max_first else {
        return Vec::new();
    };
    (mode.min_offset()..=max_first)
        .filter(|&r| is_flip_symmetric(f, r, mode).holds)
        .map(|r| Offset { r, extended: r < 2 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::hook_columns_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn schur(terms: &[(&[u32], i64)]) -> SchurExpansion {
        let degree = terms[0].0.iter().sum();
        SchurExpansion::from_terms(degree, terms.iter().map(|(l, c)| (p(l), BigInt::from(*c))))
            .unwrap()
    }

    #[test]
    fn flip_examples() {
        let img = flip(3, &p(&[6, 2, 2, 2, 1]), FlipMode::Standard).unwrap();
        assert_eq!(img, FlipResult { image: p(&[10, 2, 1]), delta: 1 });
        assert_eq!(flip(6, &p(&[6, 2, 2, 2]), FlipMode::Standard).unwrap().image, p(&[12]));
        assert!(flip(3, &p(&[5, 2, 1]), FlipMode::Standard).is_none());
        assert!(flip(1, &p(&[5, 2, 1]), FlipMode::Standard).is_none());
        assert_eq!(flip(1, &p(&[4, 1]), FlipMode::Extended).unwrap().image, p(&[2, 2, 1]));
    }

    #[test]
    fn tiling_examples() {
        let img = flip_via_tiling(3, &p(&[6, 2, 2, 2, 1])).unwrap();
        assert_eq!(img.image, p(&[10, 2, 1]));
        // δ = β gives a symmetric tiling.
        let lam = p(&[8, 2, 2, 1]);
        assert_eq!(flip_via_tiling(3, &lam).unwrap().image, lam);
        assert_eq!(flip_via_tiling(2, &p(&[12])).unwrap().image, p(&[2, 2, 2, 2, 2, 2]));
        assert!(flip_via_tiling(1, &p(&[4, 1])).is_none());
    }

    #[test]
    fn tiling_matches_algebra_small() {
        for n in 1..=12 {
            for h in hook_columns_of(n) {
                let lam = h.to_partition();
                for r in 2..=h.alpha {
                    assert_eq!(flip(r, &lam, FlipMode::Standard), flip_via_tiling(r, &lam));
                }
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        let s2s2 = schur(&[(&[4], 1), (&[2, 2], 1)]);
        assert!(is_flip_symmetric(&s2s2, 2, FlipMode::Standard).holds);
        let s2s11 = schur(&[(&[1, 1, 1, 1], 1), (&[2, 2], 1)]);
        for r in 0..=4 {
            let check = is_flip_symmetric(&s2s11, r, FlipMode::Extended);
            assert!(!check.holds);
            assert!(check.witness.is_some());
        }
        let s11s11 = schur(&[(&[2, 1, 1], 1)]);
        assert!(find_offsets(&s11s11, FlipMode::Standard).is_empty());
        assert_eq!(
            find_offsets(&s11s11, FlipMode::Extended),
            vec![Offset { r: 0, extended: true }]
        );
    }

    #[test]
    fn non_hook_columns_ignored() {
        let f = schur(&[(&[6], 1), (&[2, 2, 2], 1), (&[3, 3], 5)]);
        assert!(is_flip_symmetric(&f, 2, FlipMode::Standard).holds);
    }

    #[test]
    fn sequence_from_expansion() {
        let f = schur(&[(&[1, 1, 1, 1], 7), (&[2, 2], 1)]);
        assert_eq!(hc_sequence(&f, 3).to_i64s(), vec![7]);
        assert_eq!(hc_sequence(&f, 0).to_i64s(), vec![0, 1]);
        let seq = HCSequence::new(12, 0, [1, 1, 1, 0, 0, 0].map(BigInt::from).to_vec());
        assert_eq!(seq.nonzero_core().len(), 3);
        assert_eq!(seq.partition_at(2), Some(p(&[8, 2, 2])));
    }
}
