//! Integer partitions, hook+column shapes and 2-signs.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the parts; iterating a sorted
/// collection in reverse therefore yields decreasing lexicographic order,
/// which is the order used by every serialization in this workspace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotWeaklyDecreasing(Partition(parts)));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with zero past the end (0-based index).
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of `k` among the parts.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Pairs `(part, multiplicity)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0) as usize;
        let mut out = vec![0u32; first];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// Componentwise sum `(λ_1 + μ_1, λ_2 + μ_2, ...)`.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Multiset union of the parts, sorted decreasingly.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for m in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(m);
            }
        }
        z
    }

    /// Canonical hook+column decomposition, if any.
    pub fn hook_column(&self) -> Option<HookColumnShape> {
        hook_column_decompose(self)
    }

    pub fn is_hook_column(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p <= 2)
    }

    /// Removals of a rim hook of length `k`, with the sign `(-1)^{height}`.
    pub(crate) fn rim_hook_removals(&self, k: u32) -> Vec<(Partition, i32)> {
        let len = self.len();
        if k == 0 || len == 0 {
            return Vec::new();
        }
        // Beta-set: bead positions λ_i + (len - 1 - i), strictly decreasing.
        let beads: Vec<u32> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (len - 1 - i) as u32)
            .collect();
        let mut out = Vec::new();
        for (i, &b) in beads.iter().enumerate() {
            if b < k {
                continue;
            }
            let target = b - k;
            if beads.binary_search_by(|x| target.cmp(x)).is_ok() {
                continue;
            }
            let between = beads.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beads.clone();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<u32> = moved
                .iter()
                .enumerate()
                .map(|(j, &x)| x - (len - 1 - j) as u32)
                .filter(|&p| p > 0)
                .collect();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            out.push((Partition(parts), sign));
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[6,2,2,2,1]` and the exponent sugar `[6,2^3,1]`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::PartitionSyntax(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?
            .trim();
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for item in inner.split(',') {
                let item = item.trim();
                let (base, exp) = match item.split_once('^') {
                    Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| err())?),
                    None => (item, 1),
                };
                let base: u32 = base.parse().map_err(|_| err())?;
                if base == 0 {
                    return Err(err());
                }
                parts.extend(core::iter::repeat_n(base, exp));
            }
        }
        Partition::new(parts)
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// The triple `(α, β, γ)` of a hook+column partition `(α, 2^β, 1^γ)`.
///
/// `alpha` is always the literal first part, so `(1^5)` is `(1, 0, 4)` and
/// `(2,2,1)` is `(2, 1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HookColumnShape {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl HookColumnShape {
    /// Validates that `(alpha, 2^beta, 1^gamma)` is a partition.
    pub fn new(alpha: u32, beta: u32, gamma: u32) -> Option<Self> {
        let ok = alpha >= 2 || (alpha == 1 && beta == 0);
        ok.then_some(HookColumnShape { alpha, beta, gamma })
    }

    pub fn weight(&self) -> u32 {
        self.alpha + 2 * self.beta + self.gamma
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(1 + (self.beta + self.gamma) as usize);
        parts.push(self.alpha);
        parts.extend(core::iter::repeat_n(2, self.beta as usize));
        parts.extend(core::iter::repeat_n(1, self.gamma as usize));
        Partition(parts)
    }
}

impl fmt::Display for HookColumnShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},2^{},1^{})", self.alpha, self.beta, self.gamma)
    }
}

pub fn conjugate(lam: &Partition) -> Partition {
    lam.conjugate()
}

/// `Some((α, β, γ))` iff every part after the first is at most 2.
pub fn hook_column_decompose(lam: &Partition) -> Option<HookColumnShape> {
    let (&alpha, rest) = lam.0.split_first()?;
    if !lam.is_hook_column() {
        return None;
    }
    let beta = rest.iter().filter(|&&p| p == 2).count() as u32;
    let gamma = rest.len() as u32 - beta;
    Some(HookColumnShape { alpha, beta, gamma })
}

/// The hook+column partition `(n - 2β - γ, 2^β, 1^γ)` when it is valid.
pub fn hook_column_at(n: u32, beta: u32, gamma: u32) -> Option<HookColumnShape> {
    let alpha = n.checked_sub(2 * beta + gamma)?;
    HookColumnShape::new(alpha, beta, gamma)
}

/// All β for which `(n - 2β - γ, 2^β, 1^γ)` is a partition, in increasing order.
pub fn hook_column_row(n: u32, gamma: u32) -> Vec<HookColumnShape> {
    (0..=n / 2)
        .map_while(|beta| n.checked_sub(2 * beta + gamma).map(|_| beta))
        .filter_map(|beta| hook_column_at(n, beta, gamma))
        .collect()
}

/// Every hook+column partition of `n`, ordered by `(γ, β)`.
pub fn hook_columns_of(n: u32) -> Vec<HookColumnShape> {
    (0..n).flat_map(|gamma| hook_column_row(n, gamma)).collect()
}

pub fn z_of(lam: &Partition) -> BigUint {
    lam.z()
}

/// Sign `(-1)^{#vertical dominoes}` of a domino tiling of `λ`; `None` when
/// `λ` has odd weight or a nonempty 2-core.
///
/// Computed by peeling rim dominoes greedily.
pub fn two_sign(lam: &Partition) -> Option<i32> {
    let mut shape = lam.clone();
    let mut sign = 1;
    while !shape.is_empty() {
        let (next, s) = shape.rim_hook_removals(2).into_iter().next()?;
        sign *= s;
        shape = next;
    }
    Some(sign)
}

pub fn partition_sum(lam: &Partition, mu: &Partition) -> Partition {
    lam.sum(mu)
}

pub fn partition_union(lam: &Partition, mu: &Partition) -> Partition {
    lam.union(mu)
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: strip trailing 1s, decrement the last part > 1, then
        // refill greedily with the freed weight.
        let mut parts = current.clone();
        let mut freed = 0u32;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                parts.push(take);
                freed -= take;
            }
            self.next = Some(parts);
        }
        Some(Partition(current))
    }
}

/// Number of partitions of each `k ≤ n` via Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let mut plus = BigUint::default();
        let mut minus = BigUint::default();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &p[m - g1];
            if g2 <= m {
                *acc += &p[m - g2];
            }
        }
        p.push(plus - minus);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn decompose_examples() {
        let h = hook_column_decompose(&p(&[6, 2, 2, 2, 1])).unwrap();
        assert_eq!((h.alpha, h.beta, h.gamma), (6, 3, 1));
        let h = hook_column_decompose(&p(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!((h.alpha, h.beta, h.gamma), (1, 0, 4));
        let h = hook_column_decompose(&p(&[2, 2, 1])).unwrap();
        assert_eq!((h.alpha, h.beta, h.gamma), (2, 1, 1));
        assert!(hook_column_decompose(&p(&[3, 3, 1])).is_none());
        assert!(hook_column_decompose(&Partition::empty()).is_none());
    }

    #[test]
    fn enumeration_order() {
        let four: Vec<Partition> = partitions_of(4).collect();
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let zero: Vec<Partition> = partitions_of(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
    }

    #[test]
    fn partition_count_32() {
        assert_eq!(partitions_of(32).count(), 8349);
        assert_eq!(partition_counts(32)[32], BigUint::from(8349u32));
    }

    #[test]
    fn z_examples() {
        assert_eq!(p(&[2, 1, 1]).z(), BigUint::from(4u32));
        assert_eq!(p(&[7]).z(), BigUint::from(7u32));
        assert_eq!(Partition::column(5).z(), BigUint::from(120u32));
    }

    #[test]
    fn two_sign_examples() {
        assert_eq!(two_sign(&p(&[4, 3, 1])), Some(-1));
        assert_eq!(two_sign(&p(&[2])), Some(1));
        assert_eq!(two_sign(&p(&[1, 1])), Some(-1));
        assert_eq!(two_sign(&p(&[3])), None);
        assert_eq!(two_sign(&p(&[2, 1])), None);
        assert_eq!(two_sign(&Partition::empty()), Some(1));
    }

    #[test]
    fn sum_and_union() {
        assert_eq!(p(&[3, 1]).sum(&p(&[2, 2])), p(&[5, 3]));
        assert_eq!(p(&[2, 1]).union(&p(&[2])), p(&[2, 2, 1]));
        assert_eq!(p(&[4, 2]).union(&Partition::empty()), p(&[4, 2]));
    }

    #[test]
    fn text_form() {
        assert_eq!("[6,2^3,1]".parse::<Partition>().unwrap(), p(&[6, 2, 2, 2, 1]));
        assert_eq!(p(&[6, 2, 2, 2, 1]).to_string(), "[6,2,2,2,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("6,2".parse::<Partition>().is_err());
        assert!("[3,0]".parse::<Partition>().is_err());
    }

    #[test]
    fn hook_column_rows() {
        let row: Vec<u32> = hook_column_row(4, 0).iter().map(|h| h.beta).collect();
        assert_eq!(row, vec![0, 1]);
        let row = hook_column_row(4, 3);
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].to_partition(), Partition::column(4));
        assert_eq!(hook_column_row(12, 0).len(), 6);
        assert_eq!(hook_column_row(15, 0).len(), 7);
    }

    #[test]
    fn rim_hooks_of_staircase() {
        // (2,1) has no rim 2-hooks: its 2-core is itself.
        assert!(p(&[2, 1]).rim_hook_removals(2).is_empty());
        assert_eq!(p(&[3, 1]).rim_hook_removals(2), vec![(p(&[1, 1]), 1)]);
        let mut hooks = p(&[2, 2]).rim_hook_removals(2);
        hooks.sort();
        assert_eq!(hooks, vec![(p(&[1, 1]), -1), (p(&[2]), 1)]);
    }
}
