//! Direct evaluators for the closed hook+column formulas and generators for
//! the integer sequences they are compared against.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::{partition_counts, HookColumnShape, Partition};
use crate::symfunc::SchurExpansion;

/// Which closed formula produced an output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `s_b ∘ s_a`.
    RowOfRow,
    /// `s_2 ∘ s_b ∘ s_a`.
    TwoOfRowOfRow,
    /// `s_c ∘ s_2 ∘ s_a`.
    RowOfTwoOfRow,
    /// `s_μ · s_ν` for hook+columns `μ, ν`.
    HookColumnProduct,
}

/// Hook+column part of a function given by a closed formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HCFormulaOutput {
    pub degree: u32,
    pub terms: Vec<(Partition, BigInt)>,
    pub formula: Formula,
}

impl HCFormulaOutput {
    fn new(degree: u32, formula: Formula) -> Self {
        HCFormulaOutput { degree, terms: Vec::new(), formula }
    }

    fn push(&mut self, shape: Option<HookColumnShape>, c: u64) {
        if c == 0 {
            return;
        }
        let shape = shape.expect("formula shapes are hook+columns");
        debug_assert_eq!(shape.weight(), self.degree);
        self.terms.push((shape.to_partition(), BigInt::from(c)));
    }

    pub fn to_schur(&self) -> SchurExpansion {
        SchurExpansion::from_terms(self.degree, self.terms.iter().cloned())
            .expect("formula terms have the output degree")
    }
}

fn at_least_two(values: &[u32]) -> Result<(), Error> {
    if values.iter().any(|&v| v < 2) {
        return Err(Error::OutOfRange("parameters must be at least 2"));
    }
    Ok(())
}

/// `hc(s_b ∘ s_a) = Σ_{k<b} s_{(ab-2k, 2^k)}`.
pub fn langley_remmel(a: u32, b: u32) -> Result<HCFormulaOutput, Error> {
    at_least_two(&[a, b])?;
    let n = a * b;
    let mut out = HCFormulaOutput::new(n, Formula::RowOfRow);
    for k in 0..b {
        out.push(HookColumnShape::new(n - 2 * k, k, 0), 1);
    }
    Ok(out)
}

/// `hc(s_2 ∘ s_b ∘ s_a)`.
pub fn thm_s2_sb_sa(a: u32, b: u32) -> Result<HCFormulaOutput, Error> {
    at_least_two(&[a, b])?;
    let n = 2 * a * b;
    let top = 2 * b - 1;
    let mut out = HCFormulaOutput::new(n, Formula::TwoOfRowOfRow);
    for k in 0..=top {
        let c = u64::from((k + 1).min(2 * b - k));
        out.push(HookColumnShape::new(n - 2 * k, k, 0), c);
    }
    for k in 1..=2 * b - 3 {
        let c = u64::from(k.div_ceil(2).min((top - k) / 2));
        out.push(HookColumnShape::new(n - 2 * k - 1, k, 1), c);
    }
    Ok(out)
}

/// `hc(s_c ∘ s_2 ∘ s_a)`.
pub fn thm_sc_s2_sa(a: u32, c: u32) -> Result<HCFormulaOutput, Error> {
    at_least_two(&[a, c])?;
    let n = 2 * a * c;
    let top = u64::from(2 * c - 1);
    let central = |k: u64| (k * k + k + 2) / 2;
    let quarter = |k: u64| (k + 1) * (k + 1) / 4;
    let mut out = HCFormulaOutput::new(n, Formula::RowOfTwoOfRow);
    for k in 0..=2 * c - 1 {
        let kk = u64::from(k);
        out.push(HookColumnShape::new(n - 2 * k, k, 0), central(kk).min(central(top - kk)));
    }
    for k in 1..=2 * c - 3 {
        let kk = u64::from(k);
        let other = (top - kk) * (top - kk) / 4;
        out.push(HookColumnShape::new(n - 2 * k - 1, k, 1), quarter(kk).min(other));
    }
    Ok(out)
}

/// Signed hook+column part of `p_2 ∘ s_λ` for `λ = (α, 2^β, 1^γ)`, `α ≥ 2`.
pub fn p2_hookcolumn(lam: &HookColumnShape) -> Result<SchurExpansion, Error> {
    if lam.alpha < 2 {
        return Err(Error::InvalidShape(lam.to_partition()));
    }
    let n = 2 * lam.weight();
    let m2 = lam.beta;
    let first = 2 * lam.alpha;
    let mut terms: Vec<(Partition, BigInt)> = Vec::new();
    let mut push = |row: u32, beta: u32, sign: i64| {
        let Some(ones) = n.checked_sub(row + 2 * beta) else {
            return;
        };
        if let Some(h) = HookColumnShape::new(row, beta, ones) {
            terms.push((h.to_partition(), BigInt::from(sign)));
        }
    };
    let parity = |b: u32| if b.is_multiple_of(2) { 1 } else { -1 };
    for beta in 2 * m2..=n / 2 {
        push(first, beta, parity(beta));
    }
    push(first - 1, 2 * m2, -1);
    for beta in 2 * m2 + 1..=n / 2 {
        push(first - 2, beta, -parity(beta));
    }
    let global = if lam.gamma.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let terms = terms.into_iter().map(|(mu, c)| (mu, c * &global));
    SchurExpansion::from_terms(n, terms)
}

/// `hc(s_μ · s_ν)` for hook+columns with first parts at least 2.
pub fn hc_product(mu: &HookColumnShape, nu: &HookColumnShape) -> Result<HCFormulaOutput, Error> {
    for h in [mu, nu] {
        if h.alpha < 2 {
            return Err(Error::InvalidShape(h.to_partition()));
        }
    }
    let n = mu.weight() + nu.weight();
    let alpha = mu.alpha + nu.alpha;
    let m2 = mu.beta + nu.beta;
    let m1 = mu.gamma.min(nu.gamma);
    let shape = |row: u32, beta: u32| {
        n.checked_sub(row + 2 * beta)
            .and_then(|ones| HookColumnShape::new(row, beta, ones))
    };
    let mut out = HCFormulaOutput::new(n, Formula::HookColumnProduct);
    for beta in m2..=m2 + m1 {
        if let Some(h) = shape(alpha, beta) {
            out.push(Some(h), 1);
        }
    }
    for beta in m2..=m2 + m1 + 1 {
        let chi = if beta == m2 || beta == m2 + m1 + 1 { 1 } else { 2 };
        if let Some(h) = shape(alpha - 1, beta) {
            out.push(Some(h), chi);
        }
    }
    for beta in m2 + 1..=m2 + m1 + 1 {
        if let Some(h) = shape(alpha - 2, beta) {
            out.push(Some(h), 1);
        }
    }
    Ok(out)
}

/// Flip-symmetry offset `abc - 2(bc - 1)` of `s_c ∘ s_b ∘ s_a` when `b = 2`
/// or `c = 2`.
pub fn offset_for(a: u32, b: u32, c: u32) -> i64 {
    let (a, b, c) = (i64::from(a), i64::from(b), i64::from(c));
    a * b * c - 2 * (b * c - 1)
}

/// First `count` terms of one of the supported OEIS sequences.
///
/// `A000124` starts at `n = 0`; `A002620` is listed as `⌊(n+1)²/4⌋` from
/// `n = 1`, i.e. from its first nonzero term.
pub fn oeis(id: &str, count: usize) -> Result<Vec<BigUint>, Error> {
    if count == 0 {
        return Err(Error::OutOfRange("count must be at least 1"));
    }
    let seq = match id {
        "A000124" => (0..count as u64).map(|n| BigUint::from((n * n + n + 2) / 2)).collect(),
        "A002620" => (1..=count as u64).map(|n| BigUint::from((n + 1) * (n + 1) / 4)).collect(),
        "A000098" => two_kinds_of_small_parts(count),
        "A058696" => {
            let counts = partition_counts(2 * (count - 1));
            counts.into_iter().step_by(2).collect()
        }
        _ => return Err(Error::UnknownSequence(id.to_string())),
    };
    Ok(seq)
}

/// Coefficients of `Π_{k≥1} (1 - q^k)^{-1} · Π_{i=1..3} (1 - q^i)^{-1}`:
/// partitions with two kinds of 1s, 2s and 3s.
fn two_kinds_of_small_parts(count: usize) -> Vec<BigUint> {
    let mut coeffs = alloc::vec![BigUint::zero(); count];
    coeffs[0] = BigUint::one();
    let extra = [1usize, 2, 3];
    for i in (1..count).chain(extra) {
        for n in i..count {
            let prev = coeffs[n - i].clone();
            coeffs[n] += prev;
        }
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flip::{hc_sequence, is_flip_symmetric, FlipMode};
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn row(out: &HCFormulaOutput, gamma: u32) -> Vec<i64> {
        hc_sequence(&out.to_schur(), gamma).to_i64s()
    }

    fn ints(v: Vec<BigUint>) -> Vec<u64> {
        v.into_iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn row_of_row() {
        let out = langley_remmel(2, 2).unwrap();
        assert_eq!(out.terms, vec![(p(&[4]), 1.into()), (p(&[2, 2]), 1.into())]);
        assert_eq!(row(&langley_remmel(2, 3).unwrap(), 0), vec![1, 1, 1]);
        assert_eq!(row(&langley_remmel(4, 3).unwrap(), 0), vec![1, 1, 1, 0, 0, 0]);
        assert!(langley_remmel(1, 3).is_err());
    }

    #[test]
    fn two_of_row_of_row() {
        assert_eq!(row(&thm_s2_sb_sa(2, 3).unwrap(), 0), vec![1, 2, 3, 3, 2, 1]);
        assert_eq!(row(&thm_s2_sb_sa(2, 4).unwrap(), 0), vec![1, 2, 3, 4, 4, 3, 2, 1]);
        let f = thm_s2_sb_sa(3, 2).unwrap().to_schur();
        assert_eq!(f.coefficient(&p(&[9, 2, 1])), 1.into());
        assert_eq!(f.coefficient(&p(&[10, 2])), 2.into());
        assert_eq!(f.len(), 5);
    }

    #[test]
    fn row_of_two_of_row() {
        assert_eq!(row(&thm_sc_s2_sa(2, 2).unwrap(), 0), vec![1, 2, 2, 1]);
        assert_eq!(row(&thm_sc_s2_sa(2, 3).unwrap(), 0), vec![1, 2, 4, 4, 2, 1]);
        let f = thm_sc_s2_sa(2, 2).unwrap().to_schur();
        assert_eq!(f.coefficient(&p(&[5, 2, 1])), 1.into());
    }

    #[test]
    fn formulas_flip_symmetric() {
        for a in 2..=4 {
            for b in 2..=4 {
                let f = thm_s2_sb_sa(a, b).unwrap().to_schur();
                let r = offset_for(a, b, 2) as u32;
                assert!(is_flip_symmetric(&f, r, FlipMode::Standard).holds, "{a} {b}");
                let f = thm_sc_s2_sa(a, b).unwrap().to_schur();
                let r = offset_for(a, 2, b) as u32;
                assert!(is_flip_symmetric(&f, r, FlipMode::Standard).holds, "{a} {b}");
            }
        }
    }

    #[test]
    fn p2_small() {
        let two = HookColumnShape::new(2, 0, 0).unwrap();
        let out = p2_hookcolumn(&two).unwrap();
        assert_eq!(out.coefficient(&p(&[4])), 1.into());
        assert_eq!(out.coefficient(&p(&[3, 1])), (-1).into());
        assert_eq!(out.coefficient(&p(&[2, 2])), 1.into());
        assert_eq!(out.len(), 3);
    }

    #[test]
    fn product_small() {
        let two = HookColumnShape::new(2, 0, 0).unwrap();
        let out = hc_product(&two, &two).unwrap().to_schur();
        assert_eq!(out.support().count(), 3);
        assert_eq!(out.coefficient(&p(&[3, 1])), 1.into());
        let sq = HookColumnShape::new(2, 1, 0).unwrap();
        let out = hc_product(&sq, &sq).unwrap().to_schur();
        let expected: Vec<Partition> = vec![p(&[4, 2, 2]), p(&[3, 2, 2, 1]), p(&[2, 2, 2, 2])];
        assert_eq!(out.support().count(), 3);
        assert!(expected.iter().all(|l| out.coefficient(l) == 1.into()));
    }

    #[test]
    fn offsets() {
        assert_eq!(offset_for(2, 3, 2), 2);
        assert_eq!(offset_for(3, 2, 2), 6);
        assert_eq!(offset_for(2, 2, 2), 2);
    }

    #[test]
    fn sequences() {
        assert_eq!(ints(oeis("A000124", 6).unwrap()), vec![1, 2, 4, 7, 11, 16]);
        assert_eq!(ints(oeis("A002620", 5).unwrap()), vec![1, 2, 4, 6, 9]);
        assert_eq!(ints(oeis("A000098", 9).unwrap()), vec![1, 2, 5, 10, 19, 33, 57, 92, 147]);
        assert_eq!(ints(oeis("A058696", 8).unwrap()), vec![1, 2, 5, 11, 22, 42, 77, 135]);
        assert!(matches!(oeis("A000045", 3), Err(Error::UnknownSequence(_))));
        assert!(oeis("A000124", 0).is_err());
    }
}
