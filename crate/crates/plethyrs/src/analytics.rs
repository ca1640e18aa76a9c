//! Shape statistics for integer sequences: symmetry, unimodality,
//! log-concavity and a χ² comparison with a fitted Gaussian.

use plethyrs_core::BigInt;
use serde::Serialize;
use statrs::function::erf::erf;
use statrs::function::gamma::gamma_ur;

use plethyrs_core::flip::HCSequence;
use num_traits::{Signed, ToPrimitive, Zero};

/// Bins whose expected count falls below this are merged inward.
pub const MIN_EXPECTED: f64 = 5.0;

/// Zero-stripped core of `seq` and the index of its first entry.
pub fn core(seq: &[BigInt]) -> (usize, &[BigInt]) {
    let Some(lo) = seq.iter().position(|e| !e.is_zero()) else {
        return (0, &[]);
    };
    let hi = seq.iter().rposition(|e| !e.is_zero()).unwrap_or(lo);
    (lo, &seq[lo..=hi])
}

/// True iff the zero-stripped core is a palindrome.
pub fn is_symmetric(seq: &[BigInt]) -> bool {
    let (_, c) = core(seq);
    c.iter().eq(c.iter().rev())
}

/// `a_0 ≤ … ≤ a_k ≥ … ≥ a_n` for some `k`.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LogConcavity {
    pub holds: bool,
    /// First core index `i` with `a_i² < a_{i-1} a_{i+1}`.
    pub first_violation: Option<usize>,
}

/// `a_i² ≥ a_{i-1} a_{i+1}` over the zero-stripped core.
pub fn is_log_concave(seq: &[BigInt]) -> LogConcavity {
    let (_, c) = core(seq);
    let first_violation =
        (1..c.len().saturating_sub(1)).find(|&i| &c[i] * &c[i] < &c[i - 1] * &c[i + 1]);
    LogConcavity { holds: first_violation.is_none(), first_violation }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussianFit {
    pub mean: f64,
    pub variance: f64,
    pub chi_square: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
    pub bins: Vec<Bin>,
}

/// A run of consecutive indices after merging.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bin {
    pub first: usize,
    pub last: usize,
    pub observed: f64,
    pub expected: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FitError {
    #[error("sequence has a negative entry")]
    Negative,
    #[error("sequence has no mass")]
    Empty,
    #[error("sequence has zero variance")]
    Degenerate,
    #[error("{0} bins remain after merging; at least 4 are needed")]
    TooFewBins(usize),
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
}

fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Mean and population variance of the index distribution weighted by
/// `seq`, with indices counted from the start of `seq`.
pub fn moments(seq: &[BigInt]) -> Result<(f64, f64), FitError> {
    if seq.iter().any(Signed::is_negative) {
        return Err(FitError::Negative);
    }
    let total: BigInt = seq.iter().sum();
    if total.is_zero() {
        return Err(FitError::Empty);
    }
    // Exact sums keep the mean correct for large entries.
    let first: BigInt = seq.iter().enumerate().map(|(i, a)| a * BigInt::from(i)).sum();
    let second: BigInt = seq.iter().enumerate().map(|(i, a)| a * BigInt::from(i * i)).sum();
    let n = to_f64(&total);
    let mean = ratio(&first, &total);
    let variance = (to_f64(&(&second * &total - &first * &first)) / n) / n;
    Ok((mean, variance))
}

fn ratio(a: &BigInt, b: &BigInt) -> f64 {
    let q = a / b;
    let r = a % b;
    to_f64(&q) + to_f64(&r) / to_f64(b)
}

/// Continuity-corrected expected counts `N (Φ(β+½) - Φ(β-½))` on the core
/// index range, with both tails folded into the end bins.
pub fn expected_counts(seq: &[BigInt]) -> Result<Vec<(usize, f64, f64)>, FitError> {
    let (mean, variance) = moments(seq)?;
    if variance <= 0.0 {
        return Err(FitError::Degenerate);
    }
    let sd = variance.sqrt();
    let (lo, c) = core(seq);
    let total: f64 = c.iter().map(to_f64).sum();
    let hi = lo + c.len() - 1;
    Ok((lo..=hi)
        .map(|i| {
            let left = if i == lo { 0.0 } else { normal_cdf((i as f64 - 0.5 - mean) / sd) };
            let right = if i == hi { 1.0 } else { normal_cdf((i as f64 + 0.5 - mean) / sd) };
            (i, to_f64(&seq[i]), total * (right - left))
        })
        .collect())
}

/// χ² comparison of `seq` with the Gaussian of matching mean and variance.
/// Bins expecting fewer than [`MIN_EXPECTED`] counts are merged inward
/// from both ends; the statistic has `bins - 3` degrees of freedom.
pub fn gaussian_fit(seq: &[BigInt]) -> Result<GaussianFit, FitError> {
    let (mean, variance) = moments(seq)?;
    let mut bins: Vec<Bin> = expected_counts(seq)?
        .into_iter()
        .map(|(i, observed, expected)| Bin { first: i, last: i, observed, expected })
        .collect();
    while bins.len() > 1 && bins[0].expected < MIN_EXPECTED {
        let b = bins.remove(0);
        absorb(&mut bins[0], &b);
    }
    while bins.len() > 1 && bins[bins.len() - 1].expected < MIN_EXPECTED {
        let b = bins.pop().expect("nonempty");
        let last = bins.len() - 1;
        absorb(&mut bins[last], &b);
    }
    if bins.len() < 4 {
        return Err(FitError::TooFewBins(bins.len()));
    }
    let chi_square: f64 = bins
        .iter()
        .map(|b| (b.observed - b.expected).powi(2) / b.expected)
        .sum();
    let degrees_of_freedom = bins.len() - 3;
    let p_value = gamma_ur(degrees_of_freedom as f64 / 2.0, chi_square / 2.0);
    Ok(GaussianFit { mean, variance, chi_square, degrees_of_freedom, p_value, bins })
}

fn absorb(into: &mut Bin, from: &Bin) {
    into.first = into.first.min(from.first);
    into.last = into.last.max(from.last);
    into.observed += from.observed;
    into.expected += from.expected;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequenceReport {
    pub source: String,
    pub degree: u32,
    pub gamma: u32,
    #[serde(serialize_with = "crate::io::serialize_bigints")]
    pub entries: Vec<BigInt>,
    pub is_symmetric: bool,
    pub is_unimodal: bool,
    pub log_concave: LogConcavity,
    pub fit: Option<GaussianFit>,
    /// Why `fit` is absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit_unavailable: Option<String>,
}

impl SequenceReport {
    pub fn new(source: impl Into<String>, seq: &HCSequence) -> Self {
        let entries = seq.entries().to_vec();
        let total: BigInt = entries.iter().sum();
        let (fit, fit_unavailable) = if total < BigInt::from(1) || entries.len() < 4 {
            (None, Some("needs total mass at least 1 and length at least 4".to_string()))
        } else {
            match gaussian_fit(&entries) {
                Ok(fit) => (Some(fit), None),
                Err(e) => (None, Some(e.to_string())),
            }
        };
        let log_concave = is_log_concave(&entries);
        let is_unimodal = is_unimodal(&entries);
        let positive = entries.iter().all(|e| e.is_positive());
        debug_assert!(!(positive && log_concave.holds) || is_unimodal);
        SequenceReport {
            source: source.into(),
            degree: seq.degree(),
            gamma: seq.gamma(),
            is_symmetric: is_symmetric(&entries),
            is_unimodal,
            log_concave,
            fit,
            fit_unavailable,
            entries,
        }
    }
}

/// Rows `beta,count,expected` for plotting against the fitted curve;
/// `expected` is unmerged.
pub fn histogram_csv(seq: &[BigInt]) -> Result<String, FitError> {
    let mut out = String::from("beta,count,expected\n");
    for (i, _, e) in expected_counts(seq)? {
        out.push_str(&format!("{i},{},{e:.6}\n", seq[i]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn symmetry() {
        assert!(is_symmetric(&ints(&[1, 1, 1, 0, 0, 0])));
        assert!(is_symmetric(&ints(&[1, 2, 3, 3, 2, 1])));
        assert!(!is_symmetric(&ints(&[1, 2, 1, 1])));
        assert!(is_symmetric(&ints(&[0, 0])));
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&ints(&[1, 3, 8, 13, 13, 8, 3, 1])));
        assert!(!is_unimodal(&ints(&[1, 2, 1, 2])));
        assert!(is_unimodal(&ints(&[])));
    }

    #[test]
    fn log_concavity() {
        let s = ints(&[1, 4, 20, 72, 205, 446, 756, 986, 986, 756, 446, 205, 72, 20, 4, 1]);
        assert_eq!(is_log_concave(&s).first_violation, Some(1));
        assert!(is_log_concave(&ints(&[1, 2, 3, 3, 2, 1])).holds);
        assert!(is_log_concave(&ints(&[5, 5, 5, 5])).holds);
        assert_eq!(is_log_concave(&ints(&[0, 1, 4, 20])).first_violation, Some(1));
    }

    #[test]
    fn fit_basics() {
        let s = ints(&[0, 1, 3, 8, 13, 13, 8, 3, 1, 0]);
        let fit = gaussian_fit(&s).unwrap();
        assert!((fit.mean - 4.5).abs() < 1e-12);
        assert!((fit.variance - 2.09).abs() < 1e-12);
        assert_eq!(fit.degrees_of_freedom, 1);
        assert_eq!(gaussian_fit(&ints(&[1, 2, 2, 1])), Err(FitError::TooFewBins(1)));
        assert_eq!(gaussian_fit(&ints(&[0, 0])), Err(FitError::Empty));
        assert_eq!(gaussian_fit(&ints(&[0, 3, 0])), Err(FitError::Degenerate));
    }

    #[test]
    fn histogram_rows() {
        let csv = histogram_csv(&ints(&[1, 2, 1])).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "beta,count,expected");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("0,1,"));
    }
}
