//! Sweeps comparing closed forms and flip mechanics with the oracle.

use std::fmt;
use std::str::FromStr;

use plethyrs_core::closed_forms::{
    hc_product, langley_remmel, p2_hookcolumn, thm_s2_sb_sa, thm_sc_s2_sa,
};
use plethyrs_core::flip::{flip, flip_via_tiling, is_flip_symmetric, FlipMode};
use plethyrs_core::partition::hook_columns_of;
use plethyrs_core::SchurExpansion;

use crate::cache::SharedCharacterTable;
use crate::engine::{hook_column_part, Engine, EngineError};
use crate::expr::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `s_2 ∘ s_b ∘ s_a` formula against the oracle.
    Thm13,
    /// `s_c ∘ s_2 ∘ s_a` formula against the oracle.
    Thm14,
    /// `s_b ∘ s_a` formula against the oracle.
    Lr,
    /// Signed `p_2 ∘ s_λ` formula against the oracle.
    P2,
    /// Hook+column product formula against the oracle.
    Product,
    /// `s_2 ∘ f` and `s_{1,1} ∘ f` inherit flip-symmetry with offset `2r - 2`.
    SymmetryThm,
    /// Algebraic flip against the tiled transposition.
    Tiling,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Thm13,
        Suite::Thm14,
        Suite::Lr,
        Suite::P2,
        Suite::Product,
        Suite::SymmetryThm,
        Suite::Tiling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm13 => "thm13",
            Suite::Thm14 => "thm14",
            Suite::Lr => "lr",
            Suite::P2 => "p2",
            Suite::Product => "product",
            Suite::SymmetryThm => "symmetry-thm",
            Suite::Tiling => "tiling",
        }
    }

    pub fn default_max_degree(self) -> u32 {
        match self {
            Suite::P2 => 20,
            Suite::Product => 12,
            Suite::Lr => 25,
            _ => 24,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub case: String,
    pub passed: bool,
    /// First disagreement, when the case fails.
    pub witness: Option<String>,
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.case)
        } else {
            write!(f, "FAIL {}: {}", self.case, self.witness.as_deref().unwrap_or("?"))
        }
    }
}

fn oracle(memo: &SharedCharacterTable, text: &str) -> Result<SchurExpansion, EngineError> {
    let expr = parse(text).expect("suite expressions parse");
    hook_column_part(memo, &expr, Engine::Oracle)
}

fn compare(case: String, expected: &SchurExpansion, actual: &SchurExpansion) -> CaseResult {
    let witness = expected
        .support()
        .chain(actual.support())
        .find(|lam| expected.coefficient(lam) != actual.coefficient(lam))
        .map(|lam| {
            format!(
                "at {lam}: formula {} vs oracle {}",
                actual.coefficient(lam),
                expected.coefficient(lam)
            )
        });
    CaseResult { case, passed: witness.is_none(), witness }
}

/// Runs `suite` over every case of degree at most `max_degree`.
pub fn run_suite(
    memo: &SharedCharacterTable,
    suite: Suite,
    max_degree: u32,
) -> Result<Vec<CaseResult>, EngineError> {
    let mut out = Vec::new();
    match suite {
        Suite::Lr => {
            for a in 2..=max_degree / 2 {
                for b in 2..=max_degree / a {
                    let expected = oracle(memo, &format!("s[{b}] o s[{a}]"))?;
                    let actual = langley_remmel(a, b)?.to_schur();
                    out.push(compare(format!("s[{b}] o s[{a}]"), &expected, &actual));
                }
            }
        }
        Suite::Thm13 => {
            for a in 2..=max_degree / 4 {
                for b in 2..=max_degree / (2 * a) {
                    let text = format!("s[2] o s[{b}] o s[{a}]");
                    let expected = oracle(memo, &text)?;
                    out.push(compare(text, &expected, &thm_s2_sb_sa(a, b)?.to_schur()));
                }
            }
        }
        Suite::Thm14 => {
            for a in 2..=max_degree / 4 {
                for c in 2..=max_degree / (2 * a) {
                    let text = format!("s[{c}] o s[2] o s[{a}]");
                    let expected = oracle(memo, &text)?;
                    out.push(compare(text, &expected, &thm_sc_s2_sa(a, c)?.to_schur()));
                }
            }
        }
        Suite::P2 => {
            for n in 2..=max_degree / 2 {
                for h in hook_columns_of(n).into_iter().filter(|h| h.alpha >= 2) {
                    let text = format!("p[2] o s{}", h.to_partition());
                    let expected = oracle(memo, &text)?;
                    out.push(compare(text, &expected, &p2_hookcolumn(&h)?));
                }
            }
        }
        Suite::Product => {
            for n in 4..=max_degree {
                for m in 2..=n - 2 {
                    for mu in hook_columns_of(m).into_iter().filter(|h| h.alpha >= 2) {
                        for nu in hook_columns_of(n - m).into_iter().filter(|h| h.alpha >= 2) {
                            let text = format!("s{} * s{}", mu.to_partition(), nu.to_partition());
                            let expected = oracle(memo, &text)?;
                            let actual = hc_product(&mu, &nu)?.to_schur();
                            out.push(compare(text, &expected, &actual));
                        }
                    }
                }
            }
        }
        Suite::SymmetryThm => {
            for a in 2..=4 {
                for b in 2..=3 {
                    if 2 * a * b > max_degree {
                        continue;
                    }
                    let r = a * b - 2 * (b - 1);
                    let seed = oracle(memo, &format!("s[{b}] o s[{a}]"))?;
                    let seed_check = is_flip_symmetric(&seed, r, FlipMode::Standard);
                    out.push(CaseResult {
                        case: format!("s[{b}] o s[{a}] has offset {r}"),
                        passed: seed_check.holds,
                        witness: seed_check.witness.map(|w| w.to_string()),
                    });
                    for outer in ["s[2]", "s[1,1]"] {
                        let text = format!("{outer} o s[{b}] o s[{a}]");
                        let f = oracle(memo, &text)?;
                        let check = is_flip_symmetric(&f, 2 * r - 2, FlipMode::Standard);
                        out.push(CaseResult {
                            case: format!("{text} has offset {}", 2 * r - 2),
                            passed: check.holds,
                            witness: check.witness.map(|w| w.to_string()),
                        });
                    }
                }
            }
        }
        Suite::Tiling => {
            for n in 1..=max_degree {
                let mut failure = None;
                let mut checked = 0usize;
                'shapes: for h in hook_columns_of(n) {
                    let lam = h.to_partition();
                    for r in 2..=h.alpha {
                        let algebraic = flip(r, &lam, FlipMode::Standard);
                        checked += 1;
                        if algebraic != flip_via_tiling(r, &lam) {
                            failure = Some(format!("r={r}, {lam}: maps differ"));
                            break 'shapes;
                        }
                        let Some(img) = algebraic else { continue };
                        let back = flip(r, &img.image, FlipMode::Standard).map(|b| b.image);
                        let img_shape = img.image.hook_column();
                        if back.as_ref() != Some(&lam)
                            || img.image.weight() != n
                            || img_shape.map(|s| s.gamma) != Some(h.gamma)
                        {
                            failure = Some(format!("r={r}, {lam}: not an involution preserving weight and gamma"));
                            break 'shapes;
                        }
                    }
                }
                out.push(CaseResult {
                    case: format!("weight {n} ({checked} flips)"),
                    passed: failure.is_none(),
                    witness: failure,
                });
            }
        }
    }
    Ok(out)
}
