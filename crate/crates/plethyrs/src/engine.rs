//! Drivers that compute expansions and hook+column sequences with a chosen
//! engine.

use std::fmt;
use std::str::FromStr;

use plethyrs_core::alphabet::{hc_extract, HookColumnTable};
use plethyrs_core::closed_forms::{langley_remmel, thm_s2_sb_sa, thm_sc_s2_sa, HCFormulaOutput};
use plethyrs_core::flip::hc_sequence;
use plethyrs_core::partition::{hook_column_row, hook_columns_of, partitions_of};
use plethyrs_core::{BivariatePoly, Error, HCSequence, Partition, SchurExpansion};

use crate::cache::{project_par, SharedCharacterTable};
use crate::expr::TypedExpression;

/// Largest degree for which a full Schur expansion runs without `force`.
pub const FULL_EXPANSION_LIMIT: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// p-basis expansion projected onto the requested targets.
    Oracle,
    /// Evaluation at `1 - x - y` and extraction.
    Alphabet,
    /// Closed formula for the chain shapes that have one.
    Formula,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Oracle, Engine::Alphabet, Engine::Formula];
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Oracle => "oracle",
            Engine::Alphabet => "alphabet",
            Engine::Formula => "formula",
        })
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(Engine::Oracle),
            "alphabet" => Ok(Engine::Alphabet),
            "formula" => Ok(Engine::Formula),
            _ => Err(format!("unknown engine {s:?} (oracle, alphabet, formula)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error(transparent)]
    Math(#[from] Error),
    #[error("no closed formula covers {0}")]
    NoFormula(String),
    #[error("full expansion of degree {0} exceeds {FULL_EXPANSION_LIMIT}; pass --force")]
    DegreeGuard(u32),
    #[error("engines disagree on {expr} at gamma {gamma}: {detail}")]
    Disagreement { expr: String, gamma: u32, detail: String },
}

/// Row lengths of a chain of one-row Schur functions with `s[1]` removed.
fn row_chain(expr: &TypedExpression) -> Option<Vec<u32>> {
    let chain = expr.as_chain()?;
    let mut rows = Vec::new();
    for lam in chain.chain() {
        if lam.len() != 1 {
            return None;
        }
        if lam.part(0) != 1 {
            rows.push(lam.part(0));
        }
    }
    Some(rows)
}

/// The closed formula for `expr`, if its chain has one of the shapes
/// `s_b∘s_a`, `s_2∘s_b∘s_a` or `s_c∘s_2∘s_a` (after dropping `s[1]`).
pub fn formula_for(expr: &TypedExpression) -> Result<HCFormulaOutput, EngineError> {
    let refuse = || EngineError::NoFormula(expr.to_string());
    let rows = row_chain(expr).ok_or_else(refuse)?;
    if rows.iter().any(|&r| r < 2) {
        return Err(refuse());
    }
    let out = match rows.as_slice() {
        [b, a] => langley_remmel(*a, *b)?,
        [2, b, a] => thm_s2_sb_sa(*a, *b)?,
        [c, 2, a] => thm_sc_s2_sa(*a, *c)?,
        _ => return Err(refuse()),
    };
    Ok(out)
}

/// Every hook+column coefficient of `expr`.
pub fn hook_column_part(
    memo: &SharedCharacterTable,
    expr: &TypedExpression,
    engine: Engine,
) -> Result<SchurExpansion, EngineError> {
    match engine {
        Engine::Oracle => {
            let f = expr.to_pseries(memo)?;
            let targets: Vec<Partition> =
                hook_columns_of(expr.degree()).iter().map(|h| h.to_partition()).collect();
            Ok(project_par(memo, &f, &targets)?)
        }
        Engine::Alphabet => Ok(alphabet_table(memo, expr)?.to_schur()),
        Engine::Formula => Ok(formula_for(expr)?.to_schur()),
    }
}

pub fn alphabet_table(
    memo: &SharedCharacterTable,
    expr: &TypedExpression,
) -> Result<HookColumnTable, Error> {
    let poly = expr.eval_alphabet(memo, &BivariatePoly::one_minus_x_minus_y())?;
    hc_extract(&poly, expr.degree())
}

/// `Σ(f, γ)` computed by one engine. The oracle projects only onto the
/// targets of this row.
pub fn hcseq(
    memo: &SharedCharacterTable,
    expr: &TypedExpression,
    gamma: u32,
    engine: Engine,
) -> Result<HCSequence, EngineError> {
    match engine {
        Engine::Oracle => {
            let f = expr.to_pseries(memo)?;
            let targets: Vec<Partition> = hook_column_row(expr.degree(), gamma)
                .iter()
                .map(|h| h.to_partition())
                .collect();
            let part = project_par(memo, &f, &targets)?;
            Ok(hc_sequence(&part, gamma))
        }
        Engine::Alphabet => Ok(alphabet_table(memo, expr)?.sequence(gamma)),
        Engine::Formula => Ok(hc_sequence(&formula_for(expr)?.to_schur(), gamma)),
    }
}

/// Runs every applicable engine and checks that they agree. The formula
/// engine is skipped when no formula covers `expr`.
pub fn hcseq_verified(
    memo: &SharedCharacterTable,
    expr: &TypedExpression,
    gamma: u32,
) -> Result<HCSequence, EngineError> {
    let reference = hcseq(memo, expr, gamma, Engine::Alphabet)?;
    for engine in [Engine::Oracle, Engine::Formula] {
        let other = match hcseq(memo, expr, gamma, engine) {
            Ok(seq) => seq,
            Err(EngineError::NoFormula(_)) => continue,
            Err(e) => return Err(e),
        };
        if other != reference {
            return Err(EngineError::Disagreement {
                expr: expr.to_string(),
                gamma,
                detail: format!("alphabet {:?} vs {engine} {:?}", reference.entries(), other.entries()),
            });
        }
    }
    Ok(reference)
}

/// Full Schur expansion, refused above [`FULL_EXPANSION_LIMIT`] unless
/// `force` is set.
pub fn full_expansion(
    memo: &SharedCharacterTable,
    expr: &TypedExpression,
    force: bool,
) -> Result<SchurExpansion, EngineError> {
    let n = expr.degree();
    if n > FULL_EXPANSION_LIMIT && !force {
        return Err(EngineError::DegreeGuard(n));
    }
    let f = expr.to_pseries(memo)?;
    let targets: Vec<Partition> = partitions_of(n).collect();
    Ok(project_par(memo, &f, &targets)?)
}
