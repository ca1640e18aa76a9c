//! Wall-clock comparison of the engines on chains of a given degree.

use std::time::{Duration, Instant};

use plethyrs_core::alphabet::hc_extract;
use plethyrs_core::partition::hook_column_row;
use plethyrs_core::{BivariatePoly, Partition};

use crate::cache::{project_par, SharedCharacterTable};
use crate::engine::{formula_for, Engine, EngineError};
use crate::expr::{parse, TypedExpression};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub engine: Engine,
    pub degree: u32,
    pub expression: String,
    pub elapsed: Option<Duration>,
    /// Largest intermediate term count, or why the engine did not run.
    pub peak_terms: Result<usize, String>,
}

/// `s[p1] o s[p2] o ...` over the prime factors of `degree`, largest
/// first.
pub fn chain_for_degree(degree: u32) -> Option<TypedExpression> {
    if degree < 2 {
        return None;
    }
    let mut factors = Vec::new();
    let mut n = degree;
    let mut p = 2;
    while n > 1 {
        while n.is_multiple_of(p) {
            factors.push(p);
            n /= p;
        }
        p += 1;
    }
    factors.reverse();
    let text: Vec<String> = factors.iter().map(|f| format!("s[{f}]")).collect();
    parse(&text.join(" o ")).ok()
}

/// Times `engine` on the γ = 0 row of `expr`.
pub fn run_one(memo: &SharedCharacterTable, engine: Engine, expr: &TypedExpression) -> BenchRow {
    let start = Instant::now();
    let peak = match engine {
        Engine::Oracle => expr.to_pseries(memo).map_err(EngineError::from).and_then(|f| {
            let targets: Vec<Partition> =
                hook_column_row(expr.degree(), 0).iter().map(|h| h.to_partition()).collect();
            project_par(memo, &f, &targets)?;
            Ok(f.len())
        }),
        Engine::Alphabet => expr
            .eval_alphabet(memo, &BivariatePoly::one_minus_x_minus_y())
            .and_then(|poly| hc_extract(&poly, expr.degree()).map(|_| poly.len()))
            .map_err(EngineError::from),
        Engine::Formula => formula_for(expr).map(|out| out.terms.len()),
    };
    let elapsed = start.elapsed();
    BenchRow {
        engine,
        degree: expr.degree(),
        expression: expr.to_string(),
        elapsed: peak.is_ok().then_some(elapsed),
        peak_terms: peak.map_err(|e| e.to_string()),
    }
}

pub fn run(engines: &[Engine], degrees: &[u32]) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for &degree in degrees {
        let Some(expr) = chain_for_degree(degree) else { continue };
        for &engine in engines {
            // Fresh cache per run so timings do not share memoized work.
            let memo = SharedCharacterTable::new();
            rows.push(run_one(&memo, engine, &expr));
        }
    }
    rows
}

pub fn render(rows: &[BenchRow]) -> String {
    let mut out = format!("{:<9} {:>6}  {:<32} {:>12} {:>10}\n", "engine", "degree", "expression", "seconds", "peak");
    for r in rows {
        let secs = r.elapsed.map_or("-".to_string(), |d| format!("{:.4}", d.as_secs_f64()));
        let peak = match &r.peak_terms {
            Ok(n) => n.to_string(),
            Err(_) => "n/a".to_string(),
        };
        out.push_str(&format!("{:<9} {:>6}  {:<32} {:>12} {:>10}\n", r.engine.to_string(), r.degree, r.expression, secs, peak));
    }
    out
}
