//! Plethysm in the power-sum basis and the iterated-plethysm driver.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::flip::HCSequence;
use crate::partition::{hook_column_row, hook_columns_of, Partition};
use crate::symfunc::{p_to_schur_targets, schur_to_p_with, CharacterMemo, PSeries, SchurExpansion};

/// `s_{λ¹} ∘ s_{λ²} ∘ … ∘ s_{λᵏ}`, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlethysmExpression {
    chain: Vec<Partition>,
}

impl PlethysmExpression {
    pub fn new(chain: Vec<Partition>) -> Result<Self, Error> {
        if chain.is_empty() {
            return Err(Error::EmptyChain);
        }
        Ok(PlethysmExpression { chain })
    }

    /// Chain of one-row partitions `s_{n1} ∘ s_{n2} ∘ …`.
    pub fn rows(rows: &[u32]) -> Result<Self, Error> {
        Self::new(rows.iter().map(|&n| Partition::row(n)).collect())
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// Product of the weights of the chain entries.
    pub fn degree(&self) -> u32 {
        self.chain.iter().map(Partition::weight).product()
    }
}

impl fmt::Display for PlethysmExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, lam) in self.chain.iter().enumerate() {
            if i > 0 {
                f.write_str(" o ")?;
            }
            write!(f, "s{lam}")?;
        }
        Ok(())
    }
}

/// `p_n ∘ g`: every index partition of `g` is scaled by `n`.
pub fn p_compose(n: u32, g: &PSeries) -> PSeries {
    if n == 1 {
        return g.clone();
    }
    let terms = g.terms().iter().map(|(lam, c)| (lam.scale(n), c.clone()));
    PSeries::from_terms(g.degree() * n, terms).expect("scaling preserves homogeneity")
}

/// `f ∘ g` for homogeneous `g` of positive degree.
pub fn plethysm(f: &PSeries, g: &PSeries) -> Result<PSeries, Error> {
    if g.degree() == 0 {
        return Err(Error::ConstantInner);
    }
    let mut composed: BTreeMap<u32, PSeries> = BTreeMap::new();
    // Partial products keyed by the trailing parts of μ; terms of f share
    // many suffixes.
    let mut suffix_products: BTreeMap<Vec<u32>, PSeries> = BTreeMap::new();
    let mut out = PSeries::zero(f.degree() * g.degree());
    for (mu, c) in f.terms() {
        let parts = mu.parts();
        let mut start = parts.len();
        let mut acc = PSeries::one();
        while start > 0 {
            if let Some(hit) = suffix_products.get(&parts[start - 1..]) {
                acc = hit.clone();
                start -= 1;
            } else {
                break;
            }
        }
        for i in (0..start).rev() {
            let k = parts[i];
            let gk = composed.entry(k).or_insert_with(|| p_compose(k, g));
            acc = gk.multiply(&acc);
            suffix_products.insert(parts[i..].to_vec(), acc.clone());
        }
        out = out.checked_add(&acc.scale(c))?;
    }
    Ok(out)
}

/// Right-to-left fold of [`plethysm`] over the chain.
pub fn iterated(memo: &impl CharacterMemo, expr: &PlethysmExpression) -> Result<PSeries, Error> {
    PlethysmCache::default().iterated(memo, expr)
}

/// Caches the p-expansion of every chain suffix it has evaluated.
#[derive(Debug, Default, Clone)]
pub struct PlethysmCache {
    suffixes: BTreeMap<Vec<Partition>, PSeries>,
    schur: BTreeMap<Partition, PSeries>,
}

impl PlethysmCache {
    fn schur(&mut self, memo: &impl CharacterMemo, lam: &Partition) -> PSeries {
        self.schur
            .entry(lam.clone())
            .or_insert_with(|| schur_to_p_with(memo, lam))
            .clone()
    }

    pub fn iterated(
        &mut self,
        memo: &impl CharacterMemo,
        expr: &PlethysmExpression,
    ) -> Result<PSeries, Error> {
        let chain = expr.chain();
        let mut start = chain.len();
        while start > 0 && self.suffixes.contains_key(&chain[start - 1..]) {
            start -= 1;
        }
        let mut acc = if start < chain.len() {
            self.suffixes[&chain[start..]].clone()
        } else {
            start -= 1;
            let inner = self.schur(memo, &chain[start]);
            self.suffixes.insert(chain[start..].to_vec(), inner.clone());
            inner
        };
        for i in (0..start).rev() {
            let outer = self.schur(memo, &chain[i]);
            acc = plethysm(&outer, &acc)?;
            self.suffixes.insert(chain[i..].to_vec(), acc.clone());
        }
        Ok(acc)
    }
}

/// Hook+column sequence `Σ(f, γ)` of the chain by brute-force projection:
/// the full p-expansion is projected onto the targets
/// `(n - 2β - γ, 2^β, 1^γ)` only.
pub fn hc_coefficients(
    memo: &impl CharacterMemo,
    expr: &PlethysmExpression,
    gamma: u32,
) -> Result<HCSequence, Error> {
    let f = iterated(memo, expr)?;
    hc_sequence_of_p(memo, &f, gamma)
}

/// `Σ(f, γ)` for a p-basis series.
pub fn hc_sequence_of_p(
    memo: &impl CharacterMemo,
    f: &PSeries,
    gamma: u32,
) -> Result<HCSequence, Error> {
    let n = f.degree();
    let targets: Vec<Partition> = hook_column_row(n, gamma)
        .iter()
        .map(|h| h.to_partition())
        .collect();
    let schur = p_to_schur_targets(memo, f, &targets)?;
    let entries = targets.iter().map(|t| schur.coefficient(t)).collect();
    Ok(HCSequence::new(n, gamma, entries))
}

/// Hook+column part of a p-basis series, computed on hook+column targets
/// only.
pub fn hc_part(memo: &impl CharacterMemo, f: &PSeries) -> Result<SchurExpansion, Error> {
    let targets: Vec<Partition> = hook_columns_of(f.degree())
        .iter()
        .map(|h| h.to_partition())
        .collect();
    p_to_schur_targets(memo, f, &targets)
}
