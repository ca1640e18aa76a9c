//! Sparse exact symmetric functions in the power-sum and Schur bases.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::partition::{partitions_of, Partition};

/// Homogeneous symmetric function written in the power-sum basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PSeries {
    degree: u32,
    terms: BTreeMap<Partition, BigRational>,
}

/// Homogeneous symmetric function written in the Schur basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: u32,
    terms: BTreeMap<Partition, BigInt>,
}

fn rational(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

impl PSeries {
    pub fn zero(degree: u32) -> Self {
        PSeries { degree, terms: BTreeMap::new() }
    }

    /// The constant symmetric function 1.
    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// The power sum `p_λ`.
    pub fn p(lam: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = lam.weight();
        terms.insert(lam, BigRational::one());
        PSeries { degree, terms }
    }

    /// Builds a series from `(partition, coefficient)` pairs, which must all
    /// have weight `degree`. Zero coefficients are dropped.
    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut out = PSeries::zero(degree);
        for (lam, c) in terms {
            if lam.weight() != degree {
                return Err(Error::NotHomogeneous);
            }
            out.add_term(lam, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lam: &Partition) -> BigRational {
        self.terms.get(lam).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add_term(&mut self, lam: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_degree(&self, other: &PSeries) -> Result<u32, Error> {
        match (self.is_zero(), other.is_zero()) {
            _ if self.degree == other.degree => Ok(self.degree),
            (true, _) => Ok(other.degree),
            (_, true) => Ok(self.degree),
            _ => Err(Error::NotHomogeneous),
        }
    }

    /// Sum of two homogeneous series of the same degree.
    pub fn checked_add(&self, other: &PSeries) -> Result<PSeries, Error> {
        let degree = self.same_degree(other)?;
        let mut out = self.clone();
        out.degree = degree;
        for (lam, c) in &other.terms {
            out.add_term(lam.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PSeries) -> Result<PSeries, Error> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> PSeries {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, k: &BigRational) -> PSeries {
        if k.is_zero() {
            return PSeries::zero(self.degree);
        }
        PSeries {
            degree: self.degree,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }

    /// Product, using `p_λ · p_μ = p_{λ∪μ}`.
    pub fn multiply(&self, other: &PSeries) -> PSeries {
        let mut out = PSeries::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// The ω involution: `p_λ ↦ (-1)^{|λ| - ℓ(λ)} p_λ`.
    pub fn omega(&self) -> PSeries {
        let terms = self
            .terms
            .iter()
            .map(|(lam, c)| {
                let odd = (lam.weight() as usize - lam.len()) % 2 == 1;
                (lam.clone(), if odd { -c } else { c.clone() })
            })
            .collect();
        PSeries { degree: self.degree, terms }
    }

    /// Least common multiple of all coefficient denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

pub fn p_multiply(f: &PSeries, g: &PSeries) -> PSeries {
    f.multiply(g)
}

pub fn omega(f: &PSeries) -> PSeries {
    f.omega()
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})p{lam}")?;
        }
        Ok(())
    }
}

impl SchurExpansion {
    pub fn zero(degree: u32) -> Self {
        SchurExpansion { degree, terms: BTreeMap::new() }
    }

    /// The single Schur function `s_λ`.
    pub fn s(lam: Partition) -> Self {
        let degree = lam.weight();
        let mut terms = BTreeMap::new();
        terms.insert(lam, BigInt::one());
        SchurExpansion { degree, terms }
    }

    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = SchurExpansion::zero(degree);
        for (lam, c) in terms {
            if lam.weight() != degree {
                return Err(Error::NotHomogeneous);
            }
            out.add_term(lam, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `[λ] f`.
    pub fn coefficient(&self, lam: &Partition) -> BigInt {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// The partitions with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub(crate) fn add_term(&mut self, lam: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lam).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Terms in decreasing lexicographic order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Restriction to hook+column partitions.
    pub fn hook_column_part(&self) -> SchurExpansion {
        self.filter(|lam| lam.is_hook_column())
    }

    pub fn filter(&self, keep: impl Fn(&Partition) -> bool) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// `ω(s_λ) = s_{λ'}`.
    pub fn conjugate(&self) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            terms: self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect(),
        }
    }

    /// Power-sum expansion.
    pub fn to_p(&self, memo: &impl CharacterMemo) -> PSeries {
        let mut out = PSeries::zero(self.degree);
        for (lam, c) in &self.terms {
            let k = BigRational::from_integer(c.clone());
            for (mu, d) in schur_to_p_with(memo, lam).terms {
                out.add_term(mu, d * &k);
            }
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.iter_desc().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "s{lam}:{c}")?;
        }
        Ok(())
    }
}

/// Memo storage for symmetric-group characters keyed by
/// `(shape, cycle type)`.
///
/// Lookups take `&self` so that implementations backed by a lock can be
/// shared between threads.
pub trait CharacterMemo {
    fn lookup(&self, shape: &Partition, cycle_type: &Partition) -> Option<BigInt>;
    fn store(&self, shape: Partition, cycle_type: Partition, value: BigInt);
}

/// Single-threaded character cache.
#[derive(Debug, Default)]
pub struct CharacterTable {
    cache: RefCell<BTreeMap<(Partition, Partition), BigInt>>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cache.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.borrow().is_empty()
    }

    /// `χ^λ(μ)`, memoized in this table.
    pub fn character(&self, lam: &Partition, mu: &Partition) -> Result<BigInt, Error> {
        character_with(self, lam, mu)
    }
}

impl CharacterMemo for CharacterTable {
    fn lookup(&self, shape: &Partition, cycle_type: &Partition) -> Option<BigInt> {
        // Keys are cloned because BTreeMap has no borrowed tuple lookup.
        self.cache
            .borrow()
            .get(&(shape.clone(), cycle_type.clone()))
            .cloned()
    }

    fn store(&self, shape: Partition, cycle_type: Partition, value: BigInt) {
        self.cache.borrow_mut().insert((shape, cycle_type), value);
    }
}

/// A memo that stores nothing.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoMemo;

impl CharacterMemo for NoMemo {
    fn lookup(&self, _: &Partition, _: &Partition) -> Option<BigInt> {
        None
    }

    fn store(&self, _: Partition, _: Partition, _: BigInt) {}
}

/// Symmetric-group character `χ^λ(μ)` by the Murnaghan–Nakayama rule,
/// removing the largest part of `μ` first.
pub fn character_with(
    memo: &impl CharacterMemo,
    lam: &Partition,
    mu: &Partition,
) -> Result<BigInt, Error> {
    if lam.weight() != mu.weight() {
        return Err(Error::WeightMismatch { shape: lam.clone(), cycle_type: mu.clone() });
    }
    Ok(mn(memo, lam, mu.parts()))
}

fn mn(memo: &impl CharacterMemo, lam: &Partition, mu: &[u32]) -> BigInt {
    let Some((&k, rest)) = mu.split_first() else {
        return BigInt::one();
    };
    if lam.len() == 1 {
        return BigInt::one();
    }
    if lam.part(0) == 1 {
        let odd = (lam.weight() as usize - mu.len()) % 2 == 1;
        return if odd { -BigInt::one() } else { BigInt::one() };
    }
    if rest.is_empty() {
        // A single cycle: nonzero only on hooks.
        return match lam.rim_hook_removals(k).first() {
            Some((_, sign)) => BigInt::from(*sign),
            None => BigInt::zero(),
        };
    }
    let key = Partition::from_vec_unchecked(mu.to_vec());
    if let Some(v) = memo.lookup(lam, &key) {
        return v;
    }
    let mut total = BigInt::zero();
    for (shape, sign) in lam.rim_hook_removals(k) {
        let v = mn(memo, &shape, rest);
        if sign > 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.store(lam.clone(), key, total.clone());
    total
}

pub fn character(lam: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    character_with(&NoMemo, lam, mu)
}

/// `s_λ = Σ_μ χ^λ(μ) / z_μ · p_μ`.
pub fn schur_to_p_with(memo: &impl CharacterMemo, lam: &Partition) -> PSeries {
    let n = lam.weight();
    let mut out = PSeries::zero(n);
    for mu in partitions_of(n) {
        let chi = mn(memo, lam, mu.parts());
        if chi.is_zero() {
            continue;
        }
        let z = BigInt::from_biguint(Sign::Plus, mu.z());
        out.terms.insert(mu, rational(chi, z));
    }
    out
}

pub fn schur_to_p(lam: &Partition) -> PSeries {
    schur_to_p_with(&CharacterTable::new(), lam)
}

/// `f` written over a common denominator, ready for repeated projection
/// onto Schur coefficients.
#[derive(Debug, Clone)]
pub struct Projection<'a> {
    degree: u32,
    denominator: BigInt,
    numerators: Vec<(&'a Partition, BigInt)>,
}

impl<'a> Projection<'a> {
    pub fn new(f: &'a PSeries) -> Self {
        let d = f.common_denominator();
        let numerators = f
            .terms
            .iter()
            .map(|(mu, c)| (mu, c.numer() * (&d / c.denom())))
            .collect();
        Projection { degree: f.degree, denominator: d, numerators }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `[λ] f = Σ_μ c_μ χ^λ(μ)`, which must be an integer.
    pub fn coefficient(&self, memo: &impl CharacterMemo, lam: &Partition) -> Result<BigInt, Error> {
        if lam.weight() != self.degree {
            return Err(Error::NotHomogeneous);
        }
        let mut total = BigInt::zero();
        for (mu, n) in &self.numerators {
            let chi = mn(memo, lam, mu.parts());
            if !chi.is_zero() {
                total += n * chi;
            }
        }
        let (q, r) = total.div_rem(&self.denominator);
        if !r.is_zero() {
            return Err(Error::NonIntegral(lam.clone()));
        }
        Ok(q)
    }
}

/// `[λ] f` for a single target `λ`.
pub fn schur_coefficient(
    memo: &impl CharacterMemo,
    f: &PSeries,
    lam: &Partition,
) -> Result<BigInt, Error> {
    Projection::new(f).coefficient(memo, lam)
}

/// Schur coefficients of `f` at the given targets (zeros dropped).
pub fn p_to_schur_targets<'a>(
    memo: &impl CharacterMemo,
    f: &PSeries,
    targets: impl IntoIterator<Item = &'a Partition>,
) -> Result<SchurExpansion, Error> {
    let projection = Projection::new(f);
    let mut out = SchurExpansion::zero(f.degree);
    for lam in targets {
        let c = projection.coefficient(memo, lam)?;
        out.add_term(lam.clone(), c);
    }
    Ok(out)
}

/// Schur expansion of `f`, optionally computing only the targets accepted
/// by `restrict`. Every coefficient is checked to be an integer.
pub fn p_to_schur(
    memo: &impl CharacterMemo,
    f: &PSeries,
    restrict: Option<&dyn Fn(&Partition) -> bool>,
) -> Result<SchurExpansion, Error> {
    let targets: Vec<Partition> = partitions_of(f.degree)
        .filter(|lam| restrict.is_none_or(|keep| keep(lam)))
        .collect();
    p_to_schur_targets(memo, f, &targets)
}
