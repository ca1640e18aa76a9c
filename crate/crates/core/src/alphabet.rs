//! Evaluation on the signed alphabet `1 - x - y` and extraction of every
//! hook+column coefficient from the resulting bivariate polynomial.
//!
//! A Schur function `s_λ` evaluated at `1 - x - y` vanishes unless `λ` is a
//! hook+column. For `λ = (α, 2^β, 1^γ)` with `α ≥ 2` the value is
//! `(-1)^γ (xy)^β (1-x)(1-y) h_γ(x, y)`, independent of `α`, and the
//! column `(1^n)` evaluates to `(-1)^n (h_n - h_{n-1})`. Since the degree
//! fixes `α`, the coefficients can be read back from the polynomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::flip::HCSequence;
use crate::partition::{hook_column_at, hook_column_row, partitions_of, HookColumnShape, Partition};
use crate::plethysm::PlethysmExpression;
use crate::symfunc::{schur_to_p_with, CharacterMemo, PSeries, SchurExpansion};

/// Sparse polynomial in `x, y` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(u32, u32), BigRational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(x_exp: u32, y_exp: u32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(x_exp, y_exp, BigRational::from_integer(BigInt::from(c)));
        p
    }

    /// The alphabet `1 - x - y`.
    pub fn one_minus_x_minus_y() -> Self {
        Self::from_int_terms(&[((0, 0), 1), ((1, 0), -1), ((0, 1), -1)])
    }

    /// `(1 - x)(1 - y) = 1 - x - y + xy`.
    pub fn one_minus_x_times_one_minus_y() -> Self {
        Self::from_int_terms(&[((0, 0), 1), ((1, 0), -1), ((0, 1), -1), ((1, 1), 1)])
    }

    pub fn from_int_terms(terms: &[((u32, u32), i64)]) -> Self {
        let mut p = Self::zero();
        for &((a, b), c) in terms {
            p.add_term(a, b, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.coeffs
    }

    pub fn coefficient(&self, x_exp: u32, y_exp: u32) -> BigRational {
        self.coeffs.get(&(x_exp, y_exp)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest total degree of a monomial, or `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(a, b)| a + b).max()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    fn add_term(&mut self, a: u32, b: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((a, b)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BivariatePoly) -> BivariatePoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> BivariatePoly {
        if k.is_zero() {
            return Self::zero();
        }
        BivariatePoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.coeffs {
            for (&(d, e), f) in &other.coeffs {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> BivariatePoly {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `P(x^k, y^k)`, which is `p_k[P]` when `P` is read as an alphabet.
    pub fn power_substitute(&self, k: u32) -> BivariatePoly {
        BivariatePoly {
            coeffs: self.coeffs.iter().map(|(&(a, b), c)| ((a * k, b * k), c.clone())).collect(),
        }
    }

    /// Exact division by `1 - x`, then by `1 - y`.
    pub fn divide_by_one_minus_x_one_minus_y(&self) -> Result<BivariatePoly, Error> {
        self.divide_by_one_minus(Var::X)?.divide_by_one_minus(Var::Y)
    }

    /// Synthetic division by `1 - v`: the quotient coefficients are prefix
    /// sums along `v`, and the full sum along each line must vanish.
    fn divide_by_one_minus(&self, var: Var) -> Result<BivariatePoly, Error> {
        let mut lines: BTreeMap<u32, BTreeMap<u32, BigRational>> = BTreeMap::new();
        for (&(a, b), c) in &self.coeffs {
            let (along, across) = match var {
                Var::X => (a, b),
                Var::Y => (b, a),
            };
            lines.entry(across).or_default().insert(along, c.clone());
        }
        let mut out = Self::zero();
        for (across, line) in lines {
            let top = *line.keys().next_back().expect("nonempty line");
            let mut running = BigRational::zero();
            for along in 0..=top {
                if let Some(c) = line.get(&along) {
                    running += c;
                }
                if along == top {
                    if !running.is_zero() {
                        return Err(Error::InexactDivision);
                    }
                } else {
                    let (a, b) = match var {
                        Var::X => (along, across),
                        Var::Y => (across, along),
                    };
                    out.add_term(a, b, running.clone());
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy)]
enum Var {
    X,
    Y,
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "{}", c.abs())?;
            if a > 0 {
                write!(f, "*x^{a}")?;
            }
            if b > 0 {
                write!(f, "*y^{b}")?;
            }
        }
        Ok(())
    }
}

/// `h_k(x, y) = Σ_{i+j=k} x^i y^j`.
pub fn complete_homogeneous_xy(k: u32) -> BivariatePoly {
    let mut p = BivariatePoly::zero();
    for i in 0..=k {
        p.add_term(i, k - i, BigRational::one());
    }
    p
}

/// `f[A]` for an alphabet `A` given as a polynomial: each `p_k` becomes
/// `A(x^k, y^k)`.
pub fn eval_at(f: &PSeries, alphabet: &BivariatePoly) -> BivariatePoly {
    if alphabet.is_integral() {
        eval_at_integral(f, alphabet)
    } else {
        eval_at_rational(f, alphabet)
    }
}

fn eval_at_rational(f: &PSeries, alphabet: &BivariatePoly) -> BivariatePoly {
    let mut powers: BTreeMap<u32, BivariatePoly> = BTreeMap::new();
    let mut out = BivariatePoly::zero();
    for (mu, c) in f.terms() {
        let mut term = BivariatePoly::one();
        for &k in mu.parts() {
            let pk = powers.entry(k).or_insert_with(|| alphabet.power_substitute(k));
            term = term.mul(pk);
        }
        out = out.add(&term.scale(c));
    }
    out
}

/// Dense integer grid indexed by `(x exponent, y exponent)`.
#[derive(Clone)]
struct Grid {
    height: usize,
    cells: Vec<BigInt>,
}

impl Grid {
    fn zero(width: usize, height: usize) -> Self {
        Grid { height, cells: alloc::vec![BigInt::zero(); width * height] }
    }

    fn mul_sparse(&self, terms: &[(usize, usize, BigInt)]) -> Grid {
        let mut out = Grid { height: self.height, cells: alloc::vec![BigInt::zero(); self.cells.len()] };
        for (idx, v) in self.cells.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (a, b) = (idx / self.height, idx % self.height);
            for (da, db, c) in terms {
                out.cells[(a + da) * self.height + b + db] += v * c;
            }
        }
        out
    }
}

/// Integer evaluation over the common denominator of `f`. Terms arrive in
/// lexicographic order, so consecutive `p_μ[A]` share prefix products.
fn eval_at_integral(f: &PSeries, alphabet: &BivariatePoly) -> BivariatePoly {
    let n = f.degree() as usize;
    let max_x = alphabet.coeffs.keys().map(|&(a, _)| a).max().unwrap_or(0) as usize;
    let max_y = alphabet.coeffs.keys().map(|&(_, b)| b).max().unwrap_or(0) as usize;
    let (width, height) = (n * max_x + 1, n * max_y + 1);
    let mut powers: BTreeMap<u32, Vec<(usize, usize, BigInt)>> = BTreeMap::new();
    let denominator = f.common_denominator();
    let mut total = Grid::zero(width, height);
    let mut one = Grid::zero(width, height);
    one.cells[0] = BigInt::one();
    let mut stack = alloc::vec![one];
    let mut current: Vec<u32> = Vec::new();
    for (mu, c) in f.terms() {
        let parts = mu.parts();
        let shared = current.iter().zip(parts).take_while(|(a, b)| a == b).count();
        stack.truncate(shared + 1);
        current.truncate(shared);
        for &k in &parts[shared..] {
            let pk = powers.entry(k).or_insert_with(|| {
                alphabet
                    .coeffs
                    .iter()
                    .map(|(&(a, b), c)| ((a * k) as usize, (b * k) as usize, c.to_integer()))
                    .collect()
            });
            let next = stack.last().expect("stack holds the empty product").mul_sparse(pk);
            stack.push(next);
            current.push(k);
        }
        let scale = (c * BigRational::from_integer(denominator.clone())).to_integer();
        for (acc, v) in total.cells.iter_mut().zip(&stack.last().expect("nonempty").cells) {
            if !v.is_zero() {
                *acc += &scale * v;
            }
        }
    }
    let mut out = BivariatePoly::zero();
    for (idx, v) in total.cells.into_iter().enumerate() {
        if !v.is_zero() {
            let (a, b) = (idx / height, idx % height);
            out.add_term(a as u32, b as u32, BigRational::new(v, denominator.clone()));
        }
    }
    out
}

/// `p_λ[1 - x - y] = Π_i (1 - x^{λ_i} - y^{λ_i})`.
pub fn eval_p_on_1mxmy(lam: &Partition) -> BivariatePoly {
    let alphabet = BivariatePoly::one_minus_x_minus_y();
    lam.parts()
        .iter()
        .fold(BivariatePoly::one(), |acc, &k| acc.mul(&alphabet.power_substitute(k)))
}

/// `f[1 - x - y]`, which must have integer coefficients.
pub fn eval_on_1mxmy(f: &PSeries) -> Result<BivariatePoly, Error> {
    let out = eval_at(f, &BivariatePoly::one_minus_x_minus_y());
    if !out.is_integral() {
        return Err(Error::NonIntegralPolynomial);
    }
    Ok(out)
}

/// `s_λ[A]` for a polynomial alphabet `A`.
pub fn eval_schur_at(memo: &impl CharacterMemo, lam: &Partition, alphabet: &BivariatePoly) -> BivariatePoly {
    eval_at(&schur_to_p_with(memo, lam), alphabet)
}

/// Evaluates an iterated plethysm at `1 - x - y` by plethystic
/// substitution, innermost first: `(f ∘ g)[A] = f[g[A]]`. No p-expansion
/// of the full plethysm is ever formed.
pub fn eval_chain_on_1mxmy(
    memo: &impl CharacterMemo,
    expr: &PlethysmExpression,
) -> Result<BivariatePoly, Error> {
    let mut value = BivariatePoly::one_minus_x_minus_y();
    for lam in expr.chain().iter().rev() {
        value = eval_schur_at(memo, lam, &value);
        if !value.is_integral() {
            return Err(Error::NonIntegralPolynomial);
        }
    }
    Ok(value)
}

/// Closed form of `s_{(α,2^β,1^γ)}[1 - x - y]` for `α ≥ 2`.
pub fn hook_column_closed_form(shape: &HookColumnShape) -> Result<BivariatePoly, Error> {
    if shape.alpha < 2 {
        return Err(Error::InvalidShape(shape.to_partition()));
    }
    let sign = if shape.gamma.is_multiple_of(2) { 1 } else { -1 };
    Ok(BivariatePoly::monomial(shape.beta, shape.beta, sign)
        .mul(&BivariatePoly::one_minus_x_times_one_minus_y())
        .mul(&complete_homogeneous_xy(shape.gamma)))
}

/// `e_n[1 - x - y] = (-1)^n (h_n - h_{n-1})` for `n ≥ 1`.
fn column_evaluation(n: u32) -> BivariatePoly {
    let sign = if n.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    complete_homogeneous_xy(n)
        .sub(&complete_homogeneous_xy(n - 1))
        .scale(&sign)
}

/// Closed form of `s_n[(1-x)(1-y)]` for `n ≥ 2`:
/// `(1-x)(1-y)(1 - (xy)^n) / (1 - xy)`.
pub fn row_on_product_alphabet(n: u32) -> Result<BivariatePoly, Error> {
    if n < 2 {
        return Err(Error::OutOfRange("row length must be at least 2"));
    }
    let mut geometric = BivariatePoly::zero();
    for k in 0..n {
        geometric = geometric.add(&BivariatePoly::monomial(k, k, 1));
    }
    Ok(BivariatePoly::one_minus_x_times_one_minus_y().mul(&geometric))
}

/// Every hook+column coefficient of a degree-`n` function, keyed by `(β, γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookColumnTable {
    degree: u32,
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl HookColumnTable {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficient(&self, beta: u32, gamma: u32) -> BigInt {
        self.coeffs.get(&(beta, gamma)).cloned().unwrap_or_default()
    }

    /// Nonzero entries keyed by `(β, γ)`.
    pub fn entries(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.coeffs
    }

    pub fn sequence(&self, gamma: u32) -> HCSequence {
        let entries = hook_column_row(self.degree, gamma)
            .iter()
            .map(|h| self.coefficient(h.beta, gamma))
            .collect();
        HCSequence::new(self.degree, gamma, entries)
    }

    pub fn to_schur(&self) -> SchurExpansion {
        let terms = self.coeffs.iter().filter_map(|(&(beta, gamma), c)| {
            hook_column_at(self.degree, beta, gamma).map(|h| (h.to_partition(), c.clone()))
        });
        SchurExpansion::from_terms(self.degree, terms).expect("hook+columns of the table degree")
    }
}

/// Reads every hook+column coefficient of `f` off `P = f[1 - x - y]`.
///
/// The coefficient of `x^n` isolates the column `(1^n)`. After removing its
/// contribution, `P` is divided exactly by `(1-x)(1-y)`; with `c_{a,b}` the
/// coefficients of the quotient,
/// `[s_{(n-a-b, 2^b, 1^{a-b})}] f = (-1)^{a+b} (c_{a,b} - c_{a+1,b-1})` for
/// `a ≥ b`.
pub fn hc_extract(poly: &BivariatePoly, n: u32) -> Result<HookColumnTable, Error> {
    if !poly.is_integral() {
        return Err(Error::NonIntegralPolynomial);
    }
    let mut coeffs = BTreeMap::new();
    if n == 0 {
        let c = poly.coefficient(0, 0).to_integer();
        if poly.coeffs.keys().any(|&e| e != (0, 0)) {
            return Err(Error::InconsistentEvaluation);
        }
        if !c.is_zero() {
            coeffs.insert((0, 0), c);
        }
        return Ok(HookColumnTable { degree: 0, coeffs });
    }

    let mut rest = poly.clone();
    let sign = if n.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let column = poly.coefficient(n, 0) * &sign;
    if !column.is_zero() {
        rest = rest.sub(&column_evaluation(n).scale(&column));
        coeffs.insert((0, n - 1), column.to_integer());
    }

    let quotient = rest.divide_by_one_minus_x_one_minus_y()?;
    let mut candidates: Vec<(u32, u32)> = Vec::new();
    for &(a, b) in quotient.coeffs.keys() {
        candidates.push((a, b));
        if a > 0 {
            candidates.push((a - 1, b + 1));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    for (a, b) in candidates {
        if a < b {
            continue;
        }
        let mut value = quotient.coefficient(a, b);
        if b > 0 {
            value -= quotient.coefficient(a + 1, b - 1);
        }
        if value.is_zero() {
            continue;
        }
        if (a + b) % 2 == 1 {
            value = -value;
        }
        // α = n - a - b must be at least 2 for the α-free closed form.
        if a + b + 2 > n {
            return Err(Error::InconsistentEvaluation);
        }
        coeffs.insert((b, a - b), value.to_integer());
    }
    Ok(HookColumnTable { degree: n, coeffs })
}

/// The symbol `χ^k(λ)`: the number of ways to pick a sub-multiset of the
/// parts of `λ` summing to `k`, i.e. `Σ_{μ⊢k} Π_i C(m_i(λ), m_i(μ))` for
/// `k ≤ |λ|/2`, mirrored as `χ^{|λ|-k}` above that and zero past `|λ|`.
pub fn chi_k(lam: &Partition, k: u32) -> BigInt {
    let c = lam.weight();
    if k > c {
        return BigInt::zero();
    }
    let k = if k > c / 2 { c - k } else { k };
    let mut total = BigInt::zero();
    for mu in partitions_of(k) {
        let mut prod = BigInt::one();
        for (part, m) in mu.multiplicities() {
            prod *= binomial(lam.multiplicity(part), m);
            if prod.is_zero() {
                break;
            }
        }
        total += prod;
    }
    total
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `Σ_{λ⊢c} χ^k(λ) p_λ / z_λ`.
pub fn chi_k_series(c: u32, k: u32) -> PSeries {
    let terms: Vec<(Partition, BigRational)> = partitions_of(c)
        .map(|lam| {
            let z = BigInt::from(lam.z());
            let coeff = BigRational::new(chi_k(&lam, k), z);
            (lam, coeff)
        })
        .collect();
    PSeries::from_terms(c, terms).expect("partitions of c")
}
