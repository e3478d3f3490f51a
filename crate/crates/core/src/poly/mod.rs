//! Sparse multivariate polynomials in `x1, x2, ...` with exact coefficients.

mod schubert;
mod schur;

pub use schubert::{schubert, stanley_truncation, SchubertCache};
pub use schur::schur_via_ssyt;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};
use thiserror::Error;

/// The coefficient ring. Anything integer-like with checked arithmetic fits.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + FromStr
    + PartialEq
    + Eq
    + PartialOrd
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Neg<Output = Self>
    + From<i32>
    + Send
    + Sync
{
}

impl<T> Coefficient for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + FromStr
        + PartialEq
        + Eq
        + PartialOrd
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Neg<Output = T>
        + From<i32>
        + Send
        + Sync
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable index {index} is not in 1..{limit}")]
    BadIndex { index: usize, limit: usize },
    #[error("exact division by x{i} - x{} left a nonzero remainder", .i + 1)]
    InexactDivision { i: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

fn add_coef<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_add(b).expect("coefficient overflow in addition")
}

fn mul_coef<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_mul(b)
        .expect("coefficient overflow in multiplication")
}

/// An exponent vector with trailing zeros trimmed, so that the derived
/// ordering is lexicographic on zero-padded vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Monomial(e)
    }

    /// `x_1^{counts[0]} x_2^{counts[1]} ...`.
    pub fn from_counts<I: IntoIterator<Item = usize>>(counts: I) -> Self {
        Monomial::new(counts.into_iter().map(|c| c as u32).collect())
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Highest index of a variable that actually occurs.
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let e = (0..len)
            .map(|k| self.0.get(k).unwrap_or(&0) + other.0.get(k).unwrap_or(&0))
            .collect();
        Monomial(e)
    }

    fn with_exp(&self, i: usize, value: u32) -> Monomial {
        let mut e = self.0.clone();
        if e.len() < i {
            e.resize(i, 0);
        }
        e[i - 1] = value;
        Monomial::new(e)
    }

    fn swapped(&self, i: usize) -> Monomial {
        let (a, b) = (self.exp(i), self.exp(i + 1));
        self.with_exp(i, b).with_exp(i + 1, a)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
///
/// `nvars` is a lower bound on the number of variables used when the
/// polynomial is serialized; equality looks only at the terms.
#[derive(Debug, Clone)]
pub struct Polynomial<C: Coefficient> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Coefficient> Eq for Polynomial<C> {}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            nvars: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.support_len());
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = add_coef(existing, &c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same polynomial, serialized with at least `n` variables.
    pub fn with_nvars(mut self, n: usize) -> Self {
        self.nvars = self.nvars.max(n);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in descending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, 1, ...)`.
    pub fn coefficient_sum(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| add_coef(&acc, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c >= C::zero())
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), mul_coef(a, c))))
            .with_nvars(self.nvars)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, a)| (k.times(m), mul_coef(a, c))))
            .with_nvars(self.nvars)
    }

    /// Sets `x_i = 0`.
    pub fn substitute_zero(&self, i: usize) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(i) == 0)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
        .with_nvars(self.nvars)
    }

    /// Sets every `x_k` with `k > m` to zero.
    pub fn truncate_vars(&self, m: usize) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(mono, _)| mono.support_len() <= m)
                .map(|(mono, c)| (mono.clone(), c.clone())),
        )
        .with_nvars(m)
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.swapped(i), c.clone())))
            .with_nvars(self.nvars.max(i + 1))
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_vars(i) == *self
    }

    /// `(f - s_i f) / (x_i - x_{i+1})`, computed by peeling off leading terms
    /// in `x_i` and checked against the original difference.
    pub fn divided_difference(&self, i: usize) -> Result<Self, PolyError> {
        if i == 0 {
            return Err(PolyError::BadIndex {
                index: i,
                limit: self.nvars.max(i + 1),
            });
        }
        let numerator = self - &self.swap_vars(i);
        let mut remainder = numerator.clone();
        let mut quotient = Self::zero();
        while let Some((lead, c)) = remainder
            .terms
            .iter()
            .max_by_key(|(m, _)| (m.exp(i), (*m).clone()))
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            let a = lead.exp(i);
            if a == 0 {
                return Err(PolyError::InexactDivision { i });
            }
            let q = lead.with_exp(i, a - 1);
            quotient.add_term(q.clone(), c.clone());
            remainder.add_term(lead, -c.clone());
            remainder.add_term(q.times(&Monomial::var(i + 1)), c);
        }
        debug_assert!(&quotient * &(Self::var(i) - Self::var(i + 1)) == numerator);
        Ok(quotient.with_nvars(self.nvars))
    }

    /// The JSON object `{"nvars": n, "terms": [{"exp": [...], "coef": c}, ...]}`
    /// with terms in descending lexicographic order and exponent vectors
    /// padded to `nvars`.
    pub fn to_json(&self) -> String {
        let n = self.nvars;
        let terms: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let exps: Vec<String> = (1..=n).map(|k| m.exp(k).to_string()).collect();
                format!("{{\"exp\":[{}],\"coef\":{}}}", exps.join(","), c)
            })
            .collect();
        format!("{{\"nvars\":{},\"terms\":[{}]}}", n, terms.join(","))
    }

    /// Inverse of [`Polynomial::to_json`].
    pub fn from_json(s: &str) -> Result<Self, PolyError> {
        let err = |m: &str| PolyError::Parse(m.to_string());
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))?;
        let nvars = v["nvars"].as_u64().ok_or_else(|| err("missing nvars"))? as usize;
        let terms = v["terms"].as_array().ok_or_else(|| err("missing terms"))?;
        let mut p = Self::zero().with_nvars(nvars);
        for t in terms {
            let exps = t["exp"]
                .as_array()
                .ok_or_else(|| err("missing exp"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .map(|x| x as u32)
                        .ok_or_else(|| err("bad exponent"))
                })
                .collect::<Result<Vec<u32>, _>>()?;
            let coef_text = t["coef"].to_string();
            let c = coef_text.parse::<C>().map_err(|_| err("bad coefficient"))?;
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = *c < C::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the text produced by `Display`, e.g. `x1^2 - 3*x1*x2 + 1`.
impl<C: Coefficient> FromStr for Polynomial<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let bad = || PolyError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut p = Self::zero();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() {
                chunks.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && current.is_empty() {
                negative ^= ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(bad());
        }
        chunks.push((negative, current));
        for (neg, chunk) in chunks {
            let mut coef = C::one();
            let mut exps: Vec<u32> = Vec::new();
            for factor in chunk.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((a, b)) => (a, b.parse::<u32>().map_err(|_| bad())?),
                        None => (rest, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad())?;
                    if idx == 0 {
                        return Err(bad());
                    }
                    if exps.len() < idx {
                        exps.resize(idx, 0);
                    }
                    exps[idx - 1] += pow;
                } else {
                    let c: C = factor.parse().map_err(|_| bad())?;
                    coef = mul_coef(&coef, &c);
                }
            }
            if neg {
                coef = -coef;
            }
            p.add_term(Monomial::new(exps), coef);
        }
        Ok(p)
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out.nvars = self.nvars.max(rhs.nvars);
        out
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())))
            .with_nvars(self.nvars)
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out.nvars = self.nvars.max(rhs.nvars);
        out
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), mul_coef(c1, c2));
            }
        }
        out.with_nvars(self.nvars.max(rhs.nvars))
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Polynomial<C>>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}
