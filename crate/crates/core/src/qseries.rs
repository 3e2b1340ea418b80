//! Polynomials in `q` over the integers, truncated power series in `t` with
//! such coefficients, q-analogues, and the descent generating functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::combinatorics::{
    descent_stats_perm, descent_stats_syt, enumerate_syt, permutations, Partition,
};
use crate::error::{Error, Result};

pub const CARLITZ_LIMIT: usize = 9;
pub const SYT_NUMERATOR_LIMIT: usize = 10;

/// Element of `Z[q]`, stored sparsely with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds `sum c_i q^i` from ascending coefficients.
    pub fn from_coeffs<C: Clone + Into<BigInt>>(coeffs: &[C]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i as u32, c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&e, c)| c * num_traits::pow(q.clone(), e as usize))
            .sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self * q^shift`.
    pub fn shift(&self, shift: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Exact division; `None` if `divisor` does not divide `self` over `Z`.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        let dd = divisor.degree()?;
        let lead = divisor.coeff(dd);
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (c, r) = rem.coeff(rd).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let term = QPoly::monomial(c, rd - dd);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Compact form such as `1+q+2q^2`.
    pub fn compact(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                s.push(if neg { '-' } else { '+' });
            } else if neg {
                s.push('-');
            }
            let a = c.abs();
            match e {
                0 => s.push_str(&a.to_string()),
                _ => {
                    if !a.is_one() {
                        s.push_str(&a.to_string());
                    }
                    s.push('q');
                    if e > 1 {
                        s.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        s
    }
}

/// Terms `c*q^i` in ascending order, joined by ` + `.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(e, c)| format!("{c}*q^{e}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

/// Polynomial in `t` with `Z[q]` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TQPoly {
    coeffs: Vec<QPoly>,
}

impl TQPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(QPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeff(&self, m: usize) -> QPoly {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_term(&mut self, t_exp: usize, q_exp: u32, c: BigInt) {
        if self.coeffs.len() <= t_exp {
            self.coeffs.resize(t_exp + 1, QPoly::zero());
        }
        self.coeffs[t_exp].add_term(q_exp, c);
        *self = Self::from_coeffs(std::mem::take(&mut self.coeffs));
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|p| p * &QPoly::monomial(c.clone(), 0))
                .collect(),
        )
    }

    pub fn to_series(&self, order: usize) -> TQSeries {
        TQSeries::from_coeffs(order, (0..=order).map(|m| self.coeff(m)).collect())
    }

    /// Value at `q = 1`, as integer coefficients in `t`.
    pub fn eval_q_at_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(QPoly::eval_at_one).collect()
    }

    /// Value at `t = 1`.
    pub fn eval_t_at_one(&self) -> QPoly {
        self.coeffs.iter().fold(QPoly::zero(), |acc, p| &acc + p)
    }

    /// Form like `1 + t(2q+2q^2) + t^2 q^3`.
    pub fn compact(&self) -> String {
        let mut parts = Vec::new();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let single = c.terms().count() == 1;
            let t = match m {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{m}"),
            };
            let body = c.compact();
            parts.push(match (m, single) {
                (0, _) => body,
                (_, true) if body == "1" => t,
                (_, true) => format!("{t} {body}"),
                (_, false) => format!("{t}({body})"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl Add for &TQPoly {
    type Output = TQPoly;
    fn add(self, rhs: &TQPoly) -> TQPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TQPoly::from_coeffs((0..n).map(|m| &self.coeff(m) + &rhs.coeff(m)).collect())
    }
}

impl Mul for &TQPoly {
    type Output = TQPoly;
    fn mul(self, rhs: &TQPoly) -> TQPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return TQPoly::zero();
        }
        let mut out = vec![QPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TQPoly::from_coeffs(out)
    }
}

impl fmt::Display for TQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| format!("[{c}]*t^{m}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Power series in `t` truncated after `t^order`, with `Z[q]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TQSeries {
    order: usize,
    coeffs: Vec<QPoly>,
}

impl TQSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![QPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = QPoly::one();
        s
    }

    /// Missing coefficients are zero; coefficients past `order` are dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPoly>) -> Self {
        coeffs.resize(order + 1, QPoly::zero());
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, m: usize) -> &QPoly {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Self::from_coeffs(order, self.coeffs[..=order].to_vec())
    }
}

impl Add for &TQSeries {
    type Output = TQSeries;
    fn add(self, rhs: &TQSeries) -> TQSeries {
        let order = self.order.min(rhs.order);
        TQSeries::from_coeffs(
            order,
            (0..=order).map(|m| &self.coeffs[m] + &rhs.coeffs[m]).collect(),
        )
    }
}

impl Sub for &TQSeries {
    type Output = TQSeries;
    fn sub(self, rhs: &TQSeries) -> TQSeries {
        let order = self.order.min(rhs.order);
        TQSeries::from_coeffs(
            order,
            (0..=order).map(|m| &self.coeffs[m] - &rhs.coeffs[m]).collect(),
        )
    }
}

impl Mul for &TQSeries {
    type Output = TQSeries;
    fn mul(self, rhs: &TQSeries) -> TQSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![QPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TQSeries::from_coeffs(order, out)
    }
}

impl fmt::Display for TQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| format!("[{c}]*t^{m}"))
            .collect();
        terms.push(format!("O(t^{})", self.order + 1));
        write!(f, "{}", terms.join(" + "))
    }
}

/// `[m]_q = 1 + q + ... + q^(m-1)`.
pub fn qnumber(m: u32) -> QPoly {
    QPoly::from_coeffs(&vec![1; m as usize])
}

pub fn qfactorial(m: u32) -> QPoly {
    (1..=m).fold(QPoly::one(), |acc, i| &acc * &qnumber(i))
}

/// Gaussian binomial coefficient, by exact division of q-factorials.
pub fn qbinomial(m: u32, k: u32) -> Result<QPoly> {
    if k > m {
        return Err(Error::BadRange(format!("qbinomial({m}, {k}) needs k <= m")));
    }
    let den = &qfactorial(k) * &qfactorial(m - k);
    Ok(qfactorial(m)
        .div_exact(&den)
        .expect("q-binomial division is exact"))
}

/// `prod_{i=0}^{d} (1 - q^i t)` as a polynomial in `t`.
pub fn qpochhammer(d: u32) -> TQPoly {
    (0..=d).fold(TQPoly::from_coeffs(vec![QPoly::one()]), |acc, i| {
        &acc * &TQPoly::from_coeffs(vec![QPoly::one(), QPoly::monomial(-1, i)])
    })
}

/// Expansion of `1 / prod_{i=0}^{d} (1 - q^i t)` through `t^order`.
pub fn expand_inv_qpochhammer(d: u32, order: usize) -> TQSeries {
    (0..=d).fold(TQSeries::one(order), |acc, i| {
        let geometric = TQSeries::from_coeffs(
            order,
            (0..=order).map(|j| QPoly::monomial(1, i * j as u32)).collect(),
        );
        &acc * &geometric
    })
}

/// `sum_{sigma in S_d} t^des(sigma) q^maj(sigma)`.
pub fn carlitz_numerator(d: usize) -> Result<TQPoly> {
    if d > CARLITZ_LIMIT {
        return Err(Error::TooLarge(format!(
            "Carlitz numerator for d = {d} (limit {CARLITZ_LIMIT})"
        )));
    }
    let mut out = TQPoly::zero();
    for sigma in permutations(d) {
        let s = descent_stats_perm(&sigma);
        out.add_term(s.des, s.maj as u32, BigInt::one());
    }
    Ok(out)
}

/// `sum_{T in SYT(lambda)} t^des(T) q^maj(T)`.
pub fn syt_numerator(lambda: &Partition) -> Result<TQPoly> {
    if lambda.size() > SYT_NUMERATOR_LIMIT {
        return Err(Error::TooLarge(format!(
            "SYT numerator for |lambda| = {} (limit {SYT_NUMERATOR_LIMIT})",
            lambda.size()
        )));
    }
    let mut out = TQPoly::zero();
    for t in enumerate_syt(lambda)? {
        let s = descent_stats_syt(&t)?;
        out.add_term(s.des, s.maj as u32, BigInt::one());
    }
    Ok(out)
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.compact())
    }
}

impl Serialize for TQPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.compact())
    }
}

/// Serialized as the list of `t`-coefficients.
impl Serialize for TQSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(QPoly::compact))
    }
}
