//! Sparse multivariate polynomials over an exact coefficient ring.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;

use crate::combinatorics::permutations;

pub trait Coeff: Clone + PartialEq + Num + Neg<Output = Self> + std::fmt::Debug {}
impl<T: Clone + PartialEq + Num + Neg<Output = T> + std::fmt::Debug> Coeff for T {}

/// Polynomial in `nvars` variables; exponent vectors map to nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Vec<u32>, C> {
        self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// Total degree of the homogeneous polynomial; `None` if the polynomial
    /// is zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            let mut k = C::zero();
            for _ in 0..e[i] {
                k = k + C::one();
            }
            out.add_term(f, c.clone() * k);
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        total
    }

    /// Substitutes polynomial `images[i]` for variable `i`.
    pub fn compose(&self, images: &[MPoly<C>]) -> MPoly<C> {
        assert_eq!(images.len(), self.nvars);
        let nvars = images.first().map_or(0, |p| p.nvars);
        let mut out = MPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(nvars, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = &t * &img.pow(k);
                }
            }
            out = &out + &t;
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Adds trailing variables that do not occur.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.resize(nvars, 0);
            out.add_term(f, c.clone());
        }
        out
    }
}

impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &MPoly<C>) -> MPoly<C> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &MPoly<C>) -> MPoly<C> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &MPoly<C>) -> MPoly<C> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x.clone() * y.clone());
            }
        }
        out
    }
}

/// Determinant of a square matrix of polynomials, by the permutation
/// expansion.
pub fn determinant<C: Coeff>(m: &[Vec<MPoly<C>>], nvars: usize) -> MPoly<C> {
    let mut det = MPoly::zero(nvars);
    for sigma in permutations(m.len()) {
        let mut term = MPoly::one(nvars);
        for (row, &col) in m.iter().zip(sigma.values()) {
            term = &term * &row[col - 1];
            if term.is_zero() {
                break;
            }
        }
        det = if sigma.sign() > 0 { &det + &term } else { &det - &term };
    }
    det
}

/// All exponent vectors of length `k` summing to `d`, in descending
/// lexicographic order.
pub fn compositions(d: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(d: u32, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            go(d - first, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(d, k, &mut Vec::new(), &mut out);
    out
}

/// `C(n, k)` as `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}
