//! Polynomial `GL_k` characters as symmetric polynomials: Schur polynomials,
//! the plethysms `h_m[h_d]` and `e_i[h_m]`, and Schur decomposition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{partitions_with_at_most, Partition};
use crate::error::{Error, Result};
use crate::poly::{binomial, compositions, MPoly};
use crate::qseries::QPoly;

/// Upper bound on the number of monomials of the target degree.
pub const MONOMIAL_GUARD: u128 = 2_000_000;

/// Symmetric polynomial in `k` variables with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    poly: MPoly<BigInt>,
}

impl SymPoly {
    pub fn zero(k: usize) -> Self {
        Self {
            poly: MPoly::zero(k),
        }
    }

    /// Wraps a polynomial, checking symmetry.
    pub fn new(poly: MPoly<BigInt>) -> Result<Self> {
        let s = Self { poly };
        if !s.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(s)
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MPoly<BigInt> {
        &self.poly
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.homogeneous_degree()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficients are constant on permutation orbits and every orbit is
    /// complete.
    pub fn is_symmetric(&self) -> bool {
        let mut orbit_total: u128 = 0;
        for (e, c) in self.poly.terms() {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if self.poly.coeff(&sorted) != *c {
                return false;
            }
            if sorted == *e {
                orbit_total += orbit_size(e);
            }
        }
        orbit_total == self.poly.len() as u128
    }

    /// Coefficients on partition-shaped (weakly decreasing) exponents.
    pub fn dominant_coeffs(&self) -> BTreeMap<Partition, BigInt> {
        self.poly
            .terms()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| (Partition::from_unsorted(e.clone()), c.clone()))
            .collect()
    }

    /// Value at `x_i = 1`, the dimension of the representation.
    pub fn dimension(&self) -> BigInt {
        self.poly.terms().map(|(_, c)| c.clone()).sum()
    }

    /// Specialization `x_i = q^(i-1)`.
    pub fn principal_specialization(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (e, c) in self.poly.terms() {
            let w: u32 = e.iter().enumerate().map(|(i, &a)| i as u32 * a).sum();
            out.add_term(w, c.clone());
        }
        out
    }
}

/// Number of distinct rearrangements of an exponent vector.
fn orbit_size(e: &[u32]) -> u128 {
    let mut counts: HashMap<u32, u64> = HashMap::new();
    for &x in e {
        *counts.entry(x).or_default() += 1;
    }
    let mut total = 1u128;
    let mut n = 0u64;
    for &c in counts.values() {
        for i in 1..=c {
            n += 1;
            total = total * n as u128 / i as u128;
        }
    }
    total
}

/// Partitions `mu` with `lambda / mu` a horizontal strip and `len(mu) <= max_len`.
fn interlacing(lambda: &Partition, max_len: usize) -> Vec<Partition> {
    let l = lambda.len();
    let mut out = Vec::new();
    fn go(lambda: &Partition, i: usize, l: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == l {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        for v in lambda.part(i + 1)..=lambda.part(i) {
            cur.push(v);
            go(lambda, i + 1, l, cur, out);
            cur.pop();
        }
    }
    go(lambda, 0, l, &mut Vec::with_capacity(l), &mut out);
    out.retain(|mu| mu.len() <= max_len);
    out
}

/// Schur polynomial as a sum over semistandard tableaux, built by the
/// branching rule on the last variable.
fn schur_terms(
    lambda: &Partition,
    k: usize,
    memo: &mut HashMap<(Partition, usize), BTreeMap<Vec<u32>, BigInt>>,
) -> BTreeMap<Vec<u32>, BigInt> {
    if lambda.len() > k {
        return BTreeMap::new();
    }
    if k == 0 {
        return BTreeMap::from([(Vec::new(), BigInt::one())]);
    }
    if let Some(hit) = memo.get(&(lambda.clone(), k)) {
        return hit.clone();
    }
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for mu in interlacing(lambda, k - 1) {
        let strip = (lambda.size() - mu.size()) as u32;
        for (e, c) in schur_terms(&mu, k - 1, memo) {
            let mut f = e;
            f.push(strip);
            *out.entry(f).or_default() += c;
        }
    }
    memo.insert((lambda.clone(), k), out.clone());
    out
}

pub fn schur_poly(lambda: &Partition, k: usize) -> SymPoly {
    let mut poly = MPoly::zero(k);
    for (e, c) in schur_terms(lambda, k, &mut HashMap::new()) {
        poly.add_term(e, c);
    }
    SymPoly { poly }
}

/// Kostka number `K_{lambda, mu}`: semistandard tableaux of shape `lambda`
/// and content `mu`.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> BigInt {
    fn go(
        lambda: &Partition,
        mu: &[u32],
        memo: &mut HashMap<(Partition, usize), BigInt>,
    ) -> BigInt {
        if mu.is_empty() {
            return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
        }
        if lambda.len() > mu.len() {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(lambda.clone(), mu.len())) {
            return v.clone();
        }
        let last = *mu.last().unwrap() as usize;
        let mut total = BigInt::zero();
        for nu in interlacing(lambda, mu.len() - 1) {
            if lambda.size() - nu.size() == last {
                total += go(&nu, &mu[..mu.len() - 1], memo);
            }
        }
        memo.insert((lambda.clone(), mu.len()), total.clone());
        total
    }
    if lambda.size() != mu.iter().map(|&x| x as usize).sum::<usize>() {
        return BigInt::zero();
    }
    go(lambda, mu, &mut HashMap::new())
}

/// `dim S_lambda(C^k)` by the Weyl product formula.
pub fn weyl_dim(lambda: &Partition, k: usize) -> BigUint {
    if lambda.len() > k {
        return BigUint::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        for j in i + 1..k {
            num *= BigInt::from(lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    (num / den).to_biguint().expect("dimension is nonnegative")
}

/// `s_lambda(1, q, ..., q^m)`, summing `q^(sum of entries - 1)` over
/// semistandard tableaux with entries at most `m + 1`.
pub fn schur_principal(lambda: &Partition, m: u32) -> QPoly {
    fn go(lambda: &Partition, k: usize, memo: &mut HashMap<(Partition, usize), QPoly>) -> QPoly {
        if lambda.len() > k {
            return QPoly::zero();
        }
        if k == 0 {
            return QPoly::one();
        }
        if let Some(hit) = memo.get(&(lambda.clone(), k)) {
            return hit.clone();
        }
        let mut out = QPoly::zero();
        for mu in interlacing(lambda, k - 1) {
            let strip = (lambda.size() - mu.size()) as u32;
            out = &out + &go(&mu, k - 1, memo).shift(strip * (k as u32 - 1));
        }
        memo.insert((lambda.clone(), k), out.clone());
        out
    }
    go(lambda, m as usize + 1, &mut HashMap::new())
}

fn guard(degree: u32, k: usize) -> Result<()> {
    let count = binomial(degree as u64 + k as u64 - 1, k as u64 - 1);
    if k == 0 || count > MONOMIAL_GUARD {
        return Err(Error::TooLarge(format!(
            "{count} monomials of degree {degree} in {k} variables"
        )));
    }
    Ok(())
}

/// `p_r[h_d] = h_d(x_1^r, ..., x_k^r)`.
fn power_sum_of_complete(r: u32, d: u32, k: usize) -> MPoly<BigInt> {
    let mut p = MPoly::zero(k);
    for e in compositions(d, k) {
        p.add_term(e.iter().map(|&a| a * r).collect(), BigInt::one());
    }
    p
}

/// Newton recursion `n X_n = sum_r sign(r) P_r X_{n-r}`, with exact division
/// by `n` checked at every step.
fn newton(n: u32, inner_degree: u32, k: usize, alternating: bool) -> Result<MPoly<BigInt>> {
    guard(n * inner_degree, k)?;
    let powers: Vec<MPoly<BigInt>> = (1..=n)
        .into_par_iter()
        .map(|r| power_sum_of_complete(r, inner_degree, k))
        .collect();
    let mut xs: Vec<MPoly<BigInt>> = vec![MPoly::one(k)];
    for step in 1..=n {
        let mut acc = MPoly::zero(k);
        for r in 1..=step {
            let term = &powers[r as usize - 1] * &xs[(step - r) as usize];
            acc = if alternating && r % 2 == 0 { &acc - &term } else { &acc + &term };
        }
        let divisor = BigInt::from(step);
        let mut next = MPoly::zero(k);
        for (e, c) in acc.into_terms() {
            let (q, rem) = c.div_rem(&divisor);
            if !rem.is_zero() {
                return Err(Error::IntegralityViolated);
            }
            next.add_term(e, q);
        }
        xs.push(next);
    }
    Ok(xs.pop().unwrap())
}

/// Character of `Sym^m(Sym^d C^k)`.
pub fn sym_of_sym_char(m: u32, d: u32, k: usize) -> Result<SymPoly> {
    Ok(SymPoly {
        poly: newton(m, d, k, false)?,
    })
}

/// Character of `wedge^i(Sym^m C^k)`.
pub fn wedge_of_sym_char(i: u32, m: u32, k: usize) -> Result<SymPoly> {
    Ok(SymPoly {
        poly: newton(i, m, k, true)?,
    })
}

/// Schur expansion `P = sum mult * s_lambda`, largest `lambda` first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub terms: Vec<(Partition, BigInt)>,
    /// Set when some multiplicity is negative.
    pub is_virtual: bool,
}

impl Decomposition {
    pub fn multiplicity(&self, lambda: &Partition) -> BigInt {
        self.terms
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    /// Rebuilds the character in `k` variables.
    pub fn reconstruct(&self, k: usize) -> SymPoly {
        let mut poly = MPoly::zero(k);
        let mut memo = HashMap::new();
        for (lambda, mult) in &self.terms {
            for (e, c) in schur_terms(lambda, k, &mut memo) {
                poly.add_term(e, c * mult);
            }
        }
        SymPoly { poly }
    }
}

/// One `lambda : multiplicity` per line.
impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (lambda, mult) in &self.terms {
            writeln!(f, "{lambda} : {mult}")?;
        }
        Ok(())
    }
}

/// Peels off the Schur polynomial of the lex-greatest remaining exponent
/// until nothing is left. Only partition-shaped exponents are tracked, where
/// `s_lambda` contributes Kostka numbers.
pub fn schur_decompose(p: &SymPoly) -> Result<Decomposition> {
    if p.is_zero() {
        return Ok(Decomposition {
            terms: vec![],
            is_virtual: false,
        });
    }
    let degree = p.degree().ok_or(Error::NotHomogeneous)?;
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let k = p.nvars();
    let mut remaining = p.dominant_coeffs();
    let candidates = partitions_with_at_most(degree, k);
    let mut kostka_memo: HashMap<(Partition, Partition), BigInt> = HashMap::new();
    let mut terms = Vec::new();
    while let Some((top, c)) = remaining.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
        for mu in candidates.iter().filter(|mu| **mu <= top) {
            let kk = kostka_memo
                .entry((top.clone(), mu.clone()))
                .or_insert_with(|| kostka(&top, mu.parts()))
                .clone();
            if kk.is_zero() {
                continue;
            }
            let slot = remaining.entry(mu.clone()).or_default();
            *slot -= &c * kk;
            if slot.is_zero() {
                remaining.remove(mu);
            }
        }
        terms.push((top, c));
    }
    let is_virtual = terms.iter().any(|(_, m)| m.is_negative());
    Ok(Decomposition { terms, is_virtual })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoulkesWitness {
    pub lambda: Partition,
    /// Multiplicity in `Sym^m(Sym^d)`.
    pub inner: BigInt,
    /// Multiplicity in `Sym^d(Sym^m)`.
    pub outer: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoulkesReport {
    pub m: u32,
    pub d: u32,
    pub k: usize,
    pub contained: bool,
    pub dim_inner: BigInt,
    pub dim_outer: BigInt,
    pub witness: Vec<FoulkesWitness>,
}

/// Compares `Sym^m(Sym^d)` against `Sym^d(Sym^m)` irreducible by irreducible,
/// in `d` variables.
pub fn foulkes_check(m: u32, d: u32) -> Result<FoulkesReport> {
    if d < m {
        return Err(Error::BadRange(format!("Foulkes check needs d >= m, got m={m}, d={d}")));
    }
    let k = d as usize;
    let inner_char = sym_of_sym_char(m, d, k)?;
    let outer_char = sym_of_sym_char(d, m, k)?;
    let inner = schur_decompose(&inner_char)?;
    let outer = schur_decompose(&outer_char)?;
    let mut shapes: Vec<Partition> = inner
        .terms
        .iter()
        .chain(&outer.terms)
        .map(|(l, _)| l.clone())
        .collect();
    shapes.sort_unstable_by(|a, b| b.cmp(a));
    shapes.dedup();
    let witness: Vec<FoulkesWitness> = shapes
        .into_iter()
        .map(|lambda| FoulkesWitness {
            inner: inner.multiplicity(&lambda),
            outer: outer.multiplicity(&lambda),
            lambda,
        })
        .collect();
    Ok(FoulkesReport {
        m,
        d,
        k,
        contained: witness.iter().all(|w| w.inner <= w.outer),
        dim_inner: inner_char.dimension(),
        dim_outer: outer_char.dimension(),
        witness,
    })
}

/// `Sym^a(Sym^b C^2) == Sym^b(Sym^a C^2)` as characters.
pub fn hermite_check(a: u32, b: u32) -> Result<bool> {
    Ok(sym_of_sym_char(a, b, 2)? == sym_of_sym_char(b, a, 2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;
    use crate::qseries::qbinomial;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn decomposition(terms: &[(&[u32], i64)]) -> Vec<(Partition, BigInt)> {
        terms
            .iter()
            .map(|(l, m)| (part(l), BigInt::from(*m)))
            .collect()
    }

    /// Brute-force character of Sym^m(V) where V has the monomials of
    /// degree d in k variables as weight basis: sum over multisets.
    fn sym_power_brute(m: u32, d: u32, k: usize) -> MPoly<BigInt> {
        let basis = compositions(d, k);
        fn go(
            basis: &[Vec<u32>],
            start: usize,
            left: u32,
            acc: &mut Vec<u32>,
            out: &mut MPoly<BigInt>,
        ) {
            if left == 0 {
                out.add_term(acc.clone(), BigInt::one());
                return;
            }
            for i in start..basis.len() {
                for (a, b) in acc.iter_mut().zip(&basis[i]) {
                    *a += b;
                }
                go(basis, i, left - 1, acc, out);
                for (a, b) in acc.iter_mut().zip(&basis[i]) {
                    *a -= b;
                }
            }
        }
        let mut out = MPoly::zero(k);
        go(&basis, 0, m, &mut vec![0; k], &mut out);
        out
    }

    /// Brute-force character of wedge^i(Sym^m C^k): subsets of monomials.
    fn wedge_brute(i: u32, m: u32, k: usize) -> MPoly<BigInt> {
        let basis = compositions(m, k);
        let mut out = MPoly::zero(k);
        let n = basis.len();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() != i {
                continue;
            }
            let mut e = vec![0; k];
            for (j, b) in basis.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (a, x) in e.iter_mut().zip(b) {
                        *a += x;
                    }
                }
            }
            out.add_term(e, BigInt::one());
        }
        out
    }

    #[test]
    fn schur_examples() {
        let s = schur_poly(&part(&[1]), 3);
        assert_eq!(s.poly().len(), 3);
        assert!(schur_poly(&part(&[1, 1, 1, 1]), 3).is_zero());
        let s = schur_poly(&part(&[2, 1]), 3);
        assert_eq!(s.poly().len(), 7);
        assert_eq!(s.poly().coeff(&[1, 1, 1]), BigInt::from(2));
        // eight monomial-weighted tableaux: six of type x^2y plus 2 xyz
        assert_eq!(s.dimension(), BigInt::from(8));
        assert!(s.is_symmetric());
    }

    #[test]
    fn weyl_dimension_examples() {
        for d in 0..6u32 {
            for k in 1..5usize {
                assert_eq!(
                    weyl_dim(&part(&[d]), k),
                    BigUint::from(binomial((k as u64) + d as u64 - 1, d as u64) as u64)
                );
            }
        }
        assert_eq!(weyl_dim(&part(&[4, 2, 2]), 3), BigUint::from(6u32));
        assert_eq!(weyl_dim(&part(&[7, 3, 2]), 3), BigUint::from(35u32));
        for d in 0..=6 {
            for l in partitions_of(d) {
                for k in 1..=4 {
                    assert_eq!(
                        BigInt::from(weyl_dim(&l, k)),
                        schur_poly(&l, k).dimension()
                    );
                }
            }
        }
    }

    /// Hook-content formula: s_lambda(1,...,q^m) = q^{n(lambda)} prod [m+1+c]/[h].
    fn hook_content(lambda: &Partition, m: u32) -> QPoly {
        let hooks = lambda.hooks();
        let mut num = QPoly::one().shift(lambda.n_statistic());
        let mut den = QPoly::one();
        for (i, row) in hooks.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                let content = j as i64 - i as i64;
                let top = m as i64 + 1 + content;
                if top <= 0 {
                    return QPoly::zero();
                }
                num = &num * &crate::qseries::qnumber(top as u32);
                den = &den * &crate::qseries::qnumber(h);
            }
        }
        num.div_exact(&den).unwrap()
    }

    #[test]
    fn principal_specialization() {
        for d in 0..=5 {
            for m in 0..=5 {
                assert_eq!(schur_principal(&part(&[d]), m), qbinomial(m + d, d).unwrap());
            }
        }
        assert_eq!(
            schur_principal(&part(&[2, 1]), 2),
            QPoly::from_coeffs(&[0, 1, 2, 2, 2, 1])
        );
        assert_eq!(schur_principal(&part(&[1, 1]), 1), QPoly::monomial(1, 1));
        for d in 0..=6 {
            for l in partitions_of(d) {
                for m in 0..=4u32 {
                    let p = schur_principal(&l, m);
                    assert_eq!(p, hook_content(&l, m));
                    assert_eq!(p, schur_poly(&l, m as usize + 1).principal_specialization());
                }
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        for m in 0..=5 {
            assert_eq!(sym_of_sym_char(m, 1, 3).unwrap(), schur_poly(&part(&[m]), 3));
        }
        let d = schur_decompose(&sym_of_sym_char(2, 2, 2).unwrap()).unwrap();
        assert_eq!(d.terms, decomposition(&[(&[4], 1), (&[2, 2], 1)]));
        let s333 = sym_of_sym_char(3, 3, 3).unwrap();
        assert_eq!(s333.dimension(), BigInt::from(220));
        let d = schur_decompose(&s333).unwrap();
        assert_eq!(
            d.terms,
            decomposition(&[(&[9], 1), (&[7, 2], 1), (&[6, 3], 1), (&[5, 2, 2], 1), (&[4, 4, 1], 1)])
        );
        assert!(!d.is_virtual);
        // Only the two-row part survives in two variables.
        let d2 = schur_decompose(&sym_of_sym_char(3, 3, 2).unwrap()).unwrap();
        assert_eq!(d2.terms, decomposition(&[(&[9], 1), (&[7, 2], 1), (&[6, 3], 1)]));
    }

    #[test]
    fn plethysm_matches_brute_force() {
        for (m, d, k) in [(2, 2, 2), (3, 2, 3), (2, 3, 3), (3, 3, 2), (4, 2, 2)] {
            assert_eq!(*sym_of_sym_char(m, d, k).unwrap().poly(), sym_power_brute(m, d, k));
        }
        for (i, m, k) in [(2, 2, 2), (2, 3, 2), (3, 2, 3), (2, 2, 3)] {
            assert_eq!(*wedge_of_sym_char(i, m, k).unwrap().poly(), wedge_brute(i, m, k));
        }
    }

    #[test]
    fn plethysm_dimension_invariant() {
        for (m, d, k) in [(2, 3, 3), (3, 3, 3), (3, 4, 3), (4, 2, 4), (2, 5, 2)] {
            let inner = binomial(k as u64 + d as u64 - 1, d as u64) as u64;
            let expect = binomial(inner + m as u64 - 1, m as u64);
            assert_eq!(
                sym_of_sym_char(m, d, k).unwrap().dimension(),
                BigInt::from(expect)
            );
        }
    }

    #[test]
    fn wedge_examples() {
        for m in 1..=4 {
            assert_eq!(wedge_of_sym_char(1, m, 3).unwrap(), schur_poly(&part(&[m]), 3));
        }
        let d = schur_decompose(&wedge_of_sym_char(2, 2, 2).unwrap()).unwrap();
        assert_eq!(d.terms, decomposition(&[(&[3, 1], 1)]));
        for m in 1..=5u32 {
            let d = schur_decompose(&wedge_of_sym_char(2, m, 2).unwrap()).unwrap();
            let expect: Vec<(Partition, BigInt)> = (0..m)
                .filter(|j| 2 * m - 1 - 2 * j >= 1 + 2 * j)
                .map(|j| (part(&[2 * m - 1 - 2 * j, 1 + 2 * j]), BigInt::one()))
                .collect();
            assert_eq!(d.terms, expect, "m = {m}");
        }
    }

    #[test]
    fn decompose_examples_and_errors() {
        let l = part(&[3, 2, 1]);
        let d = schur_decompose(&schur_poly(&l, 3)).unwrap();
        assert_eq!(d.terms, vec![(l, BigInt::one())]);

        let p1 = schur_poly(&part(&[1]), 3);
        let cube = SymPoly::new(p1.poly().pow(3)).unwrap();
        let d = schur_decompose(&cube).unwrap();
        assert_eq!(
            d.terms,
            decomposition(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
        assert_eq!(d.reconstruct(3), cube);
        assert_eq!(d.to_string(), "(3) : 1\n(2,1) : 2\n(1,1,1) : 1\n");

        let x0 = MPoly::<BigInt>::var(2, 0);
        assert_eq!(SymPoly::new(x0.clone()), Err(Error::NotSymmetric));
        let mixed = &(&x0 + &MPoly::var(2, 1)) + &MPoly::one(2);
        assert_eq!(
            schur_decompose(&SymPoly::new(mixed).unwrap()),
            Err(Error::NotHomogeneous)
        );

        // virtual character
        let diff = SymPoly::new(
            schur_poly(&part(&[2]), 2).poly() - &schur_poly(&part(&[1, 1]), 2).poly().scale(&BigInt::from(3)),
        )
        .unwrap();
        let d = schur_decompose(&diff).unwrap();
        assert!(d.is_virtual);
        assert_eq!(d.terms, decomposition(&[(&[2], 1), (&[1, 1], -3)]));
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&part(&[2, 1]), &[1, 1, 1]), BigInt::from(2));
        assert_eq!(kostka(&part(&[3]), &[1, 2]), BigInt::from(1));
        assert_eq!(kostka(&part(&[2, 1]), &[3]), BigInt::zero());
    }

    #[test]
    fn foulkes_examples() {
        let r = foulkes_check(1, 4).unwrap();
        assert!(r.contained);
        let r = foulkes_check(2, 3).unwrap();
        assert!(r.contained);
        assert_eq!(r.dim_inner, BigInt::from(55));
        assert_eq!(r.dim_outer, BigInt::from(56));
        let inner: Vec<Partition> = r
            .witness
            .iter()
            .filter(|w| w.inner > BigInt::zero())
            .map(|w| w.lambda.clone())
            .collect();
        assert_eq!(inner, vec![part(&[6]), part(&[4, 2])]);
        let w = r.witness.iter().find(|w| w.lambda == part(&[2, 2, 2])).unwrap();
        assert_eq!((w.inner.clone(), w.outer.clone()), (BigInt::zero(), BigInt::one()));
        assert!(matches!(foulkes_check(3, 2), Err(Error::BadRange(_))));
    }

    #[test]
    fn hermite_small() {
        assert!(hermite_check(1, 5).unwrap());
        assert!(hermite_check(2, 3).unwrap());
        assert_eq!(sym_of_sym_char(2, 3, 2).unwrap().dimension(), BigInt::from(10));
    }

    #[test]
    fn guard_rejects_huge() {
        assert!(matches!(sym_of_sym_char(40, 40, 8), Err(Error::TooLarge(_))));
    }
}
