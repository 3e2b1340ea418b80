//! Products of linear forms and the ternary cubic: coordinate recovery from
//! a product, the Hessian covariant, Aronhold's test, and the explicit
//! `d_1`, `d_2` complex for cubics in three variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::permutations;
use crate::error::{Error, Result};
use crate::exactla::{kernel_rational, parse_rational, rank_rational, solve_rational, IntMatrix, Rational};
use crate::poly::{determinant, MPoly};

/// Homogeneous form with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    poly: MPoly<Rational>,
    degree: u32,
}

impl Form {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        Self {
            poly: MPoly::zero(nvars),
            degree,
        }
    }

    pub fn new(poly: MPoly<Rational>, degree: u32) -> Result<Self> {
        for e in poly.terms().map(|(e, _)| e) {
            let found: u32 = e.iter().sum();
            if found != degree {
                return Err(Error::BadDegree { expected: degree, found });
            }
        }
        Ok(Self { poly, degree })
    }

    /// Degree read off the terms; the zero polynomial is rejected.
    pub fn from_poly(poly: MPoly<Rational>) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroForm);
        }
        let degree = poly.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        Ok(Self { poly, degree })
    }

    pub fn from_terms(
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut poly = MPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::BadShape(format!("exponent {e:?} for {nvars} variables")));
            }
            poly.add_term(e, c);
        }
        Self::new(poly, degree)
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MPoly<Rational> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, alpha: &[u32]) -> Rational {
        self.poly.coeff(alpha)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            poly: self.poly.scale(c),
            degree: self.degree,
        }
    }

    /// Linear substitution `x_i -> sum_k g[i][k] x_k`.
    pub fn substitute(&self, g: &[Vec<Rational>]) -> Self {
        let n = self.nvars();
        let images: Vec<MPoly<Rational>> = g
            .iter()
            .map(|row| {
                let mut p = MPoly::zero(n);
                for (k, c) in row.iter().enumerate() {
                    p.add_term(unit(n, k), c.clone());
                }
                p
            })
            .collect();
        let poly = if self.poly.is_zero() {
            MPoly::zero(n)
        } else {
            self.poly.compose(&images)
        };
        Self {
            poly,
            degree: self.degree,
        }
    }

    /// JSON object mapping `"a0,a1,a2"` to `"p/q"`.
    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, String> = self
            .poly
            .terms()
            .map(|(e, c)| (exponent_key(e), c.to_string()))
            .collect();
        serde_json::to_string(&map).expect("string map serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let map: BTreeMap<String, serde_json::Value> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut terms = Vec::new();
        for (k, v) in map {
            let e: Vec<u32> = k
                .split(',')
                .map(|s| s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {k:?}"))))
                .collect::<Result<_>>()?;
            let c = match v {
                serde_json::Value::String(s) => parse_rational(&s)?,
                serde_json::Value::Number(n) if n.is_i64() => Rational::from_integer(n.as_i64().unwrap().into()),
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            terms.push((e, c));
        }
        let Some((first, _)) = terms.first() else {
            return Err(Error::Parse("form has no terms".into()));
        };
        let nvars = first.len();
        let degree = first.iter().sum();
        Self::from_terms(nvars, degree, terms)
    }
}

fn exponent_key(e: &[u32]) -> String {
    e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn unit(n: usize, k: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[k] = 1;
    e
}

/// `3/2*x0^2*x1 - x2^3` style rendering, highest monomial first.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.poly.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn is_degenerate(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> MPoly<Rational> {
        let n = self.coeffs.len();
        let mut p = MPoly::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(unit(n, k), c.clone());
        }
        p
    }
}

pub fn expand_product(forms: &[LinearForm]) -> Result<Form> {
    let Some(first) = forms.first() else {
        return Err(Error::BadShape("empty product".into()));
    };
    let n = first.coeffs.len();
    let mut p = MPoly::one(n);
    for l in forms {
        if l.coeffs.len() != n {
            return Err(Error::BadShape("linear forms of different lengths".into()));
        }
        p = &p * &l.to_poly();
    }
    Ok(Form {
        poly: p,
        degree: forms.len() as u32,
    })
}

/// Elementary symmetric polynomial `e_k` of the listed variables.
fn elementary_poly(k: usize, vars: &[usize], nvars: usize) -> MPoly<BigInt> {
    let mut out = MPoly::zero(nvars);
    fn go(k: usize, vars: &[usize], start: usize, e: &mut Vec<u32>, out: &mut MPoly<BigInt>) {
        if k == 0 {
            out.add_term(e.clone(), BigInt::one());
            return;
        }
        for i in start..vars.len() {
            e[vars[i]] += 1;
            go(k - 1, vars, i + 1, e, out);
            e[vars[i]] -= 1;
        }
    }
    go(k, vars, 0, &mut vec![0; nvars], &mut out);
    out
}

fn elementary_values(k: usize, vals: &[Rational]) -> Rational {
    // coefficients of prod (1 + v t)
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for v in vals {
        for j in (1..=k).rev() {
            e[j] = &e[j] + &e[j - 1] * v;
        }
    }
    e[k].clone()
}

/// `d x d` matrix with entry `(k, i) = e_k(v^(1), ..., v^(d) without v^(i))`.
pub fn e_matrix(d: usize) -> Vec<Vec<MPoly<BigInt>>> {
    (0..d)
        .map(|k| {
            (0..d)
                .map(|i| {
                    let others: Vec<usize> = (0..d).filter(|&j| j != i).collect();
                    elementary_poly(k, &others, d)
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EMatrixReport {
    pub d: usize,
    /// Coefficient of `v1^(d-1) v2^(d-2) ... v(d-1)` in the determinant.
    pub leading_term_coefficient: BigInt,
    pub determinant_terms: usize,
    pub holds: bool,
}

pub fn e_matrix_det_check(d: usize) -> Result<EMatrixReport> {
    if d == 0 {
        return Err(Error::BadRange("d must be positive".into()));
    }
    if d > 5 {
        return Err(Error::TooLarge(format!("symbolic {d} x {d} determinant")));
    }
    let det = determinant(&e_matrix(d), d);
    let lead: Vec<u32> = (0..d).map(|i| (d - 1 - i) as u32).collect();
    let c = det.coeff(&lead);
    Ok(EMatrixReport {
        d,
        holds: c.is_one(),
        leading_term_coefficient: c,
        determinant_terms: det.len(),
    })
}

/// Given the `x_1`-coefficients `v1` of the factors `x_0 + v1_i x_1 + ...` of
/// `f`, solves for the remaining coefficients. Row `i` of the result is the
/// coefficient vector of the `i`-th factor.
pub fn recover_coordinates(d: usize, n: usize, v1: &[Rational], f: &Form) -> Result<Vec<Vec<Rational>>> {
    if v1.len() != d || f.nvars() != n + 1 || f.degree() as usize != d || n == 0 {
        return Err(Error::BadShape(format!(
            "need {d} values and a degree-{d} form in {} variables",
            n + 1
        )));
    }
    let m: Vec<Vec<Rational>> = (0..d)
        .map(|k| {
            (0..d)
                .map(|i| {
                    let others: Vec<Rational> =
                        v1.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
                    elementary_values(k, &others)
                })
                .collect()
        })
        .collect();
    if rank_rational(&m) < d {
        return Err(Error::SingularM);
    }
    let mut forms: Vec<Vec<Rational>> = v1.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
    for j in 2..=n {
        let rhs: Vec<Rational> = (0..d)
            .map(|k| {
                let mut e = vec![0u32; n + 1];
                e[0] = (d - 1 - k) as u32;
                e[1] = k as u32;
                e[j] += 1;
                f.coeff(&e)
            })
            .collect();
        let sol = solve_rational(&m, &rhs)?;
        for (form, x) in forms.iter_mut().zip(sol.x) {
            form.push(x);
        }
    }
    let linear: Vec<LinearForm> = forms.iter().cloned().map(LinearForm::new).collect();
    if expand_product(&linear)? != *f {
        return Err(Error::Inconsistent);
    }
    Ok(forms)
}

fn check_cubic(f: &Form) -> Result<()> {
    if f.nvars() != 3 || f.degree() != 3 {
        return Err(Error::BadShape(format!(
            "expected a ternary cubic, got degree {} in {} variables",
            f.degree(),
            f.nvars()
        )));
    }
    Ok(())
}

/// Determinant of the matrix of second partial derivatives.
pub fn hessian_cubic(f: &Form) -> Result<Form> {
    check_cubic(f)?;
    Ok(Form {
        poly: hessian_poly(&f.poly, &[0, 1, 2]),
        degree: 3,
    })
}

fn hessian_poly<C: crate::poly::Coeff>(p: &MPoly<C>, vars: &[usize]) -> MPoly<C> {
    let first: Vec<MPoly<C>> = vars.iter().map(|&i| p.derivative(i)).collect();
    let h: Vec<Vec<MPoly<C>>> = first
        .iter()
        .map(|fi| vars.iter().map(|&j| fi.derivative(j)).collect())
        .collect();
    determinant(&h, p.nvars())
}

/// A nonzero cubic is a product of linear forms iff it is proportional to
/// its Hessian.
pub fn aronhold_test(f: &Form) -> Result<bool> {
    check_cubic(f)?;
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let h = hessian_cubic(f)?;
    let (e, c) = f.poly.terms().next().expect("nonzero");
    let lambda = h.coeff(e) / c;
    Ok(f.scale(&lambda) == h)
}

/// Exponents of ternary cubic monomials in the order `003, 012, ..., 300`.
pub const CUBIC_EXPONENTS: [[u32; 3]; 10] = [
    [0, 0, 3],
    [0, 1, 2],
    [0, 2, 1],
    [0, 3, 0],
    [1, 0, 2],
    [1, 1, 1],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
    [3, 0, 0],
];

fn cubic_index(e: &[u32]) -> usize {
    CUBIC_EXPONENTS.iter().position(|x| x == e).expect("cubic exponent")
}

/// `3! / alpha!`
fn cubic_multinomial(e: &[u32; 3]) -> i64 {
    let fact = |k: u32| (1..=k as i64).product::<i64>();
    6 / (fact(e[0]) * fact(e[1]) * fact(e[2]))
}

/// Rows of `d_2`; `a012` is the coordinate at exponent `(0,1,2)`.
const D2_ROWS: [&str; 10] = [
    "0&0&0&a003&0&0&-3a012&0&3a021&-a030",
    "0&0&-3a003&0&0&6a012&3a102&-3a021&-6a111&3a120",
    "0&3a003&0&0&-3a012&-6a102&0&6a111&3a201&-3a210",
    "-a003&0&0&0&3a102&0&0&-3a201&0&a300",
    "0&0&3a012&-3a102&0&-6a021&6a111&3a030&-3a120&0",
    "0&-6a012&6a102&0&6a021&0&-6a201&-6a120&6a210&0",
    "3a012&-3a102&0&0&-6a111&6a201&0&3a210&-3a300&0",
    "0&3a021&-6a111&3a201&-3a030&6a120&-3a210&0&0&0",
    "-3a021&6a111&-3a201&0&3a120&-6a210&3a300&0&0&0",
    "a030&-3a120&3a210&-a300&0&0&0&0&0&0",
];

/// Entries of `d_2` as `(multiplier, coordinate index)`.
fn d2_table() -> Vec<Vec<Option<(i64, usize)>>> {
    D2_ROWS
        .iter()
        .map(|row| {
            row.split('&')
                .map(|entry| {
                    if entry == "0" {
                        return None;
                    }
                    let (mult, name) = entry.split_once('a').expect("entry has a coordinate");
                    let mult = match mult {
                        "" => 1,
                        "-" => -1,
                        s => s.parse().expect("integer multiplier"),
                    };
                    let e: Vec<u32> = name.bytes().map(|b| (b - b'0') as u32).collect();
                    Some((mult, cubic_index(&e)))
                })
                .collect()
        })
        .collect()
}

pub fn d2_matrix(a: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    if a.len() != 10 {
        return Err(Error::BadShape(format!("expected 10 coordinates, got {}", a.len())));
    }
    Ok(d2_table()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| x.map_or_else(Rational::zero, |(c, i)| &a[i] * Rational::from_integer(c.into())))
                .collect()
        })
        .collect())
}

/// `d_2` over the polynomial ring in the ten coordinates.
pub fn d2_matrix_symbolic() -> Vec<Vec<MPoly<Rational>>> {
    d2_table()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| match x {
                    None => MPoly::zero(10),
                    Some((c, i)) => MPoly::monomial(unit(10, i), Rational::from_integer(c.into())),
                })
                .collect()
        })
        .collect()
}

/// Coordinates `a_alpha` with `f = sum (3!/alpha!) a_alpha x^alpha`.
pub fn divided_power_coordinates(f: &Form) -> Result<Vec<Rational>> {
    check_cubic(f)?;
    Ok(CUBIC_EXPONENTS
        .iter()
        .map(|e| f.coeff(e) / Rational::from_integer(cubic_multinomial(e).into()))
        .collect())
}

pub fn cubic_from_divided_powers(a: &[Rational]) -> Result<Form> {
    if a.len() != 10 {
        return Err(Error::BadShape(format!("expected 10 coordinates, got {}", a.len())));
    }
    Form::from_terms(
        3,
        3,
        CUBIC_EXPONENTS
            .iter()
            .zip(a)
            .map(|(e, c)| (e.to_vec(), c * Rational::from_integer(cubic_multinomial(e).into()))),
    )
}

/// Coefficient vector of the Hessian of the cubic with divided-power
/// coordinates `a`, each entry a cubic polynomial in the ten `a`'s.
pub fn hessian_covariant_symbolic() -> Vec<MPoly<Rational>> {
    // variables: ten coordinates, then x, y, z
    let mut f = MPoly::zero(13);
    for (i, e) in CUBIC_EXPONENTS.iter().enumerate() {
        let mut exp = unit(13, i);
        exp[10..].copy_from_slice(e);
        f.add_term(exp, Rational::from_integer(cubic_multinomial(e).into()));
    }
    let h = hessian_poly(&f, &[10, 11, 12]);
    let mut out = vec![MPoly::zero(10); 10];
    for (e, c) in h.terms() {
        out[cubic_index(&e[10..])].add_term(e[..10].to_vec(), c.clone());
    }
    out
}

/// A left annihilator of `d_2` of the shape `w_i = s_i * cov_{pi(alpha_i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annihilator {
    /// `pi`, acting on exponent positions: entry `i` of the row uses the
    /// covariant coefficient at `(alpha[pi[0]], alpha[pi[1]], alpha[pi[2]])`.
    pub positions: Vec<usize>,
    /// Primitive integer scalars `s_i`, all nonzero.
    pub scalars: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub skew_symmetric: bool,
    pub linear: Annihilator,
    pub hessian: Annihilator,
    pub composition_zero: bool,
    pub generic_rank: usize,
    pub fermat_rank: usize,
    pub xyz_rank: usize,
    pub decomposable_ranks: Vec<usize>,
}

fn permuted_index(i: usize, pi: &[usize]) -> usize {
    let e = CUBIC_EXPONENTS[i];
    cubic_index(&[e[pi[0]], e[pi[1]], e[pi[2]]])
}

/// Integer kernel of a rational matrix.
fn kernel_of(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = IntMatrix::zeros(rows.len(), ncols);
    for (r, row) in rows.iter().enumerate() {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for (c, x) in row.iter().enumerate() {
            m.set(r, c, (x * Rational::from_integer(l.clone())).to_integer());
        }
    }
    kernel_rational(&m)
}

fn random_point(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..10).map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into())).collect()
}

/// Searches the six position permutations for a row vector `w` with
/// `w * d_2 = 0`, solving for the scalars at sample points and confirming
/// the identity symbolically.
fn find_annihilator(cov: &[MPoly<Rational>], rng: &mut ChaCha8Rng) -> Option<(Annihilator, bool)> {
    let d2 = d2_matrix_symbolic();
    let points: Vec<Vec<Rational>> = (0..6).map(|_| random_point(rng)).collect();
    for pi in permutations(3) {
        let pi: Vec<usize> = pi.values().iter().map(|v| v - 1).collect();
        let mut rows = Vec::new();
        for a in &points {
            let d2a = d2_matrix(a).expect("ten coordinates");
            let w: Vec<Rational> = (0..10).map(|i| cov[permuted_index(i, &pi)].eval(a)).collect();
            for j in 0..10 {
                rows.push((0..10).map(|i| &w[i] * &d2a[i][j]).collect());
            }
        }
        let kernel = kernel_of(&rows);
        if kernel.len() != 1 || kernel[0].iter().any(Zero::is_zero) {
            continue;
        }
        let s = kernel[0].clone();
        let exact = (0..10).all(|j| {
            let mut acc = MPoly::zero(10);
            for i in 0..10 {
                let w = cov[permuted_index(i, &pi)].scale(&Rational::from_integer(s[i].clone()));
                acc = &acc + &(&w * &d2[i][j]);
            }
            acc.is_zero()
        });
        return Some((
            Annihilator {
                positions: pi,
                scalars: s,
            },
            exact,
        ));
    }
    None
}

pub fn complex_checks(seed: u64) -> Result<ComplexReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d2 = d2_matrix_symbolic();
    let skew = (0..10).all(|i| (0..10).all(|j| (&d2[i][j] + &d2[j][i]).is_zero()));
    if !skew {
        return Err(Error::CheckFailed("d2 is not skew-symmetric".into()));
    }

    let linear_cov: Vec<MPoly<Rational>> = (0..10)
        .map(|i| MPoly::monomial(unit(10, i), Rational::one()))
        .collect();
    let (linear, linear_exact) = find_annihilator(&linear_cov, &mut rng)
        .ok_or_else(|| Error::CheckFailed("no linear annihilator of d2 with nonzero scalars".into()))?;
    let (hessian, hessian_exact) = find_annihilator(&hessian_covariant_symbolic(), &mut rng)
        .ok_or_else(|| Error::CheckFailed("no Hessian annihilator of d2 with nonzero scalars".into()))?;
    if !(linear_exact && hessian_exact) {
        return Err(Error::CheckFailed("d1 * d2 does not vanish identically".into()));
    }

    let generic_rank = rank_rational(&d2_matrix(&random_point(&mut rng))?);
    if generic_rank != 8 {
        return Err(Error::CheckFailed(format!("generic rank of d2 is {generic_rank}, expected 8")));
    }
    let rank_of = |f: &Form| -> Result<usize> { Ok(rank_rational(&d2_matrix(&divided_power_coordinates(f)?)?)) };
    let int = |k: i64| Rational::from_integer(k.into());
    let fermat = Form::from_terms(3, 3, [[3, 0, 0], [0, 3, 0], [0, 0, 3]].map(|e| (e.to_vec(), int(1))))?;
    let xyz = Form::from_terms(3, 3, [(vec![1, 1, 1], int(1))])?;
    let fermat_rank = rank_of(&fermat)?;
    let xyz_rank = rank_of(&xyz)?;
    let mut decomposable_ranks = Vec::new();
    for _ in 0..10 {
        let forms: Vec<LinearForm> = (0..3)
            .map(|_| LinearForm::new((0..3).map(|_| int(rng.gen_range(-6..=6))).collect()))
            .collect();
        decomposable_ranks.push(rank_of(&expand_product(&forms)?)?);
    }
    if xyz_rank > 6 || decomposable_ranks.iter().any(|&r| r > 6) {
        return Err(Error::CheckFailed(format!(
            "rank of d2 above 6 at a product of lines: xyz {xyz_rank}, samples {decomposable_ranks:?}"
        )));
    }
    Ok(ComplexReport {
        skew_symmetric: skew,
        linear,
        hessian,
        composition_zero: true,
        generic_rank,
        fermat_rank,
        xyz_rank,
        decomposable_ranks,
    })
}
