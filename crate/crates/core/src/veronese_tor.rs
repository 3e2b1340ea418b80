//! Koszul homology of Veronese subrings: `Tor_i^{Sym(R_n)}(R[n], k)_d` for a
//! graded ring `R`, and the eventual polynomial growth of these dimensions
//! in `n`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{random_primes, rank_exact, rank_mod_p, solve_rational, IntMatrix, Rational};
use crate::poly::{binomial, compositions, MPoly};

/// Largest Koszul term dimension accepted.
pub const TERM_GUARD: usize = 60_000;
/// Exact rank is used when every term has at most this dimension.
pub const EXACT_TERM_LIMIT: usize = 400;
pub const TOR_SEED: u64 = 0x7012_5eed;

/// `k[x_1..x_k] / (relations)`, relations homogeneous with integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRingSpec {
    pub nvars: usize,
    pub relations: Vec<MPoly<BigInt>>,
}

impl GradedRingSpec {
    pub fn polynomial(nvars: usize) -> Self {
        Self {
            nvars,
            relations: Vec::new(),
        }
    }

    pub fn with_relations(nvars: usize, relations: Vec<MPoly<BigInt>>) -> Result<Self> {
        for r in &relations {
            if r.nvars() != nvars {
                return Err(Error::BadShape(format!(
                    "relation in {} variables for a ring in {nvars}",
                    r.nvars()
                )));
            }
            if r.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Self { nvars, relations })
    }

    fn reducer(&self) -> Result<Reducer> {
        if self.relations.is_empty() {
            return Ok(Reducer::Free);
        }
        if self.relations.iter().all(|r| r.len() == 1) {
            return Ok(Reducer::Monomial(
                self.relations.iter().map(|r| r.terms().next().unwrap().0.clone()).collect(),
            ));
        }
        if self.relations.len() == 1 && self.nvars <= 3 {
            let f = &self.relations[0];
            let (lead, lc) = f
                .terms()
                .max_by(|a, b| grevlex(a.0, b.0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            if lc.abs().is_one() {
                return Ok(Reducer::Principal {
                    lead,
                    lc,
                    poly: f.clone(),
                });
            }
            return Err(Error::RelationReductionUnsupported(
                "leading coefficient of the relation is not a unit".into(),
            ));
        }
        Err(Error::RelationReductionUnsupported(format!(
            "{} relations in {} variables",
            self.relations.len(),
            self.nvars
        )))
    }
}

/// Degree-reverse-lexicographic order.
fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Normal forms modulo the relations; each supported case has its relations
/// as a Gröbner basis.
enum Reducer {
    Free,
    Monomial(Vec<Vec<u32>>),
    Principal {
        lead: Vec<u32>,
        lc: BigInt,
        poly: MPoly<BigInt>,
    },
}

impl Reducer {
    fn leads(&self) -> Vec<&[u32]> {
        match self {
            Reducer::Free => vec![],
            Reducer::Monomial(ms) => ms.iter().map(Vec::as_slice).collect(),
            Reducer::Principal { lead, .. } => vec![lead.as_slice()],
        }
    }

    fn is_standard(&self, e: &[u32]) -> bool {
        self.leads().iter().all(|l| !divides(l, e))
    }

    fn normal_form(&self, mut p: MPoly<BigInt>) -> MPoly<BigInt> {
        match self {
            Reducer::Free => p,
            Reducer::Monomial(_) => {
                let keep: Vec<(Vec<u32>, BigInt)> = p
                    .into_terms()
                    .into_iter()
                    .filter(|(e, _)| self.is_standard(e))
                    .collect();
                let mut out = MPoly::zero(keep.first().map_or(0, |t| t.0.len()));
                for (e, c) in keep {
                    out.add_term(e, c);
                }
                out
            }
            Reducer::Principal { lead, lc, poly } => loop {
                let hit = p
                    .terms()
                    .filter(|(e, _)| divides(lead, e))
                    .max_by(|a, b| grevlex(a.0, b.0))
                    .map(|(e, c)| (e.clone(), c.clone()));
                let Some((e, c)) = hit else {
                    return p;
                };
                let shift: Vec<u32> = e.iter().zip(lead).map(|(x, y)| x - y).collect();
                // lc is a unit, so 1 / lc = lc
                let factor = MPoly::monomial(shift, c * lc);
                p = &p - &(&factor * poly);
            },
        }
    }
}

/// Standard monomials spanning `R_degree`, in descending lex order.
pub fn graded_piece_basis(ring: &GradedRingSpec, degree: u32) -> Result<Vec<Vec<u32>>> {
    let reducer = ring.reducer()?;
    Ok(compositions(degree, ring.nvars)
        .into_iter()
        .filter(|e| reducer.is_standard(e))
        .collect())
}

/// `k`-subsets of `0..n` in lex order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

struct Strand {
    reducer: Reducer,
    nvars: usize,
    n: u32,
    /// Basis of `R_{jn}` indexed by `j`.
    pieces: HashMap<u32, Vec<Vec<u32>>>,
}

impl Strand {
    fn new(ring: &GradedRingSpec, n: u32) -> Result<Self> {
        Ok(Self {
            reducer: ring.reducer()?,
            nvars: ring.nvars,
            n,
            pieces: HashMap::new(),
        })
    }

    fn piece(&mut self, j: u32) -> &Vec<Vec<u32>> {
        let (n, nvars) = (self.n, self.nvars);
        let reducer = &self.reducer;
        self.pieces.entry(j).or_insert_with(|| {
            compositions(j * n, nvars)
                .into_iter()
                .filter(|e| reducer.is_standard(e))
                .collect()
        })
    }

    fn term_dim(&mut self, i: i64, j: i64) -> usize {
        if i < 0 || j < 0 {
            return 0;
        }
        let v = self.piece(1).len() as u64;
        let r = self.piece(j as u32).len();
        binomial(v, i as u64) as usize * r
    }

    /// `d(v_{a_1} ^ ... ^ v_{a_i} (x) r) = sum_s (-1)^s (... omit a_s ...) (x) v_{a_s} r`
    /// from `wedge^i R_n (x) R_{jn}` to `wedge^{i-1} R_n (x) R_{(j+1)n}`.
    fn differential(&mut self, i: usize, j: u32) -> IntMatrix {
        let v = self.piece(1).clone();
        let src = self.piece(j).clone();
        let tgt = self.piece(j + 1).clone();
        let tgt_index: HashMap<&Vec<u32>, usize> = tgt.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let lower: HashMap<Vec<usize>, usize> = subsets(v.len(), i - 1)
            .into_iter()
            .enumerate()
            .map(|(k, s)| (s, k))
            .collect();
        // products v_a * r, reduced
        let products: Vec<Vec<Vec<(usize, BigInt)>>> = v
            .iter()
            .map(|a| {
                src.iter()
                    .map(|r| {
                        let e: Vec<u32> = a.iter().zip(r).map(|(x, y)| x + y).collect();
                        let nf = self.reducer.normal_form(MPoly::monomial(e, BigInt::one()));
                        nf.terms().map(|(e, c)| (tgt_index[e], c.clone())).collect()
                    })
                    .collect()
            })
            .collect();
        let upper = subsets(v.len(), i);
        let mut triplets = Vec::new();
        for (col_s, s) in upper.iter().enumerate() {
            for pos in 0..s.len() {
                let mut rest = s.clone();
                let a = rest.remove(pos);
                let row_s = lower[&rest];
                let sign = if pos % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                for (ri, prod) in products[a].iter().enumerate() {
                    for (t, c) in prod {
                        triplets.push((row_s * tgt.len() + t, col_s * src.len() + ri, &sign * c));
                    }
                }
            }
        }
        IntMatrix::from_triplets(lower.len() * tgt.len(), upper.len() * src.len(), triplets)
    }
}

fn compose_is_zero(outer: &IntMatrix, inner: &IntMatrix) -> bool {
    let mut by_row: BTreeMap<usize, Vec<(usize, &BigInt)>> = BTreeMap::new();
    for (r, c, v) in inner.iter() {
        by_row.entry(r).or_default().push((c, v));
    }
    let mut acc: HashMap<(usize, usize), BigInt> = HashMap::new();
    for (t, m, a) in outer.iter() {
        if let Some(row) = by_row.get(&m) {
            for (s, b) in row {
                *acc.entry((t, *s)).or_default() += a * *b;
            }
        }
    }
    acc.values().all(Zero::is_zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorResult {
    pub n: u32,
    pub i: usize,
    pub d: usize,
    pub dim: usize,
    /// Dimensions of the incoming, middle and outgoing terms.
    pub terms: [usize; 3],
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
    pub primes: Vec<u64>,
}

/// Rank over `Q`: exact, or the largest modular rank once two primes agree on it.
fn rank_of(m: &IntMatrix, exact: bool, primes: &[u64]) -> Result<usize> {
    if exact || m.nnz() == 0 {
        return Ok(rank_exact(m));
    }
    let mut seen: Vec<usize> = Vec::new();
    for &p in primes {
        seen.push(rank_mod_p(m, p)?);
        let best = *seen.iter().max().unwrap();
        if seen.iter().filter(|&&r| r == best).count() >= 2 {
            return Ok(best);
        }
    }
    Ok(*seen.iter().max().unwrap())
}

pub fn koszul_tor(ring: &GradedRingSpec, n: u32, i: usize, d: usize) -> Result<TorResult> {
    if n == 0 {
        return Err(Error::BadRange("Veronese degree n must be positive".into()));
    }
    if i > d {
        return Ok(TorResult {
            n,
            i,
            d,
            dim: 0,
            terms: [0, 0, 0],
            rank_in: 0,
            rank_out: 0,
            exact: true,
            primes: vec![],
        });
    }
    let mut strand = Strand::new(ring, n)?;
    let (ii, dd) = (i as i64, d as i64);
    let terms = [
        strand.term_dim(ii + 1, dd - ii - 1),
        strand.term_dim(ii, dd - ii),
        strand.term_dim(ii - 1, dd - ii + 1),
    ];
    if terms.iter().any(|&t| t > TERM_GUARD) {
        return Err(Error::TooLarge(format!("Koszul terms {terms:?} for n = {n}")));
    }
    let exact = terms.iter().all(|&t| t <= EXACT_TERM_LIMIT);
    let primes = if exact {
        vec![]
    } else {
        random_primes(&mut ChaCha8Rng::seed_from_u64(TOR_SEED ^ n as u64), 5)
    };
    let d_in = (i < d).then(|| strand.differential(i + 1, (d - i - 1) as u32));
    let d_out = (i > 0).then(|| strand.differential(i, (d - i) as u32));
    if let (Some(a), Some(b)) = (&d_out, &d_in) {
        if !compose_is_zero(a, b) {
            return Err(Error::CheckFailed(format!("Koszul differentials do not compose to zero at n = {n}")));
        }
    }
    let rank_in = d_in.as_ref().map_or(Ok(0), |m| rank_of(m, exact, &primes))?;
    let rank_out = d_out.as_ref().map_or(Ok(0), |m| rank_of(m, exact, &primes))?;
    let dim = terms[1] as i64 - rank_in as i64 - rank_out as i64;
    if dim < 0 {
        return Err(Error::NegativeHomology(format!("n={n}, i={i}, d={d}: {dim}")));
    }
    Ok(TorResult {
        n,
        i,
        d,
        dim: dim as usize,
        terms,
        rank_in,
        rank_out,
        exact,
        primes: if exact { vec![] } else { primes },
    })
}

pub fn koszul_tor_dim(ring: &GradedRingSpec, n: u32, i: usize, d: usize) -> Result<usize> {
    Ok(koszul_tor(ring, n, i, d)?.dim)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    pub n: u32,
    pub d: usize,
    pub chain_sum: i64,
    pub homology_sum: i64,
    pub holds: bool,
}

/// Alternating sums of term dimensions and of Tor dimensions along the
/// degree-`d` strand.
pub fn euler_characteristic_check(ring: &GradedRingSpec, n: u32, d: usize) -> Result<EulerCheck> {
    let mut strand = Strand::new(ring, n)?;
    let mut chain_sum = 0i64;
    let mut homology_sum = 0i64;
    for i in 0..=d {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        chain_sum += sign * strand.term_dim(i as i64, (d - i) as i64) as i64;
        homology_sum += sign * koszul_tor_dim(ring, n, i, d)? as i64;
    }
    Ok(EulerCheck {
        n,
        d,
        chain_sum,
        homology_sum,
        holds: chain_sum == homology_sum,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorTable {
    pub i: usize,
    pub d: usize,
    pub entries: BTreeMap<u32, usize>,
}

impl TorTable {
    /// `n<TAB>dim` per line, with a header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tdim\n");
        for (n, v) in &self.entries {
            out.push_str(&format!("{n}\t{v}\n"));
        }
        out
    }
}

pub fn tor_table(ring: &GradedRingSpec, i: usize, d: usize, ns: &[u32]) -> Result<TorTable> {
    let dims: Vec<(u32, usize)> = ns
        .par_iter()
        .map(|&n| koszul_tor_dim(ring, n, i, d).map(|v| (n, v)))
        .collect::<Result<_>>()?;
    Ok(TorTable {
        i,
        d,
        entries: dims.into_iter().collect(),
    })
}

/// Polynomial in `n` with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial(pub Vec<Rational>);

impl Polynomial {
    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, n: i64) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * Rational::from_integer(n.into()) + c)
    }

    fn term(c: &Rational, k: usize) -> String {
        let var = match k {
            0 => String::new(),
            1 => "n".into(),
            _ => format!("n^{k}"),
        };
        let mag = c.abs();
        match (k, mag.is_one()) {
            (0, _) => mag.to_string(),
            (_, true) => var,
            _ => format!("{mag}*{var}"),
        }
    }

    pub fn leading_term(&self) -> String {
        let k = self.degree();
        let c = &self.0[k];
        format!("{}{}", if c.is_negative() { "-" } else { "" }, Self::term(c, k))
    }
}

/// `1/2*n^2 - 1/2*n`
impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for k in (0..self.0.len()).rev() {
            let c = &self.0[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            write!(f, "{}", Self::term(c, k))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub table: TorTable,
    pub polynomial: String,
    pub degree: usize,
    pub leading_term: String,
    /// First `n` of the fitted tail.
    pub onset: u32,
    pub bound: usize,
    pub bound_ok: bool,
}

/// Length of the longest suffix of `values` on which the finite differences
/// of order `k` vanish.
fn vanishing_suffix(values: &[i64], k: usize) -> usize {
    let len = values.len();
    for start in 0..len {
        let mut diffs: Vec<i64> = values[start..].to_vec();
        for _ in 0..k {
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        }
        if diffs.iter().all(|&x| x == 0) {
            return len - start;
        }
    }
    0
}

fn interpolate(points: &[(i64, i64)]) -> Result<Polynomial> {
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|&(x, _)| (0..points.len()).map(|k| Rational::from_integer(BigInt::from(x).pow(k as u32))).collect())
        .collect();
    let rhs: Vec<Rational> = points.iter().map(|&(_, y)| Rational::from_integer(y.into())).collect();
    Ok(Polynomial(solve_rational(&rows, &rhs)?.x))
}

/// Fits the table by the lowest-degree polynomial whose tail has at least
/// `degree + 3` points, searching degrees up to `(k - 1) d`.
pub fn fit_growth(table: TorTable, nvars: usize) -> Result<GrowthReport> {
    let bound = (nvars.saturating_sub(1)) * table.d;
    let ns: Vec<u32> = table.entries.keys().copied().collect();
    if ns.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::BadRange("n values must be consecutive".into()));
    }
    let values: Vec<i64> = table.entries.values().map(|&v| v as i64).collect();
    for degree in 0..=bound {
        let tail = vanishing_suffix(&values, degree + 1);
        if tail < degree + 3 {
            continue;
        }
        let start = values.len() - tail;
        let points: Vec<(i64, i64)> = (start..start + degree + 1).map(|k| (ns[k] as i64, values[k])).collect();
        let poly = interpolate(&points)?;
        let fitted = poly.degree();
        return Ok(GrowthReport {
            polynomial: poly.to_string(),
            degree: fitted,
            leading_term: poly.leading_term(),
            onset: ns[start],
            bound,
            bound_ok: fitted <= bound,
            table,
        });
    }
    Err(Error::NoStabilization { bound })
}

pub fn polynomial_growth_check(ring: &GradedRingSpec, i: usize, d: usize, ns: &[u32]) -> Result<GrowthReport> {
    fit_growth(tor_table(ring, i, d, ns)?, ring.nvars)
}
