//! The Foulkes–Howe map `Sym^m(D^d U) -> D^d(Sym^m U)` as an integer matrix.
//!
//! Both bases are multisets of exponent vectors. The domain basis element
//! `{a_1, ..., a_m}` (each `|a_s| = d`) is the monomial `z_{a_1} ... z_{a_m}`.
//! The codomain basis element `{b_1, ..., b_d}` (each `|b_i| = m`) is the
//! symmetric-group orbit of the monomial whose `i`-th factor is `u^(i)^{b_i}`;
//! its canonical representative lists the `b_i` in descending lex order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, modular_rank, random_primes, rank_exact, Field, IntMatrix};
use crate::poly::{binomial, compositions, MPoly};

/// Largest `rows * cols` accepted by [`fh_matrix`].
pub const ENTRY_GUARD: u128 = 10_000_000;
/// Exact rank is used up to this many rows or columns.
pub const EXACT_LIMIT: usize = 800;
pub const DEFAULT_SEED: u64 = 0x5eed_c40e;

/// Monomial `u^(1)_{b_1} u^(2)_{b_2} ... u^(d)_{b_d}`, stored as `(b_1, ..., b_d)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UMonomial(pub Vec<usize>);

impl fmt::Display for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, b)| format!("u{}_{}", i + 1, b))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Image of `z_alpha`: every tuple `(b_1..b_d)` with content `alpha`, each with
/// coefficient one.
pub fn mu_sharp_generator(alpha: &[u32], d: u32) -> Result<BTreeMap<UMonomial, BigInt>> {
    let found: u32 = alpha.iter().sum();
    if found != d {
        return Err(Error::BadDegree { expected: d, found });
    }
    let mut out = BTreeMap::new();
    let mut left = alpha.to_vec();
    let mut cur = Vec::with_capacity(d as usize);
    fn go(left: &mut [u32], cur: &mut Vec<usize>, d: usize, out: &mut BTreeMap<UMonomial, BigInt>) {
        if cur.len() == d {
            out.insert(UMonomial(cur.clone()), BigInt::from(1));
            return;
        }
        for j in 0..left.len() {
            if left[j] > 0 {
                left[j] -= 1;
                cur.push(j);
                go(left, cur, d, out);
                cur.pop();
                left[j] += 1;
            }
        }
    }
    go(&mut left, &mut cur, d as usize, &mut out);
    Ok(out)
}

/// Non-decreasing index sequences of length `size` over `0..items`, lex order.
pub fn multisets(items: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(items: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items {
            cur.push(i);
            go(items, size, i, cur, out);
            cur.pop();
        }
    }
    go(items, size, 0, &mut Vec::with_capacity(size), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct FHMatrix {
    pub d: u32,
    pub n: u32,
    pub m: u32,
    /// Domain: multisets of `m` vectors of weight `d`.
    pub domain: Vec<Vec<Vec<u32>>>,
    /// Codomain: multisets of `d` vectors of weight `m`, descending lex.
    pub codomain: Vec<Vec<Vec<u32>>>,
    pub matrix: IntMatrix,
}

fn basis_sizes(d: u32, n: u32, m: u32) -> (u128, u128) {
    let nd = binomial((d + n) as u64, n as u64);
    let nm = binomial((m + n) as u64, n as u64);
    let cols = binomial((nd + m as u128 - 1) as u64, m as u64);
    let rows = binomial((nm + d as u128 - 1) as u64, d as u64);
    (rows, cols)
}

/// Column of the matrix: the product of the `m` generator images, read off on
/// canonical monomials. States are `d x (n+1)` exponent matrices.
fn column(
    factors: &[usize],
    images: &[Vec<Vec<u8>>],
    width: usize,
    d: usize,
    row_lookup: &FxHashMap<Vec<u8>, usize>,
) -> Vec<(usize, u128)> {
    let mut states: FxHashMap<Vec<u8>, u128> = FxHashMap::default();
    states.insert(vec![0u8; d * width], 1);
    for &f in factors {
        let mut next: FxHashMap<Vec<u8>, u128> = FxHashMap::default();
        next.reserve(states.len() * images[f].len());
        for (state, c) in &states {
            for incr in &images[f] {
                let mut s = state.clone();
                for (i, &b) in incr.iter().enumerate() {
                    s[i * width + b as usize] += 1;
                }
                *next.entry(s).or_default() += c;
            }
        }
        states = next;
    }
    let mut out: Vec<(usize, u128)> = states
        .into_iter()
        .filter_map(|(s, c)| row_lookup.get(&s).map(|&r| (r, c)))
        .collect();
    out.sort_unstable();
    out
}

pub fn fh_matrix(d: u32, n: u32, m: u32) -> Result<FHMatrix> {
    if d == 0 || m == 0 {
        return Err(Error::BadRange(format!("need d, m >= 1, got d={d}, m={m}")));
    }
    let (rows, cols) = basis_sizes(d, n, m);
    if rows.saturating_mul(cols) > ENTRY_GUARD || d * (m + 1) > 255 {
        return Err(Error::TooLarge(format!(
            "phi_({d},{n},{m}) would be {rows} x {cols}"
        )));
    }
    let width = n as usize + 1;
    let alphas = compositions(d, width);
    let betas = compositions(m, width);
    let domain_idx = multisets(alphas.len(), m as usize);
    let codomain_idx = multisets(betas.len(), d as usize);

    let row_lookup: FxHashMap<Vec<u8>, usize> = codomain_idx
        .iter()
        .enumerate()
        .map(|(r, seq)| {
            let key: Vec<u8> = seq.iter().flat_map(|&b| betas[b].iter().map(|&x| x as u8)).collect();
            (key, r)
        })
        .collect();
    let images: Vec<Vec<Vec<u8>>> = alphas
        .iter()
        .map(|a| {
            mu_sharp_generator(a, d)
                .expect("weight matches")
                .into_keys()
                .map(|u| u.0.into_iter().map(|b| b as u8).collect())
                .collect()
        })
        .collect();

    let columns: Vec<Vec<(usize, u128)>> = domain_idx
        .par_iter()
        .map(|seq| column(seq, &images, width, d as usize, &row_lookup))
        .collect();
    let triplets = columns
        .into_iter()
        .enumerate()
        .flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, BigInt::from(v))));
    let matrix = IntMatrix::from_triplets(codomain_idx.len(), domain_idx.len(), triplets);

    let expand = |seqs: Vec<Vec<usize>>, vecs: &[Vec<u32>]| -> Vec<Vec<Vec<u32>>> {
        seqs.into_iter()
            .map(|s| s.into_iter().map(|i| vecs[i].clone()).collect())
            .collect()
    };
    Ok(FHMatrix {
        d,
        n,
        m,
        domain: expand(domain_idx, &alphas),
        codomain: expand(codomain_idx, &betas),
        matrix,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    Exact,
    Modular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FHReport {
    pub d: u32,
    pub n: u32,
    pub m: u32,
    pub dim_domain: usize,
    pub dim_codomain: usize,
    pub rank: usize,
    #[serde(rename = "dim_J_m")]
    pub dim_j_m: usize,
    pub dim_coker: usize,
    pub method: RankMethod,
    pub primes: Vec<u64>,
    /// Ranks per prime, when modular.
    pub prime_ranks: Vec<usize>,
    /// Set when the map is injective or surjective with certainty.
    pub proven_full_rank: bool,
}

/// How ranks are computed.
#[derive(Clone, Debug)]
pub struct RankOptions {
    /// Use modular rank even for small matrices.
    pub force_modular: bool,
    /// Explicit primes; otherwise three seeded random 60-bit primes.
    pub primes: Option<Vec<u64>>,
    pub seed: u64,
}

impl Default for RankOptions {
    fn default() -> Self {
        Self {
            force_modular: false,
            primes: None,
            seed: DEFAULT_SEED,
        }
    }
}

pub fn analyze(fh: &FHMatrix, opts: &RankOptions) -> Result<FHReport> {
    let rows = fh.matrix.nrows();
    let cols = fh.matrix.ncols();
    let exact = !opts.force_modular && opts.primes.is_none() && rows.min(cols) <= EXACT_LIMIT;
    let (rank, method, primes, prime_ranks) = if exact {
        (rank_exact(&fh.matrix), RankMethod::Exact, vec![], vec![])
    } else {
        let primes = match &opts.primes {
            Some(p) => p.clone(),
            None => random_primes(&mut ChaCha8Rng::seed_from_u64(opts.seed), 3),
        };
        let mr = modular_rank(&fh.matrix, &primes)?;
        (mr.rank, RankMethod::Modular, mr.primes, mr.ranks)
    };
    // A modular rank is a lower bound on the rational rank.
    let full = rank == rows.min(cols);
    Ok(FHReport {
        d: fh.d,
        n: fh.n,
        m: fh.m,
        dim_domain: cols,
        dim_codomain: rows,
        rank,
        dim_j_m: cols - rank,
        dim_coker: rows - rank,
        method,
        primes,
        prime_ranks,
        proven_full_rank: full,
    })
}

pub fn fh_analysis(d: u32, n: u32, m: u32) -> Result<FHReport> {
    analyze(&fh_matrix(d, n, m)?, &RankOptions::default())
}

/// Kernel over `F_p`, entries in `0..p`.
pub fn fh_kernel_mod_p(d: u32, n: u32, m: u32, p: u64) -> Result<Vec<Vec<BigInt>>> {
    crate::exactla::modp::check_prime(p)?;
    kernel_basis(&fh_matrix(d, n, m)?.matrix, Field::PrimeField(p))
}

/// Kernel over the rationals as primitive integer vectors.
pub fn fh_kernel_rational(d: u32, n: u32, m: u32) -> Result<Vec<Vec<BigInt>>> {
    kernel_basis(&fh_matrix(d, n, m)?.matrix, Field::Rationals)
}

/// Coordinates of a polynomial in the `z` variables on the domain basis.
/// Variable `k` of `p` is `z_alpha` for the `k`-th exponent vector of
/// weight `d` in descending lex order.
pub fn domain_vector(fh: &FHMatrix, p: &MPoly<BigInt>) -> Vec<BigInt> {
    let alphas = compositions(fh.d, fh.n as usize + 1);
    fh.domain
        .iter()
        .map(|el| {
            let mut e = vec![0u32; alphas.len()];
            for a in el {
                e[alphas.iter().position(|x| x == a).expect("weight d")] += 1;
            }
            p.coeff(&e)
        })
        .collect()
}

fn z_name(alpha: &[u32]) -> String {
    if alpha.iter().all(|&a| a < 10) {
        format!("z{}", alpha.iter().map(|a| a.to_string()).collect::<String>())
    } else {
        let parts: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
        format!("z({})", parts.join(","))
    }
}

/// `z200*z011^2` style name of a domain basis element.
pub fn domain_monomial(element: &[Vec<u32>]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < element.len() {
        let mut j = i;
        while j < element.len() && element[j] == element[i] {
            j += 1;
        }
        let name = z_name(&element[i]);
        out.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name });
        i = j;
    }
    out.join("*")
}

/// Writes a kernel vector as a polynomial in the `z` variables.
pub fn render_kernel_vector(fh: &FHMatrix, v: &[BigInt]) -> String {
    let mut s = String::new();
    for (c, e) in v.iter().zip(&fh.domain) {
        if c.is_zero() {
            continue;
        }
        let mag = c.magnitude().to_u64().map_or_else(|| c.magnitude().to_string(), |x| x.to_string());
        let sign = if *c < BigInt::zero() { "-" } else { "+" };
        if s.is_empty() {
            if sign == "-" {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        if mag != "1" {
            s.push_str(&mag);
            s.push('*');
        }
        s.push_str(&domain_monomial(e));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
