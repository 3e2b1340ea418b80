//! Arithmetic and elimination over prime fields `Z/pZ` with `p < 2^62`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;
use rayon::prelude::*;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

pub const MAX_PRIME: u64 = 1 << 62;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for
/// all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn check_prime(p: u64) -> Result<()> {
    if p >= MAX_PRIME || !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    Ok(())
}

/// Uniformly random prime in `[2^59, 2^60)`.
pub fn random_prime_60<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range((1u64 << 59)..(1u64 << 60)) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// `count` distinct random 60-bit primes.
pub fn random_primes<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_prime_60(rng);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

pub fn reduce(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Rank of a dense matrix over `Z/pZ`; the input is consumed as scratch.
pub fn dense_rank(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][col], p);
        let pivot_row: Vec<u64> = a[rank][col..].iter().map(|&x| mul_mod(x, inv, p)).collect();
        for row in a.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = sub_mod(*x, mul_mod(f, y, p), p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over `Z/pZ`, returning the pivot columns.
pub fn dense_rref(a: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][col], p);
        for x in a[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = sub_mod(*x, mul_mod(f, y, p), p);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Rank of `m` reduced modulo the prime `p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    check_prime(p)?;
    let blocks = m.components();
    Ok(blocks
        .par_iter()
        .map(|b| {
            let dense: Vec<Vec<u64>> = m
                .dense_block(b)
                .iter()
                .map(|row| row.iter().map(|v| reduce(v, p)).collect())
                .collect();
            dense_rank(dense, p)
        })
        .sum())
}

/// Basis of the right null space of `m` over `Z/pZ`. Each vector is scaled
/// so its first nonzero entry is 1; entries lie in `[0, p)`.
pub fn kernel_mod_p(m: &IntMatrix, p: u64) -> Result<Vec<Vec<u64>>> {
    check_prime(p)?;
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut per_block: Vec<(usize, Vec<Vec<u64>>)> = m
        .components()
        .par_iter()
        .map(|b| {
            let mut dense: Vec<Vec<u64>> = m
                .dense_block(b)
                .iter()
                .map(|row| row.iter().map(|v| reduce(v, p)).collect())
                .collect();
            let pivots = dense_rref(&mut dense, p);
            let mut vecs = Vec::new();
            for free in (0..b.cols.len()).filter(|c| !pivots.contains(c)) {
                let mut v = vec![0u64; m.ncols()];
                v[b.cols[free]] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[b.cols[pc]] = sub_mod(0, dense[r][free], p);
                }
                vecs.push(v);
            }
            (b.cols[0], vecs)
        })
        .collect();
    for c in m.zero_columns() {
        let mut v = vec![0u64; m.ncols()];
        v[c] = 1;
        per_block.push((c, vec![v]));
    }
    per_block.sort_by_key(|(c, _)| *c);
    for (_, vecs) in per_block {
        basis.extend(vecs);
    }
    for v in &mut basis {
        let lead = *v.iter().find(|&&x| x != 0).expect("kernel vector is nonzero");
        let inv = inv_mod(lead, p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
    }
    Ok(basis)
}

/// Rank of `m` modulo several primes; the certified value is the maximum.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ModularRank {
    pub primes: Vec<u64>,
    pub ranks: Vec<usize>,
    pub rank: usize,
}

pub fn modular_rank(m: &IntMatrix, primes: &[u64]) -> Result<ModularRank> {
    let ranks = primes
        .iter()
        .map(|&p| rank_mod_p(m, p))
        .collect::<Result<Vec<_>>>()?;
    let rank = ranks.iter().copied().max().unwrap_or(0);
    Ok(ModularRank {
        primes: primes.to_vec(),
        ranks,
        rank,
    })
}

/// `a*x + y` over `Z/pZ`.
pub fn axpy(a: u64, x: u64, y: u64, p: u64) -> u64 {
    add_mod(mul_mod(a, x, p), y, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime((1u64 << 61) + 1));
        // Strong pseudoprime to bases 2..=11.
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn random_primes_are_60_bit_and_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ps = random_primes(&mut rng, 5);
        for &p in &ps {
            assert!(is_prime(p));
            assert_eq!(64 - p.leading_zeros(), 60);
        }
        let mut dedup = ps.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 5);
    }

    #[test]
    fn rank_mod_p_examples() {
        let even = IntMatrix::from_dense(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(rank_mod_p(&even, 2).unwrap(), 0);
        assert_eq!(rank_mod_p(&IntMatrix::identity(4), 7).unwrap(), 4);
        assert_eq!(rank_mod_p(&even, 4), Err(Error::NonPrime(4)));
        assert_eq!(rank_mod_p(&even, (1 << 62) + 1), Err(Error::NonPrime((1 << 62) + 1)));
    }

    #[test]
    fn kernel_mod_p_is_annihilated() {
        let m = IntMatrix::from_dense(&[vec![1, 1, 0], vec![0, 2, 2]]);
        let k = kernel_mod_p(&m, 2).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in m.to_dense() {
                let s: u64 = row
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (a, &x)| axpy(reduce(a, 2), x, acc, 2));
                assert_eq!(s, 0);
            }
        }
    }
}
