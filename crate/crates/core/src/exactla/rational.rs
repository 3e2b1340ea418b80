//! Exact elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Fraction-free (Bareiss) rank of a dense integer matrix.
///
/// Pivots are chosen by fewest nonzeros in the remaining column, then by
/// smallest absolute value within that column.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut k = 0;
    while k < rows.min(cols) {
        let mut best: Option<(usize, usize, usize)> = None;
        for c in k..cols {
            let nz = (k..rows).filter(|&r| !a[r][c].is_zero()).count();
            if nz > 0 && best.is_none_or(|(_, _, n)| nz < n) {
                let r = (k..rows)
                    .filter(|&r| !a[r][c].is_zero())
                    .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()))
                    .unwrap();
                best = Some((r, c, nz));
            }
        }
        let Some((pr, pc, _)) = best else { break };
        a.swap(k, pr);
        if pc != k {
            for row in a.iter_mut() {
                row.swap(k, pc);
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let p = pivot_row[k].clone();
        for row in tail.iter_mut() {
            let f = std::mem::take(&mut row[k]);
            for j in k + 1..cols {
                let v = &row[j] * &p - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = p;
        k += 1;
    }
    k
}

/// Rank of `m` over the rationals.
pub fn rank_exact(m: &IntMatrix) -> usize {
    m.components()
        .par_iter()
        .map(|b| bareiss_rank(m.dense_block(b)))
        .sum()
}

/// Gauss-Jordan over the rationals; returns the pivot columns.
pub fn rref(a: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Scales a rational vector to an integer vector with content 1 whose first
/// nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    normalize_content(ints)
}

pub fn normalize_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if neg {
            *x = -&*x;
        }
    }
    v
}

/// Basis of the right null space of `m` over the rationals, as primitive
/// integer vectors.
pub fn kernel_rational(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let mut per_block: Vec<(usize, Vec<Vec<BigInt>>)> = m
        .components()
        .par_iter()
        .map(|b| {
            let mut dense: Vec<Vec<Rational>> = m
                .dense_block(b)
                .into_iter()
                .map(|row| row.into_iter().map(Rational::from_integer).collect())
                .collect();
            let pivots = rref(&mut dense);
            let mut vecs = Vec::new();
            for free in (0..b.cols.len()).filter(|c| !pivots.contains(c)) {
                let mut v = vec![Rational::zero(); m.ncols()];
                v[b.cols[free]] = Rational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[b.cols[pc]] = -dense[r][free].clone();
                }
                vecs.push(primitive_integer_vector(&v));
            }
            (b.cols[0], vecs)
        })
        .collect();
    for c in m.zero_columns() {
        let mut v = vec![BigInt::zero(); m.ncols()];
        v[c] = BigInt::one();
        per_block.push((c, vec![v]));
    }
    per_block.sort_by_key(|(c, _)| *c);
    per_block.into_iter().flat_map(|(_, v)| v).collect()
}

/// A solution of a linear system. `underdetermined` is set when the
/// solution is not unique; `x` is then the particular solution with all
/// free variables set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: Vec<Rational>,
    pub underdetermined: bool,
}

pub fn solve_rational(a: &[Vec<Rational>], rhs: &[Rational]) -> Result<Solution> {
    assert_eq!(a.len(), rhs.len(), "row count mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return Err(Error::Inconsistent);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Ok(Solution {
        x,
        underdetermined: pivots.len() < cols,
    })
}

/// Solves `m x = rhs` over the rationals.
pub fn solve_linear(m: &IntMatrix, rhs: &[Rational]) -> Result<Solution> {
    let dense: Vec<Vec<Rational>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    if m.nrows() == 0 {
        return Ok(Solution {
            x: vec![Rational::zero(); m.ncols()],
            underdetermined: m.ncols() > 0,
        });
    }
    solve_rational(&dense, rhs)
}

/// Rank of a dense rational matrix.
pub fn rank_rational(a: &[Vec<Rational>]) -> usize {
    let mut scratch = a.to_vec();
    rref(&mut scratch).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bareiss_basic() {
        assert_eq!(rank_exact(&IntMatrix::identity(3)), 3);
        assert_eq!(rank_exact(&IntMatrix::from_dense(&[vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(rank_exact(&IntMatrix::zeros(3, 2)), 0);
        let m = IntMatrix::from_dense(&[vec![2, 4, 6], vec![1, 3, 5], vec![3, 7, 11]]);
        assert_eq!(rank_exact(&m), 2);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_rational(&IntMatrix::from_dense(&[vec![1, 1]]));
        assert_eq!(k, vec![ints(&[1, -1])]);
        assert!(kernel_rational(&IntMatrix::identity(4)).is_empty());
        // Zero column contributes a unit vector.
        let k = kernel_rational(&IntMatrix::from_dense(&[vec![0, 2, 4]]));
        assert_eq!(k, vec![ints(&[1, 0, 0]), ints(&[0, 2, -1])]);
    }

    #[test]
    fn solve_examples() {
        let s = solve_linear(&IntMatrix::identity(2), &[rat_int(1), rat_int(2)]).unwrap();
        assert_eq!(s.x, vec![rat_int(1), rat_int(2)]);
        assert!(!s.underdetermined);

        let m = IntMatrix::from_dense(&[vec![1, 1], vec![5, 2]]);
        let s = solve_linear(&m, &[rat_int(10), rat_int(29)]).unwrap();
        assert_eq!(s.x, vec![rat_int(3), rat_int(7)]);

        let singular = IntMatrix::from_dense(&[vec![1, 2], vec![2, 4]]);
        let s = solve_linear(&singular, &[rat_int(3), rat_int(6)]).unwrap();
        assert!(s.underdetermined);
        assert_eq!(s.x, vec![rat_int(3), rat_int(0)]);

        assert_eq!(
            solve_linear(&singular, &[rat_int(3), rat_int(7)]),
            Err(Error::Inconsistent)
        );
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 5 ").unwrap(), rat_int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn primitive_vector_normalization() {
        let v = [rat(-1, 2), rat(3, 4), rat_int(0)];
        assert_eq!(primitive_integer_vector(&v), ints(&[2, -3, 0]));
    }
}
