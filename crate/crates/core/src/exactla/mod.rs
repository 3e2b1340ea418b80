//! Exact integer and rational linear algebra, over `Q` and over prime fields.
//!
//! Every rank and kernel routine first splits the matrix into the connected
//! components of its row/column incidence graph. The matrices built elsewhere
//! in this crate are graded by torus weight and therefore block diagonal, so
//! the split turns one large elimination into many small ones.

mod matrix;
pub mod modp;
mod rational;

use num_bigint::BigInt;

pub use matrix::{Block, IntMatrix};
pub use modp::{is_prime, modular_rank, random_primes, rank_mod_p, ModularRank};
pub use rational::{
    bareiss_rank, kernel_rational, normalize_content, parse_rational, primitive_integer_vector, rank_exact,
    rank_rational, rat, rat_int, rref, solve_linear, solve_rational, Rational, Solution,
};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    PrimeField(u64),
}

/// Basis of the right null space of `m`.
///
/// Over `Q` the vectors are primitive integer vectors with positive leading
/// entry. Over `F_p` the entries are residues in `[0, p)` and each vector has
/// leading entry 1.
pub fn kernel_basis(m: &IntMatrix, field: Field) -> Result<Vec<Vec<BigInt>>> {
    match field {
        Field::Rationals => Ok(rational::kernel_rational(m)),
        Field::PrimeField(p) => Ok(modp::kernel_mod_p(m, p)?
            .into_iter()
            .map(|v| v.into_iter().map(BigInt::from).collect())
            .collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(
                prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..5], c),
                r,
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_and_annihilation(rows in small_matrix()) {
            let m = IntMatrix::from_dense(&rows);
            let r = rank_exact(&m);
            let k = kernel_basis(&m, Field::Rationals).unwrap();
            prop_assert_eq!(r + k.len(), m.ncols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            let kernel_matrix = IntMatrix::from_dense(&k);
            if !k.is_empty() {
                prop_assert_eq!(rank_exact(&kernel_matrix), k.len());
            }
            for p in [2u64, 3, 1_000_000_007] {
                let rp = rank_mod_p(&m, p).unwrap();
                prop_assert!(rp <= r);
                prop_assert_eq!(rp + kernel_basis(&m, Field::PrimeField(p)).unwrap().len(), m.ncols());
            }
        }

        #[test]
        fn dump_round_trip(rows in small_matrix()) {
            let m = IntMatrix::from_dense(&rows);
            prop_assert_eq!(IntMatrix::parse_dump(&m.to_dump_string()).unwrap(), m);
        }
    }

    #[test]
    fn kernel_rejects_composite_modulus() {
        assert_eq!(
            kernel_basis(&IntMatrix::identity(2), Field::PrimeField(9)),
            Err(Error::NonPrime(9))
        );
    }
}
