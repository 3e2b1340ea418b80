//! Equivariant Hilbert series for binary forms (`n = 1`): the Segre ring `A`,
//! the symmetric ring `B`, the covariant modules `M_lambda`, and the degrees
//! of their generators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::characters::schur_principal;
use crate::combinatorics::{descent_stats_syt, enumerate_syt, Partition, Tableau};
use crate::error::{Error, Result};
use crate::qseries::{carlitz_numerator, qbinomial, qnumber, qpochhammer, syt_numerator, QPoly, TQSeries};

pub const LAMBDA_SERIES_LIMIT: usize = 8;
pub const TABLE_LIMIT: usize = 10;

/// `sum_m ([m+1]_q)^d t^m`.
pub fn ha_series(d: u32, order: usize) -> TQSeries {
    TQSeries::from_coeffs(order, (0..=order).map(|m| qnumber(m as u32 + 1).pow(d)).collect())
}

/// `sum_m h_d(1, q, ..., q^m) t^m`.
pub fn hb_series(d: u32, order: usize) -> TQSeries {
    TQSeries::from_coeffs(
        order,
        (0..=order)
            .map(|m| qbinomial(m as u32 + d, d).expect("k <= m"))
            .collect(),
    )
}

/// `sum_m s_lambda(1, q, ..., q^m) t^m`.
pub fn hm_lambda_series(lambda: &Partition, order: usize) -> Result<TQSeries> {
    if lambda.size() > LAMBDA_SERIES_LIMIT {
        return Err(Error::TooLarge(format!(
            "|lambda| = {} (limit {LAMBDA_SERIES_LIMIT})",
            lambda.size()
        )));
    }
    Ok(TQSeries::from_coeffs(
        order,
        (0..=order).map(|m| schur_principal(lambda, m as u32)).collect(),
    ))
}

/// `H_A(t) * prod_{i=0}^{d} (1 - q^i t)` agrees with the descent/major-index
/// polynomial of `S_d` through `t^order`.
pub fn carlitz_check(d: u32, order: usize) -> Result<bool> {
    let lhs = &ha_series(d, order) * &qpochhammer(d).to_series(order);
    Ok(lhs == carlitz_numerator(d as usize)?.to_series(order))
}

/// `H_{M_lambda}(t) * prod_{i=0}^{d} (1 - q^i t)` agrees with the SYT
/// numerator of `lambda` through `t^order`.
pub fn proposition_check(lambda: &Partition, order: usize) -> Result<bool> {
    let d = lambda.size() as u32;
    let lhs = &hm_lambda_series(lambda, order)? * &qpochhammer(d).to_series(order);
    Ok(lhs == syt_numerator(lambda)?.to_series(order))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorRow {
    pub degree: usize,
    /// `sum q^maj(T)` over the tableaux in this degree.
    pub character: QPoly,
    pub tableaux: Vec<Tableau>,
}

/// Generators of `M_lambda`: one per standard tableau `T`, in degree
/// `des(T)` with weight `q^maj(T)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorTable {
    pub lambda: Partition,
    pub rows: Vec<GeneratorRow>,
}

impl GeneratorTable {
    pub fn total_generators(&self) -> usize {
        self.rows.iter().map(|r| r.tableaux.len()).sum()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.rows.last().map(|r| r.degree)
    }

    /// `degree<TAB>character<TAB>count` per row, with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree\tcharacter\ttableaux\n");
        for r in &self.rows {
            out.push_str(&format!("{}\t{}\t{}\n", r.degree, r.character.compact(), r.tableaux.len()));
        }
        out
    }
}

pub fn generator_table(lambda: &Partition) -> Result<GeneratorTable> {
    if lambda.size() > TABLE_LIMIT {
        return Err(Error::TooLarge(format!(
            "|lambda| = {} (limit {TABLE_LIMIT})",
            lambda.size()
        )));
    }
    let mut by_degree: BTreeMap<usize, GeneratorRow> = BTreeMap::new();
    for t in enumerate_syt(lambda)? {
        let s = descent_stats_syt(&t)?;
        let row = by_degree.entry(s.des).or_insert_with(|| GeneratorRow {
            degree: s.des,
            character: QPoly::zero(),
            tableaux: Vec::new(),
        });
        row.character.add_term(s.maj as u32, BigInt::one());
        row.tableaux.push(t);
    }
    Ok(GeneratorTable {
        lambda: lambda.clone(),
        rows: by_degree.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partitions_of, syt_count};
    use crate::qseries::expand_inv_qpochhammer;
    use num_bigint::BigUint;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn series_examples() {
        let a1 = ha_series(1, 6);
        for m in 0..=6 {
            assert_eq!(*a1.coeff(m), qnumber(m as u32 + 1));
        }
        assert_eq!(*ha_series(3, 4).coeff(2), QPoly::from_coeffs(&[1, 3, 6, 7, 6, 3, 1]));
        assert_eq!(hb_series(1, 6), a1);
        assert_eq!(*hb_series(2, 4).coeff(2), qbinomial(4, 2).unwrap());
        for d in 0..=5 {
            assert_eq!(hb_series(d, 8), expand_inv_qpochhammer(d, 8));
        }
    }

    #[test]
    fn carlitz_identity() {
        for d in 0..=6 {
            assert!(carlitz_check(d, 8).unwrap(), "d = {d}");
        }
        assert_eq!(carlitz_numerator(3).unwrap().compact(), "1 + t(2q+2q^2) + t^2 q^3");
    }

    #[test]
    fn covariant_series() {
        for d in 1..=5u32 {
            assert_eq!(hm_lambda_series(&part(&[d]), 8).unwrap(), hb_series(d, 8));
            let mut total = TQSeries::zero(8);
            for l in partitions_of(d) {
                assert!(proposition_check(&l, 8).unwrap(), "{l}");
                let f = BigInt::from(syt_count(&l));
                let s = hm_lambda_series(&l, 8).unwrap();
                let scaled = TQSeries::from_coeffs(8, s.coeffs().iter().map(|c| c * &QPoly::monomial(f.clone(), 0)).collect());
                total = &total + &scaled;
            }
            assert_eq!(total, ha_series(d, 8));
        }
        assert!(proposition_check(&part(&[2, 1]), 4).unwrap());
        assert!(matches!(hm_lambda_series(&part(&[9]), 2), Err(Error::TooLarge(_))));
    }

    #[test]
    fn generator_tables() {
        let t = generator_table(&part(&[3])).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!((t.rows[0].degree, t.rows[0].character.clone()), (0, QPoly::one()));

        let t = generator_table(&part(&[2, 1])).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].degree, 1);
        assert_eq!(t.rows[0].character, QPoly::from_coeffs(&[0, 1, 1]));
        assert_eq!(t.to_tsv(), "degree\tcharacter\ttableaux\n1\tq+q^2\t2\n");

        let t = generator_table(&part(&[1, 1, 1])).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!((t.rows[0].degree, t.rows[0].character.clone()), (2, QPoly::monomial(1, 3)));
        // the degree-2 generator spans S_(3,3) of C^2, whose character is q^3
        assert_eq!(schur_principal(&part(&[3, 3]), 1), QPoly::monomial(1, 3));
    }

    #[test]
    fn generator_counts_and_degrees() {
        for d in 1..=7u32 {
            let mut max = 0;
            for l in partitions_of(d) {
                let t = generator_table(&l).unwrap();
                assert_eq!(BigUint::from(t.total_generators()), syt_count(&l));
                let at_one: BigInt = t.rows.iter().map(|r| r.character.eval_at_one()).sum();
                assert_eq!(at_one, BigInt::from(syt_count(&l)));
                max = max.max(t.max_degree().unwrap());
            }
            assert_eq!(max, d as usize - 1);
        }
        assert!(matches!(generator_table(&part(&[11])), Err(Error::TooLarge(_))));
    }
}
