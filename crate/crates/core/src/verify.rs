//! The verification battery behind `chowlab verify-all`.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::{foulkes_check, hermite_check, schur_decompose, sym_of_sym_char, weyl_dim};
use crate::chow_geometry::{
    aronhold_test, complex_checks, e_matrix_det_check, expand_product, hessian_cubic, recover_coordinates, Form,
    LinearForm,
};
use crate::combinatorics::{
    descent_stats_perm, descent_stats_syt, partitions_of, permutations, rsk, syt_count, Partition, Tableau,
};
use crate::error::Result;
use crate::exactla::{normalize_content, Rational};
use crate::foulkes_howe::{
    analyze, domain_vector, fh_kernel_mod_p, fh_matrix, FHReport, RankMethod, RankOptions,
};
use crate::hilbert_covariants::{carlitz_check, generator_table, proposition_check};
use crate::poly::{compositions, determinant, MPoly};
use crate::qseries::{carlitz_numerator, QPoly};
use crate::veronese_tor::{euler_characteristic_check, koszul_tor, polynomial_growth_check, GradedRingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub wall_time_ms: u128,
}

type Check = fn(u64) -> Result<(bool, String)>;

const CHECKS: [(u32, &str, Level, Check); 14] = [
    (1, "fh(2,2,3) quadric kernel", Level::Quick, fh_quadrics),
    (2, "fh(3,2,m) cubics, m = 2, 3", Level::Quick, fh_cubics),
    (3, "fh(4,2,m) quartic cokernels, m = 2, 3", Level::Quick, fh_quartics),
    (4, "fh(4,2,4) modular certificate", Level::Full, fh_quartics_degree_four),
    (5, "Sym^3(Sym^3 C^3) decomposition", Level::Quick, plethysm_333),
    (6, "Foulkes containment", Level::Quick, foulkes),
    (7, "Hermite reciprocity", Level::Quick, hermite),
    (8, "Carlitz identity", Level::Quick, carlitz),
    (9, "covariant series and generators", Level::Quick, covariants),
    (10, "RSK and descents", Level::Quick, rsk_descents),
    (11, "Hessian and Aronhold test", Level::Quick, aronhold),
    (12, "d1/d2 complex for ternary cubics", Level::Quick, complex),
    (13, "coordinate recovery", Level::Quick, recovery),
    (14, "Veronese Tor growth", Level::Quick, veronese),
];

/// Runs every check at or below `level`. Errors count as failures.
pub fn run_checks(level: Level, seed: u64) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .filter(|c| c.2 <= level)
        .map(|&(id, name, _, check)| {
            let start = Instant::now();
            let (passed, detail) = match check(seed) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckOutcome {
                id,
                name,
                passed,
                detail,
                wall_time_ms: start.elapsed().as_millis(),
            }
        })
        .collect()
}

fn fh(d: u32, n: u32, m: u32) -> Result<FHReport> {
    analyze(&fh_matrix(d, n, m)?, &RankOptions::default())
}

fn counts(r: &FHReport) -> String {
    format!(
        "({},{},{}): {} -> {}, rank {}, kernel {}, cokernel {}",
        r.d, r.n, r.m, r.dim_domain, r.dim_codomain, r.rank, r.dim_j_m, r.dim_coker
    )
}

/// `det Z / 2` for the symmetric matrix of quadric coefficients, and the
/// characteristic-two generator, as polynomials in the six `z_alpha`.
fn quadric_equations() -> (MPoly<BigInt>, MPoly<BigInt>) {
    let alphas = compositions(2, 3);
    let z = |a: [u32; 3]| MPoly::<BigInt>::var(6, alphas.iter().position(|x| *x == a).unwrap());
    let two = BigInt::from(2);
    let zm = vec![
        vec![z([2, 0, 0]).scale(&two), z([1, 1, 0]), z([1, 0, 1])],
        vec![z([1, 1, 0]), z([0, 2, 0]).scale(&two), z([0, 1, 1])],
        vec![z([1, 0, 1]), z([0, 1, 1]), z([0, 0, 2]).scale(&two)],
    ];
    let half_det = determinant(&zm, 6).map_coeffs(|c| c / 2);
    let char2 = [
        &z([2, 0, 0]) * &z([0, 1, 1]).pow(2),
        &z([0, 2, 0]) * &z([1, 0, 1]).pow(2),
        &z([0, 0, 2]) * &z([1, 1, 0]).pow(2),
        &(&z([0, 1, 1]) * &z([1, 0, 1])) * &z([1, 1, 0]),
    ]
    .iter()
    .fold(MPoly::zero(6), |acc, t| &acc + t);
    (half_det, char2)
}

fn fh_quadrics(_: u64) -> Result<(bool, String)> {
    let m = fh_matrix(2, 2, 3)?;
    let r = analyze(&m, &RankOptions::default())?;
    let (half_det, char2) = quadric_equations();
    let kernel = crate::exactla::kernel_basis(&m.matrix, crate::exactla::Field::Rationals)?;
    let rational_ok = kernel == vec![normalize_content(domain_vector(&m, &half_det))];
    let k2 = fh_kernel_mod_p(2, 2, 3, 2)?;
    let expect2: Vec<BigInt> = domain_vector(&m, &char2).into_iter().map(|c| c % 2).collect();
    let char2_ok = k2 == vec![expect2];
    let ok = (r.dim_domain, r.dim_codomain, r.rank, r.dim_j_m) == (56, 55, 55, 1) && rational_ok && char2_ok;
    Ok((
        ok,
        format!("{}; det Z/2 generator {rational_ok}; char 2 generator {char2_ok}", counts(&r)),
    ))
}

fn fh_cubics(_: u64) -> Result<(bool, String)> {
    let a = fh(3, 2, 2)?;
    let b = fh(3, 2, 3)?;
    let ok = a.dim_j_m == 0 && a.dim_coker == 1 && b.rank == 220 && b.dim_j_m == 0 && b.dim_coker == 0;
    Ok((ok, format!("{}; {}", counts(&a), counts(&b))))
}

fn fh_quartics(_: u64) -> Result<(bool, String)> {
    let a = fh(4, 2, 2)?;
    let b = fh(4, 2, 3)?;
    let w422 = weyl_dim(&Partition::new(vec![4, 2, 2])?, 3);
    let w732 = weyl_dim(&Partition::new(vec![7, 3, 2])?, 3);
    let ok = a.dim_j_m == 0
        && a.dim_coker.to_string() == w422.to_string()
        && b.dim_j_m == 0
        && b.dim_coker.to_string() == w732.to_string();
    Ok((
        ok,
        format!("{}; {}; dim S_(4,2,2) = {w422}, dim S_(7,3,2) = {w732}", counts(&a), counts(&b)),
    ))
}

fn fh_quartics_degree_four(seed: u64) -> Result<(bool, String)> {
    let r = analyze(
        &fh_matrix(4, 2, 4)?,
        &RankOptions {
            force_modular: true,
            primes: None,
            seed,
        },
    )?;
    let ok = r.method == RankMethod::Modular && r.primes.len() >= 3 && r.rank == 3060 && r.proven_full_rank;
    Ok((ok, format!("{}; primes {:?}", counts(&r), r.primes)))
}

fn plethysm_333(_: u64) -> Result<(bool, String)> {
    let ch = sym_of_sym_char(3, 3, 3)?;
    let dec = schur_decompose(&ch)?;
    let expect: Vec<(Partition, BigInt)> = [vec![9], vec![7, 2], vec![6, 3], vec![5, 2, 2], vec![4, 4, 1]]
        .into_iter()
        .map(|p| (Partition::new(p).unwrap(), BigInt::one()))
        .collect();
    let ok = dec.terms == expect && ch.dimension() == BigInt::from(220);
    let shapes: Vec<String> = dec.terms.iter().map(|(l, m)| format!("{m}*s{l}")).collect();
    Ok((ok, format!("{} (dim {})", shapes.join(" + "), ch.dimension())))
}

fn foulkes(_: u64) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (m, d) in [(2, 3), (2, 4), (3, 4), (2, 5)] {
        let r = foulkes_check(m, d)?;
        ok &= r.contained;
        parts.push(format!("({m},{d}) {}", r.contained));
    }
    Ok((ok, parts.join(", ")))
}

fn hermite(_: u64) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for a in 1..=8 {
        for b in 1..=8 {
            if !hermite_check(a, b)? {
                failures.push((a, b));
            }
        }
    }
    Ok((failures.is_empty(), format!("64 pairs, failures {failures:?}")))
}

fn carlitz(_: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for d in 0..=6 {
        ok &= carlitz_check(d, 8)?;
    }
    let d3 = carlitz_numerator(3)?.compact();
    ok &= d3 == "1 + t(2q+2q^2) + t^2 q^3";
    for d in 1..=6u32 {
        let mut total = crate::qseries::TQPoly::zero();
        for l in partitions_of(d) {
            let f = BigInt::from(syt_count(&l));
            total = &total + &crate::qseries::syt_numerator(&l)?.scale(&f);
        }
        ok &= total == carlitz_numerator(d as usize)?;
    }
    Ok((ok, format!("d <= 6 to order 8; d = 3 numerator {d3}")))
}

fn covariants(_: u64) -> Result<(bool, String)> {
    let mut ok = true;
    let mut count = 0;
    for d in 0..=5 {
        for l in partitions_of(d) {
            ok &= proposition_check(&l, 8)?;
            count += 1;
        }
    }
    let t21 = generator_table(&Partition::new(vec![2, 1])?)?;
    let t111 = generator_table(&Partition::new(vec![1, 1, 1])?)?;
    let row = |t: &crate::hilbert_covariants::GeneratorTable| {
        t.rows
            .iter()
            .map(|r| (r.degree, r.character.clone(), r.tableaux.len()))
            .collect::<Vec<_>>()
    };
    ok &= row(&t21) == vec![(1, QPoly::from_coeffs(&[0, 1, 1]), 2)];
    ok &= row(&t111) == vec![(2, QPoly::monomial(1, 3), 1)];
    Ok((
        ok,
        format!(
            "{count} shapes to order 8; (2,1): {}; (1,1,1): {}",
            t21.to_tsv().lines().nth(1).unwrap_or(""),
            t111.to_tsv().lines().nth(1).unwrap_or("")
        ),
    ))
}

fn rsk_descents(_: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for d in 1..=6usize {
        for sigma in permutations(d) {
            let (_, q) = rsk(&sigma);
            ok &= descent_stats_syt(&q)?.descent_set == descent_stats_perm(&sigma).descent_set;
        }
        let total: num_bigint::BigUint = partitions_of(d as u32).iter().map(|l| syt_count(l).pow(2)).sum();
        ok &= total == (1..=d as u64).product::<u64>().into();
    }
    let t = Tableau::new(vec![vec![1, 3, 5, 7, 8], vec![2, 6], vec![4]])?;
    let s = descent_stats_syt(&t)?;
    ok &= (s.des, s.maj) == (3, 9);
    Ok((ok, format!("d <= 6; tableau {t}: des {}, maj {}", s.des, s.maj)))
}

fn random_linear(rng: &mut ChaCha8Rng, n: usize) -> LinearForm {
    loop {
        let l = LinearForm::new(
            (0..n)
                .map(|_| Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=4))))
                .collect(),
        );
        if !l.is_degenerate() {
            return l;
        }
    }
}

fn aronhold(seed: u64) -> Result<(bool, String)> {
    let int = |k: i64| Rational::from_integer(k.into());
    let xyz = Form::from_terms(3, 3, [(vec![1, 1, 1], int(1))])?;
    let hess_ok = hessian_cubic(&xyz)? == xyz.scale(&int(2));
    let fermat = Form::from_terms(3, 3, [[3, 0, 0], [0, 3, 0], [0, 0, 3]].map(|e| (e.to_vec(), int(1))))?;
    let fermat_ok = !aronhold_test(&fermat)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut products = 0;
    for _ in 0..50 {
        let forms: Vec<LinearForm> = (0..3).map(|_| random_linear(&mut rng, 3)).collect();
        if aronhold_test(&expand_product(&forms)?)? {
            products += 1;
        }
    }
    Ok((
        hess_ok && fermat_ok && products == 50,
        format!("H(xyz) = 2xyz {hess_ok}; products detected {products}/50; Fermat rejected {fermat_ok}"),
    ))
}

fn complex(seed: u64) -> Result<(bool, String)> {
    let r = complex_checks(seed)?;
    let ok = r.skew_symmetric
        && r.composition_zero
        && r.generic_rank == 8
        && r.decomposable_ranks.len() == 10
        && r.decomposable_ranks.iter().all(|&k| k <= 6)
        && r.linear.scalars.iter().chain(&r.hessian.scalars).all(|s| !s.is_zero());
    Ok((
        ok,
        format!(
            "generic rank {}, decomposable ranks {:?}, Hessian scalars {:?}",
            r.generic_rank,
            r.decomposable_ranks,
            r.hessian.scalars.iter().map(|s| s.to_string()).collect::<Vec<_>>()
        ),
    ))
}

fn recovery(seed: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for d in 2..=4 {
        ok &= e_matrix_det_check(d)?.holds;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trips = 0;
    for (d, n) in [(2usize, 2usize), (3, 2), (3, 3)] {
        for _ in 0..50 {
            let mut forms: Vec<Vec<Rational>> = Vec::new();
            while forms.len() < d {
                let mut l = random_linear(&mut rng, n + 1).coeffs;
                l[0] = Rational::one();
                if forms.iter().all(|f| f[1] != l[1]) {
                    forms.push(l);
                }
            }
            let v1: Vec<Rational> = forms.iter().map(|f| f[1].clone()).collect();
            let f = expand_product(&forms.iter().cloned().map(LinearForm::new).collect::<Vec<_>>())?;
            if recover_coordinates(d, n, &v1, &f)? == forms {
                trips += 1;
            }
        }
    }
    ok &= trips == 150;
    Ok((ok, format!("leading coefficient 1 for d = 2..4; round trips {trips}/150")))
}

fn veronese(_: u64) -> Result<(bool, String)> {
    let ring = GradedRingSpec::polynomial(2);
    let ns: Vec<u32> = (1..=8).collect();
    let g = polynomial_growth_check(&ring, 1, 2, &ns)?;
    let table_ok = g.table.entries.iter().all(|(&n, &v)| v as u32 == n * (n - 1) / 2);
    let mut invariants = true;
    for &n in &ns {
        invariants &= euler_characteristic_check(&ring, n, 2)?.holds;
        // composition is checked inside every computation
        koszul_tor(&ring, n, 1, 2)?;
    }
    let ok = table_ok && g.degree == 2 && g.bound_ok && invariants;
    Ok((
        ok,
        format!(
            "table {:?}, fit {} (degree {} <= {}), invariants {invariants}",
            g.table.entries.values().collect::<Vec<_>>(),
            g.polynomial,
            g.degree,
            g.bound
        ),
    ))
}
