//! The `chowlab` command line.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{foulkes_check, hermite_check, schur_decompose, sym_of_sym_char};
use crate::chow_geometry::{
    aronhold_test, complex_checks, d2_matrix, divided_power_coordinates, e_matrix_det_check, expand_product,
    hessian_cubic, recover_coordinates, Form, LinearForm,
};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, parse_rational, rank_rational, Field};
use crate::foulkes_howe::{analyze, fh_matrix, render_kernel_vector, RankMethod, RankOptions, DEFAULT_SEED};
use crate::hilbert_covariants::{carlitz_check, generator_table, hm_lambda_series, proposition_check};
use crate::poly::MPoly;
use crate::qseries::{carlitz_numerator, syt_numerator};
use crate::verify::{run_checks, Level};
use crate::veronese_tor::{euler_characteristic_check, fit_growth, tor_table, GradedRingSpec};

#[derive(Parser, Debug)]
#[command(name = "chowlab", version, about = "Exact computations on Chow varieties, plethysms and Veronese syzygies")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, kernel and cokernel of the Foulkes-Howe map.
    Fh {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Work over F_p: rank and kernel basis mod p.
        #[arg(long)]
        prime: Option<u64>,
        /// Always use the modular rank certificate.
        #[arg(long)]
        modular: bool,
        #[arg(long, alias = "dump")]
        dump_matrix: Option<PathBuf>,
    },
    /// Schur decomposition of Sym^m(Sym^d C^k).
    Plethysm {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Sym^m(Sym^d) inside Sym^d(Sym^m) in d variables.
    Foulkes {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
    },
    /// Sym^a(Sym^b C^2) = Sym^b(Sym^a C^2); without a and b, every pair up to --max.
    Hermite {
        #[arg(long, requires = "b")]
        a: Option<u32>,
        #[arg(long, requires = "a")]
        b: Option<u32>,
        #[arg(long, default_value_t = 8)]
        max: u32,
    },
    /// Equivariant Hilbert series for n = 1.
    Hilbert {
        #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
        d: Option<u32>,
        /// A partition such as `2,1`.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Emit the generator table (requires --lambda).
        #[arg(long, requires = "lambda")]
        table: bool,
    },
    /// Tests on ternary cubics.
    Cubic {
        #[arg(long, value_enum)]
        test: CubicTest,
        /// Form JSON: exponent string "a0,a1,a2" to rational string.
        #[arg(long, required_if_eq_any = [("test", "aronhold"), ("test", "hessian"), ("test", "d2rank")])]
        input: Option<PathBuf>,
    },
    /// Coordinates of the factors of a completely decomposable form.
    Recover {
        /// Form JSON of the product.
        #[arg(long, required_unless_present = "det_check", requires = "v1")]
        input: Option<PathBuf>,
        /// Comma-separated x_1-coefficients of the factors.
        #[arg(long)]
        v1: Option<String>,
        /// Check the leading coefficient of det E for this d instead.
        #[arg(long, conflicts_with = "input")]
        det_check: Option<usize>,
    },
    /// Koszul Tor of Veronese subrings.
    Tor {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nmax: u32,
        /// JSON array of relations, each in the form JSON format with integer coefficients.
        #[arg(long)]
        relations: Option<PathBuf>,
    },
    /// Run the verification battery.
    VerifyAll {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CubicTest {
    Aronhold,
    Hessian,
    D2rank,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ModularOnly,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub result: Value,
    pub status: Status,
    pub wall_time_ms: u128,
}

struct Outcome {
    params: Value,
    result: Value,
    status: Status,
    summary: String,
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge(_) => 3,
        Error::BadRange(_)
        | Error::BadShape(_)
        | Error::BadDegree { .. }
        | Error::Parse(_)
        | Error::NonPrime(_)
        | Error::NotStandard(_)
        | Error::NotHomogeneous
        | Error::ZeroForm
        | Error::RelationReductionUnsupported(_) => 2,
        _ => 1,
    }
}

/// Parses `argv`, runs the subcommand, prints the report and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let name = command_name(&cli.command);
    let start = Instant::now();
    let (outcome, code) = match execute(&cli.command, cli.seed) {
        Ok(o) => {
            let code = if o.status == Status::Pass { 0 } else { 1 };
            (o, code)
        }
        Err(e) => (
            Outcome {
                params: Value::Null,
                result: json!({ "error": e.to_string() }),
                status: Status::Fail,
                summary: format!("error: {e}"),
            },
            exit_code(&e),
        ),
    };
    let report = Report {
        command: name.to_string(),
        params: outcome.params,
        result: outcome.result,
        status: outcome.status,
        wall_time_ms: start.elapsed().as_millis(),
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{text}");
    eprintln!("{name}: {}", outcome.summary.trim_end());
    eprintln!("status: {}", serde_json::to_value(report.status).unwrap().as_str().unwrap());
    if let Some(path) = &cli.json {
        if let Err(e) = fs::write(path, format!("{text}\n")) {
            eprintln!("cannot write {}: {e}", path.display());
            return 1;
        }
    }
    code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Fh { .. } => "fh",
        Command::Plethysm { .. } => "plethysm",
        Command::Foulkes { .. } => "foulkes",
        Command::Hermite { .. } => "hermite",
        Command::Hilbert { .. } => "hilbert",
        Command::Cubic { .. } => "cubic",
        Command::Recover { .. } => "recover",
        Command::Tor { .. } => "tor",
        Command::VerifyAll { .. } => "verify-all",
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_form(path: &PathBuf) -> Result<Form> {
    Form::from_json(&read(path)?)
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn parse_relations(path: &PathBuf) -> Result<Vec<MPoly<BigInt>>> {
    let items: Vec<Value> = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(e.to_string()))?;
    items
        .iter()
        .map(|v| {
            let f = Form::from_json(&v.to_string())?;
            if f.poly().terms().any(|(_, c)| !c.is_integer()) {
                return Err(Error::Parse("relations need integer coefficients".into()));
            }
            Ok(f.poly().map_coeffs(|c| c.to_integer()))
        })
        .collect()
}

fn execute(command: &Command, seed: u64) -> Result<Outcome> {
    match command {
        Command::Fh {
            d,
            n,
            m,
            prime,
            modular,
            dump_matrix,
        } => fh(*d, *n, *m, *prime, *modular, dump_matrix.as_ref(), seed),
        Command::Plethysm { m, d, k } => {
            let dec = schur_decompose(&sym_of_sym_char(*m, *d, *k)?)?;
            let dim: BigInt = dec
                .terms
                .iter()
                .map(|(l, c)| c * BigInt::from(crate::characters::weyl_dim(l, *k)))
                .sum();
            let summary = dec
                .terms
                .iter()
                .map(|(l, c)| if c == &BigInt::from(1) { format!("s{l}") } else { format!("{c}*s{l}") })
                .collect::<Vec<_>>()
                .join(" + ");
            Ok(Outcome {
                params: json!({ "m": m, "d": d, "k": k }),
                result: json!({ "decomposition": dec, "dimension": dim.to_string() }),
                status: status(!dec.is_virtual),
                summary: format!("{summary} (dim {dim})"),
            })
        }
        Command::Foulkes { m, d } => {
            let r = foulkes_check(*m, *d)?;
            Ok(Outcome {
                params: json!({ "m": m, "d": d }),
                status: status(r.contained),
                summary: format!("contained {}, dims {} <= {}", r.contained, r.dim_inner, r.dim_outer),
                result: serde_json::to_value(&r).unwrap(),
            })
        }
        Command::Hermite { a, b, max } => {
            let pairs: Vec<(u32, u32)> = match (a, b) {
                (Some(a), Some(b)) => vec![(*a, *b)],
                _ => (1..=*max).flat_map(|a| (1..=*max).map(move |b| (a, b))).collect(),
            };
            let mut failures = Vec::new();
            for &(a, b) in &pairs {
                if !hermite_check(a, b)? {
                    failures.push([a, b]);
                }
            }
            Ok(Outcome {
                params: json!({ "a": a, "b": b, "max": max }),
                result: json!({ "pairs": pairs.len(), "failures": failures }),
                status: status(failures.is_empty()),
                summary: format!("{} pairs, {} failures", pairs.len(), failures.len()),
            })
        }
        Command::Hilbert { d, lambda, order, table } => hilbert(*d, lambda.as_deref(), *order, *table),
        Command::Cubic { test, input } => cubic(*test, input.as_ref(), seed),
        Command::Recover { input, v1, det_check } => recover(input.as_ref(), v1.as_deref(), *det_check),
        Command::Tor {
            vars,
            i,
            d,
            nmax,
            relations,
        } => tor(*vars, *i, *d, *nmax, relations.as_ref()),
        Command::VerifyAll { level } => {
            let outcomes = run_checks(*level, seed);
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let mut summary = String::new();
            for o in &outcomes {
                summary.push_str(&format!(
                    "\n  [{}] {:>2} {}: {}",
                    if o.passed { "pass" } else { "FAIL" },
                    o.id,
                    o.name,
                    o.detail
                ));
            }
            Ok(Outcome {
                params: json!({ "level": level, "seed": seed }),
                result: json!({ "checks": outcomes }),
                status: status(passed == outcomes.len()),
                summary: format!("{passed}/{} checks passed{summary}", outcomes.len()),
            })
        }
    }
}

fn fh(
    d: u32,
    n: u32,
    m: u32,
    prime: Option<u64>,
    modular: bool,
    dump: Option<&PathBuf>,
    seed: u64,
) -> Result<Outcome> {
    let fh = fh_matrix(d, n, m)?;
    if let Some(path) = dump {
        let file = fs::File::create(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        fh.matrix
            .write_dump(std::io::BufWriter::new(file))
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    let opts = RankOptions {
        force_modular: modular,
        primes: prime.map(|p| vec![p]),
        seed,
    };
    let r = analyze(&fh, &opts)?;
    let mut result = serde_json::to_value(&r).unwrap();
    let kernel = match prime {
        Some(p) if r.dim_j_m > 0 => Some(kernel_basis(&fh.matrix, Field::PrimeField(p))?),
        None if r.dim_j_m > 0 && r.method == RankMethod::Exact => Some(kernel_basis(&fh.matrix, Field::Rationals)?),
        _ => None,
    };
    if let Some(k) = kernel {
        result["kernel"] = json!(k.iter().map(|v| render_kernel_vector(&fh, v)).collect::<Vec<_>>());
    }
    let st = match (r.method, prime) {
        (RankMethod::Exact, _) => Status::Pass,
        (RankMethod::Modular, Some(_)) => Status::Pass,
        (RankMethod::Modular, None) if r.proven_full_rank => Status::Pass,
        _ => Status::ModularOnly,
    };
    Ok(Outcome {
        params: json!({ "d": d, "n": n, "m": m, "prime": prime, "modular": modular }),
        summary: format!(
            "domain {}, codomain {}, rank {} ({}), kernel {}, cokernel {}",
            r.dim_domain,
            r.dim_codomain,
            r.rank,
            serde_json::to_value(r.method).unwrap().as_str().unwrap(),
            r.dim_j_m,
            r.dim_coker
        ),
        result,
        status: st,
    })
}

fn hilbert(d: Option<u32>, lambda: Option<&str>, order: usize, table: bool) -> Result<Outcome> {
    if let Some(d) = d {
        let num = carlitz_numerator(d as usize)?;
        let ok = carlitz_check(d, order)?;
        return Ok(Outcome {
            params: json!({ "d": d, "order": order }),
            result: json!({
                "numerator": num,
                "series": crate::hilbert_covariants::ha_series(d, order),
                "identity_holds": ok,
            }),
            status: status(ok),
            summary: format!("numerator {}, identity to order {order}: {ok}", num.compact()),
        });
    }
    let lambda = parse_partition(lambda.expect("clap requires --d or --lambda"))?;
    let num = syt_numerator(&lambda)?;
    let ok = proposition_check(&lambda, order)?;
    let mut result = json!({
        "lambda": lambda,
        "numerator": num,
        "series": hm_lambda_series(&lambda, order)?,
        "identity_holds": ok,
    });
    let mut summary = format!("numerator {}, identity to order {order}: {ok}", num.compact());
    if table {
        let t = generator_table(&lambda)?;
        summary.push('\n');
        summary.push_str(&t.to_tsv());
        result["table"] = json!(t.to_tsv());
        result["generators"] = json!(t.total_generators());
    }
    Ok(Outcome {
        params: json!({ "lambda": lambda, "order": order, "table": table }),
        result,
        status: status(ok),
        summary,
    })
}

fn cubic(test: CubicTest, input: Option<&PathBuf>, seed: u64) -> Result<Outcome> {
    if test == CubicTest::Complex {
        let r = complex_checks(seed)?;
        return Ok(Outcome {
            params: json!({ "test": "complex", "seed": seed }),
            summary: format!(
                "skew {}, composition zero {}, generic rank {}, decomposable ranks {:?}",
                r.skew_symmetric, r.composition_zero, r.generic_rank, r.decomposable_ranks
            ),
            result: serde_json::to_value(&r).unwrap(),
            status: Status::Pass,
        });
    }
    let path = input.expect("clap requires --input");
    let f = read_form(path)?;
    let params = json!({ "test": format!("{test:?}").to_lowercase(), "input": path });
    match test {
        CubicTest::Aronhold => {
            let product = aronhold_test(&f)?;
            Ok(Outcome {
                params,
                result: json!({ "form": f.to_string(), "product_of_linear_forms": product }),
                status: Status::Pass,
                summary: format!("{f}: product of linear forms {product}"),
            })
        }
        CubicTest::Hessian => {
            let h = hessian_cubic(&f)?;
            Ok(Outcome {
                params,
                result: json!({ "form": f.to_string(), "hessian": serde_json::from_str::<Value>(&h.to_json()).unwrap() }),
                status: Status::Pass,
                summary: format!("H = {h}"),
            })
        }
        CubicTest::D2rank => {
            let m = d2_matrix(&divided_power_coordinates(&f)?)?;
            let rank = rank_rational(&m);
            Ok(Outcome {
                params,
                result: json!({ "form": f.to_string(), "rank": rank }),
                status: Status::Pass,
                summary: format!("rank d2 = {rank}"),
            })
        }
        CubicTest::Complex => unreachable!(),
    }
}

fn recover(input: Option<&PathBuf>, v1: Option<&str>, det_check: Option<usize>) -> Result<Outcome> {
    if let Some(d) = det_check {
        let r = e_matrix_det_check(d)?;
        return Ok(Outcome {
            params: json!({ "det_check": d }),
            status: status(r.holds),
            summary: format!("leading coefficient {}, {} terms", r.leading_term_coefficient, r.determinant_terms),
            result: serde_json::to_value(&r).unwrap(),
        });
    }
    let path = input.expect("clap requires --input");
    let f = read_form(path)?;
    let v1: Vec<_> = v1
        .expect("clap requires --v1")
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<_>>()?;
    let d = f.degree() as usize;
    let n = f.nvars().saturating_sub(1);
    let rows = recover_coordinates(d, n, &v1, &f)?;
    let back = expand_product(&rows.iter().cloned().map(LinearForm::new).collect::<Vec<_>>())?;
    let ok = back == f;
    let printable: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    Ok(Outcome {
        params: json!({ "input": path, "v1": v1.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
        result: json!({ "factors": printable, "product_matches": ok }),
        status: status(ok),
        summary: format!("factors {printable:?}, product matches {ok}"),
    })
}

fn tor(vars: usize, i: usize, d: usize, nmax: u32, relations: Option<&PathBuf>) -> Result<Outcome> {
    let ring = match relations {
        Some(p) => GradedRingSpec::with_relations(vars, parse_relations(p)?)?,
        None => GradedRingSpec::polynomial(vars),
    };
    if nmax == 0 {
        return Err(Error::BadRange("nmax must be positive".into()));
    }
    let ns: Vec<u32> = (1..=nmax).collect();
    let table = tor_table(&ring, i, d, &ns)?;
    let mut euler_ok = true;
    for &n in &ns {
        euler_ok &= euler_characteristic_check(&ring, n, d)?.holds;
    }
    let tsv = table.to_tsv();
    let (fit, fit_ok) = match fit_growth(table.clone(), vars) {
        Ok(g) => {
            let ok = g.bound_ok;
            (serde_json::to_value(&g).unwrap(), ok)
        }
        Err(e @ Error::NoStabilization { .. }) => (json!({ "error": e.to_string() }), false),
        Err(e) => return Err(e),
    };
    let summary = format!(
        "euler {euler_ok}, fit {}\n{tsv}",
        fit.get("polynomial").and_then(Value::as_str).unwrap_or("none")
    );
    Ok(Outcome {
        params: json!({ "vars": vars, "i": i, "d": d, "nmax": nmax, "relations": relations }),
        result: json!({ "table": tsv, "entries": table.entries, "fit": fit, "euler_holds": euler_ok }),
        status: status(euler_ok && fit_ok),
        summary,
    })
}
