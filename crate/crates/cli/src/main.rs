//! Command-line front end: evaluation, coefficient tables, the exact identity
//! suite, ladder checks, Christoffel transforms, and quadrature export.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
//! configuration error. Parameters are exact rational strings ("p/q" or "p"),
//! never floats, so nothing is silently rounded on the way in.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use bigm1::family::{b_coeff, exact_moment, lambda_n, u_coeff, weight_poly_part};
use bigm1::ladder::{
    build_lowering, build_raising, christoffel, hahn_check_with, kappa_n, nu_n,
    raising_check_with, LadderReport,
};
use bigm1::quad::{gauss_rule, numeric_mass, to_f64};
use bigm1::rational::parse_rational;
use bigm1::verify::{sample_params, verify_params, CheckEntry};
use bigm1::{Error, MonicPolySeq, Params, Poly, Rational};

#[derive(Parser)]
#[command(name = "bigm1", version, about = "Big -1 Jacobi polynomials over exact rationals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ParamArgs {
    /// alpha, as an exact rational: "p/q" or an integer
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    alpha: String,
    /// beta, as an exact rational
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    beta: String,
    /// c, as an exact rational
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    c: String,
}

impl ParamArgs {
    fn parse(&self) -> Result<Params, Error> {
        Ok(Params::new(
            parse_rational(&self.alpha)?,
            parse_rational(&self.beta)?,
            parse_rational(&self.c)?,
        ))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate monic P_n at an exact rational point
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Per-degree table: eigenvalue, recurrence and ladder constants, coefficients
    Table {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every exact identity at the given parameters plus a random swarm
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Additional random rational parameter triples to test
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Degree-by-degree lowering (alpha+2) and raising (alpha-2) reports
    Ladder {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Christoffel-transform a monic sequence at the given nodes
    Christoffel {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Transform nodes, applied left to right
        #[arg(long, value_delimiter = ',', default_value = "1,-1", allow_hyphen_values = true)]
        nodes: Vec<String>,
        /// Read the input sequence from this JSON file instead of generating
        /// it from the parameters
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// N-point Gaussian quadrature rule for the two-interval weight
    Quad {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8)]
        points: usize,
        /// Significant digits in printed nodes and weights
        #[arg(long, default_value_t = 17)]
        digits: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Eval { params, n, x } => {
            let p = params.parse()?;
            p.validate_up_to(n + 1)?;
            let seq = MonicPolySeq::new(p);
            let value = seq.poly(n)?.eval(&parse_rational(&x)?);
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table {
            params,
            nmax,
            output,
        } => {
            let p = params.parse()?;
            p.validate_up_to(nmax + 2)?;
            let text = table_text(&p, nmax, output.format)?;
            emit(text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            params,
            nmax,
            samples,
            seed,
            output,
        } => {
            let p = params.parse()?;
            let mut entries = verify_params(&p, nmax)?;
            for q in sample_params(samples, seed, nmax) {
                entries.extend(verify_params(&q, nmax)?);
            }
            let all_pass = entries.iter().all(|e| e.residual_zero);
            let text = verify_text(&p, nmax, samples, seed, &entries, output.format);
            emit(text, &output)?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Ladder {
            params,
            nmax,
            output,
        } => {
            let p = params.parse()?;
            p.validate_up_to(nmax + 2)?;
            let text = ladder_text(&p, nmax, output.format)?;
            emit(text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Christoffel {
            params,
            nmax,
            nodes,
            input,
            output,
        } => {
            let nodes: Result<Vec<Rational>, Error> =
                nodes.iter().map(|s| parse_rational(s)).collect();
            let nodes = nodes?;
            let mut polys = match &input {
                Some(path) => read_sequence(path)?,
                None => {
                    let p = params.parse()?;
                    p.validate_up_to(nmax + nodes.len() + 1)?;
                    let seq = MonicPolySeq::new(p);
                    (0..=nmax + nodes.len())
                        .map(|n| seq.poly(n))
                        .collect::<Result<Vec<_>, _>>()?
                }
            };
            for a in &nodes {
                polys = christoffel(&polys, a)?;
            }
            let text = sequence_text(&polys, output.format);
            emit(text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Quad {
            params,
            points,
            digits,
            output,
        } => {
            let p = params.parse()?;
            if points == 0 {
                return Err(Error::Parse("need at least one quadrature point".into()));
            }
            let mass = match (weight_poly_part(&p).is_ok(), p.in_positivity_window()) {
                (true, true) => to_f64(&exact_moment(0, &p)?),
                _ => numeric_mass(to_f64(&p.alpha), to_f64(&p.beta), to_f64(&p.c))?,
            };
            let rule = gauss_rule(points, &p, mass)?;
            let text = quad_text(&rule.nodes, &rule.weights, mass, digits, output.format);
            emit(text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(text: String, output: &OutputArgs) -> Result<(), Error> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn coeff_strings(p: &Poly) -> Vec<Value> {
    if p.is_zero() {
        return vec![Value::String("0".into())];
    }
    p.coeffs()
        .iter()
        .map(|c| Value::String(c.to_string()))
        .collect()
}

fn coeff_csv(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn table_text(p: &Params, nmax: usize, format: Format) -> Result<String, Error> {
    let seq = MonicPolySeq::new(p.clone());
    let mut rows = Vec::new();
    for n in 0..=nmax {
        let poly = seq.poly(n)?;
        let u = if n == 0 {
            None
        } else {
            Some(u_coeff(n, p)?.to_string())
        };
        rows.push((
            n,
            lambda_n(n, p).to_string(),
            b_coeff(n, p)?.to_string(),
            u,
            nu_n(n, p).to_string(),
            kappa_n(n, p).to_string(),
            poly,
        ));
    }
    Ok(match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .into_iter()
                .map(|(n, lambda, b, u, nu, kappa, poly)| {
                    json!({
                        "n": n,
                        "lambda": lambda,
                        "b": b,
                        "u": u,
                        "nu": nu,
                        "kappa": kappa,
                        "coeffs": coeff_strings(&poly),
                    })
                })
                .collect();
            pretty(&Value::Array(rows))
        }
        Format::Csv => {
            let mut out = String::from("n,lambda,b,u,nu,kappa,coeffs\n");
            for (n, lambda, b, u, nu, kappa, poly) in rows {
                out.push_str(&format!(
                    "{n},{lambda},{b},{},{nu},{kappa},{}\n",
                    u.unwrap_or_default(),
                    coeff_csv(&poly)
                ));
            }
            out
        }
    })
}

fn params_json(p: &Params) -> Value {
    json!({
        "alpha": p.alpha.to_string(),
        "beta": p.beta.to_string(),
        "c": p.c.to_string(),
    })
}

fn verify_text(
    p: &Params,
    nmax: usize,
    samples: usize,
    seed: u64,
    entries: &[CheckEntry],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let mut rows = vec![json!({
                "identity": "config",
                "params": params_json(p),
                "residual_zero": true,
                "detail": format!("nmax={nmax} samples={samples} seed={seed}"),
            })];
            rows.extend(entries.iter().map(|e| {
                let mut obj = Map::new();
                obj.insert("identity".into(), Value::String(e.identity.clone()));
                obj.insert("params".into(), params_json(&e.params));
                obj.insert("residual_zero".into(), Value::Bool(e.residual_zero));
                if let Some(d) = &e.detail {
                    obj.insert("detail".into(), Value::String(d.clone()));
                }
                Value::Object(obj)
            }));
            pretty(&Value::Array(rows))
        }
        Format::Csv => {
            let mut out = String::from("identity,alpha,beta,c,residual_zero,detail\n");
            out.push_str(&format!(
                "config,{},{},{},true,nmax={nmax} samples={samples} seed={seed}\n",
                p.alpha, p.beta, p.c
            ));
            for e in entries {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    e.identity,
                    e.params.alpha,
                    e.params.beta,
                    e.params.c,
                    e.residual_zero,
                    e.detail.clone().unwrap_or_default()
                ));
            }
            out
        }
    }
}

fn ladder_text(p: &Params, nmax: usize, format: Format) -> Result<String, Error> {
    let seq = MonicPolySeq::new(p.clone());
    let up_seq = MonicPolySeq::new(p.shifted_alpha(2));
    let down_seq = MonicPolySeq::new(p.shifted_alpha(-2));
    let low = build_lowering(p);
    let raise = build_raising(p);
    // (report, note) rows; a degenerate raising target becomes a note
    let mut rows: Vec<(Result<LadderReport, Error>, usize, i64)> = Vec::new();
    for n in 1..=nmax {
        rows.push((hahn_check_with(&low, &seq, &up_seq, n), n, 2));
    }
    for n in 0..=nmax {
        rows.push((raising_check_with(&raise, &seq, &down_seq, n), n, -2));
    }
    Ok(match format {
        Format::Json => {
            let rows: Result<Vec<Value>, Error> = rows
                .into_iter()
                .map(|(r, n, shift)| match r {
                    Ok(rep) => Ok(json!({
                        "n": rep.n,
                        "shift": rep.shift,
                        "predicted_constant": rep.predicted_constant.to_string(),
                        "exact_match": rep.exact_match,
                    })),
                    Err(Error::DegenerateParams(why)) => Ok(json!({
                        "n": n,
                        "shift": shift,
                        "note": format!("skipped: {why}"),
                    })),
                    Err(e) => Err(e),
                })
                .collect();
            pretty(&Value::Array(rows?))
        }
        Format::Csv => {
            let mut out = String::from("n,shift,predicted_constant,exact_match\n");
            for (r, n, shift) in rows {
                match r {
                    Ok(rep) => out.push_str(&format!(
                        "{},{},{},{}\n",
                        rep.n, rep.shift, rep.predicted_constant, rep.exact_match
                    )),
                    Err(Error::DegenerateParams(_)) => {
                        out.push_str(&format!("{n},{shift},,skipped\n"));
                    }
                    Err(e) => return Err(e),
                }
            }
            out
        }
    })
}

fn read_sequence(path: &PathBuf) -> Result<Vec<Poly>, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad JSON in {}: {e}", path.display())))?;
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("sequence file must be a JSON array".into()))?;
    let mut polys = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let coeffs = row
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("row {i} has no coeffs array")))?;
        let coeffs: Result<Vec<Rational>, Error> = coeffs
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| Error::Parse(format!("row {i}: coefficient not a string")))
                    .and_then(parse_rational)
            })
            .collect();
        polys.push(Poly::from_coeffs(coeffs?));
    }
    Ok(polys)
}

fn sequence_text(polys: &[Poly], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = polys
                .iter()
                .enumerate()
                .map(|(n, p)| json!({"n": n, "coeffs": coeff_strings(p)}))
                .collect();
            pretty(&Value::Array(rows))
        }
        Format::Csv => {
            let mut out = String::from("n,coeffs\n");
            for (n, p) in polys.iter().enumerate() {
                out.push_str(&format!("{n},{}\n", coeff_csv(p)));
            }
            out
        }
    }
}

fn fmt_digits(v: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), v)
}

fn quad_text(nodes: &[f64], weights: &[f64], mass: f64, digits: usize, format: Format) -> String {
    let num = |v: f64| -> Value {
        let rounded: f64 = fmt_digits(v, digits).parse().unwrap();
        serde_json::Number::from_f64(rounded)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    };
    match format {
        Format::Json => pretty(&json!({
            "mass": num(mass),
            "nodes": nodes.iter().map(|&v| num(v)).collect::<Vec<_>>(),
            "weights": weights.iter().map(|&v| num(v)).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = format!("# mass = {}\nnode,weight\n", fmt_digits(mass, digits));
            for (x, w) in nodes.iter().zip(weights) {
                out.push_str(&format!("{},{}\n", fmt_digits(*x, digits), fmt_digits(*w, digits)));
            }
            out
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
