//! Command-line front-end: verification, Taylor heads, orbits, and zeros.
//!
//! Exit status is 0 on success, 1 when a verification fails, and 2 for
//! usage errors (bad flags, unknown fields, degrees over the Taylor cap).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use beltrami::construct::{catalog, FieldCatalog, FieldData, ENTRY_NAMES};
use beltrami::dynamics::{
    all_symmetry_rays, full_line_zero_map, line_zero_map, rk4_orbit, search_zeros, CompiledField, LineClass,
    DEFAULT_SCAN_STEP, DEFAULT_STEP,
};
use beltrami::exactnum::Scalar;
use beltrami::trigexpr::{Polynomial, VectorFieldExpr, DEFAULT_TAYLOR_CAP};
use beltrami::verify::{head_bracket, nonzero_witness, verify_all, verify_field, Report};
use beltrami::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Environment variable that overrides the Taylor degree cap.
const TAYLOR_CAP_VAR: &str = "BELTRAMI_TAYLOR_CAP";

#[derive(Parser, Debug)]
#[command(name = "beltrami", version, about = "Exact icosahedral Beltrami fields over Q(√5)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the registered checks, for every criterion or for one field.
    Verify {
        /// `all` or a catalog entry name.
        #[arg(default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalog entries, or print one as a JSON field descriptor.
    Catalog {
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Taylor polynomial of each component up to a total degree.
    Taylor {
        #[arg(long)]
        field: String,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fixed-step RK4 orbit of a field.
    Orbit {
        #[arg(long, default_value = "I")]
        field: String,
        /// Initial point, comma separated.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        x0: Point,
        #[arg(long, default_value_t = 1.0)]
        t_end: f64,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Positive zeros along the symmetry rays of one class, or all classes.
    Zeros {
        /// F, V or E; omit for all 62 rays.
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value = "I")]
        field: String,
        #[arg(long, default_value_t = 20.0)]
        s_max: f64,
        #[arg(long, default_value_t = DEFAULT_SCAN_STEP)]
        scan_step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 62 symmetry rays.
    Lines {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The bracket [N, Q] of the two leading Taylor heads, with a witness.
    Bracket {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Newton search for zeros from a cubic grid of starting points.
    Search {
        #[arg(long, default_value = "I")]
        field: String,
        #[arg(long, default_value_t = 6.0)]
        half_width: f64,
        #[arg(long, default_value_t = 7)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, PartialEq)]
struct Point(Vec<f64>);

fn parse_point(s: &str) -> Result<Point, String> {
    s.split(',')
        .map(|p| {
            let v: f64 = p.trim().parse().map_err(|_| format!("not a number: {p:?}"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("coordinate must be finite: {p:?}"))
            }
        })
        .collect::<Result<_, _>>()
        .map(Point)
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownField { .. }
            | Error::InvalidArgument(_)
            | Error::Parse { .. }
            | Error::TaylorCapExceeded { .. }
            | Error::DimensionMismatch { .. }
            | Error::NonFinite(_) => Failure::Usage(e.to_string()),
            Error::Verification { .. } => Failure::Verification(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(v: &Value, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    text.push('\n');
    emit(&text, out)
}

fn taylor_cap() -> Result<u32, Failure> {
    match std::env::var(TAYLOR_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{TAYLOR_CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_TAYLOR_CAP),
    }
}

fn check_field_name(name: &str) -> Result<(), Failure> {
    if ENTRY_NAMES.contains(&name) {
        Ok(())
    } else {
        Err(Error::UnknownField {
            name: name.to_string(),
            available: ENTRY_NAMES.join(", "),
        }
        .into())
    }
}

fn build_catalog() -> Result<FieldCatalog, Failure> {
    Ok(catalog()?)
}

fn compiled(c: &FieldCatalog, name: &str) -> Result<CompiledField, Failure> {
    match &c.get(name)?.data {
        FieldData::Golden(v) => Ok(CompiledField::new(v)),
        FieldData::Planar(v) => Ok(CompiledField::new(v)),
        FieldData::Rational(_) => Err(Failure::Usage(format!(
            "{name} is a rational-function field; orbits and searches need a trigonometric field"
        ))),
    }
}

fn taylor_json<S: Scalar>(v: &VectorFieldExpr<S>, degree: u32) -> Value {
    let comps: Vec<Polynomial<S>> = v.taylor(degree);
    json!(comps.iter().map(Polynomial::to_json).collect::<Vec<_>>())
}

fn report_text(r: &Report) -> String {
    let mut s = String::new();
    for c in &r.checks {
        s.push_str(&format!("[{:>2}] {c}\n", c.criterion));
    }
    s.push_str(if r.passed() { "all checks passed\n" } else { "some checks failed\n" });
    s
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { scope, format, out } => {
            let report = if scope == "all" {
                verify_all()?
            } else {
                check_field_name(&scope)?;
                verify_field(&scope)?
            };
            match format {
                Format::Json => emit_json(&report.to_json(), &out)?,
                Format::Text => emit(&report_text(&report), &out)?,
                Format::Csv => return Err(Failure::Usage("verify reports are json or text".into())),
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification("one or more checks failed".into()))
            }
        }
        Command::Catalog { field, out } => {
            let c = build_catalog()?;
            match field {
                Some(name) => {
                    check_field_name(&name)?;
                    emit_json(&c.get(&name)?.to_json(), &out)
                }
                None => {
                    let list: Vec<Value> = c
                        .entries()
                        .iter()
                        .map(|e| json!({"name": e.name, "dimension": e.data.dimension(), "summary": e.summary}))
                        .collect();
                    emit_json(&json!(list), &out)
                }
            }
        }
        Command::Taylor { field, degree, out } => {
            check_field_name(&field)?;
            let cap = taylor_cap()?;
            if degree > cap {
                return Err(Error::TaylorCapExceeded { degree, cap }.into());
            }
            let c = build_catalog()?;
            let components = match &c.get(&field)?.data {
                FieldData::Golden(v) => taylor_json(v, degree),
                FieldData::Planar(v) => taylor_json(v, degree),
                FieldData::Rational(_) => {
                    return Err(Failure::Usage(format!("{field} is a rational-function field")));
                }
            };
            emit_json(&json!({"field": field, "degree": degree, "components": components}), &out)
        }
        Command::Orbit {
            field,
            x0,
            t_end,
            step,
            format,
            out,
        } => {
            check_field_name(&field)?;
            let x0 = x0.0;
            if step.is_nan() || step <= 0.0 {
                return Err(Failure::Usage(format!("--step must be positive, got {step}")));
            }
            if t_end.is_nan() || t_end <= 0.0 {
                return Err(Failure::Usage(format!("--t-end must be positive, got {t_end}")));
            }
            let c = build_catalog()?;
            let f = compiled(&c, &field)?;
            let orbit = rk4_orbit(&f, &x0, t_end, step)?;
            if orbit.overflow {
                eprintln!("warning: orbit left the finite range at t = {}", orbit.final_time());
            }
            match format {
                Format::Csv => emit(&orbit.to_csv(), &out),
                Format::Json => emit_json(&orbit.to_json(), &out),
                Format::Text => Err(Failure::Usage("orbits are csv or json".into())),
            }
        }
        Command::Zeros {
            class,
            field,
            s_max,
            scan_step,
            out,
        } => {
            check_field_name(&field)?;
            let c = build_catalog()?;
            let v = c.golden(&field)?;
            let reports = match class {
                Some(k) => line_zero_map(v, k.parse::<LineClass>()?, s_max, scan_step)?,
                None => full_line_zero_map(v, s_max, scan_step)?,
            };
            emit_json(&json!(reports.iter().map(|r| r.to_json()).collect::<Vec<_>>()), &out)
        }
        Command::Lines { out } => {
            let rays = all_symmetry_rays()?;
            let list: Vec<Value> = rays
                .iter()
                .map(|(class, d)| {
                    json!({
                        "class": class.name(),
                        "direction": d.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "direction_f64": d.iter().map(Scalar::to_f64).collect::<Vec<_>>(),
                    })
                })
                .collect();
            emit_json(&json!(list), &out)
        }
        Command::Bracket { out } => {
            let b = head_bracket()?;
            let witness = nonzero_witness(&b);
            let value = json!({
                "nonzero": witness.is_some(),
                "witness": witness.map(|(k, m, c)| json!({"component": k, "monomial": m, "coefficient": c.to_string()})),
                "bracket": b.to_json(),
            });
            emit_json(&value, &out)
        }
        Command::Search {
            field,
            half_width,
            grid,
            out,
        } => {
            check_field_name(&field)?;
            let c = build_catalog()?;
            let f = compiled(&c, &field)?;
            let zeros = search_zeros(&f, half_width, grid)?;
            emit_json(&json!(zeros.iter().map(|z| z.to_json()).collect::<Vec<_>>()), &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
