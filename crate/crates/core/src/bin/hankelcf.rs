use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use hankelcf::algebra::{Frac, Series};
use hankelcf::catalog::{self, Grid, Indices, Mode, VerificationReport};
use hankelcf::fe::{solve_series, TauChain};
use hankelcf::hankel::hankel_dets;
use hankelcf::input::{is_series_file, load_equation, load_series};
use hankelcf::paths::{count_paths, coefficients_match_at, find_offset, StepSet};
use hankelcf::period::{self, ShiftConfig};
use hankelcf::serial::frac_to_json;

#[derive(Parser)]
#[command(name = "hankelcf", version, about = "Exact Hankel determinants of quadratic generating functions")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Series coefficients of an equation.
    Solve {
        file: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Run τ steps and list each state with its relation.
    Tau {
        file: String,
        #[arg(long, default_value_t = 5)]
        steps: usize,
    },
    /// Hankel determinants H^(k)_0..H^(k)_n of an equation or a series file.
    Hankel {
        file: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// List every order up to n instead of only H_n.
        #[arg(long)]
        all: bool,
    },
    /// Detect a periodic (or, with --shifted, shift-periodic) τ chain.
    Period {
        file: String,
        #[arg(long, default_value_t = 16)]
        max_steps: usize,
        #[arg(long)]
        shifted: bool,
        /// Largest stride tried with --shifted.
        #[arg(long, default_value_t = 12)]
        stride_max: usize,
        /// Number of fitted samples with --shifted.
        #[arg(long, default_value_t = 10)]
        window: usize,
        /// Also validate the resulting recursion against direct determinants up to this order.
        #[arg(long)]
        validate: Option<usize>,
    },
    /// Check catalog formulas against direct determinants.
    Verify {
        #[arg(long, conflicts_with = "all")]
        catalog_id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Index grid, e.g. `m=2..5,n=12`; `n` sets the largest order.
        #[arg(long)]
        grid: Option<String>,
        /// Check at this many seeded random rational points instead of symbolically.
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value_t = catalog::DEFAULT_SEED)]
        seed: u64,
        /// Symbolic grids with a larger order switch to random points.
        #[arg(long, default_value_t = 16)]
        symbolic_cap: usize,
        /// Print the catalog manifest and exit.
        #[arg(long)]
        manifest: bool,
    },
    /// Count weighted paths that stay at or above the axis.
    Paths {
        file: String,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Compare with the coefficients of this equation.
        #[arg(long)]
        against: Option<String>,
        /// Coefficient index of the empty path; searched when omitted.
        #[arg(long)]
        offset: Option<usize>,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: 2, kind: "usage", message: message.to_string() }
}

fn input(e: impl ToString) -> Failure {
    Failure { code: 2, kind: "input", message: e.to_string() }
}

fn compute(e: impl ToString) -> Failure {
    Failure { code: 2, kind: "computation", message: e.to_string() }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{path}: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(usage(e.to_string().trim_end())),
    };
    match run(&cli) {
        Ok((out, pass)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if !out.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
    ExitCode::from(f.code)
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(compute)
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(compute)?;
    for r in rows {
        w.write_record(&r).map_err(compute)?;
    }
    String::from_utf8(w.into_inner().map_err(compute)?).map_err(compute)
}

fn show(f: &Frac, params: &[&str]) -> String {
    f.to_string_with(params)
}

/// Output text and whether the command passed.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let csv = cli.format == Format::Csv;
    match &cli.command {
        Command::Solve { file, order } => {
            let fe = load_equation(&read(file)?).map_err(input)?;
            let s = solve_series(&fe, *order).map_err(compute)?;
            let names = fe.param_names();
            let coeffs: Vec<String> = s.coeffs().iter().map(|c| show(c, &names)).collect();
            let out = if csv {
                csv_table(&["n", "coeff"], coeffs.into_iter().enumerate().map(|(n, c)| vec![n.to_string(), c]).collect())?
            } else {
                to_json(&json!({ "equation": fe.to_string(), "params": fe.params(), "order": order, "coeffs": coeffs }))?
            };
            Ok((out, true))
        }
        Command::Tau { file, steps } => {
            let fe = load_equation(&read(file)?).map_err(input)?;
            let chain = TauChain::build(&fe, *steps).map_err(compute)?;
            let names = fe.param_names();
            if csv {
                let rows = chain
                    .relations
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let next = &chain.states[i + 1];
                        let j = next.to_json();
                        vec![
                            (i + 1).to_string(),
                            format!("{:?}", r.case).to_lowercase(),
                            r.shift.to_string(),
                            r.sign.to_string(),
                            show(&r.gamma, &names),
                            j.d.to_string(),
                            j.k.to_string(),
                            next.u().to_string_with(&names),
                            next.v().to_string_with(&names),
                        ]
                    })
                    .collect();
                return Ok((csv_table(&["step", "case", "shift", "sign", "gamma", "d", "k", "u", "v"], rows)?, true));
            }
            let relations: Vec<_> = chain
                .relations
                .iter()
                .map(|r| json!({ "case": r.case, "shift": r.shift, "sign": r.sign, "gamma": frac_to_json(&r.gamma, &names) }))
                .collect();
            let composite = chain.composite(0, chain.relations.len());
            let states: Vec<_> = chain.states.iter().map(|s| s.to_json()).collect();
            let out = json!({
                "states": states,
                "relations": relations,
                "composite": composite.to_json(&names),
                "formula": composite.describe(&names),
            });
            Ok((to_json(&out)?, true))
        }
        Command::Hankel { file, n, k, all } => {
            let src = read(file)?;
            let (series, params): (Series, Vec<String>) = if is_series_file(&src) {
                load_series(&src).map_err(input)?
            } else {
                let fe = load_equation(&src).map_err(input)?;
                (solve_series(&fe, 2 * n + k).map_err(compute)?, fe.params().to_vec())
            };
            let names: Vec<&str> = params.iter().map(String::as_str).collect();
            let dets = hankel_dets(&series, *n, *k).map_err(compute)?;
            let range = if *all { 0..=*n } else { *n..=*n };
            let rows: Vec<(usize, String)> = range.map(|i| (i, show(&dets[i], &names))).collect();
            let out = if csv {
                csv_table(&["n", "k", "det"], rows.into_iter().map(|(i, d)| vec![i.to_string(), k.to_string(), d]).collect())?
            } else if *all {
                let dets: Vec<_> = rows.into_iter().map(|(i, d)| json!({ "n": i, "det": d })).collect();
                to_json(&json!({ "k": k, "dets": dets }))?
            } else {
                to_json(&json!({ "n": n, "k": k, "det": rows[0].1 }))?
            };
            Ok((out, true))
        }
        Command::Period { file, max_steps, shifted, stride_max, window, validate } => {
            let fe = load_equation(&read(file)?).map_err(input)?;
            let names = fe.param_names();
            let oracle = period::fe_oracle(&fe);
            let out = if *shifted {
                let cfg = ShiftConfig::default();
                let report = period::detect_shifted_period_with(&fe, *stride_max, *window, &cfg).map_err(compute)?;
                let Some(report) = report else {
                    return Ok((to_json(&json!({ "shifted_period": null }))?, false));
                };
                let mut out = json!({ "shifted_period": report.to_json() });
                if let Some(n) = validate {
                    let rec = period::shifted_recursion(&report, &oracle, *n).map_err(compute)?;
                    out["validated_upto"] = json!(rec.validated_upto);
                }
                out
            } else {
                let Some(report) = period::detect_period(&fe, *max_steps).map_err(compute)? else {
                    return Ok((to_json(&json!({ "period": null }))?, false));
                };
                let mut out = json!({ "period": report.to_json() });
                let n = validate.unwrap_or(0);
                if validate.is_some() {
                    let rec = period::closed_recursion(&report, &oracle, n).map_err(compute)?;
                    out["recursion"] = serde_json::to_value(rec.to_json(&names)).map_err(compute)?;
                }
                out
            };
            Ok((to_json(&out)?, true))
        }
        Command::Verify { catalog_id, all, grid, points, seed, symbolic_cap, manifest } => {
            if *manifest {
                return Ok((to_json(&catalog::manifest())?, true));
            }
            let entries = match (catalog_id, all) {
                (Some(id), _) => vec![catalog::entry(id).map_err(usage)?],
                (None, true) => catalog::catalog(),
                (None, false) => return Err(usage("verify needs --catalog-id or --all")),
            };
            let mut reports: Vec<VerificationReport> = Vec::new();
            for e in &entries {
                let mut g = match grid {
                    Some(spec) => parse_grid(spec, e.default_grid())?,
                    None => e.default_grid(),
                };
                if let Some(k) = points {
                    g.mode = Mode::Points(*k);
                }
                if g.mode == Mode::Symbolic && g.n_max > *symbolic_cap && !e.params.is_empty() {
                    g.mode = Mode::Points(3);
                }
                reports.push(catalog::verify_entry_on(e, &g, *seed).map_err(compute)?);
            }
            let pass = reports.iter().all(|r| r.pass);
            let out = if csv {
                catalog::reports_to_csv(&reports).map_err(compute)?
            } else {
                to_json(&json!({ "seed": seed, "pass": pass, "reports": reports }))?
            };
            Ok((out, pass))
        }
        Command::Paths { file, n_max, against, offset } => {
            let (steps, params) = StepSet::parse(&read(file)?).map_err(input)?;
            let names: Vec<&str> = params.iter().map(String::as_str).collect();
            let counts: Vec<String> = count_paths(&steps, *n_max).iter().map(|p| p.to_string_with(&names)).collect();
            let Some(fe_path) = against else {
                let out = if csv {
                    csv_table(&["n", "count"], counts.into_iter().enumerate().map(|(n, c)| vec![n.to_string(), c]).collect())?
                } else {
                    to_json(&json!({ "counts": counts }))?
                };
                return Ok((out, true));
            };
            let fe = load_equation(&read(fe_path)?).map_err(input)?;
            let found = match offset {
                Some(o) => coefficients_match_at(&steps, &fe, *n_max, *o).map_err(compute)?.then_some(*o),
                None => find_offset(&steps, &fe, *n_max).map_err(compute)?,
            };
            let out = if csv {
                let o = found.map(|o| o.to_string()).unwrap_or_default();
                csv_table(&["match", "offset", "n_max"], vec![vec![found.is_some().to_string(), o, n_max.to_string()]])?
            } else {
                to_json(&json!({ "match": found.is_some(), "offset": found, "n_max": n_max, "counts": counts }))?
            };
            Ok((out, found.is_some()))
        }
    }
}

/// `m=2..5,j=0..1,n=12`: cartesian product of the non-`n` ranges; `n` (or
/// `n=0..12`) sets the largest order.
fn parse_grid(spec: &str, default: Grid) -> Result<Grid, Failure> {
    let mut n_max = default.n_max;
    let mut axes: Vec<(String, Vec<i64>)> = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, range) = part.split_once('=').ok_or_else(|| usage(format!("bad grid term {part:?}")))?;
        let int = |s: &str| s.trim().parse::<i64>().map_err(|_| usage(format!("bad grid term {part:?}")));
        let (lo, hi) = match range.split_once("..") {
            Some((lo, hi)) => (if lo.trim().is_empty() { 0 } else { int(lo)? }, int(hi)?),
            None => (int(range)?, int(range)?),
        };
        if name.trim() == "n" {
            n_max = usize::try_from(hi).map_err(|_| usage("n must be nonnegative"))?;
        } else {
            axes.push((name.trim().to_string(), (lo..=hi).collect()));
        }
    }
    let families = if axes.is_empty() {
        default.families
    } else {
        axes.iter().fold(vec![Indices::default()], |acc, (name, values)| {
            acc.iter().flat_map(|base| values.iter().map(move |&v| base.with(name, v))).collect()
        })
    };
    Ok(Grid { families, n_max, mode: default.mode })
}
