//! `diamondlab` — count diamonds, certify extremal tournaments, and
//! reproduce the bundled claims from the command line.
//!
//! Reports are JSON on stdout (`--out` redirects to a file); `construct` and
//! `switch` emit the tournament text format so commands can be piped.
//! Vertices are 1-indexed on the command line and in reports.
//!
//! Exit codes: 0 success, 1 domain error (bad input data, disagreement),
//! 2 usage error.

mod report;
mod reproduce;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use diamondlab_core as core;
use diamondlab_core::{
    CharPoly, CountMethod, SearchOptions, SeidelMatrix, SwitchSet, Tournament,
};
use report::{envelope, exact_int, exact_ints, one_indexed};
use serde_json::{json, Map, Value};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "diamondlab",
    version,
    about = "Diamond counting, Seidel spectra and extremal search for tournaments"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count diamonds and 3-cycles in a tournament file.
    Count {
        /// Tournament file ('-' or absent reads stdin).
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Generate tournaments in the text format.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Test a structural property and emit its certificate.
    Check {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        property: PropertyArg,
    },
    /// Exact characteristic polynomial, named-form match, determinant and
    /// coefficient identities.
    Spectrum { file: Option<PathBuf> },
    /// Decide switching equivalence of two tournaments on the same labeling.
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        /// Also allow relabeling (brute force, order <= 8).
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Switch a tournament by a vertex set and write the result.
    Switch {
        file: Option<PathBuf>,
        /// Comma-separated 1-indexed vertices of the switch set.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Exhaustive maximum-diamond search at order n (4..=9).
    Search {
        n: usize,
        /// Worker threads for the scan.
        #[arg(long)]
        workers: Option<usize>,
        /// Checkpoint file (defaults to $DIAMONDLAB_CHECKPOINT_DIR/search_n<n>.json).
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Print the proven (and conjectured) diamond bound at order n.
    Bound { n: usize },
    /// Run a bundled end-to-end scenario and emit its expected-vs-actual table.
    Reproduce {
        /// One of: census6, census10-partial, paley-table, section4-lemmas,
        /// conjecture5, conjecture9 (long-running).
        target: String,
        /// Seed for the randomized rows.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for search-backed targets.
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Paley tournament on a prime q ≡ 3 (mod 4).
    Paley {
        q: u64,
        /// Append a dominating vertex (the order-(q+1) extension).
        #[arg(long)]
        star: bool,
    },
    /// A bundled tournament: paper10, ew6 or transitive(n).
    Builtin { name: String },
    /// Remove a vertex (1-indexed).
    Delete { file: PathBuf, v: usize },
    /// Append a vertex dominating everything.
    Dominate { file: Option<PathBuf> },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Spectral,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Extremal,
    #[value(name = "skew-conference")]
    SkewConference,
    #[value(name = "doubly-regular")]
    DoublyRegular,
    Ew,
}

fn main() {
    // die quietly when a pipe consumer stops reading (e.g. `... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn read_input(file: Option<&Path>) -> anyhow::Result<String> {
    match file {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            Ok(buf)
        }
    }
}

/// Loads either text format: a leading integer line means the tournament
/// format, anything else is tried as a Seidel matrix.
fn load_tournament(file: Option<&Path>) -> anyhow::Result<Tournament> {
    let text = read_input(file)?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.trim().parse::<usize>().is_ok() {
        Ok(Tournament::parse(&text)?)
    } else {
        Ok(SeidelMatrix::parse(&text)?.to_tournament())
    }
}

fn emit(out: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, format!("{content}\n"))
            .with_context(|| format!("writing {}", p.display()))?,
        None => println!("{content}"),
    }
    Ok(())
}

fn emit_json(out: Option<&Path>, value: &Value) -> anyhow::Result<()> {
    emit(out, &serde_json::to_string_pretty(value)?)
}

fn default_checkpoint(n: usize) -> Option<PathBuf> {
    std::env::var_os("DIAMONDLAB_CHECKPOINT_DIR")
        .map(|dir| PathBuf::from(dir).join(format!("search_n{n}.json")))
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let started = Instant::now();
    let out = cli.out.as_deref();
    match cli.cmd {
        Cmd::Count { file, method } => {
            let t = load_tournament(file.as_deref())?;
            let mut payload = Map::new();
            payload.insert("n".into(), json!(t.n()));
            let mut exit = 0;
            match method {
                MethodArg::Oracle | MethodArg::Spectral => {
                    let m = if matches!(method, MethodArg::Oracle) {
                        CountMethod::Oracle
                    } else {
                        CountMethod::Spectral
                    };
                    let r = core::CountReport::of(&t, m);
                    payload.insert("method".into(), serde_json::to_value(m)?);
                    payload.insert("delta".into(), json!(r.delta));
                    payload.insert("c3".into(), json!(r.c3));
                }
                MethodArg::Both => {
                    let oracle = core::CountReport::of(&t, CountMethod::Oracle);
                    let spectral = core::CountReport::of(&t, CountMethod::Spectral);
                    let agree = oracle.delta == spectral.delta && oracle.c3 == spectral.c3;
                    payload.insert("method".into(), json!("both"));
                    payload.insert("delta".into(), json!(oracle.delta));
                    payload.insert("c3".into(), json!(oracle.c3));
                    payload.insert("spectral_delta".into(), json!(spectral.delta));
                    payload.insert("spectral_c3".into(), json!(spectral.c3));
                    payload.insert("agree".into(), json!(agree));
                    if !agree {
                        eprintln!(
                            "error: oracle and spectral counters disagree: delta {}/{}, c3 {}/{}",
                            oracle.delta, spectral.delta, oracle.c3, spectral.c3
                        );
                        exit = 1;
                    }
                }
            }
            emit_json(out, &envelope("count", &[input_name(file.as_deref())], ms(started), payload))?;
            Ok(exit)
        }

        Cmd::Construct { what } => {
            let t = match what {
                ConstructCmd::Paley { q, star } => {
                    let t = core::paley(q)?;
                    if star {
                        core::add_dominating_vertex(&t)?
                    } else {
                        t
                    }
                }
                ConstructCmd::Builtin { name } => core::builtin(&name)?,
                ConstructCmd::Delete { file, v } => {
                    let t = load_tournament(Some(&file))?;
                    let v = to_zero_indexed(v, t.n())?;
                    core::delete_vertex(&t, v)?
                }
                ConstructCmd::Dominate { file } => {
                    let t = load_tournament(file.as_deref())?;
                    core::add_dominating_vertex(&t)?
                }
            };
            emit(out, t.to_text().trim_end())?;
            Ok(0)
        }

        Cmd::Check { file, property } => {
            let t = load_tournament(file.as_deref())?;
            let s = SeidelMatrix::of(&t);
            let mut payload = Map::new();
            payload.insert("n".into(), json!(t.n()));
            match property {
                PropertyArg::Extremal => {
                    let cert = core::certify_extremal(&t);
                    let verified = cert.verify(&t);
                    payload.insert("property".into(), json!("extremal"));
                    payload.insert(
                        "pass".into(),
                        json!(cert.kind != core::CertificateKind::None),
                    );
                    payload.insert("certificate".into(), report::certificate_json(&cert, verified));
                }
                PropertyArg::SkewConference => {
                    payload.insert("property".into(), json!("skew-conference"));
                    payload.insert("pass".into(), json!(core::is_skew_conference(&s)));
                }
                PropertyArg::DoublyRegular => {
                    let pass = core::is_doubly_regular(&t);
                    payload.insert("property".into(), json!("doubly-regular"));
                    payload.insert("pass".into(), json!(pass));
                    payload.insert(
                        "h".into(),
                        if pass { json!((t.n() - 3) / 4) } else { Value::Null },
                    );
                }
                PropertyArg::Ew => {
                    let partition = core::is_skew_ew_seidel(&s)?;
                    payload.insert("property".into(), json!("ew"));
                    payload.insert("pass".into(), json!(partition.is_some()));
                    payload.insert(
                        "partition".into(),
                        match &partition {
                            Some(p) => json!([one_indexed(&p.parts[0]), one_indexed(&p.parts[1])]),
                            None => Value::Null,
                        },
                    );
                }
            }
            emit_json(out, &envelope("check", &[input_name(file.as_deref())], ms(started), payload))?;
            Ok(0)
        }

        Cmd::Spectrum { file } => {
            let t = load_tournament(file.as_deref())?;
            let s = SeidelMatrix::of(&t);
            let poly = CharPoly::of_seidel(&s);
            let form = core::match_spectral_form(&poly);
            let beta_alpha = core::beta_alpha_identity_check(&s);
            let mut payload = Map::new();
            payload.insert("n".into(), json!(t.n()));
            payload.insert("coefficients".into(), exact_ints(poly.coeffs()));
            payload.insert("display".into(), json!(poly.to_display_string()));
            payload.insert("determinant".into(), exact_int(&poly.determinant()));
            payload.insert("form".into(), serde_json::to_value(&form)?);
            payload.insert(
                "factored".into(),
                match form.factored_string(t.n()) {
                    Some(f) => json!(f),
                    None => Value::Null,
                },
            );
            payload.insert(
                "minor_sum".into(),
                if t.n() >= 4 {
                    let chk = core::minor_sum_identity_check(&t)?;
                    json!({
                        "pass": chk.pass,
                        "alpha4": exact_int(&chk.alpha4),
                        "expected": exact_int(&chk.expected),
                    })
                } else {
                    Value::Null
                },
            );
            payload.insert(
                "beta_alpha".into(),
                json!({
                    "pass": beta_alpha.pass,
                    "alpha2": exact_int(&beta_alpha.alpha2),
                    "alpha4": exact_int(&beta_alpha.alpha4),
                    "beta2": exact_int(&beta_alpha.beta2),
                }),
            );
            emit_json(out, &envelope("spectrum", &[input_name(file.as_deref())], ms(started), payload))?;
            Ok(0)
        }

        Cmd::Equiv {
            file1,
            file2,
            up_to_iso,
        } => {
            let t1 = load_tournament(Some(&file1))?;
            let t2 = load_tournament(Some(&file2))?;
            let inputs = vec![file1.display().to_string(), file2.display().to_string()];
            let mut payload = Map::new();
            payload.insert("n".into(), json!(t1.n()));
            payload.insert("up_to_iso".into(), json!(up_to_iso));
            if up_to_iso {
                match core::are_switching_equivalent_up_to_iso(&t1, &t2)? {
                    Some((perm, d)) => {
                        payload.insert("equivalent".into(), json!(true));
                        payload.insert("permutation".into(), one_indexed(&perm));
                        insert_witness(&mut payload, &d, t1.n());
                    }
                    None => {
                        payload.insert("equivalent".into(), json!(false));
                    }
                }
            } else {
                match core::are_switching_equivalent(&t1, &t2)? {
                    Some(d) => {
                        payload.insert("equivalent".into(), json!(true));
                        insert_witness(&mut payload, &d, t1.n());
                    }
                    None => {
                        payload.insert("equivalent".into(), json!(false));
                    }
                }
            }
            emit_json(out, &envelope("equiv", &inputs, ms(started), payload))?;
            Ok(0)
        }

        Cmd::Switch { file, set } => {
            let t = load_tournament(file.as_deref())?;
            let zero: Vec<usize> = set
                .iter()
                .map(|&v| to_zero_indexed(v, t.n()))
                .collect::<anyhow::Result<_>>()?;
            let x = SwitchSet::from_indices(&zero, t.n())?;
            emit(out, core::switch(&t, x).to_text().trim_end())?;
            Ok(0)
        }

        Cmd::Search {
            n,
            workers,
            checkpoint,
        } => {
            let checkpoint = checkpoint.or_else(|| default_checkpoint(n));
            let opts = SearchOptions {
                workers,
                checkpoint: checkpoint.clone(),
                ..Default::default()
            };
            let outcome = core::search_max(n, &opts)?;
            let payload = report::search_outcome_json(&outcome, checkpoint.as_deref());
            emit_json(out, &envelope("search", &[format!("n={n}")], ms(started), payload))?;
            Ok(0)
        }

        Cmd::Bound { n } => {
            let b = core::bound(n)?;
            let mut payload = Map::new();
            payload.insert("n".into(), json!(b.n));
            payload.insert("residue".into(), json!(b.residue));
            payload.insert("value".into(), json!(b.value));
            payload.insert("conjectured".into(), json!(b.conjectured));
            payload.insert("attainability".into(), json!(b.attainability));
            emit_json(out, &envelope("bound", &[format!("n={n}")], ms(started), payload))?;
            Ok(0)
        }

        Cmd::Reproduce {
            target,
            seed,
            workers,
        } => {
            let (payload, pass) = reproduce::run(&target, seed, workers)?;
            emit_json(out, &envelope("reproduce", &[target.clone()], ms(started), payload))?;
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn insert_witness(payload: &mut Map<String, Value>, d: &core::SignDiagonal, n: usize) {
    payload.insert(
        "witness_diagonal".into(),
        json!(d.signs().iter().map(|&s| s as i64).collect::<Vec<_>>()),
    );
    payload.insert(
        "witness_switch_set".into(),
        one_indexed(&d.to_switch_set().indices(n)),
    );
}

fn input_name(file: Option<&Path>) -> String {
    match file {
        Some(p) if p != Path::new("-") => p.display().to_string(),
        _ => "<stdin>".to_string(),
    }
}

fn to_zero_indexed(v: usize, n: usize) -> anyhow::Result<usize> {
    if v == 0 || v > n {
        Err(anyhow!("vertex {v} out of range 1..={n} (vertices are 1-indexed)"))
    } else {
        Ok(v - 1)
    }
}

fn ms(started: Instant) -> u64 {
    started.elapsed().as_millis() as u64
}
