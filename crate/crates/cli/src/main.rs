//! Command-line front end: verification runs, the leading-term suite, and
//! plain-text dumps of the pipeline artifacts.
//!
//! Exit status: 0 when every enabled check passes, 1 on a check failure,
//! 2 on usage or parameter errors.

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, One, Signed, ToPrimitive};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use symminors::betti::{closed_form_betti, determinantal_invariants, hochster_betti, BettiTable};
use symminors::complexes::{matching_complex_facets, BandCycle};
use symminors::groebner::{
    ideal_contains_monomials, initial_ideal, verify_groebner, MonomialIdeal,
};
use symminors::minors::{all_minors, initmon_candidates};
use symminors::order::TermOrder;
use symminors::verify::{lemma_suite, run_verification, VerifyOptions};
use symminors::Polynomial;

#[derive(Parser)]
#[command(
    name = "symminors",
    version,
    about = "Exact verification for the minor ideals of a generic symmetric matrix"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification pipeline for one matrix size.
    Verify {
        /// Matrix size (n >= 5).
        #[arg(long)]
        n: usize,
        /// Force the full S-pair sweep regardless of size.
        #[arg(long)]
        force_gb: bool,
        /// Skip the restriction-homology Betti comparison.
        #[arg(long)]
        skip_betti: bool,
        /// Prune S-pairs by the chain criterion (sequential sweep).
        #[arg(long)]
        chain_criterion: bool,
        /// Emit the JSON report instead of the check table.
        #[arg(long)]
        json: bool,
        /// Omit timings so identical inputs give byte-identical output.
        #[arg(long)]
        stable_output: bool,
        /// Worker threads for the parallel stages (default: all CPUs).
        #[arg(long)]
        workers: Option<usize>,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively check the leading-term claims at one size.
    Lemmas {
        /// Matrix size (n >= 4).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print pipeline artifacts in plain text.
    Dump {
        #[arg(value_enum)]
        what: DumpKind,
        /// Matrix size (n >= 5).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form invariants of the t-minor quotient.
    Invariants {
        /// Matrix size.
        #[arg(long)]
        n: usize,
        /// Minor size (2 <= t <= n).
        #[arg(long)]
        t: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpKind {
    Minors,
    Initial,
    Complex,
    Betti,
}

/// Outcome of a subcommand: emitted text plus the process status.
struct Output {
    failed_check: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            if output.failed_check {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Output, String> {
    match cli.command {
        Command::Verify {
            n,
            force_gb,
            skip_betti,
            chain_criterion,
            json,
            stable_output,
            workers,
            out,
        } => {
            if let Some(w) = workers {
                if w == 0 {
                    return Err("worker count must be positive".to_string());
                }
                rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build_global()
                    .map_err(|e| e.to_string())?;
            }
            let options = VerifyOptions {
                force_gb,
                skip_betti,
                chain_criterion,
            };
            let report = run_verification(n, &options).map_err(|e| e.to_string())?;
            let text = if json {
                let mut s = serde_json::to_string_pretty(&report.to_json(stable_output)).unwrap();
                s.push('\n');
                s
            } else {
                report.render_text()
            };
            emit(out, text, !report.overall())
        }
        Command::Lemmas { n, json, out } => {
            let suite = lemma_suite(n).map_err(|e| e.to_string())?;
            let text = if json {
                let mut s = serde_json::to_string_pretty(&suite.to_json()).unwrap();
                s.push('\n');
                s
            } else {
                suite.render_text()
            };
            emit(out, text, !suite.passed())
        }
        Command::Dump { what, n, out } => {
            if n < 5 {
                return Err(format!(
                    "dump requires n >= 5 (the minor size n-2 must be at least 3); got n={n}"
                ));
            }
            let order = TermOrder::standard(n).map_err(|e| e.to_string())?;
            match what {
                DumpKind::Minors => {
                    let minors = all_minors(&order, n - 2).map_err(|e| e.to_string())?;
                    let mut text = String::new();
                    for (spec, poly) in &minors {
                        let (lt, lc) = poly.leading_term().expect("minors are nonzero");
                        text.push_str(&format!(
                            "{spec}; lt={}; lc={}\n",
                            order.monomial_string(lt),
                            format_unit_coeff(lc)
                        ));
                    }
                    emit(out, text, false)
                }
                DumpKind::Initial => {
                    let (ideal, certified) = certified_initial_ideal(&order)?;
                    let mut text = String::new();
                    for m in ideal.gens() {
                        text.push_str(&order.monomial_string(m));
                        text.push('\n');
                    }
                    emit(out, text, !certified)
                }
                DumpKind::Complex => {
                    let cycle = BandCycle::new(n).map_err(|e| e.to_string())?;
                    let matching =
                        matching_complex_facets(2 * n, n - 3).map_err(|e| e.to_string())?;
                    let mut text = String::new();
                    for (i, v) in cycle.variables().iter().enumerate() {
                        text.push_str(&format!("# vertex {} = {}\n", i + 1, v));
                    }
                    for line in matching.facet_lines() {
                        text.push_str(&line);
                        text.push('\n');
                    }
                    emit(out, text, false)
                }
                DumpKind::Betti => {
                    let (table, label, certified) = if n <= 6 {
                        let (ideal, certified) = certified_initial_ideal(&order)?;
                        let table = hochster_betti(&ideal).map_err(|e| e.to_string())?;
                        (table, "computed from the initial ideal", certified)
                    } else {
                        (closed_form_betti(n), "closed form", true)
                    };
                    let text = format!(
                        "# {label}\n{}{}",
                        table.staircase(),
                        betti_json_line(&table)
                    );
                    emit(out, text, !certified)
                }
            }
        }
        Command::Invariants { n, t, json, out } => {
            let report = determinantal_invariants(n, t).map_err(|e| e.to_string())?;
            let text = if json {
                let mut value = serde_json::json!({
                    "schema": 1,
                    "n": report.n,
                    "t": report.t,
                    "dim": report.dim,
                    "regularity": report.regularity,
                    "a_invariant": report.a_invariant,
                    "gorenstein": report.gorenstein,
                });
                value["multiplicity"] = big_to_json(&report.multiplicity);
                let mut s = serde_json::to_string_pretty(&value).unwrap();
                s.push('\n');
                s
            } else {
                format!(
                    "n={} t={}\ndim           {}\nmultiplicity  {}\nregularity    {}\na_invariant   {}\ngorenstein    {}\n",
                    report.n,
                    report.t,
                    report.dim,
                    report.multiplicity,
                    report.regularity,
                    report.a_invariant,
                    report.gorenstein
                )
            };
            emit(out, text, false)
        }
    }
}

/// Initial ideal together with its certificate: the S-pair sweep through
/// n = 6, the inclusion route above. `certified` is false when the
/// verification step failed.
fn certified_initial_ideal(order: &TermOrder) -> Result<(MonomialIdeal, bool), String> {
    let n = order.n();
    let gens: Vec<Polynomial> = all_minors(order, n - 2)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    if n <= 6 {
        let report = verify_groebner(order, &gens, false).map_err(|e| e.to_string())?;
        Ok((initial_ideal(order, &gens), report.verdict))
    } else {
        let candidates = initmon_candidates(order, n - 2);
        let certified = ideal_contains_monomials(&gens, candidates.iter());
        Ok((MonomialIdeal::new(order.num_vars(), candidates), certified))
    }
}

fn format_unit_coeff(c: &num::BigRational) -> String {
    if c.abs().is_one() {
        if c.is_negative() {
            "-1".to_string()
        } else {
            "+1".to_string()
        }
    } else {
        c.to_string()
    }
}

fn betti_json_line(table: &BettiTable) -> String {
    format!("{}\n", serde_json::to_string(&table.to_json()).unwrap())
}

fn big_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(small) => serde_json::json!(small),
        None => serde_json::json!(v.to_string()),
    }
}

fn emit(out: Option<PathBuf>, text: String, failed_check: bool) -> Result<Output, String> {
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            file.write_all(text.as_bytes())
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        }
        None => print!("{text}"),
    }
    Ok(Output { failed_check })
}
