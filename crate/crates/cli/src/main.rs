use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use superfield::lattice::Family;
use superfield::suites::Suite;
use superfield::symbolic::fmt_q;
use superfield_cli::config::RunConfig;
use superfield_cli::expr::{self, Evaluator};
use superfield_cli::run::verify;

#[derive(Parser)]
#[command(
    name = "superfield",
    version,
    about = "Checks graded-algebra, free-field and BV/BRST identities"
)]
struct Cli {
    /// TOML or JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the configured seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enables the Fock-space oracle (suite in `verify`, matrix check in `eval`).
    #[arg(long, global = true, value_enum)]
    oracle: Option<Switch>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Runs verification suites; exits 0 iff every non-informational check passes.
    Verify {
        /// Suites to run; defaults to the configured list. `--suite` with no
        /// names selects none.
        #[arg(long, num_args = 0..)]
        suite: Option<Vec<Suite>>,
        /// Records per-suite wall time in each entry.
        #[arg(long)]
        timings: bool,
        /// Writes the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluates an expression such as `scomm(field(scalar,a,x), conj(scalar,b,y))`.
    Eval { expr: String },
    /// Lists the identities each suite checks.
    ListIdentities {
        #[arg(long, num_args = 0..)]
        suite: Option<Vec<Suite>>,
    },
    /// Prints the configured mode lattice with energies per family.
    DumpLattice,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Config(#[from] superfield_cli::config::ConfigError),
    #[error(transparent)]
    Suite(#[from] superfield::suites::SuiteError),
    #[error("{err}\n  {expr}\n  {caret}")]
    Expr {
        expr: String,
        caret: String,
        err: expr::ExprError,
    },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Lattice(#[from] superfield::lattice::LatticeError),
}

fn caret(e: &expr::ExprError) -> String {
    let pos = match e {
        expr::ExprError::Parse { pos, .. }
        | expr::ExprError::Unknown { pos, .. }
        | expr::ExprError::Eval { pos, .. } => *pos,
    };
    format!("{}^", " ".repeat(pos.saturating_sub(1)))
}

fn emit(text: &str, path: Option<&PathBuf>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(o) = cli.oracle {
        cfg.oracle.enabled = o == Switch::On;
    }
    let settings = cfg.settings()?;
    match cli.command {
        Command::Verify {
            suite,
            timings,
            output,
        } => {
            let suites = match suite {
                Some(s) => s,
                None => cfg.suites()?,
            };
            let report = verify(&suites, &settings, timings || cfg.output.timings)?;
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            emit(&text, output.as_ref().or(cfg.output.path.as_ref()))?;
            Ok(report.passed)
        }
        Command::Eval { expr: src } => {
            let theory = settings.theory();
            let ev = Evaluator {
                lattice: &settings.lattice,
                theory: &theory,
            };
            let wrap = |err| CliError::Expr {
                expr: src.clone(),
                caret: caret(&err),
                err,
            };
            let node = expr::parse(&src).map_err(wrap)?;
            let value = ev.eval(&node).map_err(wrap)?;
            let mut skipped = None;
            let check = if cfg.oracle.enabled && cli.oracle == Some(Switch::On) {
                ev.oracle_check(&node, cfg.oracle.n_max, cfg.oracle.cap)
                    .unwrap_or_else(|e| {
                        skipped = Some(e.to_string());
                        None
                    })
            } else {
                None
            };
            let ok = check.as_ref().is_none_or(|c| c.residual <= cfg.oracle.tol);
            match cli.format {
                Format::Text => {
                    println!("{value}");
                    if let Some(c) = &check {
                        println!(
                            "oracle: dim {}, residual {:.3e} ({})",
                            c.dim,
                            c.residual,
                            if ok { "agrees" } else { "DISAGREES" }
                        );
                    }
                    if let Some(why) = &skipped {
                        println!("oracle: skipped ({why})");
                    }
                }
                Format::Json => {
                    let mut v = serde_json::json!({ "expr": src, "value": value.to_string() });
                    if let Some(c) = &check {
                        v["oracle"] = serde_json::json!({ "dim": c.dim, "residual": c.residual });
                    }
                    if let Some(why) = &skipped {
                        v["oracle"] = serde_json::json!({ "skipped": why });
                    }
                    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
            }
            Ok(ok)
        }
        Command::ListIdentities { suite } => {
            let suites = match suite {
                Some(s) => s,
                None => Suite::ALL.to_vec(),
            };
            let report = verify(&suites, &settings, false)?;
            match cli.format {
                Format::Json => {
                    let ids: Vec<_> = report
                        .entries
                        .iter()
                        .map(|e| serde_json::json!({"suite": e.suite, "anchor": e.anchor, "identity": e.identity}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&ids).expect("json"));
                }
                Format::Text => {
                    for e in &report.entries {
                        println!("{:<12} {:<36} {}", e.suite, e.anchor, e.identity);
                    }
                }
            }
            Ok(true)
        }
        Command::DumpLattice => {
            let l = &settings.lattice;
            let fams = [Family::Scalar, Family::Dirac, Family::Gauge, Family::Ghost];
            let mut rows = Vec::new();
            for (i, m) in l.modes().iter().enumerate() {
                let mut energies = serde_json::Map::new();
                for f in fams {
                    let e = l.energy_scalar(f, m)?;
                    energies.insert(f.name().to_string(), e.to_string().into());
                }
                rows.push(serde_json::json!({"mode": i, "p": m.label(), "energy": energies}));
            }
            match cli.format {
                Format::Json => {
                    let masses: serde_json::Map<_, _> = fams
                        .iter()
                        .map(|f| (f.name().to_string(), fmt_q(l.mass(*f)).into()))
                        .collect();
                    let v = serde_json::json!({"masses": masses, "modes": rows});
                    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
                Format::Text => {
                    for f in fams {
                        println!("m_{} = {}", f.name(), fmt_q(l.mass(f)));
                    }
                    for r in &rows {
                        print!("{:>3}  p = {}", r["mode"], r["p"].as_str().unwrap_or(""));
                        for f in fams {
                            print!(
                                "  E_{} = {}",
                                f.name(),
                                r["energy"][f.name()].as_str().unwrap_or("")
                            );
                        }
                        println!();
                    }
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("superfield: {e}");
            ExitCode::from(2)
        }
    }
}
