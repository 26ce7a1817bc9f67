use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use capelli_core::verify::{
    catalog, run_check, run_suite, CheckReport, Expectation, ResourceBounds, Status, SuiteConfig,
    UsageError,
};

const MODEL_NOTES: &str = "\
Model notes:
  * H is modeled as CENTRAL: the concrete relation algebra imposes [Y,H] = 0
    and [H,H'] = 0 in addition to the required [X,H] = 0. This is a genuine
    algebra satisfying all hypotheses, so every identity verified here is a
    valid instance of the corresponding theorem in that model.
  * det means the column determinant: rows permuted, columns in natural
    order, products taken column 1 first.
  * All arithmetic is exact rational; equality means equality of canonical
    normal forms.";

const CONFIG_ENV: &str = "CAPELLI_SUITE_CONFIG";

#[derive(Parser)]
#[command(
    name = "capelli",
    about = "Exact verification harness for Capelli-type identities",
    version
)]
struct Cli {
    /// Print the model caveats before doing anything else.
    #[arg(long, global = true)]
    model_notes: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// List every check identifier with its parameter schema.
    List,
    /// Run a single check: `check <id> --param value ...`
    Check {
        id: String,
        /// Parameters as `--name value` pairs.
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Run a suite of checks (the full default grid unless configured).
    Suite {
        /// TOML suite configuration; falls back to the CAPELLI_SUITE_CONFIG
        /// environment variable, then to the built-in default grid.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the reports as a JSON array to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads (0 = default).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Only print failing and unexpected checks.
        #[arg(long)]
        quiet: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.model_notes {
        println!("{MODEL_NOTES}");
    }
    let Some(command) = cli.command else {
        return if cli.model_notes {
            ExitCode::SUCCESS
        } else {
            eprintln!(
                "no subcommand given; try `capelli list`, `capelli check <id> ...` or `capelli suite`"
            );
            ExitCode::from(2)
        };
    };
    match command {
        Command::List => {
            for def in catalog() {
                println!("{}", def.id);
                println!("    {}", def.about);
                for p in def.params {
                    match p.default {
                        Some(d) => println!("    --{} <{}> (default {d})", p.name, p.about),
                        None => println!("    --{} <{}> (required)", p.name, p.about),
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Check { id, args } => match parse_pairs(&args) {
            Err(e) => usage(&e),
            Ok(params) => match run_check(&id, &params, &ResourceBounds::default()) {
                Err(e) => usage(&e),
                Ok(report) => {
                    print_report(&report, false);
                    match report.status {
                        Status::Fail => ExitCode::FAILURE,
                        _ => ExitCode::SUCCESS,
                    }
                }
            },
        },
        Command::Suite { config, json, threads, quiet } => {
            let mut cfg = match load_config(config) {
                Ok(c) => c,
                Err(e) => return usage(&e),
            };
            if threads > 0 {
                cfg.parallelism = threads;
            }
            let result = match run_suite(&cfg) {
                Ok(r) => r,
                Err(e) => return usage(&e),
            };
            for report in &result.reports {
                if quiet && report.met_expectation() && report.status == Status::Pass {
                    continue;
                }
                print_report(report, true);
            }
            let s = &result.summary;
            println!(
                "summary: {} pass, {} fail, {} skipped, {} unexpected",
                s.pass,
                s.fail,
                s.skipped,
                s.unexpected.len()
            );
            for u in &s.unexpected {
                println!("  unexpected: {u}");
            }
            if let Some(path) = json {
                match serde_json::to_string_pretty(&result.reports) {
                    Ok(text) => {
                        if let Err(e) = std::fs::write(&path, text) {
                            eprintln!("cannot write {}: {e}", path.display());
                            return ExitCode::from(2);
                        }
                    }
                    Err(e) => {
                        eprintln!("serialization error: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            if s.all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn usage(err: &UsageError) -> ExitCode {
    eprintln!("usage error: {err}");
    ExitCode::from(2)
}

fn parse_pairs(args: &[String]) -> Result<BTreeMap<String, String>, UsageError> {
    let mut params = BTreeMap::new();
    let mut iter = args.iter();
    while let Some(key) = iter.next() {
        let Some(name) = key.strip_prefix("--") else {
            return Err(UsageError(format!("expected `--name value` pairs, got {key:?}")));
        };
        let Some(value) = iter.next() else {
            return Err(UsageError(format!("parameter --{name} is missing a value")));
        };
        if params.insert(name.to_string(), value.clone()).is_some() {
            return Err(UsageError(format!("parameter --{name} given twice")));
        }
    }
    Ok(params)
}

fn load_config(path: Option<PathBuf>) -> Result<SuiteConfig, UsageError> {
    let path = path.or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    match path {
        None => Ok(SuiteConfig::default_grid()),
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
            toml::from_str(&text)
                .map_err(|e| UsageError(format!("invalid config {}: {e}", path.display())))
        }
    }
}

fn print_report(report: &CheckReport, suite_mode: bool) {
    let tag = match report.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let params = report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    let expect_note = match (report.expected, report.status) {
        (Expectation::Fail, Status::Fail) => "  [expected failure: control satisfied]",
        (Expectation::Fail, _) => "  [CONTROL NOT SATISFIED]",
        _ => "",
    };
    println!(
        "{tag} {} {} ({} ms){}",
        report.check_id, params, report.elapsed_ms, expect_note
    );
    if report.status == Status::Fail {
        if let Some(w) = &report.witness {
            println!("    witness monomial: {}", w.monomial);
            println!("    lhs = {}, rhs = {}", w.lhs_coeff, w.rhs_coeff);
            if let Some(loc) = &w.location {
                let sigma = loc.sigma.as_deref().unwrap_or("-");
                println!(
                    "    at sigma = {sigma}, out = {:?}, in = {:?}",
                    loc.out_index, loc.in_index
                );
            }
        }
    }
    if !suite_mode {
        for note in &report.model_notes {
            println!("    note: {note}");
        }
    }
}
