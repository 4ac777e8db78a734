//! `hklat check <id>`, `hklat run-all`, `hklat lattice <name>`.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hklat::json::{isometry_to_json, lattice_to_json, to_json_string};
use hklat::kummer::{named_object, NamedObject};
use hklat::verify::{all_pass, check, render_table, run_all, CheckParams, Report, DEFAULT_N_LIST};

#[derive(Parser)]
#[command(name = "hklat", version, about = "Exact lattice checks for generalized Kummer varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check.
    Check {
        check_id: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        height: Option<i64>,
        #[arg(long, conflicts_with = "human")]
        json: bool,
        #[arg(long)]
        human: bool,
    },
    /// Run every check over a list of n.
    RunAll {
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<i64>>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        human: bool,
    },
    /// Print a named lattice or isometry as JSON.
    Lattice {
        name: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        print: bool,
    },
}

fn env_seed() -> Result<Option<u64>, String> {
    match std::env::var("HKLAT_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("HKLAT_SEED is not an unsigned integer: {s:?}")),
        Err(_) => Ok(None),
    }
}

fn emit(reports: &[Report], human: bool) {
    if human {
        print!("{}", render_table(reports));
    } else {
        for r in reports {
            println!("{}", r.to_json_line());
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("hklat: {msg}");
    ExitCode::from(2)
}

fn verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let env = match env_seed() {
        Ok(s) => s,
        Err(msg) => return usage_error(msg),
    };
    match cli.command {
        Command::Check { check_id, n, samples, seed, height, json: _, human } => {
            let params = CheckParams { n, seed: env.or(seed), samples, height };
            match check(&check_id, &params) {
                Ok(report) => {
                    emit(std::slice::from_ref(&report), human);
                    verdict(report.pass)
                }
                Err(e) => usage_error(e),
            }
        }
        Command::RunAll { n_list, seed, human } => {
            let n_list = n_list.unwrap_or_else(|| DEFAULT_N_LIST.to_vec());
            match run_all(&n_list, env.or(seed).unwrap_or(hklat::verify::rng::DEFAULT_SEED)) {
                Ok(reports) => {
                    emit(&reports, human);
                    verdict(all_pass(&reports))
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Lattice { name, n, print: _ } => match named_object(&name, n) {
            Ok(NamedObject::Lattice(l)) => {
                println!("{}", to_json_string(&lattice_to_json(&l)));
                ExitCode::SUCCESS
            }
            Ok(NamedObject::Isometry(g)) => {
                println!("{}", to_json_string(&isometry_to_json(&g)));
                ExitCode::SUCCESS
            }
            Ok(NamedObject::Sym2(m)) => {
                println!("{}", serde_json::to_string(&m).expect("serializable"));
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
    }
}
