use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use isomon::harness::{run_checks, CheckOptions};
use isomon::homs::{extend_in, refute_finite_generation};
use isomon::int::hclass_group;
use isomon::word::{decompose, decompose_filtered, parse};
use isomon::{ElemIN, Element, FiniteIntSet, IsoZ};

type CliResult<T> = Result<T, String>;

/// Exact arithmetic in the monoids of cofinite partial isometries of N and Z.
///
/// Element arguments are JSON, given either inline (starting with `{` or `[`)
/// or as a path to a file; `-` reads standard input.
#[derive(Parser)]
#[command(name = "isomon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word over a, b, e[k], I to an element of IN∞.
    Eval { word: String },
    /// Compose two elements of the same monoid (left to right).
    Compose { first: String, second: String },
    /// Write an element of IN∞ as a word; with --k, over a, b, e[k] only.
    Decompose {
        #[arg(long)]
        k: Option<i64>,
        element: String,
    },
    /// Image under the least group congruence.
    Sigma { element: String },
    /// Maximal subgroup at the identity of Z minus the given exceptions.
    Hclass {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "")]
        exceptions: Vec<String>,
    },
    /// Order of an isometry of Z.
    Order {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        reflect: bool,
    },
    /// Extend an element of IN∞ to Z by the identity on (-inf, n].
    Extend {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        element: String,
    },
    /// A gap witness outside the monoid generated by a JSON list of elements.
    RefuteFg { generators: String },
    /// Run the verification suites.
    Check {
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long = "bound")]
        bound: Option<i64>,
        #[arg(long = "shift-bound")]
        shift_bound: Option<i64>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn read_json<T: DeserializeOwned>(arg: &str) -> CliResult<T> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_owned()
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))?
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| format!("{arg}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("{arg}: {e}"))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serialisable"));
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Eval { word } => {
            let w = parse(&word).map_err(|e| e.to_string())?;
            print_json(&w.eval());
        }
        Command::Compose { first, second } => {
            let (a, b): (Element, Element) = (read_json(&first)?, read_json(&second)?);
            print_json(&a.compose(&b).map_err(|e| e.to_string())?);
        }
        Command::Decompose { k, element } => {
            let g: ElemIN = read_json(&element)?;
            let w = match k {
                Some(k) => decompose_filtered(&g, k).map_err(|e| e.to_string())?,
                None => decompose(&g),
            };
            println!("{w}");
        }
        Command::Sigma { element } => match read_json::<Element>(&element)? {
            Element::Nat(g) => println!("{}", g.sigma()),
            Element::Int(g) => print_json(&g.sigma()),
        },
        Command::Hclass { exceptions } => {
            let set: FiniteIntSet = exceptions
                .iter()
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<i64>().map_err(|e| format!("--exceptions: `{s}`: {e}")))
                .collect::<CliResult<_>>()?;
            print_json(&hclass_group(&set));
        }
        Command::Order { a, reflect } => println!("{}", IsoZ { a, reflect }.order()),
        Command::Extend { n, element } => {
            let g: ElemIN = read_json(&element)?;
            print_json(&extend_in(&g, n).map_err(|e| e.to_string())?);
        }
        Command::RefuteFg { generators } => {
            let gens: Vec<ElemIN> = read_json(&generators)?;
            print_json(&refute_finite_generation(&gens).map_err(|e| e.to_string())?);
        }
        Command::Check { suites, all, bound, shift_bound, jobs, format } => {
            if all && !suites.is_empty() {
                return Err("--all and --suite are mutually exclusive".into());
            }
            let opts = CheckOptions { suites, exception_bound: bound, shift_bound };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(jobs) = jobs {
                pool = pool.num_threads(jobs.max(1));
            }
            let pool = pool.build().map_err(|e| e.to_string())?;
            let reports = pool.install(|| run_checks(&opts)).map_err(|e| e.to_string())?;
            match format {
                Format::Text => reports.iter().for_each(|r| println!("{r}")),
                Format::Json => println!("{}", serde_json::to_string_pretty(&reports).expect("serialisable")),
            }
            if !reports.iter().all(|r| r.passed) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("isomon: {msg}");
            ExitCode::from(2)
        }
    }
}
