mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use evokit_core::catalog;
use evokit_core::exact::{parse_point, Rational};
use evokit_core::format::{self, AlgebraFile};
use evokit_core::Error;

#[derive(Parser)]
#[command(name = "evokit", version, about = "Exact structure-constant algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Identities, power chains and annihilators of an algebra.
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evolution-algebra approximation at a point, or its symbolic form matrix.
    Approx {
        file: PathBuf,
        /// Comma-separated rationals, e.g. `1,1/2,-3`.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "symbolic")]
        point: Option<String>,
        #[arg(long)]
        transposed: bool,
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for a nonzero point whose approximation equals the target.
    Exists {
        algebra: PathBuf,
        target: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Right nilpotency of an evolution algebra, or of all its approximations.
    Nilpotent {
        file: PathBuf,
        #[arg(long)]
        symbolic: bool,
        #[arg(long, requires = "symbolic")]
        transposed: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a change-of-basis witness or search for a monomial isomorphism.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, conflicts_with = "monomial", required_unless_present = "monomial")]
        witness: Option<PathBuf>,
        #[arg(long)]
        monomial: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sup-norm distance between the structure constants of two algebras.
    Distance {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in algebras, or export one in the algebra file format.
    Catalog {
        name: Option<String>,
        /// Parameter assignment such as `alpha=1/2`; repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE", requires = "name")]
        params: Vec<String>,
        /// Export the companion existence target instead of the algebra.
        #[arg(long, requires = "name")]
        target: bool,
        /// JSON listing (entries are always exported as JSON).
        #[arg(long)]
        json: bool,
    },
    /// Rerun the built-in verification suites.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Section2,
    Leibniz,
    Canonical,
    All,
}

/// A failure with the exit status it maps to.
enum Failure {
    Domain(String),
    /// A verification ran to completion and found a failing case.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<AlgebraFile, Failure> {
    format::parse_algebra(&read(path)?).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn parse_params(name: &str, raw: &[String]) -> Result<Vec<Rational>, Failure> {
    let names = catalog::param_names(name)?;
    let mut values: Vec<Option<Rational>> = vec![None; names.len()];
    for item in raw {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Domain(format!("parameter `{item}` is not KEY=VALUE")))?;
        let idx = names
            .iter()
            .position(|n| *n == key)
            .ok_or_else(|| Failure::Domain(format!("{name} has no parameter `{key}`")))?;
        values[idx] = Some(value.parse()?);
    }
    values
        .into_iter()
        .zip(names)
        .map(|(v, n)| v.ok_or_else(|| Failure::Domain(format!("{name} needs --param {n}=<rational>"))))
        .collect()
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Info { file, json } => report::info(&load_algebra(&file)?, json),
        Command::Approx {
            file,
            point,
            transposed,
            symbolic,
            json,
        } => {
            let point = point.as_deref().map(parse_point).transpose()?;
            report::approx(&load_algebra(&file)?, point.as_deref(), transposed, symbolic, json)
        }
        Command::Exists { algebra, target, json } => {
            let target = load_algebra(&target)?.evolution()?;
            report::exists(&load_algebra(&algebra)?, &target, json)
        }
        Command::Nilpotent {
            file,
            symbolic,
            transposed,
            json,
        } => report::nilpotent(&load_algebra(&file)?, symbolic, transposed, json),
        Command::Iso {
            a,
            b,
            witness,
            monomial,
            json,
        } => {
            let (a, b) = (load_algebra(&a)?, load_algebra(&b)?);
            match witness {
                Some(path) => {
                    let p = format::parse_matrix(&read(&path)?)
                        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
                    report::iso_witness(&a, &b, &p, json)
                }
                None => {
                    debug_assert!(monomial);
                    report::iso_monomial(&a.evolution()?, &b.evolution()?, json)
                }
            }
        }
        Command::Distance { a, b, json } => report::distance(&load_algebra(&a)?, &load_algebra(&b)?, json),
        Command::Catalog {
            name,
            params,
            target,
            json,
        } => match name {
            None => report::catalog_list(json),
            Some(name) => {
                let params = parse_params(&name, &params)?;
                report::catalog_entry(&catalog::get(&name, &params)?, target)
            }
        },
        Command::Verify { suite, json } => {
            let mut reports = Vec::new();
            if matches!(suite, Suite::Section2 | Suite::All) {
                reports.push(catalog::verify_section2_fixtures());
            }
            if matches!(suite, Suite::Leibniz | Suite::All) {
                reports.push(catalog::verify_leibniz_approximation_nilpotency());
            }
            if matches!(suite, Suite::Canonical | Suite::All) {
                reports.push(catalog::verify_canonical_forms());
            }
            let out = report::verify(&reports, json);
            if reports.iter().all(|r| r.passed()) {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check) => ExitCode::from(1),
    }
}
