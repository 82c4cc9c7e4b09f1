//! The `doubler` command line: arithmetic, Hilbert-90 constructions,
//! parametrization generators and the property checker, with stable JSON on
//! stdout for scripting.
//!
//! Exit codes: 0 on success, 2 on a domain error (a JSON `{code, message}`
//! object is printed), 64 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::element::Element;
use crate::error::Error;
use crate::hilbert90::{hilbert90_witness, norm_one_from_seed, param_coordinates, pythagorean_tuple, SeedVector};
use crate::properties::{check_identity, compare_towers, find_counterexample, IdentityId, SearchBudget};
use crate::rational::Rational;
use crate::tower::TowerSpec;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_DOMAIN_ERROR: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "doubler",
    version,
    about = "Exact arithmetic and property checking for Cayley-Dickson and Conway-Smith doubling towers over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct TowerArg {
    /// Tower specification, e.g. cd:-1,cs:-1/2
    #[arg(long)]
    tower: String,
}

impl TowerArg {
    fn parse(&self) -> Result<Arc<TowerSpec>, Error> {
        Ok(Arc::new(TowerSpec::parse(&self.tower)?))
    }
}

#[derive(Args)]
struct RandomArgs {
    /// Trials to run
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Generator seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random coordinates are integers in [-bound, bound]
    #[arg(long, default_value_t = 4)]
    bound: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two elements
    Mul {
        #[command(flatten)]
        tower: TowerArg,
        /// Left factor, as a JSON array of rational strings
        #[arg(long)]
        x: String,
        /// Right factor
        #[arg(long)]
        y: String,
    },
    /// Conjugate an element
    Conj {
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long)]
        x: String,
    },
    /// Trace of an element
    Trace {
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long)]
        x: String,
    },
    /// Norm of an element (the diagonal norm form)
    Norm {
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long)]
        x: String,
    },
    /// Multiplicative inverse
    Inv {
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long)]
        x: String,
    },
    /// Hilbert-90 witness for a norm-one element
    Witness {
        #[command(flatten)]
        tower: TowerArg,
        /// The norm-one element a
        #[arg(long)]
        a: String,
    },
    /// Norm-one element from a nonzero seed, s^2 / n(s)
    NormOne {
        #[command(flatten)]
        tower: TowerArg,
        /// The seed element
        #[arg(long)]
        s: String,
    },
    /// Coordinates of the norm-one parametrization at a seed vector
    Param {
        #[command(flatten)]
        tower: TowerArg,
        /// The seed vector, as a JSON array of rational strings
        #[arg(long)]
        s: String,
    },
    /// Integer Pythagorean 2^n+1-tuple from 2^n integer seeds
    Pythagoras {
        /// Level count n; expects 2^n seeds
        #[arg(long)]
        n: u32,
        /// Comma-separated integer seeds
        #[arg(long)]
        seeds: String,
    },
    /// Run an identity over random elements
    Check {
        #[command(flatten)]
        tower: TowerArg,
        /// Identity name, e.g. NormMultiplicative
        #[arg(long)]
        identity: IdentityId,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Search for a counterexample: exhaustive basis grids, then random trials
    Search {
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long)]
        identity: IdentityId,
        /// Random trials after the exhaustive phase
        #[arg(long = "budget-phase2", default_value_t = 0)]
        budget_phase2: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    /// Differential test: multiply identical coordinates under two towers
    Diff {
        #[command(flatten)]
        tower: TowerArg,
        /// The tower to compare against
        #[arg(long)]
        other: String,
        #[command(flatten)]
        random: RandomArgs,
    },
}

#[derive(Serialize)]
struct ResultOut<T: Serialize> {
    result: T,
}

#[derive(Serialize)]
struct WitnessOut {
    witness: Element,
    branch: &'static str,
}

#[derive(Serialize)]
struct ErrorOut {
    code: &'static str,
    message: String,
}

/// Runs the CLI on the given arguments, writing the JSON document for
/// successful and domain-error outcomes to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_SUCCESS,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(json) => {
            let _ = writeln!(out, "{json}");
            EXIT_SUCCESS
        }
        Err(err) => {
            let payload = ErrorOut {
                code: err.code(),
                message: err.to_string(),
            };
            let _ = writeln!(out, "{}", serde_json::to_string(&payload).expect("serializable"));
            EXIT_DOMAIN_ERROR
        }
    }
}

fn parse_element(tower: &Arc<TowerSpec>, json: &str) -> Result<Element, Error> {
    let strings: Vec<String> = serde_json::from_str(json).map_err(|e| Error::ParseError {
        position: e.column().saturating_sub(1),
        message: format!("element must be a JSON array of rational strings: {e}"),
    })?;
    Element::from_coord_strings(tower.clone(), &strings)
}

fn parse_seeds(text: &str) -> Result<Vec<BigInt>, Error> {
    let mut seeds = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let value = BigInt::from_str(part).map_err(|_| Error::ParseError {
            position: offset,
            message: format!("invalid integer `{part}`"),
        })?;
        seeds.push(value);
        offset += part.len() + 1;
    }
    Ok(seeds)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serialization cannot fail")
}

fn execute(cmd: Cmd) -> Result<String, Error> {
    match cmd {
        Cmd::Mul { tower, x, y } => {
            let tower = tower.parse()?;
            let x = parse_element(&tower, &x)?;
            let y = parse_element(&tower, &y)?;
            Ok(to_json(&ResultOut {
                result: x.mul(&y)?,
            }))
        }
        Cmd::Conj { tower, x } => {
            let tower = tower.parse()?;
            let x = parse_element(&tower, &x)?;
            Ok(to_json(&ResultOut {
                result: x.conjugate(),
            }))
        }
        Cmd::Trace { tower, x } => {
            let tower = tower.parse()?;
            let x = parse_element(&tower, &x)?;
            Ok(to_json(&ResultOut {
                result: x.trace().to_string(),
            }))
        }
        Cmd::Norm { tower, x } => {
            let tower = tower.parse()?;
            let x = parse_element(&tower, &x)?;
            Ok(to_json(&ResultOut {
                result: x.norm_form().to_string(),
            }))
        }
        Cmd::Inv { tower, x } => {
            let tower = tower.parse()?;
            let x = parse_element(&tower, &x)?;
            Ok(to_json(&ResultOut {
                result: x.inverse()?,
            }))
        }
        Cmd::Witness { tower, a } => {
            let tower = tower.parse()?;
            let a = parse_element(&tower, &a)?;
            let w = hilbert90_witness(&a)?;
            Ok(to_json(&WitnessOut {
                witness: w.witness,
                branch: w.branch.as_str(),
            }))
        }
        Cmd::NormOne { tower, s } => {
            let tower = tower.parse()?;
            let s = parse_element(&tower, &s)?;
            Ok(to_json(&ResultOut {
                result: norm_one_from_seed(&s)?,
            }))
        }
        Cmd::Param { tower, s } => {
            let tower = tower.parse()?;
            let strings: Vec<String> = serde_json::from_str(&s).map_err(|e| Error::ParseError {
                position: e.column().saturating_sub(1),
                message: format!("seeds must be a JSON array of rational strings: {e}"),
            })?;
            let seeds = strings
                .iter()
                .map(|s| Rational::parse(s))
                .collect::<Result<Vec<_>, _>>()?;
            let sv = SeedVector::new(tower, seeds)?;
            let coords: Vec<String> = param_coordinates(&sv)?
                .iter()
                .map(Rational::to_string)
                .collect();
            Ok(to_json(&ResultOut { result: coords }))
        }
        Cmd::Pythagoras { n, seeds } => {
            let seeds = parse_seeds(&seeds)?;
            let expected = 1usize << n;
            if seeds.len() != expected {
                return Err(Error::DimensionMismatch {
                    expected,
                    got: seeds.len(),
                });
            }
            let tuple = pythagorean_tuple(&seeds)?;
            let entries: Vec<String> = tuple.iter().map(BigInt::to_string).collect();
            // bare JSON integers, which serde_json numbers cannot hold once
            // they outgrow 64 bits
            Ok(format!("{{\"tuple\":[{}]}}", entries.join(",")))
        }
        Cmd::Check {
            tower,
            identity,
            random,
        } => {
            let tower = tower.parse()?;
            let report = check_identity(identity, &tower, random.trials, random.seed, random.bound)?;
            Ok(report.to_json())
        }
        Cmd::Search {
            tower,
            identity,
            budget_phase2,
            seed,
            bound,
        } => {
            let tower = tower.parse()?;
            let budget = SearchBudget {
                phase2_trials: budget_phase2,
                phase2_bound: bound,
                ..SearchBudget::default()
            };
            let report = find_counterexample(identity, &tower, &budget, seed)?;
            Ok(report.to_json())
        }
        Cmd::Diff {
            tower,
            other,
            random,
        } => {
            let tower = tower.parse()?;
            let other = Arc::new(TowerSpec::parse(&other)?);
            let report = compare_towers(&tower, &other, random.trials, random.seed, random.bound)?;
            Ok(report.to_json())
        }
    }
}
