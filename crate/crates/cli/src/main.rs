//! `weylchar`: exact Weyl orbits, permutation weights, and irreducible
//! characters of the finite simple Lie algebras, from the command line.

use std::process::ExitCode;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use weylchar::charac::{self, CharacterError};
use weylchar::permw::{self, PermwError};
use weylchar::subalg;
use weylchar::weylorb::{self, OrbitError};
use weylchar::{AlgebraId, RootSystem, Weight};
use weylchar_cli::cache::OrbitCache;
use weylchar_cli::{output, suite};

#[derive(Parser)]
#[command(
    name = "weylchar",
    about = "Exact Weyl orbits, permutation weights and irreducible characters",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Algebra id, e.g. A2, B3, D4, E6, G2
    #[arg(long)]
    algebra: String,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Comma-separated integer coordinates in the fundamental-weight basis
    #[arg(long)]
    weight: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Factorized route through the permutation weights
    Perm,
    /// Signed-orbit division in the lattice group ring
    Direct,
    /// Recursive multiplicity formula
    Freudenthal,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Weyl orbit of a dominant weight
    Orbit {
        #[command(flatten)]
        weight: WeightArgs,
        /// Track signs (requires a strictly dominant seed)
        #[arg(long)]
        signed: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the permutation weights of a dominant weight
    Permweights {
        #[command(flatten)]
        weight: WeightArgs,
        /// Deleted node (defaults to the conventional one per algebra)
        #[arg(long)]
        node: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the paired decomposition of the Weyl-vector permutation weights
    #[command(name = "rho-table")]
    RhoTable {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Compute an irreducible character
    Character {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "perm")]
        method: Method,
        /// Deleted node for the factorized method
        #[arg(long)]
        node: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of an irreducible representation
    Dim {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite
    Verify {
        #[arg(long, default_value = suite::SUITE_NAME)]
        suite: String,
    },
}

#[derive(Debug)]
struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError::new("usage", message)
    }
}

impl From<weylchar::rootsys::RootSysError> for CliError {
    fn from(e: weylchar::rootsys::RootSysError) -> Self {
        CliError::new("input", e.to_string())
    }
}

impl From<OrbitError> for CliError {
    fn from(e: OrbitError) -> Self {
        let kind = match &e {
            OrbitError::OrbitTooLarge { .. } => "resource",
            OrbitError::Internal(_) => "internal",
            _ => "input",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<PermwError> for CliError {
    fn from(e: PermwError) -> Self {
        match e {
            PermwError::Orbit(inner) => inner.into(),
            other => CliError::new("input", other.to_string()),
        }
    }
}

impl From<subalg::SubalgError> for CliError {
    fn from(e: subalg::SubalgError) -> Self {
        let kind = match &e {
            subalg::SubalgError::RootSys(_)
            | subalg::SubalgError::Orbit(_)
            | subalg::SubalgError::Permw(_)
            | subalg::SubalgError::NotWeaklyDecreasing(_) => "input",
            _ => "internal",
        };
        match e {
            subalg::SubalgError::Orbit(inner) => inner.into(),
            other => CliError::new(kind, other.to_string()),
        }
    }
}

impl From<CharacterError> for CliError {
    fn from(e: CharacterError) -> Self {
        let kind = match &e {
            CharacterError::NotSupportedAtDeskScale(_) => "resource",
            CharacterError::InexactDivision(_) | CharacterError::Internal(_) => "internal",
            _ => "input",
        };
        match e {
            CharacterError::Orbit(inner) => inner.into(),
            other => CliError::new(kind, other.to_string()),
        }
    }
}

impl From<weylchar_cli::cache::CacheError> for CliError {
    fn from(e: weylchar_cli::cache::CacheError) -> Self {
        CliError::new("io", e.to_string())
    }
}

fn parse_algebra(args: &AlgebraArgs) -> Result<AlgebraId, CliError> {
    AlgebraId::parse(&args.algebra)
        .map_err(|e| CliError::usage(format!("--algebra: {e}")))
}

fn parse_weight(args: &WeightArgs) -> Result<(RootSystem, Weight), CliError> {
    let id = parse_algebra(&args.algebra)?;
    let rs = RootSystem::new(id);
    let coords: Vec<i64> = args
        .weight
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::usage(format!("--weight: `{part}` is not an integer")))
        })
        .collect::<Result<_, _>>()?;
    let w = Weight::from_ints(id, &coords)
        .map_err(|e| CliError::usage(format!("--weight: {e}")))?;
    Ok((rs, w))
}

fn node_or_default(id: AlgebraId, node: Option<usize>) -> usize {
    node.unwrap_or_else(|| permw::default_deleted_node(id))
}

fn cmd_orbit(weight: WeightArgs, signed: bool, as_json: bool) -> Result<String, CliError> {
    let (rs, seed) = parse_weight(&weight)?;
    let cache = OrbitCache::from_env();
    if signed {
        let signed_weights = match cache.as_ref().and_then(|c| c.load(&rs, &seed, true)) {
            Some(hit) => hit
                .weights
                .into_iter()
                .zip(hit.signs.expect("signed cache record"))
                .map(|(weight, sign)| weylorb::SignedWeight { weight, sign })
                .collect(),
            None => {
                let computed = weylorb::signed_orbit(&rs, &seed)?;
                if let Some(c) = cache.as_ref() {
                    c.store_signed(&seed, &computed)?;
                }
                computed
            }
        };
        Ok(if as_json {
            format!("{}\n", output::signed_orbit_json(&seed, &signed_weights))
        } else {
            output::signed_orbit_human(&seed, &signed_weights)
        })
    } else {
        let weights = match cache.as_ref().and_then(|c| c.load(&rs, &seed, false)) {
            Some(hit) => hit.weights,
            None => {
                let computed = weylorb::orbit(&rs, &seed)?;
                if let Some(c) = cache.as_ref() {
                    c.store_orbit(&computed)?;
                }
                computed.elements().to_vec()
            }
        };
        Ok(if as_json {
            format!("{}\n", output::orbit_json(&seed, &weights))
        } else {
            output::orbit_human(&seed, &weights)
        })
    }
}

fn cmd_permweights(weight: WeightArgs, node: Option<usize>, as_json: bool) -> Result<String, CliError> {
    let (rs, seed) = parse_weight(&weight)?;
    let node = node_or_default(rs.algebra(), node);
    let pw = permw::permutation_weights(&rs, &seed, node)?;
    Ok(if as_json {
        format!("{}\n", output::permweights_json(&pw))
    } else {
        output::permweights_human(&pw)
    })
}

fn cmd_rho_table(algebra: AlgebraArgs, node: Option<usize>, as_json: bool) -> Result<String, CliError> {
    let id = parse_algebra(&algebra)?;
    let rs = RootSystem::new(id);
    let node = node_or_default(id, node);
    let emb = subalg::build_embedding(&rs, node)?;
    let dec = subalg::rho_decomposition(&emb)?;
    Ok(if as_json {
        format!("{}\n", output::rho_table_json(&dec))
    } else {
        output::rho_table_human(&dec)
    })
}

fn cmd_character(
    weight: WeightArgs,
    method: Method,
    node: Option<usize>,
    as_json: bool,
) -> Result<String, CliError> {
    let (rs, lambda) = parse_weight(&weight)?;
    let character = match method {
        Method::Direct => charac::character_direct(&rs, &lambda)?,
        Method::Freudenthal => charac::freudenthal(&rs, &lambda)?,
        Method::Perm => {
            let node = node_or_default(rs.algebra(), node);
            let emb = subalg::build_embedding(&rs, node)?;
            charac::character_permweight(&emb, &lambda)?.character
        }
    };
    Ok(if as_json {
        format!("{}\n", output::character_json(&character))
    } else {
        output::character_human(&character)
    })
}

fn cmd_dim(weight: WeightArgs, as_json: bool) -> Result<String, CliError> {
    let (rs, lambda) = parse_weight(&weight)?;
    let dim = charac::weyl_dimension(&rs, &lambda)?;
    Ok(if as_json {
        format!("{}\n", json!({ "dim": dim.to_string() }))
    } else {
        format!("{dim}\n")
    })
}

fn cmd_verify(name: &str) -> Result<String, CliError> {
    if name != suite::SUITE_NAME {
        return Err(CliError::usage(format!(
            "unknown suite `{name}`; available: {}",
            suite::SUITE_NAME
        )));
    }
    let reports = suite::run_all();
    let mut out = String::new();
    for report in &reports {
        out.push_str(&report.line());
        out.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    out.push_str(&format!(
        "{}/{} checks passed\n",
        reports.len() - failed,
        reports.len()
    ));
    if failed > 0 {
        // the ledger still goes to stdout; the failure is the exit status
        print!("{out}");
        return Err(CliError::new(
            "verify-failed",
            format!("{failed} of {} checks failed", reports.len()),
        ));
    }
    Ok(out)
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Orbit {
            weight,
            signed,
            json,
        } => cmd_orbit(weight, signed, json),
        Command::Permweights { weight, node, json } => cmd_permweights(weight, node, json),
        Command::RhoTable {
            algebra,
            node,
            json,
        } => cmd_rho_table(algebra, node, json),
        Command::Character {
            weight,
            method,
            node,
            json,
        } => cmd_character(weight, method, node, json),
        Command::Dim { weight, json } => cmd_dim(weight, json),
        Command::Verify { suite } => cmd_verify(&suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(
                e.kind(),
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let record = json!({
                "error": { "kind": "usage", "message": e.to_string() }
            });
            eprintln!("{record}");
            return ExitCode::from(2);
        }
    };
    match dispatch(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let record = json!({
                "error": { "kind": e.kind, "message": e.message }
            });
            eprintln!("{record}");
            if e.kind == "usage" {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
