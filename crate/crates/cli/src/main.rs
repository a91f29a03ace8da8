use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use qdiscover::{Identity, ResiduePattern};
use qdiscover_cli::commands::{
    self, CfracTarget, CommandError, CommandResult, DiscoverSource, ProductSource,
};
use qdiscover_cli::json;

/// Exact q-series experiments around the Rogers-Ramanujan identities.
#[derive(Parser, Debug)]
#[command(name = "qdiscover", version)]
struct Cli {
    /// Truncation order in q (for `zeta`, the largest index).
    #[arg(short = 'N', long, global = true, default_value_t = 100)]
    order: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdentityArg {
    Rr1,
    Rr2,
}

impl From<IdentityArg> for Identity {
    fn from(a: IdentityArg) -> Self {
        match a {
            IdentityArg::Rr1 => Identity::First,
            IdentityArg::Rr2 => Identity::Second,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    Golden,
    Rr,
}

/// A residue pattern given on the command line.
#[derive(Args, Debug)]
struct PatternArgs {
    /// Modulus of the exponent progression.
    #[arg(long, requires = "residues")]
    modulus: Option<usize>,
    /// Comma-separated residues, e.g. `1,4`.
    #[arg(long, value_delimiter = ',', requires = "modulus")]
    residues: Option<Vec<usize>>,
    /// Multiplicity of every factor.
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    multiplicity: i64,
}

impl PatternArgs {
    fn pattern(&self) -> Result<Option<ResiduePattern>, CommandError> {
        match (self.modulus, &self.residues) {
            (Some(m), Some(r)) => Ok(Some(ResiduePattern::new(
                m,
                r.iter().copied(),
                BigInt::from(self.multiplicity),
            )?)),
            _ => Ok(None),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare a sum side with a product side coefficient by coefficient.
    Verify {
        #[arg(long, value_enum, default_value_t = IdentityArg::Rr1)]
        identity: IdentityArg,
        /// Compare against this pattern instead of the identity's own product.
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// Strip a series down to a product and look for a residue pattern.
    Discover {
        #[arg(long, value_enum, default_value_t = IdentityArg::Rr1)]
        identity: IdentityArg,
        /// Series JSON file to use instead of a sum side.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        modulus_max: usize,
    },
    /// Convergents of the golden-mean or Rogers-Ramanujan continued fraction.
    Cfrac {
        #[arg(value_enum)]
        target: TargetArg,
        /// Number of convergents.
        #[arg(short = 'n', long, default_value_t = 5)]
        steps: usize,
    },
    /// Strip zeta(s) and list the indices that survive.
    Zeta,
    /// Expand a sum side.
    Sum {
        #[arg(long, value_enum, default_value_t = IdentityArg::Rr1)]
        identity: IdentityArg,
    },
    /// Expand a product side, a residue pattern, or a product JSON file.
    Product {
        #[arg(long, value_enum, default_value_t = IdentityArg::Rr1)]
        identity: IdentityArg,
        #[command(flatten)]
        pattern: PatternArgs,
        /// Product JSON file (`{"factors": [{"e": .., "m": ..}]}`).
        #[arg(long, conflicts_with = "modulus")]
        input: Option<PathBuf>,
    },
}

fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Verify { .. } => "verify",
        Command::Discover { .. } => "discover",
        Command::Cfrac { .. } => "cfrac",
        Command::Zeta => "zeta",
        Command::Sum { .. } => "sum",
        Command::Product { .. } => "product",
    }
}

fn read_json(path: &Path) -> Result<serde_json::Value, CommandError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CommandError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CommandError(format!("{} is not valid JSON: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<CommandResult, CommandError> {
    let order = cli.order;
    match &cli.command {
        Command::Verify { identity, pattern } => {
            commands::cmd_verify((*identity).into(), order, pattern.pattern()?)
        }
        Command::Discover {
            identity,
            input,
            modulus_max,
        } => {
            let source = match input {
                Some(path) => DiscoverSource::Series(
                    json::qseries_from_json(&read_json(path)?)
                        .map_err(|e| CommandError(e.to_string()))?,
                ),
                None => DiscoverSource::Identity((*identity).into()),
            };
            commands::cmd_discover(source, order, *modulus_max)
        }
        Command::Cfrac { target, steps } => {
            let target = match target {
                TargetArg::Golden => CfracTarget::Golden,
                TargetArg::Rr => CfracTarget::RogersRamanujan,
            };
            commands::cmd_cfrac(target, *steps, order)
        }
        Command::Zeta => commands::cmd_zeta(order),
        Command::Sum { identity } => commands::cmd_sum((*identity).into(), order),
        Command::Product {
            identity,
            pattern,
            input,
        } => {
            let source = if let Some(path) = input {
                ProductSource::Factors(
                    json::product_form_from_json(&read_json(path)?)
                        .map_err(|e| CommandError(e.to_string()))?,
                )
            } else {
                let id: Identity = (*identity).into();
                ProductSource::Pattern(pattern.pattern()?.unwrap_or_else(|| id.product_pattern()))
            };
            commands::cmd_product(source, order)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).unwrap_or_else(|e| {
        eprintln!("qdiscover: {e}");
        CommandResult::error(name(&cli.command), cli.order, &e.0)
    });
    match cli.format {
        Format::Json => {
            let out = serde_json::to_string_pretty(&result.to_json()).expect("serializable");
            println!("{out}");
        }
        Format::Text => {
            if result.status != qdiscover_cli::Status::Error {
                print!("{}", result.text);
            }
        }
    }
    ExitCode::from(result.status.exit_code() as u8)
}
