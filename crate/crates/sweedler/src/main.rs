//! Thin command-line front end; all the work happens in the library's
//! [`sweedler::cli`] functions.
//!
//! Exit status: 0 when every check in the invoked report passes, 1 when some
//! check fails, 2 on errors (bad arguments, parse errors, or asking for an
//! antipode that does not exist).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sweedler::cli::{self, CmdOutput, OutputFormat, RunConfig};
use sweedler::error::Result;
use sweedler::expr;
use sweedler::scalar::{Rational, Scalar};

#[derive(Parser)]
#[command(name = "sweedler", version, about = "Exact Hopf-algebra and smash-product calculator")]
struct Cli {
    /// Output format: text or json (env: SWEEDLER_OUTPUT)
    #[arg(long, global = true)]
    output: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// Preset name (group-z, semigroup-zplus, sweedler-h4, qdilation,
    /// qdilation-z, h4-dual)
    #[arg(long)]
    preset: Option<String>,

    /// Deformation parameter, e.g. `1/2` or `3/5+4/5*i`
    #[arg(long)]
    q: Option<String>,

    /// |q| as an exact positive rational (defaults to |q| when computable)
    #[arg(long = "abs-q")]
    abs_q: Option<String>,

    /// Weight parameter rho (positive rational)
    #[arg(long)]
    rho: Option<String>,

    /// Truncation bound N
    #[arg(long = "N")]
    n: Option<u32>,

    /// Largest degree scanned
    #[arg(long = "max-degree")]
    max_degree: Option<u32>,

    /// Label-index bound for bounded-exhaustive suites
    #[arg(long)]
    depth: Option<u32>,

    /// Seed for randomized suites
    #[arg(long)]
    seed: Option<u64>,

    /// Number of randomized samples
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run axiom verifiers
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Smash-product operations
    Smash {
        #[command(subcommand)]
        what: SmashCommand,
    },
    /// Quantum-plane operations
    Qplane {
        #[command(subcommand)]
        what: QplaneCommand,
    },
    /// Seminorm evaluation and checks
    Seminorm {
        #[command(subcommand)]
        what: SeminormCommand,
    },
    /// Stability diagnostics
    Stability {
        #[command(subcommand)]
        what: StabilityCommand,
    },
    /// Demonstrations
    Demo {
        #[command(subcommand)]
        what: DemoCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Algebra, coalgebra, bialgebra, and antipode axioms
    Hopf {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Module and module-algebra axioms
    ModuleAlgebra {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Smash-product embeddings, associativity, and the product differential
    Smash {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The conjugation identity chain (requires an antipode)
    ProofIdentity {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Subcommand)]
enum SmashCommand {
    /// Multiply two smash-product elements, e.g. "x#d(1)" "x#d(1)"
    Mul {
        #[command(flatten)]
        common: CommonArgs,
        lhs: String,
        rhs: String,
    },
}

#[derive(Subcommand)]
enum QplaneCommand {
    /// Rewrite a word in x, y to its normal form
    Normalize {
        #[command(flatten)]
        common: CommonArgs,
        expr: String,
    },
    /// Multiply two quantum-plane elements
    Mul {
        #[command(flatten)]
        common: CommonArgs,
        lhs: String,
        rhs: String,
    },
}

#[derive(Subcommand)]
enum SeminormCommand {
    /// Evaluate a seminorm on an element
    Eval {
        #[command(flatten)]
        common: CommonArgs,
        /// Family: trunc, l1, weighted-l1, envelope, or mixed
        #[arg(long)]
        family: String,
        expr: String,
    },
    /// Check submultiplicativity on random pairs
    Submult {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        family: String,
    },
}

#[derive(Subcommand)]
enum StabilityCommand {
    /// Scan the minimal constants in ‖h·xⁿ‖ ≤ C‖xⁿ‖ degree by degree
    Scan {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        family: String,
        /// The acting element, e.g. "d(1)"
        #[arg(long, default_value = "d(1)")]
        h: String,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// The sequence bounded in the mixed norms but divergent in the
    /// envelope norms
    Counterexample {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_scalar(src: &str) -> Result<Scalar> {
    expr::eval_scalar(&expr::parse(src)?)
}

fn parse_rational(src: &str) -> Result<Rational> {
    let s = parse_scalar(src)?;
    if !s.is_real() {
        return Err(sweedler::error::Error::Parameter(format!(
            "expected a rational number, got {s}"
        )));
    }
    Ok(s.re)
}

fn build_config(common: &CommonArgs, output: OutputFormat) -> Result<RunConfig> {
    let mut cfg = RunConfig {
        output,
        ..RunConfig::default()
    };
    cfg.preset = common.preset.clone();
    if let Some(q) = &common.q {
        cfg.q = Some(parse_scalar(q)?);
    }
    if let Some(a) = &common.abs_q {
        cfg.abs_q = Some(parse_rational(a)?);
    }
    if let Some(r) = &common.rho {
        cfg.rho = parse_rational(r)?;
    }
    if let Some(n) = common.n {
        cfg.n = n;
    }
    if let Some(d) = common.max_degree {
        cfg.max_degree = d;
    }
    if let Some(d) = common.depth {
        cfg.depth = d;
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    if let Some(c) = common.count {
        cfg.count = c;
    }
    Ok(cfg)
}

fn dispatch(cli: &Cli, output: OutputFormat) -> Result<CmdOutput> {
    match &cli.command {
        Command::Verify { what } => match what {
            VerifyCommand::Hopf { common } => cli::cmd_verify_hopf(&build_config(common, output)?),
            VerifyCommand::ModuleAlgebra { common } => {
                cli::cmd_verify_module_algebra(&build_config(common, output)?)
            }
            VerifyCommand::Smash { common } => {
                cli::cmd_verify_smash(&build_config(common, output)?)
            }
            VerifyCommand::ProofIdentity { common } => {
                cli::cmd_verify_proof_identity(&build_config(common, output)?)
            }
        },
        Command::Smash { what } => match what {
            SmashCommand::Mul { common, lhs, rhs } => {
                cli::cmd_smash_mul(&build_config(common, output)?, lhs, rhs)
            }
        },
        Command::Qplane { what } => match what {
            QplaneCommand::Normalize { common, expr } => {
                cli::cmd_qplane_normalize(&build_config(common, output)?, expr)
            }
            QplaneCommand::Mul { common, lhs, rhs } => {
                cli::cmd_qplane_mul(&build_config(common, output)?, lhs, rhs)
            }
        },
        Command::Seminorm { what } => match what {
            SeminormCommand::Eval {
                common,
                family,
                expr,
            } => cli::cmd_seminorm_eval(&build_config(common, output)?, family, expr),
            SeminormCommand::Submult { common, family } => {
                cli::cmd_seminorm_submult(&build_config(common, output)?, family)
            }
        },
        Command::Stability { what } => match what {
            StabilityCommand::Scan { common, family, h } => {
                cli::cmd_stability_scan(&build_config(common, output)?, family, h)
            }
        },
        Command::Demo { what } => match what {
            DemoCommand::Counterexample { common } => {
                cli::cmd_demo_counterexample(&build_config(common, output)?)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli
        .output
        .clone()
        .or_else(|| std::env::var("SWEEDLER_OUTPUT").ok())
        .map(|s| s.parse::<OutputFormat>())
        .transpose();
    let output = match output {
        Ok(o) => o.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match dispatch(&cli, output) {
        Ok(out) => {
            let rendered = out.render(output);
            if rendered.ends_with('\n') {
                print!("{rendered}");
            } else {
                println!("{rendered}");
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
