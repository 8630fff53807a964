mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use dickson_core::exactalg::{parse_rational, BigRational};
use dickson_core::specfn::{Complex, LegendreKind, DEFAULT_RESIDUAL_TOL};

use commands::{FunctionalChoice, Identity, ResidualTarget};
use report::{emit_report, Format, Outcome, RunReport, Status};

/// Dickson polynomials: exact identities, ODEs, special functions, finite fields.
#[derive(Debug, Parser)]
#[command(name = "dickson", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family member: `--kind K` gives the K-th kind D_{n,K-1}.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, conflicts_with = "b")]
        kind: u32,
        /// Rational parameter of the two-parameter family.
        #[arg(long, value_parser = rational)]
        b: Option<BigRational>,
        /// Build by the three-term recurrence instead of the closed form.
        #[arg(long)]
        recurrence: bool,
    },
    /// Exact verification sweeps.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Polynomial particular solution of the third-kind ODE at fixed `a`.
    Particular {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: BigRational,
    },
    /// Split F_n into particular solution plus homogeneous remainder.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: BigRational,
    },
    /// Null-space basis of Stoll-form ODEs satisfied by D_{n,k}.
    FitStoll {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
    /// Double-precision special functions.
    Special {
        #[command(subcommand)]
        func: SpecialCommand,
    },
    /// Least-squares constants A, B of the homogeneous part.
    FitConstants {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        /// Sample points; defaults to an even grid inside the strip.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<f64>>,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        /// Pass threshold on |A| and |B|.
        #[arg(long, default_value_t = DEFAULT_RESIDUAL_TOL)]
        tol: f64,
    },
    /// Prime-field evaluation and permutation tests.
    Ff {
        #[command(subcommand)]
        op: FfCommand,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// F_n solves (x^2-4a)F'' + 3xF' - n^2 F = 2n D_n.
    Lemma {
        #[arg(long, default_value_t = 64)]
        n_max: usize,
    },
    /// D_n solves the first-kind ODE.
    First {
        #[arg(long, default_value_t = 64)]
        n_max: usize,
    },
    /// E_n solves the second-kind ODE.
    Second {
        #[arg(long, default_value_t = 64)]
        n_max: usize,
    },
    /// Functional equations at random rational points.
    Functional {
        #[arg(long, value_enum, default_value = "all")]
        kind: FunctionalChoice,
        #[arg(long, default_value_t = 32)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Permutation flags and evaluation against independent oracles.
    Ff {
        /// Primes strictly below this bound.
        #[arg(long, default_value_t = 50)]
        p_bound: u64,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        #[arg(long, default_value_t = 13)]
        eval_p_max: u64,
        #[arg(long, default_value_t = 12)]
        eval_n_max: usize,
    },
}

#[derive(Debug, clap::Args)]
struct Sweep {
    /// First point.
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    /// Last point.
    #[arg(long, allow_hyphen_values = true)]
    to: Option<f64>,
    #[arg(long, default_value_t = 1)]
    steps: usize,
}

impl Sweep {
    fn points(&self) -> Vec<f64> {
        commands::grid(self.from, self.to.unwrap_or(self.from), self.steps)
    }
}

#[derive(Debug, Subcommand)]
enum SpecialCommand {
    /// First-kind order-1/2 function on 1 < z < 3.
    P {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        z: Sweep,
    },
    /// Second-kind order-1/2 function on z > 1.
    Q {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        z: Sweep,
    },
    /// Gauss 2F1 by its power series.
    #[command(name = "2f1")]
    Hyp2f1 {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, allow_hyphen_values = true)]
        z_re: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        z_im: f64,
    },
    /// Gamma function.
    Gamma {
        #[command(flatten)]
        x: Sweep,
    },
    /// Homogeneous solution (x^2-4a)^(-1/4) [A P + B Q].
    Fc {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[command(flatten)]
        x: Sweep,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        a_re: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a_im: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b_re: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b_im: f64,
    },
    /// Finite-difference ODE residual check on a grid.
    Residual {
        #[arg(long, value_enum)]
        target: ResidualTarget,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,5")]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1.1,1.3,1.5,2.0,2.5")]
        z: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_RESIDUAL_TOL)]
        tol: f64,
        /// Seed for `a` and the unit-circle constants (fc only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum FfCommand {
    /// D_{n,k}(x, a) in F_p.
    Eval {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
    },
    /// Whether D_{n,k}(., a) permutes F_p; all nonzero `a` when omitted.
    Perm {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
    },
}

fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::Gen {
            n,
            kind,
            b,
            recurrence,
        } => commands::gen(*n, *kind, b.clone(), *recurrence),
        Command::Verify { check } => match check {
            VerifyCommand::Lemma { n_max } => commands::verify_identity(Identity::Lemma, *n_max),
            VerifyCommand::First { n_max } => commands::verify_identity(Identity::First, *n_max),
            VerifyCommand::Second { n_max } => commands::verify_identity(Identity::Second, *n_max),
            VerifyCommand::Functional {
                kind,
                n_max,
                trials,
                seed,
            } => commands::verify_functional(*kind, *n_max, *trials, *seed),
            VerifyCommand::Ff {
                p_bound,
                n_max,
                k_max,
                eval_p_max,
                eval_n_max,
            } => commands::verify_ff(*p_bound, *n_max, *k_max, *eval_p_max, *eval_n_max),
        },
        Command::Particular { n, a } => commands::particular(*n, a),
        Command::Decompose { n, a } => commands::decomposition(*n, a),
        Command::FitStoll { n, k } => commands::stoll(*n, *k),
        Command::Special { func } => match func {
            SpecialCommand::P { n, z } => commands::legendre(LegendreKind::P, *n, &z.points()),
            SpecialCommand::Q { n, z } => commands::legendre(LegendreKind::Q, *n, &z.points()),
            SpecialCommand::Hyp2f1 {
                a,
                b,
                c,
                z_re,
                z_im,
            } => commands::special_2f1(*a, *b, *c, Complex::new(*z_re, *z_im)),
            SpecialCommand::Gamma { x } => commands::special_gamma(&x.points()),
            SpecialCommand::Fc {
                n,
                a,
                x,
                a_re,
                a_im,
                b_re,
                b_im,
            } => commands::special_fc(
                *n,
                *a,
                &x.points(),
                Complex::new(*a_re, *a_im),
                Complex::new(*b_re, *b_im),
            ),
            SpecialCommand::Residual {
                target,
                n,
                z,
                tol,
                seed,
            } => commands::special_residual(*target, n, z, *tol, *seed),
        },
        Command::FitConstants {
            n,
            a,
            x,
            samples,
            tol,
        } => commands::constants(*n, *a, x.clone(), *samples, *tol),
        Command::Ff { op } => match op {
            FfCommand::Eval { p, n, k, a, x } => commands::ff_value(*p, *n, *k, *a, *x),
            FfCommand::Perm { p, n, k, a } => commands::ff_perm(*p, *n, *k, *a),
        },
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let outcome = dispatch(&cli.command).unwrap_or_else(|err| {
        eprintln!("error: {err:#}");
        Outcome::new(
            Status::Error,
            format!("{err:#}"),
            serde_json::json!({ "error": format!("{err:#}") }),
        )
    });
    let timing = cli.timing.then(|| start.elapsed().as_millis());
    let report = RunReport::from_outcome(echo, outcome, timing);
    let text = match emit_report(&report, cli.format) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    if let Err(err) = write_output(cli.out.as_ref(), &text) {
        eprintln!("error: {err:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.status.exit_code())
}
