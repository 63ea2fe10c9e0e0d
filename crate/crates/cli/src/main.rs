use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qhlip_cli::scan::cmd_scan;
use qhlip_cli::{
    cmd_classify1, cmd_classify2, cmd_infer_beta, cmd_witness, parse_beta_arg, render, BetaArg,
    CliError, WitnessOptions, EXIT_ERROR,
};
use qhlip_core::witness::GridSpec;

/// Exact Lipschitz classification of polynomials.
///
/// Classification commands exit with 0 (Equivalent), 1 (NotEquivalent),
/// 2 (Unknown) or 3 (error); `witness` uses 4 when the numeric checks of an
/// Equivalent certificate fail. Errors are written to stderr as JSON.
#[derive(Parser, Debug)]
#[command(name = "qhlip", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Lets {
    /// Bind a parameter, e.g. `--let l=1/4`; repeatable.
    #[arg(long = "let", value_name = "NAME=P/Q")]
    lets: Vec<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BetaOpt {
    /// Weight β = r/s in lowest terms with r > s.
    #[arg(long, value_name = "R/S")]
    beta: Option<String>,
    /// Infer β from the supports of the inputs.
    #[arg(long)]
    infer_beta: bool,
}

impl BetaOpt {
    fn resolve(&self) -> Result<BetaArg, CliError> {
        match &self.beta {
            Some(b) => parse_beta_arg(b),
            None => Ok(BetaArg::Infer),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Univariate Lipschitz equivalence of f(t) and g(t).
    Classify1 {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        lets: Lets,
    },
    /// Plane equivalence of quasihomogeneous F(X, Y) and G(X, Y).
    Classify2 {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        beta: BetaOpt,
        #[command(flatten)]
        lets: Lets,
    },
    /// Classify2 plus numeric verification of the certificate's witness.
    Witness {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        beta: BetaOpt,
        #[command(flatten)]
        lets: Lets,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Strip half-width.
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Largest accepted ratio of the Lipschitz extremes.
        #[arg(long, default_value_t = 1e6)]
        lipschitz_bound: f64,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Partition a one-parameter family into equivalence classes.
    Scan {
        #[arg(allow_hyphen_values = true)]
        family: String,
        #[arg(long)]
        param: String,
        /// Comma-separated rationals, e.g. `--values=-3,-2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        #[command(flatten)]
        beta: BetaOpt,
        #[command(flatten)]
        lets: Lets,
    },
    /// Weights β for which F is quasihomogeneous.
    InferBeta {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        lets: Lets,
    },
}

fn run(cli: Cli) -> Result<qhlip_cli::Outcome, CliError> {
    match cli.cmd {
        Cmd::Classify1 { f, g, lets } => cmd_classify1(&f, &g, &lets.lets),
        Cmd::Classify2 { f, g, beta, lets } => cmd_classify2(&f, &g, beta.resolve()?, &lets.lets),
        Cmd::Witness {
            f,
            g,
            beta,
            lets,
            tol,
            delta,
            samples,
            lipschitz_bound,
            seed,
        } => {
            let opts = WitnessOptions {
                grid: GridSpec {
                    delta,
                    samples,
                    seed,
                    ..GridSpec::default()
                },
                tol,
                lipschitz_bound,
            };
            cmd_witness(&f, &g, beta.resolve()?, &lets.lets, &opts)
        }
        Cmd::Scan {
            family,
            param,
            values,
            beta,
            lets,
        } => cmd_scan(&family, &param, &values, beta.resolve()?, &lets.lets),
        Cmd::InferBeta { f, lets } => cmd_infer_beta(&f, &lets.lets),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        // clap's own code 2 would read as Unknown.
        Err(e) => {
            let doc = CliError::Usage(e.to_string().trim_end().to_string()).to_json();
            let _ = writeln!(std::io::stderr().lock(), "{}", render(&doc));
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    match run(cli) {
        Ok(out) => {
            // A closed pipe is not an error of the command.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.json);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            let _ = writeln!(std::io::stderr().lock(), "{}", render(&e.to_json()));
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
