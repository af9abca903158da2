mod render;
mod suites;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use eqschur::comult::{coproduct_power_polynomial, PowerPoly};
use eqschur::schur::{self, Method};
use eqschur::structconst::{self, MultiplicationTable, ShiftedBasis, StructMethod, TableFormat};
use eqschur::{Error, ErrorClass, Partition, Poly, YSpec};

use render::Format;

#[derive(Parser)]
#[command(name = "eqschur", version, about = "Shifted double Schur functions and equivariant Littlewood-Richardson coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Specialization of y: symbolic, zero, affine:a=..,b=.., standard:d=..,
    /// circle:d=..,window=j0:v0,v1,..;tail=a,b, torus:shift=..
    #[arg(long = "y", default_value = "symbolic", value_parser = parse_yspec)]
    yspec: YSpec,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMethod {
    Expand,
    Localize,
    Molev,
}

impl From<CliMethod> for StructMethod {
    fn from(m: CliMethod) -> Self {
        match m {
            CliMethod::Expand => StructMethod::Expand,
            CliMethod::Localize => StructMethod::Localize,
            CliMethod::Molev => StructMethod::Molev,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the shifted double Schur function ⁿs*_λ(x|y), or ⁿs_λ(x|y) with --double.
    Schur {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        double: bool,
        /// Compute ⁿs_λ as a ratio of alternants instead of by Jacobi-Trudi.
        #[arg(long, requires = "double")]
        ratio: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate s*_λ(x|y) at finitely many x values (comma-separated expressions).
    Eval {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        common: Common,
    },
    /// Expand s*_λ·s*_μ in the shifted Schur basis.
    Multiply {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CliMethod::Expand)]
        method: CliMethod,
        #[command(flatten)]
        common: Common,
    },
    /// Structure constants for all pairs up to a weight.
    Table {
        #[arg(long)]
        max_weight: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CliMethod::Expand)]
        method: CliMethod,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The hook-formula coefficient of u^{|λ|+|μ|−|ν|}.
    Molev {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[command(flatten)]
        common: Common,
    },
    /// Restriction of the class of λ to the fixed point δ.
    Restrict {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        delta: Partition,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Coproduct of a polynomial in the power sums p1, p2, ….
    Coproduct {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: suites::Suite,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_yspec(s: &str) -> Result<YSpec, String> {
    YSpec::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    /// A verification suite found a counterexample.
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn parse_x_values(text: &str) -> Result<Vec<Poly>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| Poly::parse(s.trim())).collect()
}

fn run(cli: Cli) -> Result<(String, Common), Failure> {
    Ok(match cli.command {
        Command::Schur {
            lambda,
            n,
            double,
            ratio,
            common,
        } => {
            let p = if double {
                let m = if ratio { Method::DetRatio } else { Method::JacobiTrudi };
                schur::double_schur(&lambda, n, &common.yspec, m)?
            } else {
                schur::shifted_double_schur(&lambda, n, &common.yspec)?
            };
            (render::poly(&p, common.format), common)
        }
        Command::Eval { lambda, x, common } => {
            let xs = parse_x_values(&x)?;
            let p = schur::shifted_schur_stable(&lambda, &xs, &common.yspec)?;
            (render::poly(&p, common.format), common)
        }
        Command::Multiply {
            lambda,
            mu,
            n,
            method,
            common,
        } => {
            let basis = ShiftedBasis::new(n, common.yspec.clone());
            let e = structconst::structure_constants(&basis, &lambda, &mu, method.into())?;
            (render::expansion(&lambda, &mu, &e, common.format), common)
        }
        Command::Table {
            max_weight,
            n,
            method,
            jobs,
            common,
        } => {
            let t: MultiplicationTable =
                structconst::multiplication_table(max_weight, n, &common.yspec, method.into(), jobs)?;
            let f = match common.format {
                Format::Text => TableFormat::Text,
                Format::Json => TableFormat::Json,
                Format::Latex => TableFormat::Latex,
            };
            (t.render(f), common)
        }
        Command::Molev { lambda, mu, nu, common } => {
            let c = structconst::molev_coefficient(&lambda, &mu, &nu);
            (render::rational(&c, common.format), common)
        }
        Command::Restrict {
            lambda,
            delta,
            n,
            common,
        } => {
            let p = schur::restrict_to_fixed_point(&lambda, &delta, n, &common.yspec)?;
            (render::poly(&p, common.format), common)
        }
        Command::Coproduct { expr, common } => {
            let t = coproduct_power_polynomial(&PowerPoly::parse(&expr)?);
            (render::tensor(&t, common.format), common)
        }
        Command::Verify {
            suite,
            max_weight,
            n,
            seed,
            jobs,
            common,
        } => {
            let opts = suites::Options {
                max_weight,
                n,
                seed,
                jobs,
                yspec: common.yspec.clone(),
                format: common.format,
            };
            let out = suites::run(suite, &opts)?;
            if !out.pass {
                return Err(Failure::Verify(out.text));
            }
            (out.text, common)
        }
    })
}

fn emit(text: &str, common: &Common) -> std::io::Result<()> {
    match &common.output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(cli).and_then(|(text, common)| emit(&text, &common).map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Usage => 1,
                ErrorClass::Domain => 2,
                ErrorClass::Internal => 3,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(text)) => {
            print!("{text}");
            ExitCode::from(3)
        }
    }
}
