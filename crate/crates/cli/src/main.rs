//! `g2skein`: loop actions, Jones values, basis conversion and verification suites.

mod output;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use g2skein::exactalg::{default_prime, is_prime, sqrt_minus_one};
use g2skein::opexpr::Mode;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "g2skein", version, about = "Exact computations in the genus-2 skein module and its DAHA representations")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Truncation bound on the index sum; defaults depend on the command.
    #[arg(long, global = true)]
    pub trunc: Option<u32>,
    /// Exact rational-function arithmetic or evaluation at random prime-field points.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    /// Prime for probabilistic mode; must be 1 mod 4. Defaults to the least such prime above 2^61.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Seed for probabilistic point sampling.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    /// Number of sample points in probabilistic mode.
    #[arg(long, global = true, default_value_t = 10)]
    pub points: u32,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = "G2SKEIN_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Prob,
}

impl Global {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }

    /// The prime for probabilistic checks.
    pub fn prime(&self) -> Result<u64, String> {
        let prime = self.prime.unwrap_or_else(default_prime);
        if !is_prime(prime) || sqrt_minus_one(prime).is_none() {
            return Err(format!("--prime {prime} must be a prime congruent to 1 mod 4"));
        }
        Ok(prime)
    }

    /// The verification mode, with `default` used when --mode is absent.
    pub fn mode(&self, default: ModeArg) -> Result<Mode, String> {
        match self.mode.unwrap_or(default) {
            ModeArg::Exact => Ok(Mode::Exact),
            ModeArg::Prob => {
                let prime = self.prime()?;
                if self.points == 0 {
                    return Err("--points must be positive".into());
                }
                Ok(Mode::Probabilistic { points: self.points, prime, seed: self.seed })
            }
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a loop or operator expression to one basis element.
    Act(ActArgs),
    /// Run a verification suite; exits 0 iff every identity passes.
    Verify {
        #[command(subcommand)]
        suite: suites::Suite,
    },
    /// Jones value of an operator expression applied to the empty link.
    Jones {
        #[arg(long)]
        expr: String,
    },
    /// Convert a monomial or Chebyshev element to the theta basis.
    Convert(ConvertArgs),
}

#[derive(Args, Debug)]
struct ActArgs {
    #[arg(long, value_enum)]
    basis: BasisArg,
    /// A loop name or an operator expression.
    #[arg(long)]
    op: String,
    /// Basis label as i,j,k.
    #[arg(long, value_parser = parse_triple)]
    state: [i64; 3],
    /// Parameters of the psi action: s2 (u = v = s^2) or symbolic (independent u, v).
    #[arg(long, value_enum, default_value = "s2")]
    uv: UvArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    N,
    M,
    Psi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum UvArg {
    S2,
    Symbolic,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: FromBasis,
    #[arg(long, value_enum, default_value = "theta")]
    to: ToBasis,
    /// Exponents a,b,c of B12^a B23^b B13^c for monomial input.
    #[arg(long, value_parser = parse_triple)]
    key: Option<[i64; 3]>,
    /// Generator of the Chebyshev polynomial.
    #[arg(long)]
    gen: Option<String>,
    /// Degree of the Chebyshev polynomial.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FromBasis {
    Monomial,
    Chebyshev,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ToBasis {
    Theta,
}

fn parse_triple(s: &str) -> Result<[i64; 3], String> {
    let parts: Vec<i64> = s.split(',').map(|p| p.trim().parse::<i64>().map_err(|e| format!("{p:?}: {e}"))).collect::<Result<_, _>>()?;
    parts.try_into().map_err(|p: Vec<i64>| format!("expected three comma-separated integers, got {}", p.len()))
}

fn run(cli: Cli) -> Result<bool, String> {
    if let Some(n) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().map_err(|e| e.to_string())?;
    }
    let g = &cli.global;
    let fmt = g.format();
    match cli.command {
        Command::Act(a) => {
            let trunc = suites::truncation(g.trunc, 12);
            let v = match a.basis {
                BasisArg::N => suites::act_theta(&a.op, a.state, trunc),
                BasisArg::M => suites::act_dumbbell(&a.op, a.state, trunc),
                BasisArg::Psi => suites::act_psi(&a.op, a.state, trunc, a.uv == UvArg::Symbolic),
            }?;
            output::vector(fmt, &v);
            Ok(true)
        }
        Command::Jones { expr } => {
            let value = suites::jones_value(&expr, suites::truncation(g.trunc, 12))?;
            output::scalar(fmt, &expr, &value);
            Ok(true)
        }
        Command::Convert(c) => {
            let trunc = suites::truncation(g.trunc, 16);
            let v = match (c.from, c.to) {
                (FromBasis::Monomial, ToBasis::Theta) => {
                    let key = c.key.ok_or("--key a,b,c is required for monomial input")?;
                    suites::convert_monomial(key, trunc)?
                }
                (FromBasis::Chebyshev, ToBasis::Theta) => {
                    let gen = c.gen.ok_or("--gen is required for chebyshev input")?;
                    let n = c.n.ok_or("--n is required for chebyshev input")?;
                    suites::convert_chebyshev(&gen, n, trunc)?
                }
            };
            output::vector(fmt, &v);
            Ok(true)
        }
        Command::Verify { suite } => {
            let run = suites::run_suite(&suite, g)?;
            output::suite(fmt, &run);
            Ok(run.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
