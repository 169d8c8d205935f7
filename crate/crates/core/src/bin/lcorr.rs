use std::process::ExitCode;

use clap::{ColorChoice, CommandFactory, FromArgMatches, Parser, Subcommand};

use liouville_corr::commands::{self, exit, CommandError, CommandResult};
use liouville_corr::report::{parse_list, parse_rational, DEFAULT_DIGITS};
use liouville_corr::spectrum::DEFAULT_PRIME_BUDGET;
use liouville_corr::{PrimeSet, Rational, ShiftSet};

#[derive(Parser)]
#[command(name = "lcorr", version, about = "Correlations of completely multiplicative ±1 functions")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Significant digits in decimal renderings.
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS)]
    digits: usize,
    /// Worker threads for sieving; never changes results.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact local density eta_p^H.
    Density {
        #[arg(short = 'p')]
        prime: String,
        #[arg(short = 'H', allow_hyphen_values = true)]
        shifts: String,
        /// Print each recursion step.
        #[arg(long)]
        trace: bool,
    },
    /// Exact correlation kappa_P^H; with --tail, a truncation interval.
    Kappa {
        #[arg(short = 'P', allow_hyphen_values = true)]
        primes: String,
        #[arg(short = 'H', allow_hyphen_values = true)]
        shifts: String,
        /// Upper bound on the reciprocal sum 1/(p+1) over omitted primes.
        #[arg(long)]
        tail: Option<String>,
    },
    /// Compare the sieved average S_P(x) against kappa_P^H.
    Verify {
        #[arg(short = 'P', allow_hyphen_values = true)]
        primes: String,
        #[arg(short = 'H', allow_hyphen_values = true)]
        shifts: String,
        #[arg(short = 'x')]
        x: u64,
        #[arg(long)]
        tol: String,
    },
    /// Sampled partial sums as CSV.
    Series {
        #[arg(short = 'P', allow_hyphen_values = true)]
        primes: String,
        #[arg(short = 'H', allow_hyphen_values = true)]
        shifts: String,
        #[arg(short = 'x')]
        x: u64,
        #[arg(long)]
        stride: Option<u64>,
    },
    /// alpha_H, its witness prime and the spectrum interval.
    Spectrum {
        #[arg(short = 'H', allow_hyphen_values = true)]
        shifts: String,
    },
    /// A prime set whose correlation approximates a target.
    Construct {
        #[arg(short = 'H', allow_hyphen_values = true)]
        shifts: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, default_value = "1e-3")]
        eps: String,
        #[arg(long, default_value_t = 0)]
        floor: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
        budget: usize,
    },
    /// Two-element member of the closure of generator sets.
    Closure {
        #[arg(short = 'G', required = true)]
        generators: Vec<String>,
        /// Shift set to test for membership.
        #[arg(long)]
        member: Option<String>,
    },
}

fn shift_set(s: &str) -> Result<ShiftSet, CommandError> {
    let v = parse_list(s).map_err(|e| CommandError::usage(e.to_string()))?;
    Ok(ShiftSet::new(v)?)
}

fn prime_set(s: &str) -> Result<PrimeSet, CommandError> {
    let v = parse_list(s).map_err(|e| CommandError::usage(e.to_string()))?;
    Ok(PrimeSet::new(v)?)
}

fn rational(s: &str) -> Result<Rational, CommandError> {
    parse_rational(s).ok_or_else(|| CommandError::usage(format!("invalid number `{s}`")))
}

fn run(cli: &Cli) -> CommandResult {
    let digits = cli.digits;
    match &cli.command {
        Command::Density { prime, shifts, trace } => {
            let p = prime
                .trim()
                .parse::<u64>()
                .map_err(|_| CommandError::usage(format!("invalid integer `{prime}`")))?;
            commands::density(p, &shift_set(shifts)?, *trace, digits)
        }
        Command::Kappa { primes, shifts, tail } => {
            let tail = tail.as_deref().map(rational).transpose()?;
            commands::kappa(&prime_set(primes)?, &shift_set(shifts)?, tail.as_ref(), digits)
        }
        Command::Verify { primes, shifts, x, tol } => commands::verify(
            &prime_set(primes)?,
            &shift_set(shifts)?,
            *x,
            &rational(tol)?,
            cli.threads,
            digits,
        ),
        Command::Series { primes, shifts, x, stride } => commands::series(
            &prime_set(primes)?,
            &shift_set(shifts)?,
            *x,
            stride.unwrap_or((*x / 100).max(1)),
            cli.threads,
            digits,
        ),
        Command::Spectrum { shifts } => commands::spectrum(&shift_set(shifts)?, digits),
        Command::Construct { shifts, target, eps, floor, budget } => commands::construct(
            &shift_set(shifts)?,
            &rational(target)?,
            &rational(eps)?,
            *floor,
            *budget,
            digits,
        ),
        Command::Closure { generators, member } => {
            let gens = generators.iter().map(|g| shift_set(g)).collect::<Result<Vec<_>, _>>()?;
            let query = member.as_deref().map(shift_set).transpose()?;
            commands::closure(&gens, query.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let color = if std::env::var_os("NO_COLOR").is_some() {
        ColorChoice::Never
    } else {
        ColorChoice::Auto
    };
    let parsed = Cli::command()
        .color(color)
        .try_get_matches()
        .and_then(|m| Cli::from_arg_matches(&m));
    let cli = match parsed {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit_code as u8)
        }
    }
}
