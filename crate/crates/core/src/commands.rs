//! Command implementations behind the `lcorr` binary. Each returns both a
//! human-readable text block and an [`OutputRecord`] for `--json`.

use num_traits::Signed;

use crate::arith::{PrimeSet, Rational, ShiftSet};
use crate::density::{eta_local, eta_local_traced};
use crate::error::Error;
use crate::gf2::{closure_membership, family_from_generators, two_element_member};
use crate::report::{decimal, fraction, Field, OutputRecord, SeriesRow};
use crate::sieve::{running_average, SieveConfig};
use crate::spectrum::{
    construct_target_with_budget, kappa_finite, kappa_truncated, spectrum_describe,
};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const VERIFY_FAILED: i32 = 2;
    pub const RESOURCE_CAP: i32 = 3;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub record: OutputRecord,
    pub text: String,
    pub exit_code: i32,
}

impl CommandOutput {
    fn ok(record: OutputRecord, text: String) -> Self {
        CommandOutput {
            record,
            text,
            exit_code: exit::SUCCESS,
        }
    }

    /// The stdout payload for the chosen format.
    pub fn render(&self, json: bool) -> String {
        if json {
            format!("{}\n", self.record.to_json())
        } else {
            self.text.clone()
        }
    }
}

/// A failed command with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandError {
    pub message: String,
    pub exit_code: i32,
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError {
            exit_code: if e.is_resource_cap() {
                exit::RESOURCE_CAP
            } else {
                exit::USAGE
            },
            message: e.to_string(),
        }
    }
}

impl CommandError {
    pub fn usage(message: impl Into<String>) -> Self {
        CommandError {
            message: message.into(),
            exit_code: exit::USAGE,
        }
    }
}

pub type CommandResult = Result<CommandOutput, CommandError>;

fn list(xs: impl IntoIterator<Item = u64>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn number_line(name: &str, r: &Rational, digits: usize) -> String {
    format!("{name} = {} ({})\n", fraction(r), decimal(r, digits))
}

/// η_p^H, optionally with its derivation.
pub fn density(p: u64, shifts: &ShiftSet, trace: bool, digits: usize) -> CommandResult {
    let mut record = OutputRecord::new("density")
        .input("p", p)
        .input("H", list(shifts.iter()));
    let mut text;
    if trace {
        let d = eta_local_traced(p, shifts)?;
        let steps = d.render_trace().unwrap_or_default();
        text = number_line("eta", &d.value, digits);
        text.push_str(&steps);
        record = record.field("eta", Field::number(&d.value, digits)).field(
            "trace",
            Field::List(steps.lines().map(str::to_string).collect()),
        );
    } else {
        let v = eta_local(p, shifts)?;
        text = number_line("eta", &v, digits);
        record = record.field("eta", Field::number(&v, digits));
    }
    Ok(CommandOutput::ok(record, text))
}

/// κ_P^H, or center ± radius when a tail bound is given.
pub fn kappa(set: &PrimeSet, shifts: &ShiftSet, tail: Option<&Rational>, digits: usize) -> CommandResult {
    let mut record = OutputRecord::new("kappa")
        .input("P", list(set.iter()))
        .input("H", list(shifts.iter()));
    let k = kappa_finite(set, shifts)?;
    let mut text = number_line("kappa", &k.value, digits);
    record = record
        .field("kappa", Field::number(&k.value, digits))
        .field(
            "factors",
            Field::List(k.factors.iter().map(|(p, f)| format!("{p}:{}", fraction(f))).collect()),
        );
    if let Some(tail) = tail {
        record = record.input("tail", fraction(tail));
        let i = kappa_truncated(set, tail, shifts)?;
        text.push_str(&number_line("radius", &i.radius, digits));
        text.push_str(&format!(
            "interval = [{}, {}]\n",
            fraction(&i.lower()),
            fraction(&i.upper())
        ));
        record = record
            .field("radius", Field::number(&i.radius, digits))
            .field("lower", Field::number(&i.lower(), digits))
            .field("upper", Field::number(&i.upper(), digits));
    }
    Ok(CommandOutput::ok(record, text))
}

/// Sieves S_P(x) and compares it with κ_P^H. Exit code 2 when the
/// difference exceeds `tol`.
pub fn verify(
    set: &PrimeSet,
    shifts: &ShiftSet,
    x: u64,
    tol: &Rational,
    threads: usize,
    digits: usize,
) -> CommandResult {
    if tol.is_negative() {
        return Err(CommandError::usage("tolerance must be non-negative"));
    }
    let exact = kappa_finite(set, shifts)?.value;
    let cfg = SieveConfig::new(x).with_threads(threads);
    let series = running_average(set, shifts, &cfg)?;
    let last = *series.last().expect("x is sampled");
    let empirical = last.average();
    let diff = (&empirical - &exact).abs();
    let pass = diff <= *tol;
    let record = OutputRecord::new("verify")
        .input("P", list(set.iter()))
        .input("H", list(shifts.iter()))
        .input("x", x)
        .input("tol", fraction(tol))
        .field("kappa", Field::number(&exact, digits))
        .field("empirical", Field::number(&empirical, digits))
        .field("sum", Field::Text(last.sum.to_string()))
        .field("difference", Field::number(&diff, digits))
        .field("status", Field::Text(if pass { "pass" } else { "fail" }.into()));
    let mut text = number_line("kappa", &exact, digits);
    text.push_str(&number_line(&format!("S({x})"), &empirical, digits));
    text.push_str(&number_line("difference", &diff, digits));
    text.push_str(if pass { "pass\n" } else { "FAIL\n" });
    Ok(CommandOutput {
        record,
        text,
        exit_code: if pass { exit::SUCCESS } else { exit::VERIFY_FAILED },
    })
}

/// Sampled partial sums as CSV (`x,sum,average`).
pub fn series(
    set: &PrimeSet,
    shifts: &ShiftSet,
    x: u64,
    stride: u64,
    threads: usize,
    digits: usize,
) -> CommandResult {
    let cfg = SieveConfig::new(x).with_stride(stride).with_threads(threads);
    let s = running_average(set, shifts, &cfg)?;
    let rows = s
        .samples
        .iter()
        .map(|r| SeriesRow {
            x: r.x,
            sum: r.sum,
            average: decimal(&r.average(), digits),
        })
        .collect();
    let mut record = OutputRecord::new("series")
        .input("P", list(set.iter()))
        .input("H", list(shifts.iter()))
        .input("x", x)
        .input("stride", stride);
    record.series = Some(rows);
    Ok(CommandOutput::ok(record, s.to_csv(digits)))
}

/// α_H with its witness and the spectrum interval.
pub fn spectrum(shifts: &ShiftSet, digits: usize) -> CommandResult {
    let s = spectrum_describe(shifts)?;
    let text = format!(
        "alpha={} witness={} interval=[{},{}]\n",
        fraction(&s.alpha),
        s.witness_prime,
        compact(&s.lower),
        compact(&s.upper)
    );
    let record = OutputRecord::new("spectrum")
        .input("H", list(shifts.iter()))
        .field("alpha", Field::number(&s.alpha, digits))
        .field("witness", Field::Text(s.witness_prime.to_string()))
        .field("lower", Field::number(&s.lower, digits))
        .field("upper", Field::number(&s.upper, digits));
    Ok(CommandOutput::ok(record, text))
}

/// Integers without a denominator, other values as `num/den`.
fn compact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fraction(r)
    }
}

/// A prime set approximating `target`, re-evaluated exactly.
pub fn construct(
    shifts: &ShiftSet,
    target: &Rational,
    eps: &Rational,
    floor: u64,
    budget: usize,
    digits: usize,
) -> CommandResult {
    let set = construct_target_with_budget(shifts, target, eps, floor, budget)?;
    let achieved = kappa_finite(&set, shifts)?.value;
    let diff = (&achieved - target).abs();
    let within = diff <= *eps;
    let record = OutputRecord::new("construct")
        .input("H", list(shifts.iter()))
        .input("target", fraction(target))
        .input("eps", fraction(eps))
        .input("floor", floor)
        .field("primes", Field::List(set.iter().map(|p| p.to_string()).collect()))
        .field("kappa", Field::number(&achieved, digits))
        .field("difference", Field::number(&diff, digits))
        .field("within_eps", Field::Text(within.to_string()));
    let mut text = format!("primes = {}\n", list(set.iter()));
    text.push_str(&number_line("kappa", &achieved, digits));
    text.push_str(&number_line("difference", &diff, digits));
    Ok(CommandOutput {
        record,
        text,
        exit_code: if within { exit::SUCCESS } else { exit::VERIFY_FAILED },
    })
}

/// Generator of the closure family, a certified two-element member, and
/// optionally membership of `query`.
pub fn closure(generators: &[ShiftSet], query: Option<&ShiftSet>) -> CommandResult {
    let fam = family_from_generators(generators)?;
    let member = two_element_member(&fam)?;
    let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
    let mut record = OutputRecord::new("closure")
        .input("G", gens.join(";"))
        .field("generator", Field::Text(fam.generator.to_string()))
        .field("member", Field::Text(member.to_string()))
        .field("r", Field::Text(member.r.to_string()))
        .field("m", Field::Text(member.multiplicity.to_string()))
        .field("n", Field::Text(member.n.to_string()))
        .field(
            "certificate",
            Field::Text(format!("({}) | t^{} + 1", fam.generator, member.distance)),
        );
    let mut text = format!("{member}\n");
    text.push_str(&format!("generator = {}\n", fam.generator));
    text.push_str(&format!(
        "r = {}, m = {}, n = {}, D = (2^{} - 1)*2^{} = {}\n",
        member.r, member.multiplicity, member.n, member.r, member.n, member.distance
    ));
    text.push_str(&format!(
        "certificate: ({}) divides t^{} + 1\n",
        fam.generator, member.distance
    ));
    if member.degenerate {
        text.push_str("degenerate: generator is 1, the closure is every finite set\n");
        record = record.field("degenerate", Field::Text("true".into()));
    }
    if let Some(q) = query {
        let inside = closure_membership(&fam, q);
        text.push_str(&format!("member {q}: {inside}\n"));
        record = record
            .input("query", q)
            .field("query_member", Field::Text(inside.to_string()));
    }
    Ok(CommandOutput::ok(record, text))
}
