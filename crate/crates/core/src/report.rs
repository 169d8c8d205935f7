//! Rendering of exact values and the machine-readable output record.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;

/// Default number of significant digits in decimal renderings.
pub const DEFAULT_DIGITS: usize = 12;

/// `num/den`, always with an explicit denominator.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `r` rounded half away from zero to `digits` significant digits, in
/// positional notation with trailing zeros removed.
pub fn decimal(r: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);
    // exponent e with 10^e <= a < 10^(e+1)
    let mut e: i64 = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rational::new(BigInt::from(1), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while a < pow(e) {
        e -= 1;
    }
    while a >= pow(e + 1) {
        e += 1;
    }
    let scale = digits as i64 - 1 - e;
    let scaled = &a * pow(scale);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut m = q;
    if &rem * 2 >= *scaled.denom() {
        m += 1;
    }
    let mut scale = scale;
    if m.to_string().len() > digits {
        m /= 10;
        scale -= 1;
    }
    let s = m.to_string();
    let body = if scale <= 0 {
        format!("{s}{}", "0".repeat((-scale) as usize))
    } else {
        let scale = scale as usize;
        let padded = if s.len() <= scale {
            format!("{}{s}", "0".repeat(scale - s.len() + 1))
        } else {
            s
        };
        let (int, frac) = padded.split_at(padded.len() - scale);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Parses `a/b`, an integer, or a decimal with optional exponent
/// (`0.25`, `1e-3`) into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let shift = exp as i64 - frac.len() as i64;
    let ten = BigInt::from(10);
    let mut r = if shift >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, shift as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-shift) as usize))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

/// A comma-separated list token that is not a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadToken(pub String);

impl fmt::Display for BadToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid integer `{}`", self.0)
    }
}

impl std::error::Error for BadToken {}

/// Comma-separated decimal integers; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u64>, BadToken> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| BadToken(t.to_string())))
        .collect()
}

/// One value of a result record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Field {
    Number { exact: String, decimal: String },
    Text(String),
    List(Vec<String>),
}

impl Field {
    pub fn number(r: &Rational, digits: usize) -> Field {
        Field::Number {
            exact: fraction(r),
            decimal: decimal(r, digits),
        }
    }
}

/// One row of a series payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub x: u64,
    pub sum: i64,
    pub average: String,
}

/// The JSON object emitted by each command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: BTreeMap<String, Field>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<Vec<SeriesRow>>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            result: BTreeMap::new(),
            series: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn field(mut self, key: &str, value: Field) -> Self {
        self.result.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record is always serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
