//! Exact rationals (backed by `num-rational`) and their text form.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `r^e` for a possibly negative exponent.
pub fn pow(r: u32, e: i64) -> Rational {
    let m = BigInt::from(r).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(m)
    } else {
        Rational::new(BigInt::one(), m)
    }
}

/// Parses `p/q` or `p` (optionally signed).
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::domain(alloc::format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::domain("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// `p/q`, or `p` for integers.
pub fn format(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}

/// `(a,b,...)` for arity above 1, the bare value otherwise.
pub fn format_vec(xs: &[Rational]) -> String {
    if xs.len() == 1 {
        return format(&xs[0]);
    }
    let parts: Vec<String> = xs.iter().map(format).collect();
    alloc::format!("({})", parts.join(","))
}

/// Parses a bare rational or a parenthesized comma list.
pub fn parse_vec(s: &str) -> Result<Vec<Rational>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s);
    inner.split(',').map(parse).collect()
}

/// Nearest `f64`, adequate for tolerance checks and log-space bounds.
pub fn to_f64(x: &Rational) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(60);
    let n = (n >> shift as usize).to_string();
    let d = (d >> shift as usize).to_string();
    let (n, d): (f64, f64) = (n.parse().unwrap_or(0.0), d.parse().unwrap_or(1.0));
    if d == 0.0 {
        return if x.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        };
    }
    n / d
}

pub fn in_unit_interval(x: &Rational) -> bool {
    !x.is_negative() && *x <= Rational::one()
}
