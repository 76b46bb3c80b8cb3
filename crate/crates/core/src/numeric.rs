//! Exact rational helpers shared across modules.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_big(v: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(v.clone()))
}

/// Parses `a/b`, `a` or a terminating decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |e: String| Error::Parse(format!("bad rational {s:?}: {e}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|e| bad(format!("{e}")))?;
        let d: BigInt = d.trim().parse().map_err(|e| bad(format!("{e}")))?;
        if d.is_zero() {
            return Err(bad("zero denominator".into()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let w: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|e| bad(format!("{e}")))?
        };
        let f: BigInt = frac.parse().map_err(|e| bad(format!("{e}")))?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac = Rational::new(f, scale);
        let w = Rational::from_integer(w);
        return Ok(if neg { w - frac } else { w + frac });
    }
    let n: BigInt = s.parse().map_err(|e| bad(format!("{e}")))?;
    Ok(Rational::from_integer(n))
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// `num/den` in lowest terms; integers keep the `/1`.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    // Scale down huge operands before converting so the ratio stays finite.
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let shift = r.denom().bits().max(r.numer().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Writes `x = v / scale` with integer `v` and positive integer `scale`
/// (the lcm of the denominators).
pub fn clear_denominators(x: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let scale = x.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let v = x.iter().map(|r| r.numer() * (&scale / r.denom())).collect();
    (v, scale)
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
