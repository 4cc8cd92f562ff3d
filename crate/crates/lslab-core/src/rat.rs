//! Exact rational scalars.
//!
//! Everything in the evaluation core is computed over `BigRational`; floats
//! appear only at the reporting boundary (regression slopes, plots, decimal
//! columns).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Rational from two machine integers.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from a machine integer.
pub fn rint(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `r^e` for signed exponents (`r^0 = 1`).
pub fn rpow(r: &Rational, e: i32) -> Rational {
    Pow::pow(r, e)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::InvalidParams(format!("cannot parse rational `{s}`: {e}")))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Canonical display form: `p/q` in lowest terms, bare `p` when q = 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Decimal rendering with up to `sig` significant digits (truncated), used for
/// the parallel decimal fields in reports. Integer digits are never dropped.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let n = r.numer().abs();
    let d = r.denom().clone();
    let ten = BigInt::from(10);

    let int_part = &n / &d;
    let mut rem = &n % &d;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int_part.to_string());

    let mut significant = if int_part.is_zero() {
        0
    } else {
        int_part.to_string().len()
    };
    if rem.is_zero() || significant >= sig {
        return out;
    }

    let mut frac = String::new();
    while !rem.is_zero() && significant < sig {
        rem *= &ten;
        let digit = &rem / &d;
        rem = &rem % &d;
        frac.push_str(&digit.to_string());
        if significant > 0 || !digit.is_zero() {
            significant += 1;
        }
    }
    let frac = frac.trim_end_matches('0');
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    }
    out
}
