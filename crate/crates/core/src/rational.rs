//! Exact rational entries and their canonical text form.
//!
//! Entries are [`num_rational::BigRational`], which is always kept in lowest
//! terms with a positive denominator. The text form is `p` for integers and
//! `p/q` otherwise; anything else is rejected on input so that
//! parse/format is a bijection.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_integer(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}

/// Parses the canonical token form. Returns a message describing the
/// problem on failure.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    match s.split_once('/') {
        None => parse_integer(s, true)
            .map(Rational::from_integer)
            .ok_or_else(|| format!("{s:?} is not an integer or p/q rational")),
        Some((p, q)) => {
            let p = parse_integer(p, true)
                .ok_or_else(|| format!("{s:?}: bad numerator"))?;
            let q = parse_integer(q, false)
                .ok_or_else(|| format!("{s:?}: bad denominator"))?;
            if q.is_zero() {
                return Err(format!("{s:?}: zero denominator"));
            }
            if q.is_one() {
                return Err(format!("{s:?}: integers are written without a denominator"));
            }
            if p.is_zero() {
                return Err(format!("{s:?}: zero is written as \"0\""));
            }
            let r = Rational::new(p.clone(), q.clone());
            if r.numer() != &p || r.denom() != &q {
                return Err(format!("{s:?}: not in lowest terms"));
            }
            Ok(r)
        }
    }
}

pub(crate) fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}
