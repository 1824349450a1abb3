//! Exact rationals over arbitrary-precision integers.
//!
//! `num_rational::BigRational` keeps every value reduced with a positive
//! denominator, so equality is structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Strict parser: optional sign, decimal digits, optionally `/` and a
/// positive decimal integer. No whitespace, no `+` inside, no zero denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("malformed rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(n, d))
}

/// `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Very large numerators/denominators: scale through the bit lengths.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Exact square root of a rational square, if it is one.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let root = |i: &BigInt| -> Option<BigInt> {
        let s = i.sqrt();
        (&s * &s == *i).then_some(s)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}

pub fn pow(r: &Rational, e: u32) -> Rational {
    num_traits::pow(r.clone(), e as usize)
}

/// `(-1)^n`
pub fn sign_pow(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Least common denominator and the integer numerators over it.
fn common_denominator(values: &[Rational]) -> (BigInt, Vec<BigInt>) {
    let lcm = values.iter().filter(|v| !v.is_zero()).fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let nums = values.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    (lcm, nums)
}

/// The first `len` coefficients of the product of two coefficient lists.
///
/// Both sides are brought to a common denominator so the inner loop is an
/// integer convolution; each output coefficient is reduced once.
pub(crate) fn convolve(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let (da, na) = common_denominator(a);
    let (db, nb) = common_denominator(b);
    let mut acc = vec![BigInt::zero(); len];
    for (i, x) in na.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in nb.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
    let den = da * db;
    acc.into_iter().map(|n| Rational::new(n, den.clone())).collect()
}

/// Uniform rational with numerator in `[-bound, bound]` and denominator in
/// `[1, bound]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    ratio(n, d)
}
