use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{convolve, format_rational, parse_rational, pow, to_f64, Rational};
use super::series::Series;
use crate::error::{Error, Result};

/// Exact polynomial with rational coefficients, lowest degree first.
///
/// Trailing zeros are trimmed on construction, so `==` is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| super::rational::rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `x + c`
    pub fn linear(c: Rational) -> Self {
        Poly::new(vec![c, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// `self(other(x))`
    pub fn compose(&self, other: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * other) + &Poly::constant(c.clone()))
    }

    /// `self(x + shift)`
    pub fn shift(&self, shift: &Rational) -> Poly {
        self.compose(&Poly::linear(shift.clone()))
    }

    /// `self(c x)`
    pub fn dilate(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().map(|(k, a)| a * pow(c, k as u32)).collect())
    }

    /// `self(-x)`
    pub fn reflect(&self) -> Poly {
        self.dilate(&-Rational::one())
    }

    /// `self(x^2)`
    pub fn square_arg(&self) -> Poly {
        let mut coeffs = vec![Rational::zero(); 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// `x^k * self`
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    /// The coefficient list reversed within length `n + 1`, i.e. `x^n c(1/x)`.
    pub fn reverse(&self, n: usize) -> Result<Poly> {
        if let Some(degree) = self.degree() {
            if degree > n {
                return Err(Error::DegreeTooHigh { degree, n });
            }
        }
        Ok(Poly::new((0..=n).map(|k| self.coeff(n - k)).collect()))
    }

    /// The polynomial as a series known through `order`.
    pub fn to_series(&self, order: usize) -> Series {
        Series::new((0..=order).map(|k| self.coeff(k)).collect(), order)
    }

    /// Composition with a series; the inner constant term may be nonzero
    /// because the outer sum is finite. Exact through `g.order()`.
    pub fn compose_series(&self, g: &Series) -> Series {
        let order = g.order();
        self.coeffs.iter().rev().fold(Series::zero(order), |acc, c| acc.mul(g).add_constant(c))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs.iter().map(format_rational).collect::<Vec<_>>())
    }
}

/// Writes `sum c_k x^k` term by term, skipping zeros, in the given index order.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (usize, Rational)>) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c < Rational::zero();
        let mag = if negative { -c } else { c };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        first = false;
        let show_coeff = k == 0 || !mag.is_one();
        if show_coeff {
            write!(f, "{}", format_rational(&mag))?;
        }
        let star = if show_coeff { "*" } else { "" };
        match k {
            0 => {}
            1 => write!(f, "{star}x")?,
            _ => write!(f, "{star}x^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Highest power first: `x^3 + 3*x^2 - 2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().cloned().enumerate().rev())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let out = convolve(&self.coeffs, &rhs.coeffs, self.coeffs.len() + rhs.coeffs.len() - 1);
        Poly::new(out)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs =
            strings.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>().map_err(serde::de::Error::custom)?;
        Ok(Poly::new(coeffs))
    }
}
