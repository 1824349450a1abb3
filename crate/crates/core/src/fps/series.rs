use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{write_terms, Poly};
use super::rational::{convolve, format_rational, parse_rational, rat, sqrt_exact, Rational};
use crate::error::{Error, Result};

/// A formal power series known exactly through `x^order`.
///
/// Every operation states the order through which its result is exact;
/// binary operations take the minimum of the operand orders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
    order: usize,
}

impl Series {
    /// Pads with zeros or drops coefficients so exactly `order + 1` remain.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs, order }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    /// `c x^k`
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Series { coeffs, order }
    }

    pub fn x(order: usize) -> Self {
        Series::monomial(Rational::one(), 1, order)
    }

    /// `1 / (1 - x)`
    pub fn geometric(order: usize) -> Self {
        Series::new(vec![Rational::one(); order + 1], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[x^n]`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &Rational {
        assert!(n <= self.order, "coefficient x^{n} beyond order {}", self.order);
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` if zero through `order`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order, "cannot raise order {} to {order}", self.order);
        Series::new(self.coeffs[..=order].to_vec(), order)
    }

    /// Coefficients `0..=degree` as a polynomial.
    pub fn to_poly(&self, degree: usize) -> Poly {
        Poly::new(self.coeffs[..=degree.min(self.order)].to_vec())
    }

    /// Asserts the series is a polynomial of degree at most `max_degree`
    /// through its known order and returns it.
    pub fn expect_poly(&self, max_degree: Option<usize>) -> Result<Poly> {
        let Some(max_degree) = max_degree else {
            return match self.valuation() {
                None => Ok(Poly::zero()),
                Some(k) => Err(Error::NonPolynomialResidue(k)),
            };
        };
        if let Some(k) = (max_degree + 1..=self.order).find(|&k| !self.coeffs[k].is_zero()) {
            return Err(Error::NonPolynomialResidue(k));
        }
        Ok(self.to_poly(max_degree))
    }

    /// `alpha * self + beta * other`
    pub fn linear(&self, other: &Series, alpha: &Rational, beta: &Rational) -> Series {
        let order = self.order.min(other.order);
        Series::new((0..=order).map(|k| alpha * &self.coeffs[k] + beta * &other.coeffs[k]).collect(), order)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect(), self.order)
    }

    pub fn add_constant(&self, c: &Rational) -> Series {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }

    /// Cauchy product, exact through the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        let coeffs = convolve(&self.coeffs[..=order], &other.coeffs[..=order], order + 1);
        Series { coeffs, order }
    }

    pub fn pow(&self, e: usize) -> Series {
        let mut acc = Series::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<Series> {
        if e >= 0 {
            Ok(self.pow(e as usize))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs() as usize))
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[n - k];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Series { coeffs: out, order: self.order })
    }

    pub fn div(&self, other: &Series) -> Result<Series> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self(g(x))` for `g_0 = 0`.
    ///
    /// With `v` the valuation of `g`, the result is exact through
    /// `min(order(g), v * (order(self) + 1) - 1)`, which is
    /// `min(order(self), order(g))` for `v = 1`.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let v = g.valuation().unwrap_or(g.order + 1);
        let order = g.order.min(v * (self.order + 1) - 1);
        let g = g.truncate(order);
        let top = self.order.min(order / v);
        let mut acc = Series::zero(order);
        for k in (0..=top).rev() {
            acc = acc.mul(&g).add_constant(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse `r` with `self(r(x)) = x`, by triangular
    /// back-substitution on the coefficients of the powers of `r`.
    pub fn reversion(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadValuation("reversion needs h0 = 0"));
        }
        if self.order == 0 {
            return Ok(Series::zero(0));
        }
        let h1 = &self.coeffs[1];
        if h1.is_zero() {
            return Err(Error::BadValuation("reversion needs h1 != 0"));
        }
        let n_max = self.order;
        let h1_inv = h1.recip();
        // powers[k][m] = [x^m] r^k, filled column by column as r_m becomes known.
        let mut powers = vec![vec![Rational::zero(); n_max + 1]; n_max + 1];
        for n in 1..=n_max {
            let mut rest = Rational::zero();
            for k in 2..=n {
                let mut c = Rational::zero();
                for j in 1..=n + 1 - k {
                    let r_j = &powers[1][j];
                    let p = &powers[k - 1][n - j];
                    if !r_j.is_zero() && !p.is_zero() {
                        c += r_j * p;
                    }
                }
                if !self.coeffs[k].is_zero() {
                    rest += &self.coeffs[k] * &c;
                }
                powers[k][n] = c;
            }
            let target = if n == 1 { Rational::one() } else { Rational::zero() };
            powers[1][n] = (target - rest) * &h1_inv;
        }
        let coeffs = std::mem::take(&mut powers[1]);
        Ok(Series { coeffs, order: n_max })
    }

    /// Square root with positive constant term.
    pub fn sqrt(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let s0 = sqrt_exact(a0).ok_or_else(|| Error::NonSquareConstant(format_rational(a0)))?;
        let half_inv = (rat(2) * &s0).recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(s0);
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &out[k] * &out[n - k];
            }
            out.push(acc * &half_inv);
        }
        Ok(Series { coeffs: out, order: self.order })
    }

    /// Formal derivative, exact through `order - 1`. An order-0 series has no
    /// known derivative coefficient; the result is then the zero constant.
    pub fn deriv(&self) -> Series {
        let order = self.order.saturating_sub(1);
        Series::new((1..=self.order).map(|k| rat(k as i64) * &self.coeffs[k]).collect(), order)
    }

    /// `x * self'`, which keeps the full order.
    pub fn x_deriv(&self) -> Series {
        Series::new(self.coeffs.iter().enumerate().map(|(k, c)| rat(k as i64) * c).collect(), self.order)
    }

    /// `1 + x (log a)'` computed as `1 + x a'/a`.
    pub fn log_deriv_factor(&self) -> Result<Series> {
        Ok(self.x_deriv().div(self)?.add_constant(&Rational::one()))
    }

    /// `(a1, a2)` with `a(x) = a1(x^2) + x a2(x^2)`.
    ///
    /// `a1` is exact through `order / 2`, `a2` through `(order - 1) / 2`.
    pub fn even_odd_split(&self) -> (Series, Series) {
        let even_order = self.order / 2;
        let odd_order = self.order.saturating_sub(1) / 2;
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Series::new(even, even_order), Series::new(odd, odd_order))
    }

    /// `self(x^2)`, exact through `2 * order + 1`.
    pub fn square_arg(&self) -> Series {
        let order = 2 * self.order + 1;
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Series { coeffs, order }
    }

    /// `x^k self`, exact through `order + k`.
    pub fn shift_up(&self, k: usize) -> Series {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs, order: self.order + k }
    }

    /// `self(c x)`
    pub fn dilate(&self, c: &Rational) -> Series {
        let mut p = Rational::one();
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for a in &self.coeffs {
            coeffs.push(a * &p);
            p *= c;
        }
        Series { coeffs, order: self.order }
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Series[{}; O(x^{})]",
            self.coeffs.iter().map(format_rational).collect::<Vec<_>>().join(", "),
            self.order + 1
        )
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().cloned().enumerate())?;
        write!(f, " + O(x^{})", self.order + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.linear(rhs, &Rational::one(), &Rational::one())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.linear(rhs, &Rational::one(), &-Rational::one())
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesDoc { order: self.order, coeffs: self.coeffs.iter().map(format_rational).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = SeriesDoc::deserialize(d)?;
        if doc.coeffs.len() != doc.order + 1 {
            return Err(serde::de::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                doc.order,
                doc.order + 1,
                doc.coeffs.len()
            )));
        }
        let coeffs = doc
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Series { coeffs, order: doc.order })
    }
}
