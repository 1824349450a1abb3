//! Transformations built on `a(x) = 1/(1 - phi x + beta x^2)`.
//!
//! The companion series is
//! `b = (1 + phi x + sqrt(1 + 2 phi x + (phi^2 - 4 beta) x^2)) / 2`, and
//! `b^n = (c_n + s_n sqrt(...)) / 2` with polynomials
//! `c_n = J_n D_n(x + phi, beta)` and `s_n = J_(n-1) E_(n-1)(x + phi, beta)`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::fps::{pow, rat, Poly, Rational, Series};
use crate::polyfam::{family_poly, FamilyTag};
use crate::riordan::companion_b;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeOneContext {
    pub phi: Rational,
    pub beta: Rational,
    pub order: usize,
    pub b: Series,
    pub b_inv: Series,
    /// `sqrt(1 + 2 phi x + (phi^2 - 4 beta) x^2)`
    pub sqrt_disc: Series,
    /// `1 - x (log b)'`
    pub log_factor: Series,
}

impl TypeOneContext {
    pub fn new(phi: &Rational, beta: &Rational, order: usize) -> Result<Self> {
        let disc = Series::new(vec![Rational::one(), rat(2) * phi, phi * phi - rat(4) * beta], order);
        let sqrt_disc = disc.sqrt()?;
        let half = Rational::new(1.into(), 2.into());
        let b = Series::new(vec![Rational::one(), phi.clone()], order).linear(&sqrt_disc, &half, &half);
        let b_inv = b.inv()?;
        let log_factor = b.x_deriv().mul(&b_inv).scale(&-Rational::one()).add_constant(&Rational::one());
        Ok(TypeOneContext { phi: phi.clone(), beta: beta.clone(), order, b, b_inv, sqrt_disc, log_factor })
    }

    /// `a = 1/(1 - phi x + beta x^2)`
    pub fn a(&self) -> Series {
        Series::new(vec![Rational::one(), -self.phi.clone(), self.beta.clone()], self.order)
            .inv()
            .expect("unit constant term")
    }

    /// `1 + x (log a)' = (1 - beta x^2)/(1 - phi x + beta x^2)`
    pub fn a_log_factor(&self) -> Series {
        Series::new(vec![Rational::one(), Rational::from_integer(0.into()), -self.beta.clone()], self.order)
            .mul(&self.a())
    }

    /// The defining relations of the context, each checked exactly.
    pub fn invariants_hold(&self) -> Result<bool> {
        let n = self.order;
        let disc =
            Series::new(vec![Rational::one(), rat(2) * &self.phi, &self.phi * &self.phi - rat(4) * &self.beta], n);
        Ok(self.b.mul(&self.b_inv) == Series::one(n)
            && self.sqrt_disc.mul(&self.sqrt_disc) == disc
            && companion_b(&self.a())? == self.b
            && self.log_factor == self.sqrt_disc.inv()?)
    }

    /// `beta^n x^(2n) b^(-n)`, the conjugate of `b^n`.
    fn conjugate_power(&self, n: usize) -> Series {
        self.b_inv.pow(n).scale(&pow(&self.beta, n as u32)).shift_up(2 * n).truncate(self.order)
    }

    fn require(&self, n: usize) -> Result<()> {
        if 2 * n > self.order {
            return Err(Error::InsufficientOrder { needed: 2 * n, available: self.order });
        }
        Ok(())
    }
}

/// `(c_n, s_n)` by the series route: `c_n = b^n + beta^n x^(2n) b^(-n)` and
/// `s_n = (b^n - beta^n x^(2n) b^(-n)) / sqrt(...)`, each required to be a
/// polynomial through the context order.
pub fn type1_cs(ctx: &TypeOneContext, n: usize) -> Result<(Poly, Poly)> {
    ctx.require(n)?;
    let bn = ctx.b.pow(n);
    let conj = ctx.conjugate_power(n);
    let c = (&bn + &conj).expect_poly(Some(n))?;
    let s = (&bn - &conj).div(&ctx.sqrt_disc)?.expect_poly(n.checked_sub(1))?;
    Ok((c, s))
}

/// `(J_n D_n(x + phi, beta), J_(n-1) E_(n-1)(x + phi, beta))`, with
/// `(2, 0)` at `n = 0`.
pub fn type1_closed_form(phi: &Rational, beta: &Rational, n: usize) -> Result<(Poly, Poly)> {
    if n == 0 {
        return Ok((Poly::constant(rat(2)), Poly::zero()));
    }
    let d = family_poly(FamilyTag::D, n as i64, beta)?.shift(phi);
    let e = family_poly(FamilyTag::E, n as i64 - 1, beta)?.shift(phi);
    Ok((d.reverse(n)?, e.reverse(n - 1)?))
}

/// `b^(2n) - c_n b^n + beta^n x^(2n) = 0` through the context order.
pub fn type1_quadratic_check(ctx: &TypeOneContext, n: usize) -> Result<bool> {
    let (c, _) = type1_cs(ctx, n)?;
    let bn = ctx.b.pow(n);
    let lhs = &(&bn.mul(&bn) - &bn.mul(&c.to_series(ctx.order)))
        + &Series::monomial(pow(&ctx.beta, n as u32), 2 * n, ctx.order);
    Ok(lhs.is_zero())
}
