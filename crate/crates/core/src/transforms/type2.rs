//! Transformations built on `a(x) = 1/sqrt(1 - 2 phi x + beta x^2)`.
//!
//! The companion series is `b = phi x + sqrt(1 + (phi^2 - beta) x^2)` and
//! `b^n = t_n + u_n sqrt(...)` with `t_n = J_n t~_n(x^2)` and
//! `u_n = J_(n-1) u~_n(x^2)`, where `t~_n`, `u~_n` are the rows of the
//! stretched pairs `((1 - phi x)/D, x^2/D)` and `(x/D, x^2/D)`,
//! `D = 1 - 2 phi x + beta x^2`.

use std::f64::consts::PI;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::{rat, to_f64, Poly, Rational, Series};
use crate::riordan::RiordanPair;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTwoContext {
    pub phi: Rational,
    pub beta: Rational,
    pub order: usize,
    pub b: Series,
    pub b_inv: Series,
    /// `sqrt(1 + (phi^2 - beta) x^2)`
    pub sqrt_disc: Series,
    /// `1 - x (log b)'`
    pub log_factor: Series,
}

impl TypeTwoContext {
    pub fn new(phi: &Rational, beta: &Rational, order: usize) -> Result<Self> {
        let disc = Series::new(vec![Rational::one(), Rational::zero(), phi * phi - beta], order);
        let sqrt_disc = disc.sqrt()?;
        let b = &Series::monomial(phi.clone(), 1, order) + &sqrt_disc;
        let b_inv = b.inv()?;
        let log_factor = b.x_deriv().mul(&b_inv).scale(&-Rational::one()).add_constant(&Rational::one());
        Ok(TypeTwoContext { phi: phi.clone(), beta: beta.clone(), order, b, b_inv, sqrt_disc, log_factor })
    }

    /// `D = 1 - 2 phi x + beta x^2`
    pub fn denominator(&self) -> Series {
        Series::new(vec![Rational::one(), rat(-2) * &self.phi, self.beta.clone()], self.order)
    }

    /// `beta x^2 - 1`
    fn conj_factor(&self) -> Series {
        Series::new(vec![-Rational::one(), Rational::zero(), self.beta.clone()], self.order)
    }

    /// `(beta x^2 - 1) b^(-1) = phi x - sqrt(...)` and
    /// `1 - x (log b)' = 1/(b sqrt(...))`, plus the companion relation.
    pub fn invariants_hold(&self) -> Result<bool> {
        let n = self.order;
        let conj = &Series::monomial(self.phi.clone(), 1, n) - &self.sqrt_disc;
        let a = self.denominator().sqrt()?.inv()?;
        Ok(self.conj_factor().mul(&self.b_inv) == conj
            && self.log_factor == self.b.mul(&self.sqrt_disc).inv()?
            && crate::riordan::companion_b(&a)? == self.b)
    }

    fn require(&self, n: usize) -> Result<()> {
        if 2 * n > self.order {
            return Err(Error::InsufficientOrder { needed: 2 * n, available: self.order });
        }
        Ok(())
    }
}

/// `(t_n, u_n)` by the series route `t_n = (b^n + (beta x^2 - 1)^n b^(-n))/2`,
/// `u_n = (b^n - (beta x^2 - 1)^n b^(-n))/(2 sqrt(...))`.
pub fn type2_tu(ctx: &TypeTwoContext, n: usize) -> Result<(Poly, Poly)> {
    ctx.require(n)?;
    let half = Rational::new(1.into(), 2.into());
    let bn = ctx.b.pow(n);
    let conj = ctx.conj_factor().pow(n).mul(&ctx.b_inv.pow(n));
    let t = bn.linear(&conj, &half, &half).expect_poly(Some(n))?;
    let u = bn.linear(&conj, &half, &-half.clone()).div(&ctx.sqrt_disc)?.expect_poly(n.checked_sub(1))?;
    Ok((t, u))
}

/// `((1 - phi x)/D, x^2/D)`
pub fn type2_even_pair(phi: &Rational, beta: &Rational, order: usize) -> RiordanPair {
    let den = Series::new(vec![Rational::one(), rat(-2) * phi, beta.clone()], order);
    let den_inv = den.inv().expect("unit constant term");
    let f = Series::new(vec![Rational::one(), -phi.clone()], order).mul(&den_inv);
    let g = Series::monomial(Rational::one(), 2, order).mul(&den_inv);
    RiordanPair::new(f, g).expect("g0 = 0")
}

/// `(x/D, x^2/D)`
pub fn type2_odd_pair(phi: &Rational, beta: &Rational, order: usize) -> RiordanPair {
    let den = Series::new(vec![Rational::one(), rat(-2) * phi, beta.clone()], order);
    let den_inv = den.inv().expect("unit constant term");
    let f = Series::x(order).mul(&den_inv);
    let g = Series::monomial(Rational::one(), 2, order).mul(&den_inv);
    RiordanPair::new(f, g).expect("g0 = 0")
}

/// `(t~_n, u~_n)`: row `n` of the even and odd stretched pairs.
pub fn type2_row_polys(phi: &Rational, beta: &Rational, n: usize) -> Result<(Poly, Poly)> {
    let t = type2_even_pair(phi, beta, n).row_gf(n)?;
    let u = type2_odd_pair(phi, beta, n).row_gf(n)?;
    Ok((t, u))
}

/// `(J_n t~_n(x^2), J_(n-1) u~_n(x^2))`, with `(1, 0)` at `n = 0`.
pub fn type2_closed_form(phi: &Rational, beta: &Rational, n: usize) -> Result<(Poly, Poly)> {
    let (t, u) = type2_row_polys(phi, beta, n)?;
    let t = t.square_arg().reverse(n)?;
    let u = match n.checked_sub(1) {
        Some(m) => u.square_arg().reverse(m)?,
        None => Poly::zero(),
    };
    Ok((t, u))
}

/// `t_n` has only powers of the parity of `n`, `u_n` only the other parity.
pub fn type2_parity_check(t: &Poly, u: &Poly, n: usize) -> bool {
    let only = |p: &Poly, parity: usize| p.coeffs().iter().enumerate().all(|(k, c)| k % 2 == parity || c.is_zero());
    only(t, n % 2) && only(u, (n + 1) % 2)
}

/// `b^(2n) - 2 t_n b^n + (beta x^2 - 1)^n = 0` through the context order.
pub fn type2_quadratic_check(ctx: &TypeTwoContext, n: usize) -> Result<bool> {
    let (t, _) = type2_tu(ctx, n)?;
    let bn = ctx.b.pow(n);
    let lhs = &(&bn.mul(&bn) - &bn.mul(&t.to_series(ctx.order)).scale(&rat(2))) + &ctx.conj_factor().pow(n);
    Ok(lhs.is_zero())
}

/// The factored forms
/// `t~_n = p_n prod_(m <= n/2) (x + (phi^2 - beta cos^2 a_m)/cos^2 a_m)`,
/// `a_m = (2m - 1) pi/(2n)`, `p_n = 1` (even `n`) or `n phi` (odd `n`), and
/// `u~_n = r_n prod_(m <= (n-1)/2) (x + (phi^2 - beta cos^2 b_m)/cos^2 b_m)`,
/// `b_m = m pi/n`, `r_n = n phi` (even `n`) or `1` (odd `n`).
///
/// Coefficients are compared relative to their overall size, and each
/// claimed root is evaluated. When the leading value vanishes the exact
/// polynomial must be zero.
pub fn type2_root_check(phi: &Rational, beta: &Rational, n: usize, tol: f64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("root check needs n >= 1".into()));
    }
    let (t, u) = type2_row_polys(phi, beta, n)?;
    let nf = n as f64;
    let phi_f = to_f64(phi);
    let beta_f = to_f64(beta);
    let shift = |angle: f64| {
        let c2 = angle.cos().powi(2);
        (phi_f * phi_f - beta_f * c2) / c2
    };
    let even = n.is_multiple_of(2);
    let p_lead = if even { Rational::one() } else { rat(n as i64) * phi };
    let r_lead = if even { rat(n as i64) * phi } else { Rational::one() };
    let t_shifts: Vec<f64> = (1..=n / 2).map(|m| shift((2.0 * m as f64 - 1.0) * PI / (2.0 * nf))).collect();
    let u_shifts: Vec<f64> = (1..=(n - 1) / 2).map(|m| shift(m as f64 * PI / nf)).collect();
    Ok(product_matches(&t, &p_lead, &t_shifts, tol) && product_matches(&u, &r_lead, &u_shifts, tol))
}

fn product_matches(exact: &Poly, lead: &Rational, shifts: &[f64], tol: f64) -> bool {
    if lead.is_zero() {
        return exact.is_zero();
    }
    let lead = to_f64(lead);
    let mut expanded = vec![lead];
    for &a in shifts {
        let mut next = vec![0.0; expanded.len() + 1];
        for (k, c) in expanded.iter().enumerate() {
            next[k + 1] += c;
            next[k] += a * c;
        }
        expanded = next;
    }
    let coeffs: Vec<f64> = exact.coeffs().iter().map(to_f64).collect();
    if coeffs.len() != expanded.len() {
        return false;
    }
    let scale = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
    let coeffs_agree = expanded.iter().zip(&coeffs).all(|(e, c)| (e - c).abs() <= tol * scale);
    let roots_vanish = shifts.iter().all(|&a| {
        let r = -a;
        let magnitude: f64 = coeffs.iter().enumerate().map(|(k, c)| c.abs() * r.abs().powi(k as i32)).sum();
        exact.eval_f64(r).abs() <= tol * magnitude.max(1.0)
    });
    coeffs_agree && roots_vanish
}
