//! Powers of the Catalan series in `x^2` expressed through `S_n(1/x)`.
//!
//! For every integer `k`,
//! `C^k(x^2) = -(1/x)^k S_(k-2)(1/x) + (1/x)^(k-1) S_(k-1)(1/x) C(x^2)`.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::fps::{Poly, Rational, Series};
use crate::polyfam::{family_poly, FamilyTag};

/// `C(x^2) = sum binom(2n, n)/(n + 1) x^(2n)` from the closed form.
pub fn catalan_in_x2(order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|k| {
            if k % 2 == 1 {
                return Rational::from_integer(0.into());
            }
            let n = k / 2;
            let c = binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1);
            Rational::from_integer(c)
        })
        .collect();
    Series::new(coeffs, order)
}

/// One term `coef * x^(-shift) * p(1/x)`, kept as `x^(-(shift + d)) J_d p`.
struct Laurent {
    /// Total negative exponent `shift + deg p`.
    neg: i64,
    /// `J_d p`, a polynomial in nonnegative powers.
    body: Poly,
}

fn laurent(shift: i64, p: &Poly) -> Result<Option<Laurent>> {
    let Some(d) = p.degree() else {
        return Ok(None);
    };
    Ok(Some(Laurent { neg: shift + d as i64, body: p.reverse(d)? }))
}

/// Checks the identity for `C^k(x^2)` through `x^order` after clearing the
/// negative powers of `x`. Needs `order >= 2|k| + 4`.
pub fn catalan_power_check(k: i64, order: usize) -> Result<bool> {
    let needed = 2 * k.unsigned_abs() as usize + 4;
    if order < needed {
        return Err(Error::InsufficientOrder { needed, available: order });
    }
    let zero = Rational::from_integer(0.into());
    let c = catalan_in_x2(order);
    let lhs = c.powi(k)?;

    let s_far = family_poly(FamilyTag::S, k - 2, &zero)?;
    let s_near = family_poly(FamilyTag::S, k - 1, &zero)?;
    let first = laurent(k, &s_far)?;
    let second = laurent(k - 1, &s_near)?;
    let e = [first.as_ref(), second.as_ref()].into_iter().flatten().map(|t| t.neg).max().unwrap_or(0).max(0);

    let mut rhs = Series::zero(order);
    if let Some(t) = first {
        let term = t.body.to_series(order).shift_up((e - t.neg) as usize).truncate(order);
        rhs = &rhs - &term;
    }
    if let Some(t) = second {
        let term = t.body.to_series(order).mul(&c).shift_up((e - t.neg) as usize).truncate(order);
        rhs = &rhs + &term;
    }
    Ok(lhs.shift_up(e as usize).truncate(order) == rhs)
}
