//! Floating-point checks of the closed-form roots and the cosine/sine
//! products. Nothing here is used to construct polynomials.

use std::f64::consts::PI;

use num_traits::Signed;

use super::{family_poly, FamilyTag};
use crate::error::{Error, Result};
use crate::fps::{to_f64, Rational};

pub const DEFAULT_TOL: f64 = 1e-9;

/// The closed-form real roots of `C`, `S`, `D` and `E`.
///
/// First kind: `2 sqrt(beta) cos((2m - 1) pi / (2n))`; second kind:
/// `2 sqrt(beta) cos(m pi / (n + 1))`, for `m = 1..=n`.
pub fn closed_form_roots(tag: FamilyTag, n: usize, beta: &Rational) -> Result<Vec<f64>> {
    if matches!(tag, FamilyTag::L | FamilyTag::F) {
        return Err(Error::InvalidArgument(format!("family {tag} has no real closed-form roots")));
    }
    let beta = tag.effective_beta(beta);
    if beta.is_negative() {
        return Err(Error::InvalidArgument("root check needs beta >= 0".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("root check needs n >= 1".into()));
    }
    let scale = 2.0 * to_f64(&beta).sqrt();
    let nf = n as f64;
    Ok((1..=n)
        .map(|m| {
            let angle =
                if tag.is_first_kind() { (2.0 * m as f64 - 1.0) * PI / (2.0 * nf) } else { m as f64 * PI / (nf + 1.0) };
            scale * angle.cos()
        })
        .collect())
}

/// Evaluates the exact polynomial at each closed-form root and compares
/// the expanded product of linear factors with its coefficients.
///
/// Both comparisons are relative: a residual counts as zero when it is at
/// most `tol` times the sum of the absolute values of the terms involved.
pub fn root_form_check(tag: FamilyTag, n: usize, beta: &Rational, tol: f64) -> Result<bool> {
    let roots = closed_form_roots(tag, n, beta)?;
    let poly = family_poly(tag, n as i64, beta)?;
    let coeffs: Vec<f64> = poly.coeffs().iter().map(to_f64).collect();

    for &r in &roots {
        let value = poly.eval_f64(r);
        let magnitude: f64 = coeffs.iter().enumerate().map(|(k, c)| c.abs() * r.abs().powi(k as i32)).sum();
        if value.abs() > tol * magnitude.max(1.0) {
            return Ok(false);
        }
    }

    // prod (x - r_m), lowest degree first
    let mut expanded = vec![1.0];
    for &r in &roots {
        let mut next = vec![0.0; expanded.len() + 1];
        for (k, c) in expanded.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= r * c;
        }
        expanded = next;
    }
    if coeffs.len() != expanded.len() {
        return Ok(false);
    }
    let scale: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
    Ok(expanded.iter().enumerate().all(|(k, e)| (e - coeffs[k]).abs() <= tol * scale))
}

/// Computed and expected values of the four cosine/sine products for `n`.
///
/// The right sides depend on parity: `prod cos^2((2m-1)pi/(2n))` is
/// `1/2^(n-1)` for even `n` and `n/2^(n-1)` for odd `n`, while
/// `prod cos^2(m pi/n)` swaps the two; the sine products do not depend on it.
pub fn trig_products(n: usize) -> Result<[(f64, f64); 4]> {
    if n == 0 {
        return Err(Error::InvalidArgument("trig products need n >= 1".into()));
    }
    let nf = n as f64;
    let half = |k: usize| (1..=k).map(move |m| (2.0 * m as f64 - 1.0) * PI / (2.0 * nf));
    let whole = |k: usize| (1..=k).map(move |m| m as f64 * PI / nf);
    let cos_half: f64 = half(n / 2).map(|a| a.cos().powi(2)).product();
    let cos_whole: f64 = whole((n - 1) / 2).map(|a| a.cos().powi(2)).product();
    let sin_half: f64 = half(n / 2).map(|a| a.sin().powi(2)).product();
    let sin_whole: f64 = whole((n - 1) / 2).map(|a| a.sin().powi(2)).product();

    let unit = 1.0 / 2f64.powi(n as i32 - 1);
    let weighted = nf * unit;
    let (even_first, odd_first) = if n.is_multiple_of(2) { (unit, weighted) } else { (weighted, unit) };
    Ok([(cos_half, even_first), (cos_whole, odd_first), (sin_half, unit), (sin_whole, weighted)])
}

pub fn trig_product_check(n: usize, tol: f64) -> Result<bool> {
    Ok(trig_products(n)?.iter().all(|(got, want)| (got - want).abs() <= tol * want.abs().max(1.0)))
}
