//! Row closed forms of the bases through Lucas and Fibonacci polynomials,
//! and the radical identities built from the same substitution.
//!
//! Every formula here has the shape `r^base p(s / r)` for a radical
//! `r = sqrt(R)`; the powers of `r` that survive are `r^(base - k)` for the
//! nonzero coefficients `p_k`, and they all turn out even because `L_m` and
//! `F_m` have a definite parity.

use num_traits::{One, Zero};

use super::{build_basis, half, BasisKind};
use crate::error::{Error, Result};
use crate::fps::{pow, rat, Poly, Rational, Series};
use crate::polyfam::{family_poly, FamilyTag};

/// `p_k scale^k r^(2 half_power)`, one surviving term of `r^base p(scale / r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalTerm {
    pub k: usize,
    pub coeff: Rational,
    pub half_power: i64,
}

/// Splits `r^base p(scale / r)` into integral powers of `r^2`, failing with
/// `ParityViolation` when an odd power of `r` would remain.
pub fn radical_collapse(p: &Poly, scale: &Rational, base: i64) -> Result<Vec<RadicalTerm>> {
    let mut out = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = base - k as i64;
        if e % 2 != 0 {
            return Err(Error::ParityViolation(e));
        }
        out.push(RadicalTerm { k, coeff: c * pow(scale, k as u32), half_power: e / 2 });
    }
    Ok(out)
}

/// `sum coeff R^half_power` for a polynomial radicand and nonnegative powers.
fn collapse_poly(terms: &[RadicalTerm], radicand: &Poly) -> Result<Poly> {
    let mut acc = Poly::zero();
    for t in terms {
        let e = usize::try_from(t.half_power).map_err(|_| Error::ParityViolation(2 * t.half_power))?;
        acc = &acc + &radicand.pow(e).scale(&t.coeff);
    }
    Ok(acc)
}

/// `sum coeff x^k Q^half_power` for a series radicand and nonpositive powers.
fn collapse_series(terms: &[RadicalTerm], radicand_inv: &Series) -> Result<Series> {
    let order = radicand_inv.order();
    let mut acc = Series::zero(order);
    for t in terms {
        let e = usize::try_from(-t.half_power).map_err(|_| Error::ParityViolation(2 * t.half_power))?;
        let term = radicand_inv.pow(e).scale(&t.coeff).shift_up(t.k).truncate(order);
        acc = &acc + &term;
    }
    Ok(acc)
}

fn lucas(n: i64) -> Result<Poly> {
    family_poly(FamilyTag::L, n, &Rational::zero())
}

fn fibonacci(n: i64) -> Result<Poly> {
    family_poly(FamilyTag::F, n, &Rational::zero())
}

/// Row `n` of a basis as `sum_k entry(n, k) x^k`, through `x^order`.
///
/// `A`-side rows, with `R = x^2 - beta`:
/// `(1/2) r^n L_(-n)(phi/r) + x r^(n-1) F_(-n)(phi/r)`.
///
/// `B`-side rows, with `Q = 1 - beta x^2`, `s = sqrt(Q)`:
/// `x^n / (2 s^(n+1)) L_(n+1)(phi x/s) + x^n / s^(n+2) F_(n+1)(phi x/s)`.
///
/// The classic bases drop the `1/2` (they double the columns carrying the
/// Lucas part). `B`-side rows are infinite when `beta != 0`.
pub fn row_formula(kind: &BasisKind, n: usize, order: usize) -> Result<Series> {
    let family = kind.family();
    let (phi, beta) = family.params();
    let lucas_weight = if family.is_classic() { Rational::one() } else { half() };
    let n_i = n as i64;
    match kind {
        BasisKind::A(_) => {
            let radicand = Poly::new(vec![-beta, Rational::zero(), Rational::one()]);
            let l = radical_collapse(&lucas(-n_i)?, &phi, n_i)?;
            let f = radical_collapse(&fibonacci(-n_i)?, &phi, n_i - 1)?;
            let row = &collapse_poly(&l, &radicand)?.scale(&lucas_weight) + &collapse_poly(&f, &radicand)?.shift_up(1);
            Ok(row.to_series(order))
        }
        BasisKind::B(_) => {
            let q_inv = Series::new(vec![Rational::one(), Rational::zero(), -beta], order).inv()?;
            let l = radical_collapse(&lucas(n_i + 1)?, &phi, -(n_i + 1))?;
            let f = radical_collapse(&fibonacci(n_i + 1)?, &phi, -(n_i + 2))?;
            let body = &collapse_series(&l, &q_inv)?.scale(&lucas_weight) + &collapse_series(&f, &q_inv)?;
            Ok(body.shift_up(n).truncate(order))
        }
    }
}

/// Compares [`row_formula`] with the directly built rows `0..=n_max`.
pub fn theorem3_check(kind: &BasisKind, n_max: usize) -> Result<bool> {
    // Row n of a B-side basis reaches column 2n + 1.
    let n_cols = 2 * n_max + 2;
    let basis = build_basis(kind, n_cols, n_cols - 1);
    for n in 0..=n_max {
        if row_formula(kind, n, n_cols - 1)? != basis.row(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// With `R = x^2 - phi^2`, `r = sqrt(R)` and `Q = 1 - phi^2 x^2`, `s = sqrt(Q)`:
///
/// `(phi + x)^n = (1/2) r^n L_n(2phi/r) + x r^(n-1) F_n(2phi/r)` exactly, and
/// `1/(1 - phi x)^(n+1) = L_(n+1)(2phi x/s) / (2 s^(n+1)) + F_(n+1)(2phi x/s) / s^(n+2)`
/// through `x^order`.
pub fn example3_check(phi: &Rational, n: usize, order: usize) -> Result<bool> {
    let n_i = n as i64;
    let scale = rat(2) * phi;
    let phi_sq = phi * phi;

    let radicand = Poly::new(vec![-phi_sq.clone(), Rational::zero(), Rational::one()]);
    let l = radical_collapse(&lucas(n_i)?, &scale, n_i)?;
    let f = radical_collapse(&fibonacci(n_i)?, &scale, n_i - 1)?;
    let rhs = &collapse_poly(&l, &radicand)?.scale(&half()) + &collapse_poly(&f, &radicand)?.shift_up(1);
    let lhs = Poly::new(vec![phi.clone(), Rational::one()]).pow(n);
    if lhs != rhs {
        return Ok(false);
    }

    let q_inv = Series::new(vec![Rational::one(), Rational::zero(), -phi_sq], order).inv()?;
    let l = radical_collapse(&lucas(n_i + 1)?, &scale, -(n_i + 1))?;
    let f = radical_collapse(&fibonacci(n_i + 1)?, &scale, -(n_i + 2))?;
    let rhs = &collapse_series(&l, &q_inv)?.scale(&half()) + &collapse_series(&f, &q_inv)?;
    let lhs = Series::new(vec![Rational::one(), -phi.clone()], order).inv()?.pow(n + 1);
    Ok(lhs == rhs)
}
