//! Riordan pairs `(f, g)` and their lower-triangular matrices.
//!
//! Column `k` of the matrix of `(f, g)` has generating function `f g^k`.
//! The group law is `(f, g)(h, l) = (f h(g), l(g))`.

mod lagrange;
mod pascal;

pub use lagrange::{companion_b, verify_theorem1, LagrangeReport};
pub use pascal::{
    euler_transform, pascal_power, pseudo_eigen_check, pseudo_eigen_check_matrix, shift_polynomial, Side,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::{Poly, Rational, Series};
use crate::matrix::Matrix;

/// A Riordan pair with `g_0 = 0`.
///
/// Proper pairs (`f_0 != 0`, `g_1 != 0`) form a group. Stretched pairs with
/// `g_1 = 0` still realize as column-finite lower-triangular matrices and can
/// be applied and multiplied, but cannot be inverted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanPair {
    f: Series,
    g: Series,
    proper: bool,
}

impl RiordanPair {
    pub fn new(f: Series, g: Series) -> Result<Self> {
        if !g.coeff(0).is_zero() {
            return Err(Error::BadValuation("Riordan pair needs g0 = 0"));
        }
        let proper = !f.coeff(0).is_zero() && g.order() >= 1 && !g.coeff(1).is_zero();
        Ok(RiordanPair { f, g, proper })
    }

    pub fn identity(order: usize) -> Self {
        RiordanPair::new(Series::one(order), Series::x(order)).expect("x has zero constant term")
    }

    /// `M = (1, -x)`
    pub fn sign_involution(order: usize) -> Self {
        RiordanPair::new(Series::one(order), Series::x(order).scale(&-Rational::one()))
            .expect("-x has zero constant term")
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// Order through which both components are known.
    pub fn order(&self) -> usize {
        self.f.order().min(self.g.order())
    }

    /// `f g^k`
    pub fn column(&self, k: usize) -> Series {
        self.f.mul(&self.g.pow(k))
    }

    fn require_rows(&self, n_rows: usize) -> Result<()> {
        let needed = n_rows.saturating_sub(1);
        if self.order() < needed {
            return Err(Error::InsufficientOrder { needed, available: self.order() });
        }
        Ok(())
    }

    /// Leading `n_rows x n_rows` block.
    pub fn to_matrix(&self, n_rows: usize) -> Result<Matrix> {
        self.to_matrix_cols(n_rows, n_rows)
    }

    /// Leading `n_rows x n_cols` block; entry `(n, k) = [x^n] f g^k`.
    pub fn to_matrix_cols(&self, n_rows: usize, n_cols: usize) -> Result<Matrix> {
        self.require_rows(n_rows)?;
        let mut m = Matrix::zeros(n_rows, n_cols);
        if n_rows == 0 {
            return Ok(m);
        }
        let top = n_rows - 1;
        let g = self.g.truncate(top);
        let mut col = self.f.truncate(top);
        for k in 0..n_cols {
            for n in 0..n_rows {
                m.set(n, k, col.coeff(n).clone());
            }
            col = col.mul(&g);
        }
        Ok(m)
    }

    /// Row `n` of the matrix as the polynomial `sum_k entry(n, k) x^k`.
    pub fn row_gf(&self, n: usize) -> Result<Poly> {
        let m = self.to_matrix(n + 1)?;
        Ok(Poly::new(m.row(n).to_vec()))
    }

    /// `(f_p f_q(g_p), g_q(g_p))`
    pub fn mul(&self, other: &RiordanPair) -> Result<RiordanPair> {
        let f = self.f.mul(&other.f.compose(&self.g)?);
        let g = other.g.compose(&self.g)?;
        RiordanPair::new(f, g)
    }

    /// `(1 / f(gbar), gbar)` with `gbar` the compositional inverse of `g`.
    pub fn inverse(&self) -> Result<RiordanPair> {
        if !self.proper {
            return Err(Error::NotProper);
        }
        let gbar = self.g.reversion()?;
        let f = self.f.compose(&gbar)?.inv()?;
        RiordanPair::new(f, gbar)
    }

    /// `f(x) a(g(x))`
    pub fn apply(&self, a: &Series) -> Result<Series> {
        Ok(self.f.mul(&a.compose(&self.g)?))
    }

    pub fn truncate(&self, order: usize) -> RiordanPair {
        RiordanPair::new(self.f.truncate(order), self.g.truncate(order)).expect("still g0 = 0")
    }

    /// Checks whether `(p q)` equals identity through the pair order.
    pub fn is_identity(&self) -> bool {
        let n = self.order();
        self.f == Series::one(n) && self.g.truncate(n) == Series::x(n) && self.f.coeff(0).is_one()
    }
}
