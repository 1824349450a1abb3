use num_traits::One;

use super::RiordanPair;
use crate::error::Result;
use crate::fps::{Poly, Rational, Series};
use crate::matrix::Matrix;

/// `P^phi = (1/(1 - phi x), x/(1 - phi x))`
pub fn pascal_power(phi: &Rational, order: usize) -> RiordanPair {
    let den = Series::new(vec![Rational::one(), -phi.clone()], order);
    let f = den.inv().expect("constant term is 1");
    let g = Series::x(order).mul(&f);
    RiordanPair::new(f, g).expect("g0 = 0")
}

/// `(1/(1 - phi x)) a(x/(1 - phi x))`
pub fn euler_transform(phi: &Rational, a: &Series) -> Series {
    pascal_power(phi, a.order()).apply(a).expect("x/(1 - phi x) has zero constant term")
}

/// `c(x + phi)`
pub fn shift_polynomial(c: &Poly, phi: &Rational) -> Poly {
    c.shift(phi)
}

/// Which side the Pascal power multiplies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `P^phi A = M A M`
    Left,
    /// `A P^phi = M A M`
    Right,
}

/// Checks the pseudo-eigen relation for a pair through `n_rows` rows.
pub fn pseudo_eigen_check(p: &RiordanPair, phi: &Rational, n_rows: usize, side: Side) -> Result<bool> {
    let a = p.to_matrix(n_rows)?;
    pseudo_eigen_check_matrix(&a, phi, side)
}

/// Same relation for an explicitly built square lower-triangular block.
pub fn pseudo_eigen_check_matrix(a: &Matrix, phi: &Rational, side: Side) -> Result<bool> {
    let n = a.rows();
    let pascal = pascal_power(phi, n.saturating_sub(1)).to_matrix(n)?;
    let lhs = match side {
        Side::Left => pascal.mul(a),
        Side::Right => a.mul(&pascal),
    };
    Ok(lhs == a.sign_conjugate())
}
