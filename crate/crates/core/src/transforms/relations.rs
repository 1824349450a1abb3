//! Pseudo-involution relations `P^psi R = M R M` (or `R P^psi = M R M`)
//! for the pairs attached to both transformation types, and the even/odd
//! column identification of the second type.

use num_traits::One;
use serde::Serialize;

use super::type1::TypeOneContext;
use super::type2::{type2_even_pair, type2_odd_pair, TypeTwoContext};
use crate::error::Result;
use crate::fps::{rat, Rational, Series};
use crate::matrix::Matrix;
use crate::riordan::{pseudo_eigen_check, RiordanPair, Side};

/// One named relation and whether it held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub relations: Vec<Relation>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.relations.iter().filter(|r| !r.holds).map(|r| r.name).collect()
    }
}

fn pair(f: Series, g: Series) -> RiordanPair {
    RiordanPair::new(f, g).expect("g0 = 0 by construction")
}

/// The eight relations through `n_rows` rows:
///
/// first type, `a = 1/(1 - phi x + beta x^2)`:
/// `(1 + x(log a)', x a) P^(-2phi)`, `(a, x a) P^(-2phi)`,
/// `P^(2phi) (1 - x(log b)', x/b)`, `P^(2phi) (1/b, x/b)`;
///
/// second type, `a = 1/sqrt(D)`:
/// `P^(-2phi) ((1 - phi x)/D, x a)`, `P^(-2phi) (a, x a)`,
/// `(1 - x(log b)', x/b) P^(2phi)`, `(1/b, x/b) P^(2phi)`.
pub fn pseudo_involution_check(phi: &Rational, beta: &Rational, n_rows: usize) -> Result<RelationReport> {
    let order = n_rows.saturating_sub(1);
    let minus = -(rat(2) * phi);
    let plus = rat(2) * phi;
    let mut relations = Vec::new();
    let mut push = |name, holds| relations.push(Relation { name, holds });

    let t1 = TypeOneContext::new(phi, beta, order)?;
    let a1 = t1.a();
    let xa1 = a1.shift_up(1).truncate(order);
    let xb1 = t1.b_inv.shift_up(1).truncate(order);
    push(
        "type1 (1+x(log a)', xa) P^(-2phi) = M . M",
        pseudo_eigen_check(&pair(t1.a_log_factor(), xa1.clone()), &minus, n_rows, Side::Right)?,
    );
    push("type1 (a, xa) P^(-2phi) = M . M", pseudo_eigen_check(&pair(a1, xa1), &minus, n_rows, Side::Right)?);
    push(
        "type1 P^(2phi) (1-x(log b)', x/b) = M . M",
        pseudo_eigen_check(&pair(t1.log_factor.clone(), xb1.clone()), &plus, n_rows, Side::Left)?,
    );
    push(
        "type1 P^(2phi) (1/b, x/b) = M . M",
        pseudo_eigen_check(&pair(t1.b_inv.clone(), xb1), &plus, n_rows, Side::Left)?,
    );

    let t2 = TypeTwoContext::new(phi, beta, order)?;
    let den = t2.denominator();
    let a2 = den.sqrt()?.inv()?;
    let xa2 = a2.shift_up(1).truncate(order);
    let xb2 = t2.b_inv.shift_up(1).truncate(order);
    let even_f = Series::new(vec![Rational::one(), -phi.clone()], order).div(&den)?;
    push(
        "type2 P^(-2phi) ((1-phi x)/D, x a) = M . M",
        pseudo_eigen_check(&pair(even_f, xa2.clone()), &minus, n_rows, Side::Left)?,
    );
    push("type2 P^(-2phi) (a, xa) = M . M", pseudo_eigen_check(&pair(a2, xa2), &minus, n_rows, Side::Left)?);
    push(
        "type2 (1-x(log b)', x/b) P^(2phi) = M . M",
        pseudo_eigen_check(&pair(t2.log_factor.clone(), xb2.clone()), &plus, n_rows, Side::Right)?,
    );
    push(
        "type2 (1/b, x/b) P^(2phi) = M . M",
        pseudo_eigen_check(&pair(t2.b_inv.clone(), xb2), &plus, n_rows, Side::Right)?,
    );
    Ok(RelationReport { relations })
}

/// Columns `0, 2, 4, ...` of `((1 - phi x)/D, x/sqrt(D))` are the columns of
/// `((1 - phi x)/D, x^2/D)`; columns `1, 3, 5, ...` of
/// `(1/sqrt(D), x/sqrt(D))` are the columns of `(x/D, x^2/D)`.
pub fn even_odd_columns_check(phi: &Rational, beta: &Rational, n_rows: usize) -> Result<bool> {
    let order = n_rows.saturating_sub(1);
    let den = Series::new(vec![Rational::one(), rat(-2) * phi, beta.clone()], order);
    let root_inv = den.sqrt()?.inv()?;
    let g = root_inv.shift_up(1).truncate(order);
    let even_f = Series::new(vec![Rational::one(), -phi.clone()], order).div(&den)?;
    let full_even = pair(even_f, g.clone()).to_matrix(n_rows)?;
    let full_odd = pair(root_inv, g).to_matrix(n_rows)?;

    let half = n_rows.div_ceil(2);
    let even = type2_even_pair(phi, beta, order).to_matrix_cols(n_rows, half)?;
    let odd = type2_odd_pair(phi, beta, order).to_matrix_cols(n_rows, n_rows / 2)?;
    let pick =
        |m: &Matrix, start: usize, count: usize| Matrix::from_fn(n_rows, count, |i, j| m.get(i, start + 2 * j).clone());
    Ok(pick(&full_even, 0, half) == even && pick(&full_odd, 1, n_rows / 2) == odd)
}
