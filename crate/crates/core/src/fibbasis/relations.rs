//! Algebraic relations between the generalized bases and Pascal powers, and
//! the additive action of `beta`.

use num_traits::{One, Zero};

use super::{build_basis, BasisKind, Family};
use crate::error::Result;
use crate::fps::{rat, sign_pow, Poly, Rational};
use crate::matrix::{Matrix, PolyColumns};
use crate::riordan::{pascal_power, pseudo_eigen_check_matrix, Side};
use crate::transforms::{Relation, RelationReport};

fn a_block(phi: &Rational, beta: &Rational, n: usize) -> Result<Matrix> {
    let kind = BasisKind::A(Family::general(phi.clone(), beta.clone()));
    build_basis(&kind, n, n.saturating_sub(1)).to_matrix(n)
}

fn b_columns(phi: &Rational, beta: &Rational, n: usize) -> PolyColumns {
    let kind = BasisKind::B(Family::general(phi.clone(), beta.clone()));
    build_basis(&kind, n, 0).to_poly_columns().expect("B side")
}

/// `A_(phi,b1) A_(0,b2) = A_(phi,b1+b2)` on the leading triangular block and
/// `B_(phi,b1) B_(0,b2) = B_(phi,b1+b2)` column by column, for `n_cols`
/// columns; the `beta`-action then composes additively, which is checked
/// as `A_(0,b1) A_(0,b2) = A_(0,b1+b2)` as well.
pub fn theorem4_check(phi: &Rational, beta1: &Rational, beta2: &Rational, n_cols: usize) -> Result<bool> {
    let zero = Rational::zero();
    let sum = beta1 + beta2;
    let a_lhs = a_block(phi, beta1, n_cols)?.mul(&a_block(&zero, beta2, n_cols)?);
    if a_lhs != a_block(phi, &sum, n_cols)? {
        return Ok(false);
    }
    let action = a_block(&zero, beta1, n_cols)?.mul(&a_block(&zero, beta2, n_cols)?);
    if action != a_block(&zero, &sum, n_cols)? {
        return Ok(false);
    }
    let b_lhs = b_columns(phi, beta1, n_cols).mul(&b_columns(&zero, beta2, n_cols))?;
    Ok(b_lhs == b_columns(phi, &sum, n_cols))
}

/// `(P^(-phi))^T c(x) = c(x - phi)` and `M c M` on column `k` is
/// `(-1)^k c(-x)`, so the relation is checked on polynomial columns.
fn transpose_pseudo_eigen(columns: &[Poly], phi: &Rational) -> bool {
    columns.iter().enumerate().all(|(k, c)| c.shift(&-phi.clone()) == c.reflect().scale(&sign_pow(k as i64)))
}

/// Entrywise relations on the leading `n x n` blocks:
///
/// `P^phi = A_(-2phi,phi^2)`, `(P^phi)^T = B_(2phi,phi^2)`,
/// `(A_(0,beta))^T = B_(0,-beta)`, `A_(phi,beta)^(-1) = B_(phi,beta)^T`,
/// `P^phi A_(phi,beta) = M A_(phi,beta) M`,
/// `(P^(-phi))^T B_(phi,beta) = M B_(phi,beta) M`, `A_(0,0) = I`, and for the
/// classic bases `P A = M A M`, `(P^(-1))^T B = M B M`, `2 A^(-1) = B^T`.
pub fn algebraic_relations_check(phi: &Rational, beta: &Rational, n: usize) -> Result<RelationReport> {
    let zero = Rational::zero();
    let phi_sq = phi * phi;
    let pascal = pascal_power(phi, n.saturating_sub(1)).to_matrix(n)?;
    let a = a_block(phi, beta, n)?;
    let b = b_columns(phi, beta, n);
    let classic_a = build_basis(&BasisKind::A(Family::Classic), n, n.saturating_sub(1)).to_matrix(n)?;
    let classic_b = build_basis(&BasisKind::B(Family::Classic), n, 0);

    let mut relations = Vec::new();
    let mut push = |name, holds| relations.push(Relation { name, holds });
    push("P^phi = A_(-2phi,phi^2)", pascal == a_block(&(rat(-2) * phi), &phi_sq, n)?);
    push("(P^phi)^T = B_(2phi,phi^2)", pascal.transpose() == b_columns(&(rat(2) * phi), &phi_sq, n).to_matrix(n));
    push(
        "(A_(0,beta))^T = B_(0,-beta)",
        a_block(&zero, beta, n)?.transpose() == b_columns(&zero, &-beta.clone(), n).to_matrix(n),
    );
    push("A_(phi,beta)^-1 = B_(phi,beta)^T", a.lower_inverse()? == b.to_matrix(n).transpose());
    push("P^phi A_(phi,beta) = M A M", pseudo_eigen_check_matrix(&a, phi, Side::Left)?);
    push("(P^-phi)^T B_(phi,beta) = M B M", transpose_pseudo_eigen(b.columns(), phi));
    push("A_(0,0) = I", a_block(&zero, &zero, n)? == Matrix::identity(n));
    push("P A = M A M", pseudo_eigen_check_matrix(&classic_a, &Rational::one(), Side::Left)?);
    push("(P^-1)^T B = M B M", transpose_pseudo_eigen(classic_b.poly_columns().expect("B side"), &Rational::one()));
    push("2 A^-1 = B^T", classic_a.lower_inverse()?.scale(&rat(2)) == classic_b.to_matrix(n)?.transpose());
    Ok(RelationReport { relations })
}
