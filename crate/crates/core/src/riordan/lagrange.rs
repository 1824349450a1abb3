//! The companion series `b` of `a` and the two row identities that follow
//! from Lagrange inversion.

use num_traits::One;
use serde::Serialize;

use super::RiordanPair;
use crate::error::{Error, Result};
use crate::fps::{format_rational, rat, Rational, Series};

/// `b` with `b(x a(x)) = a(x)`, computed as `x / reversion(x a(x))`.
pub fn companion_b(a: &Series) -> Result<Series> {
    if !a.coeff(0).is_one() {
        return Err(Error::BadConstantTerm(format_rational(a.coeff(0))));
    }
    let h_bar = a.shift_up(1).reversion()?;
    // h_bar = x (1 + ...); drop the factor x before inverting.
    let quotient = Series::new(h_bar.coeffs()[1..].to_vec(), h_bar.order() - 1);
    quotient.inv()
}

/// Outcome of checking both row identities and the coefficient ratio.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LagrangeReport {
    /// Rows of `(1 + x a'/a, x a)` against `b^n`.
    pub identity1: bool,
    /// Rows of `(a, x a)` against `(1 - x b'/b) b^(n+1)`.
    pub identity2: bool,
    /// `[x^n] a^m = m/(m+n) [x^n] b^(m+n)`.
    pub lagrange_ratio: bool,
    /// One line per failing entry.
    pub failures: Vec<String>,
}

impl LagrangeReport {
    pub fn holds(&self) -> bool {
        self.identity1 && self.identity2 && self.lagrange_ratio
    }
}

/// Checks both row identities through `n_rows` rows and the ratio for
/// `1 <= m, n <= n_rows`. Needs `order(a) >= n_rows`.
pub fn verify_theorem1(a: &Series, n_rows: usize) -> Result<LagrangeReport> {
    if !a.coeff(0).is_one() {
        return Err(Error::BadConstantTerm(format_rational(a.coeff(0))));
    }
    if a.order() < n_rows {
        return Err(Error::InsufficientOrder { needed: n_rows, available: a.order() });
    }
    let a = a.truncate(n_rows);
    let b = companion_b(&a)?;
    let xa = a.shift_up(1).truncate(n_rows);

    let b_pows = powers(&b, 2 * n_rows);
    let mut report = LagrangeReport { identity1: true, identity2: true, lagrange_ratio: true, failures: Vec::new() };

    let lhs1 = RiordanPair::new(a.log_deriv_factor()?, xa.clone())?.to_matrix(n_rows)?;
    for (n, b_n) in b_pows.iter().enumerate().take(n_rows) {
        for k in 0..=n {
            let rhs = b_n.coeff(n - k);
            if lhs1.get(n, k) != rhs {
                report.identity1 = false;
                report.failures.push(format!(
                    "identity (1) row {n} col {k}: {} != {}",
                    format_rational(lhs1.get(n, k)),
                    format_rational(rhs)
                ));
            }
        }
    }

    let lhs2 = RiordanPair::new(a.clone(), xa)?.to_matrix(n_rows)?;
    let d = b.x_deriv().div(&b)?.scale(&-Rational::one()).add_constant(&Rational::one());
    for n in 0..n_rows {
        let rhs_series = d.mul(&b_pows[n + 1]);
        for k in 0..=n {
            let rhs = rhs_series.coeff(n - k);
            if lhs2.get(n, k) != rhs {
                report.identity2 = false;
                report.failures.push(format!(
                    "identity (2) row {n} col {k}: {} != {}",
                    format_rational(lhs2.get(n, k)),
                    format_rational(rhs)
                ));
            }
        }
    }

    let a_pows = powers(&a, n_rows);
    for m in 1..=n_rows {
        for n in 1..=n_rows {
            let lhs = a_pows[m].coeff(n) * rat((m + n) as i64);
            let rhs = b_pows[m + n].coeff(n) * rat(m as i64);
            if lhs != rhs {
                report.lagrange_ratio = false;
                report.failures.push(format!("ratio m={m} n={n}"));
            }
        }
    }
    Ok(report)
}

/// `[s^0, s^1, ..., s^max]`
fn powers(s: &Series, max: usize) -> Vec<Series> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = Series::one(s.order());
    for _ in 0..=max {
        let next = acc.mul(s);
        out.push(acc);
        acc = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::ratio;

    fn s(c: &[i64], n: usize) -> Series {
        Series::from_ints(c, n)
    }

    #[test]
    fn companion_examples() {
        let n = 12;
        let quarter = ratio(1, 4);
        let root = Series::new(vec![rat(1), rat(0), quarter], n).sqrt().unwrap();
        let a = &Series::new(vec![rat(0), ratio(1, 2)], n) + &root;
        assert_eq!(companion_b(&a).unwrap(), s(&[1, 1], n).sqrt().unwrap());

        assert_eq!(companion_b(&Series::geometric(n)).unwrap(), s(&[1, 1], n));

        let a = s(&[1, -1, 1], n).inv().unwrap();
        let root = s(&[1, 2, -3], n).sqrt().unwrap();
        let expected = root.add_constant(&rat(1)).linear(&s(&[0, 1], n), &ratio(1, 2), &ratio(1, 2));
        assert_eq!(companion_b(&a).unwrap(), expected);

        assert!(matches!(companion_b(&s(&[2, 1], n)), Err(Error::BadConstantTerm(_))));
    }

    #[test]
    fn theorem1_examples() {
        assert!(verify_theorem1(&Series::geometric(10), 10).unwrap().holds());
        assert!(verify_theorem1(&Series::one(8), 8).unwrap().holds());
        let a = s(&[1, -1, 1], 8).inv().unwrap();
        assert!(verify_theorem1(&a, 8).unwrap().holds());
        assert!(matches!(verify_theorem1(&Series::geometric(4), 8), Err(Error::InsufficientOrder { .. })));
    }

    #[test]
    fn pascal_rows_are_binomial_powers() {
        // identity (1) for a = 1/(1 - x): Pascal row n is (1 + x)^n
        let a = Series::geometric(8);
        let pair = RiordanPair::new(a.log_deriv_factor().unwrap(), a.shift_up(1).truncate(8)).unwrap();
        for n in 0..8 {
            let row = pair.row_gf(n).unwrap();
            let expected = crate::fps::Poly::from_ints(&[1, 1]).pow(n).reverse(n).unwrap();
            assert_eq!(row, expected);
        }
    }
}
