//! The bases acting on series: `A a`, `B a`, the kernel of `B`, its right
//! inverses, coordinates, and the sequence images of simple series.

use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{a_generators, b_generators, half, Family};
use crate::error::{Error, Result};
use crate::fps::{rat, to_f64, Poly, Rational, Series};
use crate::polyfam::{family_poly, FamilyTag};
use crate::riordan::RiordanPair;

/// `A a = even_f a1(step) + x (1/D) a2(step)` with `a = a1(x^2) + x a2(x^2)`,
/// exact through `order(a)`.
pub fn apply_a(family: &Family, a: &Series) -> Series {
    let order = a.order();
    let (even_f, den_inv, step) = a_generators(family, order);
    let (a1, a2) = a.even_odd_split();
    let even = even_f.mul(&a1.compose(&step).expect("step has zero constant term"));
    let odd = den_inv.mul(&a2.compose(&step).expect("step has zero constant term")).shift_up(1);
    (&even + &odd.truncate(order)).truncate(order)
}

/// `B a = a1(step) + odd_head a2(step)`; for the classic basis
/// `B a = a1(x + x^2) + (1 + 2x) a2(x + x^2)`.
///
/// Only defined for `beta = 0`: otherwise `step` has a nonzero constant term
/// and the column sums do not terminate. The result is exact through
/// `(order(a) - 1) / 2`, the order to which `a2` is known.
pub fn apply_b(family: &Family, a: &Series) -> Result<Series> {
    let (_, beta) = family.params();
    if !beta.is_zero() {
        return Err(Error::InvalidArgument("B applies to series only for beta = 0".into()));
    }
    if a.order() == 0 {
        return Err(Error::InsufficientOrder { needed: 1, available: 0 });
    }
    let order = (a.order() - 1) / 2;
    let (_, odd_head, step) = b_generators(family);
    let step = step.to_series(order);
    let (a1, a2) = a.even_odd_split();
    let even = a1.compose(&step)?;
    let odd = odd_head.to_series(order).mul(&a2.compose(&step)?);
    Ok((&even + &odd).truncate(order))
}

/// `sqrt(1 + 4x^2)`
fn root(order: usize) -> Series {
    Series::new(vec![Rational::one(), Rational::zero(), rat(4)], order).sqrt().expect("constant term is 1")
}

/// Checks that `B` annihilates `c(x^2) (sqrt(1 + 4x^2) - x)` through
/// `x^order`; needs `order(c) >= order`.
pub fn kernel_check(c: &Series, order: usize) -> Result<bool> {
    if c.order() < order {
        return Err(Error::InsufficientOrder { needed: order, available: c.order() });
    }
    let n = 2 * order + 1;
    let a = c.square_arg().truncate(n).mul(&(&root(n) - &Series::x(n)));
    Ok(apply_b(&Family::Classic, &a)?.truncate(order).is_zero())
}

/// The two stretched Riordan matrices with `B R = I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RightInverse {
    /// `(1, (sqrt(1 + 4x^2) - 1)/2)`
    First,
    /// `(x/sqrt(1 + 4x^2), (sqrt(1 + 4x^2) - 1)/2)`
    Second,
}

impl FromStr for RightInverse {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(RightInverse::First),
            "2" => Ok(RightInverse::Second),
            _ => Err(Error::Parse(format!("right inverse must be 1 or 2, got {s:?}"))),
        }
    }
}

pub fn right_inverse_b(which: RightInverse, order: usize) -> RiordanPair {
    let r = root(order);
    let g = r.add_constant(&-Rational::one()).scale(&half());
    let f = match which {
        RightInverse::First => Series::one(order),
        RightInverse::Second => r.inv().expect("constant term is 1").shift_up(1).truncate(order),
    };
    RiordanPair::new(f, g).expect("g0 = 0")
}

/// `B` maps column `n` of both right inverses to `x^n` for `n <= n_max`, and
/// the two columns differ by an element of the kernel.
pub fn right_inverse_check(n_max: usize, order: usize) -> Result<bool> {
    let inner = 2 * order + 1;
    let first = right_inverse_b(RightInverse::First, inner);
    let second = right_inverse_b(RightInverse::Second, inner);
    for n in 0..=n_max {
        let target = Series::monomial(Rational::one(), n, order);
        let c1 = first.column(n);
        let c2 = second.column(n);
        if apply_b(&Family::Classic, &c1)? != target || apply_b(&Family::Classic, &c2)? != target {
            return Ok(false);
        }
        if !apply_b(&Family::Classic, &(&c1 - &c2))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A series `b` with `B b = a` through `order(a)`, found by applying the
/// chosen right inverse; `b` is known through `2 order(a) + 1`.
pub fn coordinates_in_b(a: &Series, which: RightInverse) -> Result<Series> {
    let order = 2 * a.order() + 1;
    right_inverse_b(which, order).apply(a)
}

/// `(1 + x)^n = B u^n` with `u = (1 + sqrt(1 + 4x^2))/2`, where `u^n` is
/// also what the first right inverse produces; the polynomial coordinates
/// `(x^n L_n(1/x) + x^n F_n(1/x))/2` differ from `u^n` by the kernel element
/// `x^(n-1) F_n(1/x) (sqrt(1 + 4x^2) - x)/2`.
pub fn example2_check(n: usize, order: usize) -> Result<bool> {
    let inner = 2 * order + 1;
    let target = Poly::from_ints(&[1, 1]).pow(n).to_series(order);
    let u_n = root(inner).add_constant(&Rational::one()).scale(&half()).pow(n);
    if apply_b(&Family::Classic, &u_n)? != target {
        return Ok(false);
    }
    if coordinates_in_b(&target, RightInverse::First)? != u_n {
        return Ok(false);
    }

    let zero = Rational::zero();
    let lucas = family_poly(FamilyTag::L, n as i64, &zero)?;
    let fib = family_poly(FamilyTag::F, n as i64, &zero)?;
    // x^(n-1) F_n(1/x); F_0 = 0 contributes nothing.
    let fib_rev = match n {
        0 => Poly::zero(),
        _ => fib.reverse(n - 1)?,
    };
    let coords = (&lucas.reverse(n)? + &fib_rev.shift_up(1)).scale(&half());
    if apply_b(&Family::Classic, &coords.to_series(inner))? != target {
        return Ok(false);
    }
    let kernel_part = fib_rev.scale(&half()).to_series(inner).mul(&(&root(inner) - &Series::x(inner)));
    if &u_n - &coords.to_series(inner) != kernel_part {
        return Ok(false);
    }
    // x^(n-1) F_n(1/x) is even, so the difference has the kernel shape c(x^2)(...).
    let (c, odd) = fib_rev.scale(&half()).to_series(inner).even_odd_split();
    Ok(odd.is_zero() && kernel_check(&c.truncate(order), order)?)
}

/// The four identities with `alpha = (1 + sqrt 5)/2`, through `x^order`:
///
/// `A (1 + sqrt5 x)/(1 - x^2) = 2/(1 - x/alpha)`,
/// `B (sqrt5 + x)/(1 - x^2) = 2 alpha/(1 - alpha x)`,
/// `A (1 - sqrt5 x)/(1 - x^2) = 2/(1 + alpha x)`,
/// `B (-sqrt5 + x)/(1 - x^2) = -(2/alpha)/(1 + x/alpha)`.
///
/// Inputs are split as `u + sqrt5 v` with exact `u`, `v`, images are exact,
/// and only the final combination is done in floating point, each
/// coefficient within `tol * max(1, |expected|)`.
pub fn golden_ratio_check(order: usize, tol: f64) -> Result<bool> {
    let sqrt5 = 5f64.sqrt();
    let alpha = (1.0 + sqrt5) / 2.0;
    if (alpha * alpha - alpha - 1.0).abs() > tol {
        return Ok(false);
    }
    let inner = 2 * order + 1;
    let even = |n: usize| Series::from_ints(&[1, 0, -1], n).inv().expect("constant term is 1");
    let odd = |n: usize| even(n).shift_up(1).truncate(n);

    let a_u = apply_a(&Family::Classic, &even(order));
    let a_v = apply_a(&Family::Classic, &odd(order));
    let b_u = apply_b(&Family::Classic, &even(inner))?;
    let b_v = apply_b(&Family::Classic, &odd(inner))?;

    let close = |got: f64, want: f64| (got - want).abs() <= tol * want.abs().max(1.0);
    for n in 0..=order {
        let (au, av) = (to_f64(a_u.coeff(n)), to_f64(a_v.coeff(n)));
        let (bu, bv) = (to_f64(b_u.coeff(n)), to_f64(b_v.coeff(n)));
        let k = n as i32;
        let checks = [
            (au + sqrt5 * av, 2.0 * alpha.powi(-k)),
            (sqrt5 * bu + bv, 2.0 * alpha.powi(k + 1)),
            (au - sqrt5 * av, 2.0 * (-alpha).powi(k)),
            (-sqrt5 * bu + bv, 2.0 * (-1.0 / alpha).powi(k + 1)),
        ];
        if !checks.iter().all(|&(got, want)| close(got, want)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The image of a simple series under one of the bases, next to the
/// rational function it should expand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub name: &'static str,
    pub image: Series,
    pub closed_form: Series,
}

impl Signature {
    pub fn holds(&self) -> bool {
        self.image == self.closed_form
    }
}

/// `scale * num / den` through `x^order`.
fn ratfun(scale: Rational, num: &[i64], den: &[i64], order: usize) -> Series {
    Series::from_ints(num, order)
        .div(&Series::from_ints(den, order))
        .expect("denominators have constant term 1")
        .scale(&scale)
}

fn pair(f: Series, g: Series) -> RiordanPair {
    RiordanPair::new(f, g).expect("g0 = 0")
}

/// Images of `1/(1 - x)` and `-+1/(1 + x)` under `A`, `B`, the reduced
/// bases, the Fibonacci and Lucas matrices and the even/odd parts of `A`,
/// each through `x^order`.
pub fn signatures(order: usize) -> Result<Vec<Signature>> {
    let inner = 2 * order + 1;
    let down = |n: usize| Series::geometric(n);
    let up = |n: usize| Series::from_ints(&[1, 1], n).inv().expect("constant term is 1");
    let minus_up = |n: usize| up(n).scale(&-Rational::one());
    let two = rat(2);
    let h = half();
    let one = Rational::one();
    let (c, r) = (Family::Classic, Family::Reduced);

    let x_one_plus_x = Series::from_ints(&[0, 1, 1], order);
    let fibonacci = pair(Series::one(order), x_one_plus_x.clone());
    let lucas = pair(Series::from_ints(&[1, 2], order), x_one_plus_x);
    let inv_1px = up(order);
    let step = inv_1px.shift_up(2).truncate(order);
    let a_even = pair(Series::from_ints(&[2, 1], order).mul(&inv_1px), step.clone());
    let a_odd = pair(inv_1px.shift_up(1).truncate(order), step);

    Ok(vec![
        Signature {
            name: "A 1/(1-x)",
            image: apply_a(&c, &down(order)),
            closed_form: ratfun(two.clone(), &[1, 1], &[1, 1, -1], order),
        },
        Signature {
            name: "B 1/(1-x)",
            image: apply_b(&c, &down(inner))?,
            closed_form: ratfun(two.clone(), &[1, 1], &[1, -1, -1], order),
        },
        Signature {
            name: "A 1/(1+x)",
            image: apply_a(&c, &up(order)),
            closed_form: ratfun(two.clone(), &[1], &[1, 1, -1], order),
        },
        Signature {
            name: "B -1/(1+x)",
            image: apply_b(&c, &minus_up(inner))?,
            closed_form: ratfun(two, &[0, 1], &[1, -1, -1], order),
        },
        Signature {
            name: "A~ 1/(1-x)",
            image: apply_a(&r, &down(order)),
            closed_form: ratfun(h.clone(), &[2, 3], &[1, 1, -1], order),
        },
        Signature {
            name: "B~ 1/(1-x)",
            image: apply_b(&r, &down(inner))?,
            closed_form: ratfun(h.clone(), &[3, 2], &[1, -1, -1], order),
        },
        Signature {
            name: "A~ 1/(1+x)",
            image: apply_a(&r, &up(order)),
            closed_form: ratfun(h.clone(), &[2, -1], &[1, 1, -1], order),
        },
        Signature {
            name: "B~ -1/(1+x)",
            image: apply_b(&r, &minus_up(inner))?,
            closed_form: ratfun(h, &[-1, 2], &[1, -1, -1], order),
        },
        Signature {
            name: "(1, x(1+x)) 1/(1-x)",
            image: fibonacci.apply(&down(order))?,
            closed_form: ratfun(one.clone(), &[1], &[1, -1, -1], order),
        },
        Signature {
            name: "(1+2x, x(1+x)) 1/(1-x)",
            image: lucas.apply(&down(order))?,
            closed_form: ratfun(one.clone(), &[1, 2], &[1, -1, -1], order),
        },
        Signature {
            name: "((2+x)/(1+x), x^2/(1+x)) 1/(1-x)",
            image: a_even.apply(&down(order))?,
            closed_form: ratfun(one.clone(), &[2, 1], &[1, 1, -1], order),
        },
        Signature {
            name: "(x/(1+x), x^2/(1+x)) 1/(1-x)",
            image: a_odd.apply(&down(order))?,
            closed_form: ratfun(one, &[0, 1], &[1, 1, -1], order),
        },
    ])
}

pub fn signatures_check(order: usize) -> Result<bool> {
    Ok(signatures(order)?.iter().all(Signature::holds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibbasis::{build_basis, BasisKind};
    use crate::fps::ratio;

    #[test]
    fn apply_b_examples() {
        let b = apply_b(&Family::Classic, &Series::geometric(21)).unwrap();
        assert_eq!(b, ratfun(rat(2), &[1, 1], &[1, -1, -1], 10));
        assert_eq!(apply_b(&Family::Classic, &Series::one(9)).unwrap(), Series::one(4));
        assert!(apply_b(&Family::Classic, &Series::one(0)).is_err());
        assert!(apply_b(&Family::general(rat(1), rat(1)), &Series::one(5)).is_err());
    }

    #[test]
    fn apply_matches_matrix_product() {
        let a = Series::new((0..12).map(|k| ratio(k * k - 3, k + 1)).collect(), 11);
        for family in [Family::Classic, Family::Reduced, Family::general(ratio(-3, 4), rat(2))] {
            let m = build_basis(&BasisKind::A(family.clone()), 12, 11).to_matrix(12).unwrap();
            let direct: Vec<Rational> = (0..12).map(|i| (0..12).map(|j| m.get(i, j) * a.coeff(j)).sum()).collect();
            assert_eq!(apply_a(&family, &a), Series::new(direct, 11));
        }
        for family in [Family::Classic, Family::general(ratio(5, 3), rat(0))] {
            let b = build_basis(&BasisKind::B(family.clone()), 12, 0).to_matrix(12).unwrap();
            let image = apply_b(&family, &a).unwrap();
            for i in 0..=image.order() {
                let direct: Rational = (0..12).map(|j| b.get(i, j) * a.coeff(j)).sum();
                assert_eq!(image.coeff(i), &direct);
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_check(&Series::one(12), 12).unwrap());
        assert!(kernel_check(&Series::zero(5), 5).unwrap());
        assert!(kernel_check(&Series::geometric(24), 24).unwrap());
        // x^2 alone is not annihilated
        let a = Series::monomial(rat(1), 2, 9);
        assert!(!apply_b(&Family::Classic, &a).unwrap().is_zero());
    }

    #[test]
    fn right_inverse_columns() {
        let first = right_inverse_b(RightInverse::First, 8);
        assert_eq!(first.column(1), Series::from_ints(&[0, 0, 1, 0, -1, 0, 2, 0, -5], 8));
        let second = right_inverse_b(RightInverse::Second, 7);
        assert_eq!(second.column(0), Series::from_ints(&[0, 1, 0, -2, 0, 6, 0, -20], 7));
        assert!(right_inverse_check(16, 18).unwrap());
    }

    #[test]
    fn coordinates() {
        let one = Series::one(6);
        let b = coordinates_in_b(&one, RightInverse::First).unwrap();
        assert_eq!(b, Series::one(13));
        for n in 0..6 {
            assert!(example2_check(n, 12).unwrap(), "n = {n}");
        }
        let a = Series::new((0..10).map(|k| ratio(1, k + 2)).collect(), 9);
        for which in [RightInverse::First, RightInverse::Second] {
            let b = coordinates_in_b(&a, which).unwrap();
            assert_eq!(apply_b(&Family::Classic, &b).unwrap(), a);
        }
    }

    #[test]
    fn golden_ratio() {
        assert!(golden_ratio_check(12, 1e-9).unwrap());
    }

    #[test]
    fn signature_list() {
        let sigs = signatures(10).unwrap();
        assert_eq!(sigs.len(), 12);
        for s in &sigs {
            assert!(s.holds(), "{}", s.name);
        }
    }
}
