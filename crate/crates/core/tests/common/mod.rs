//! Strategies shared by the property tests.

#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use riordan_core::fps::{ratio, Rational, Series};
use riordan_core::riordan::RiordanPair;

/// Rationals with numerator and denominator bounded by 20.
pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(rational(), order + 1).prop_map(move |c| Series::new(c, order))
}

/// Series with constant term 1.
pub fn unit_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(rational(), order).prop_map(move |tail| {
        let mut c = vec![Rational::one()];
        c.extend(tail);
        Series::new(c, order)
    })
}

/// Series with zero constant term and nonzero linear term.
pub fn compositional(order: usize) -> impl Strategy<Value = Series> {
    (nonzero_rational(), prop::collection::vec(rational(), order - 1)).prop_map(move |(h1, tail)| {
        let mut c = vec![Rational::zero(), h1];
        c.extend(tail);
        Series::new(c, order)
    })
}

/// Proper Riordan pairs `(f, g)` with `f0 != 0`, `g0 = 0`, `g1 != 0`.
pub fn proper_pair(order: usize) -> impl Strategy<Value = RiordanPair> {
    (nonzero_rational(), series(order), compositional(order)).prop_map(|(f0, f, g)| {
        let mut c = f.coeffs().to_vec();
        c[0] = f0;
        RiordanPair::new(Series::new(c, f.order()), g).expect("g0 = 0")
    })
}

pub fn poly(max_len: usize) -> impl Strategy<Value = riordan_core::fps::Poly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(riordan_core::fps::Poly::new)
}
