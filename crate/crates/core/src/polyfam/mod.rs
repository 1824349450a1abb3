//! Chebyshev, Dickson, Fibonacci and Lucas polynomial families.
//!
//! Every family satisfies `p_n = x p_(n-1) - beta p_(n-2)`:
//!
//! | tag | beta  | seeds              |
//! |-----|-------|--------------------|
//! | `C` | 1     | `C_0 = 2, C_1 = x` |
//! | `S` | 1     | `S_0 = 1, S_1 = x` |
//! | `D` | given | `D_0 = 2, D_1 = x` |
//! | `E` | given | `E_0 = 1, E_1 = x` |
//! | `L` | -1    | `L_0 = 2, L_1 = x` |
//! | `F` | -1    | `F_0 = 0, F_1 = 1` |

mod numeric;

pub use numeric::{root_form_check, trig_product_check, DEFAULT_TOL};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fps::{rat, sign_pow, Poly, Rational, Series};
use crate::riordan::RiordanPair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    /// Modified Chebyshev of the first kind, `D(x, 1)`.
    C,
    /// Modified Chebyshev of the second kind, `E(x, 1)`.
    S,
    /// Dickson of the first kind.
    D,
    /// Dickson of the second kind.
    E,
    /// Lucas, `D(x, -1)`.
    L,
    /// Fibonacci, `F_n = E_(n-1)(x, -1)`.
    F,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] =
        [FamilyTag::C, FamilyTag::S, FamilyTag::D, FamilyTag::E, FamilyTag::L, FamilyTag::F];

    /// The recurrence parameter; `beta` is only consulted for `D` and `E`.
    pub fn effective_beta(self, beta: &Rational) -> Rational {
        match self {
            FamilyTag::C | FamilyTag::S => Rational::one(),
            FamilyTag::L | FamilyTag::F => -Rational::one(),
            FamilyTag::D | FamilyTag::E => beta.clone(),
        }
    }

    /// Whether the family is of the first kind (`C`, `D`, `L`).
    pub fn is_first_kind(self) -> bool {
        matches!(self, FamilyTag::C | FamilyTag::D | FamilyTag::L)
    }

    fn seeds(self) -> (Poly, Poly) {
        match self {
            FamilyTag::C | FamilyTag::D | FamilyTag::L => (Poly::constant(rat(2)), Poly::x()),
            FamilyTag::S | FamilyTag::E => (Poly::one(), Poly::x()),
            FamilyTag::F => (Poly::zero(), Poly::one()),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::C => "C",
            FamilyTag::S => "S",
            FamilyTag::D => "D",
            FamilyTag::E => "E",
            FamilyTag::L => "L",
            FamilyTag::F => "F",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" => Ok(FamilyTag::C),
            "S" | "s" => Ok(FamilyTag::S),
            "D" | "d" => Ok(FamilyTag::D),
            "E" | "e" => Ok(FamilyTag::E),
            "L" | "l" => Ok(FamilyTag::L),
            "F" | "f" => Ok(FamilyTag::F),
            _ => Err(Error::Parse(format!("unknown family {s:?} (expected C, S, D, E, L or F)"))),
        }
    }
}

/// `n`-th member of the family by the three-term recurrence.
///
/// Negative indices follow `L_(-n) = (-1)^n L_n`, `F_(-n) = (-1)^(n-1) F_n`
/// and `S_(-n) = -S_(n-2)` (so `S_(-1) = 0`); other families reject them.
pub fn family_poly(tag: FamilyTag, n: i64, beta: &Rational) -> Result<Poly> {
    if n < 0 {
        let m = -n;
        return match tag {
            FamilyTag::L => Ok(family_poly(tag, m, beta)?.scale(&sign_pow(m))),
            FamilyTag::F => Ok(family_poly(tag, m, beta)?.scale(&sign_pow(m - 1))),
            FamilyTag::S if m == 1 => Ok(Poly::zero()),
            FamilyTag::S => Ok(-&family_poly(tag, m - 2, beta)?),
            _ => Err(Error::UnsupportedIndex(n)),
        };
    }
    let beta = tag.effective_beta(beta);
    let (mut prev, mut cur) = tag.seeds();
    if n == 0 {
        return Ok(prev);
    }
    let x = Poly::x();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev.scale(&beta);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// All members `0..=n_max` in one pass.
pub fn family_table(tag: FamilyTag, n_max: usize, beta: &Rational) -> Vec<Poly> {
    let beta = tag.effective_beta(beta);
    let (p0, p1) = tag.seeds();
    let mut out = vec![p0, p1];
    let x = Poly::x();
    for n in 2..=n_max {
        let next = &(&x * &out[n - 1]) - &out[n - 2].scale(&beta);
        out.push(next);
    }
    out.truncate(n_max + 1);
    out
}

/// `((1 - beta x^2)/(1 + beta x^2), x/(1 + beta x^2))`, whose rows are `D_n` for `n > 0`.
pub fn dickson_first_pair(beta: &Rational, order: usize) -> RiordanPair {
    let den = Series::new(vec![Rational::one(), Rational::zero(), beta.clone()], order);
    let num = Series::new(vec![Rational::one(), Rational::zero(), -beta.clone()], order);
    let g = Series::x(order).div(&den).expect("unit constant term");
    RiordanPair::new(num.div(&den).expect("unit constant term"), g).expect("g0 = 0")
}

/// `(1/(1 + beta x^2), x/(1 + beta x^2))`, whose rows are `E_n`.
pub fn dickson_second_pair(beta: &Rational, order: usize) -> RiordanPair {
    let den = Series::new(vec![Rational::one(), Rational::zero(), beta.clone()], order);
    let f = den.inv().expect("unit constant term");
    let g = Series::x(order).mul(&f);
    RiordanPair::new(f, g).expect("g0 = 0")
}

/// Compares the recurrence with the row of the associated Riordan matrix.
///
/// Row 0 of the first-kind matrix is `1` while `D_0 = 2`, the usual
/// exception; for `n = 0` the check confirms exactly that.
pub fn family_row_check(tag: FamilyTag, n: usize, beta: &Rational) -> Result<bool> {
    let b = tag.effective_beta(beta);
    let p = family_poly(tag, n as i64, beta)?;
    if tag.is_first_kind() {
        let row = dickson_first_pair(&b, n).row_gf(n)?;
        if n == 0 {
            return Ok(row == Poly::one() && p == Poly::constant(rat(2)));
        }
        return Ok(row == p);
    }
    if tag == FamilyTag::F {
        if n == 0 {
            return Ok(p.is_zero());
        }
        return Ok(dickson_second_pair(&b, n - 1).row_gf(n - 1)? == p);
    }
    Ok(dickson_second_pair(&b, n).row_gf(n)? == p)
}

/// `J_n c = x^n c(1/x)`
pub fn reverse_j(c: &Poly, n: usize) -> Result<Poly> {
    c.reverse(n)
}

/// Which generating function `family_gf` produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfKind {
    /// `(2 - phi x)/(1 - phi x + beta x^2) = sum D_n(phi, beta) x^n`
    Lucas,
    /// `x/(1 - phi x + beta x^2) = sum E_(n-1)(phi, beta) x^n`
    Fibonacci,
}

pub fn family_gf(kind: GfKind, phi: &Rational, beta: &Rational, order: usize) -> Series {
    let den = Series::new(vec![Rational::one(), -phi.clone(), beta.clone()], order);
    let num = match kind {
        GfKind::Lucas => Series::new(vec![rat(2), -phi.clone()], order),
        GfKind::Fibonacci => Series::x(order),
    };
    num.div(&den).expect("unit constant term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::ratio;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn family_poly_examples() {
        let z = rat(0);
        assert_eq!(family_poly(FamilyTag::C, 4, &z).unwrap(), p(&[2, 0, -4, 0, 1]));
        assert_eq!(family_poly(FamilyTag::S, 6, &z).unwrap(), p(&[-1, 0, 6, 0, -5, 0, 1]));
        let f5 = family_poly(FamilyTag::F, 5, &z).unwrap();
        assert_eq!(f5, p(&[1, 0, 3, 0, 1]));
        assert_eq!(f5.eval(&rat(1)), rat(5));
        let l4 = family_poly(FamilyTag::L, 4, &z).unwrap();
        assert_eq!(l4, p(&[2, 0, 4, 0, 1]));
        assert_eq!(l4.eval(&rat(1)), rat(7));
        assert_eq!(family_poly(FamilyTag::D, -1, &z), Err(Error::UnsupportedIndex(-1)));
    }

    #[test]
    fn negative_indices() {
        let z = rat(0);
        assert_eq!(family_poly(FamilyTag::S, -1, &z).unwrap(), Poly::zero());
        assert_eq!(family_poly(FamilyTag::S, -2, &z).unwrap(), p(&[-1]));
        assert_eq!(family_poly(FamilyTag::L, -3, &z).unwrap(), -&family_poly(FamilyTag::L, 3, &z).unwrap());
        assert_eq!(family_poly(FamilyTag::F, -2, &z).unwrap(), -&family_poly(FamilyTag::F, 2, &z).unwrap());
        // the recurrence still holds across zero
        let s = |n| family_poly(FamilyTag::S, n, &z).unwrap();
        for n in -4..4 {
            assert_eq!(s(n), &(&Poly::x() * &s(n - 1)) - &s(n - 2));
        }
    }

    #[test]
    fn family_row_check_examples() {
        assert!(family_row_check(FamilyTag::D, 3, &rat(1)).unwrap());
        assert_eq!(dickson_first_pair(&rat(1), 3).row_gf(3).unwrap(), p(&[0, -3, 0, 1]));
        assert!(family_row_check(FamilyTag::E, 0, &rat(7)).unwrap());
        assert!(family_row_check(FamilyTag::D, 5, &rat(2)).unwrap());
        for tag in FamilyTag::ALL {
            for n in 0..9 {
                assert!(family_row_check(tag, n, &ratio(-3, 5)).unwrap(), "{tag} {n}");
            }
        }
    }

    #[test]
    fn reverse_j_examples() {
        assert_eq!(reverse_j(&p(&[1, 2]), 3).unwrap(), p(&[0, 0, 2, 1]));
        let c3 = family_poly(FamilyTag::C, 3, &rat(0)).unwrap();
        assert_eq!(reverse_j(&c3, 3).unwrap(), p(&[1, 0, -3]));
    }

    #[test]
    fn family_gf_examples() {
        let lucas = family_gf(GfKind::Lucas, &rat(1), &rat(-1), 5);
        assert_eq!(lucas, Series::from_ints(&[2, 1, 3, 4, 7, 11], 5));
        let fib = family_gf(GfKind::Fibonacci, &rat(1), &rat(-1), 5);
        assert_eq!(fib, Series::from_ints(&[0, 1, 1, 2, 3, 5], 5));
        assert_eq!(family_gf(GfKind::Fibonacci, &rat(0), &rat(0), 5), Series::x(5));
    }

    #[test]
    fn table_matches_single_calls() {
        let beta = ratio(2, 3);
        let table = family_table(FamilyTag::E, 10, &beta);
        for (n, q) in table.iter().enumerate() {
            assert_eq!(*q, family_poly(FamilyTag::E, n as i64, &beta).unwrap());
        }
        assert_eq!(family_table(FamilyTag::C, 0, &beta).len(), 1);
    }
}
