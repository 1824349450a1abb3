//! Fibonacci bases `A`, `B`, their reduced forms and the two-parameter
//! generalizations `A_(phi,beta)`, `B_(phi,beta)`.
//!
//! Generalized columns, with `D = 1 + phi x + beta x^2`:
//!
//! ```text
//! A x^(2n)   = (1 + (phi/2) x) x^(2n) / D^(n+1)
//! A x^(2n+1) = x^(2n+1) / D^(n+1)
//! B x^(2n)   = (beta + phi x + x^2)^n
//! B x^(2n+1) = (phi/2 + x)(beta + phi x + x^2)^n
//! ```
//!
//! The classic bases are `A = A_(1,0)` with even columns doubled and
//! `B = B_(1,0)` with odd columns doubled, so `(A x^n | B x^m) = 2 delta`
//! while the generalized pairing is `delta`.

mod relations;
mod rows;
mod transform;

pub use relations::{algebraic_relations_check, theorem4_check};
pub use rows::{example3_check, radical_collapse, row_formula, theorem3_check, RadicalTerm};
pub use transform::{
    apply_a, apply_b, coordinates_in_b, example2_check, golden_ratio_check, kernel_check, right_inverse_b,
    right_inverse_check, signatures, signatures_check, RightInverse, Signature,
};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fps::{format_rational, parse_rational, rat, ratio, Poly, Rational, Series};
use crate::matrix::{Matrix, PolyColumns};

/// Which member of the basis family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The bases of the Fibonacci and Lucas matrices.
    Classic,
    /// `A D_1`, `B D_2`: the classic bases with one parity of columns halved.
    Reduced,
    General {
        phi: Rational,
        beta: Rational,
    },
}

impl Family {
    pub fn general(phi: Rational, beta: Rational) -> Self {
        Family::General { phi, beta }
    }

    /// `(phi, beta)` of the generalized basis this family is a rescaling of.
    pub fn params(&self) -> (Rational, Rational) {
        match self {
            Family::Classic | Family::Reduced => (Rational::one(), Rational::zero()),
            Family::General { phi, beta } => (phi.clone(), beta.clone()),
        }
    }

    pub fn is_classic(&self) -> bool {
        matches!(self, Family::Classic)
    }

    /// `(A x^n | B x^n)`
    pub fn pairing_scale(&self) -> Rational {
        if self.is_classic() {
            rat(2)
        } else {
            Rational::one()
        }
    }
}

/// One of the six basis matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    A(Family),
    B(Family),
}

impl BasisKind {
    pub fn family(&self) -> &Family {
        match self {
            BasisKind::A(f) | BasisKind::B(f) => f,
        }
    }

    pub fn is_a(&self) -> bool {
        matches!(self, BasisKind::A(_))
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = if self.is_a() { "A" } else { "B" };
        match self.family() {
            Family::Classic => write!(f, "{side}"),
            Family::Reduced => write!(f, "{side}-red"),
            Family::General { phi, beta } => {
                write!(f, "{side}-gen({},{})", format_rational(phi), format_rational(beta))
            }
        }
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    /// `A`, `B`, `A-red`, `B-red`; the generalized kinds `A-gen`, `B-gen`
    /// parse with `phi = beta = 0` and are meant to be completed by the caller.
    fn from_str(s: &str) -> Result<Self> {
        let zero = Rational::zero();
        match s {
            "A" => Ok(BasisKind::A(Family::Classic)),
            "B" => Ok(BasisKind::B(Family::Classic)),
            "A-red" => Ok(BasisKind::A(Family::Reduced)),
            "B-red" => Ok(BasisKind::B(Family::Reduced)),
            "A-gen" => Ok(BasisKind::A(Family::general(zero.clone(), zero))),
            "B-gen" => Ok(BasisKind::B(Family::general(zero.clone(), zero))),
            _ => Err(Error::Parse(format!("unknown basis kind {s:?} (expected A, B, A-gen, B-gen, A-red, B-red)"))),
        }
    }
}

/// The leading columns of a basis: series for the `A` side (lower
/// triangular), exact polynomials for the `B` side (column-finite).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Columns {
    Series(Vec<Series>),
    Poly(Vec<Poly>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub kind: BasisKind,
    pub columns: Columns,
}

/// Builds `n_cols` columns; `A`-side columns are known through `order`.
pub fn build_basis(kind: &BasisKind, n_cols: usize, order: usize) -> BasisMatrix {
    let columns = match kind {
        BasisKind::A(family) => Columns::Series(a_columns(family, n_cols, order)),
        BasisKind::B(family) => Columns::Poly(b_columns(family, n_cols)),
    };
    BasisMatrix { kind: kind.clone(), columns }
}

/// `(even_f, odd_f / x, step)` with column `2m = even_f step^m` and
/// column `2m + 1 = x odd_f step^m`.
fn a_generators(family: &Family, order: usize) -> (Series, Series, Series) {
    let (phi, beta) = family.params();
    let den_inv = Series::new(vec![Rational::one(), phi.clone(), beta], order).inv().expect("unit constant term");
    let even_head =
        if family.is_classic() { vec![rat(2), Rational::one()] } else { vec![Rational::one(), phi / rat(2)] };
    let even_f = Series::new(even_head, order).mul(&den_inv);
    let step = den_inv.shift_up(2).truncate(order);
    (even_f, den_inv, step)
}

fn a_columns(family: &Family, n_cols: usize, order: usize) -> Vec<Series> {
    let (even_f, odd_f, step) = a_generators(family, order);
    let odd_f = odd_f.shift_up(1).truncate(order);
    let mut out = Vec::with_capacity(n_cols);
    let mut power = Series::one(order);
    while out.len() < n_cols {
        out.push(even_f.mul(&power));
        if out.len() < n_cols {
            out.push(odd_f.mul(&power));
        }
        power = power.mul(&step);
    }
    out
}

/// `(even_head, odd_head, step)` with column `2m = even_head step^m` and
/// column `2m + 1 = odd_head step^m`.
fn b_generators(family: &Family) -> (Poly, Poly, Poly) {
    let (phi, beta) = family.params();
    let odd = if family.is_classic() {
        Poly::from_ints(&[1, 2])
    } else {
        Poly::new(vec![phi.clone() / rat(2), Rational::one()])
    };
    (Poly::one(), odd, Poly::new(vec![beta, phi, Rational::one()]))
}

fn b_columns(family: &Family, n_cols: usize) -> Vec<Poly> {
    let (even, odd, step) = b_generators(family);
    let mut out = Vec::with_capacity(n_cols);
    let mut power = Poly::one();
    while out.len() < n_cols {
        out.push(&even * &power);
        if out.len() < n_cols {
            out.push(&odd * &power);
        }
        power = &power * &step;
    }
    out
}

impl BasisMatrix {
    pub fn n_cols(&self) -> usize {
        match &self.columns {
            Columns::Series(c) => c.len(),
            Columns::Poly(c) => c.len(),
        }
    }

    /// Order through which the `A`-side columns are known; unbounded for `B`.
    pub fn order(&self) -> Option<usize> {
        match &self.columns {
            Columns::Series(c) => c.first().map(Series::order),
            Columns::Poly(_) => None,
        }
    }

    pub fn series_columns(&self) -> Option<&[Series]> {
        match &self.columns {
            Columns::Series(c) => Some(c),
            Columns::Poly(_) => None,
        }
    }

    pub fn poly_columns(&self) -> Option<&[Poly]> {
        match &self.columns {
            Columns::Poly(c) => Some(c),
            Columns::Series(_) => None,
        }
    }

    /// `[x^i] column j`
    pub fn entry(&self, i: usize, j: usize) -> Result<Rational> {
        match &self.columns {
            Columns::Series(c) => {
                let col = &c[j];
                if i > col.order() {
                    return Err(Error::InsufficientOrder { needed: i, available: col.order() });
                }
                Ok(col.coeff(i).clone())
            }
            Columns::Poly(c) => Ok(c[j].coeff(i)),
        }
    }

    /// Leading `rows x n_cols` block.
    pub fn to_matrix(&self, rows: usize) -> Result<Matrix> {
        if let Some(order) = self.order() {
            if rows > order + 1 {
                return Err(Error::InsufficientOrder { needed: rows - 1, available: order });
            }
        }
        let mut m = Matrix::zeros(rows, self.n_cols());
        for j in 0..self.n_cols() {
            for i in 0..rows {
                m.set(i, j, self.entry(i, j)?);
            }
        }
        Ok(m)
    }

    /// Row `n` over the stored columns, as `sum_k entry(n, k) x^k`.
    pub fn row(&self, n: usize) -> Result<Series> {
        let n_cols = self.n_cols();
        if n_cols == 0 {
            return Err(Error::InvalidArgument("basis has no columns".into()));
        }
        let coeffs = (0..n_cols).map(|k| self.entry(n, k)).collect::<Result<Vec<_>>>()?;
        Ok(Series::new(coeffs, n_cols - 1))
    }

    pub fn to_poly_columns(&self) -> Option<PolyColumns> {
        self.poly_columns().map(|c| PolyColumns::new(c.to_vec()))
    }
}

/// JSON form: `{"kind": "A-gen", "phi": "p/q", "beta": "p/q", "columns": [...]}`,
/// with `phi`/`beta` present only for the generalized kinds, series columns
/// on the `A` side and coefficient arrays on the `B` side.
#[derive(Serialize, Deserialize)]
struct BasisDoc {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<String>,
    columns: ColumnsDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ColumnsDoc {
    Series(Vec<Series>),
    Poly(Vec<Poly>),
}

impl BasisKind {
    /// The name accepted by [`FromStr`], without parameters.
    pub fn short_name(&self) -> &'static str {
        match (self.is_a(), self.family()) {
            (true, Family::Classic) => "A",
            (false, Family::Classic) => "B",
            (true, Family::Reduced) => "A-red",
            (false, Family::Reduced) => "B-red",
            (true, Family::General { .. }) => "A-gen",
            (false, Family::General { .. }) => "B-gen",
        }
    }
}

impl Serialize for BasisMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (phi, beta) = match self.kind.family() {
            Family::General { phi, beta } => (Some(format_rational(phi)), Some(format_rational(beta))),
            _ => (None, None),
        };
        let columns = match &self.columns {
            Columns::Series(c) => ColumnsDoc::Series(c.clone()),
            Columns::Poly(c) => ColumnsDoc::Poly(c.clone()),
        };
        BasisDoc { kind: self.kind.short_name().to_string(), phi, beta, columns }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasisMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = BasisDoc::deserialize(d)?;
        let mut kind: BasisKind = doc.kind.parse().map_err(D::Error::custom)?;
        if let BasisKind::A(Family::General { phi, beta }) | BasisKind::B(Family::General { phi, beta }) = &mut kind {
            let param = |v: &Option<String>, name: &str| match v {
                Some(text) => parse_rational(text).map_err(D::Error::custom),
                None => Err(D::Error::custom(format!("generalized basis needs {name}"))),
            };
            *phi = param(&doc.phi, "phi")?;
            *beta = param(&doc.beta, "beta")?;
        }
        let columns = match (kind.is_a(), doc.columns) {
            (true, ColumnsDoc::Series(c)) => Columns::Series(c),
            (false, ColumnsDoc::Poly(c)) => Columns::Poly(c),
            // An empty list parses as series; the kind decides.
            (false, ColumnsDoc::Series(c)) if c.is_empty() => Columns::Poly(Vec::new()),
            _ => return Err(D::Error::custom("column type does not match the basis side")),
        };
        Ok(BasisMatrix { kind, columns })
    }
}

/// `(a | c) = sum a_n c_n`
pub fn pairing(a: &Series, c: &Poly) -> Result<Rational> {
    if let Some(d) = c.degree() {
        if d > a.order() {
            return Err(Error::InsufficientOrder { needed: d, available: a.order() });
        }
    }
    Ok(c.coeffs().iter().enumerate().map(|(k, ck)| a.coeff(k) * ck).sum())
}

/// `(A x^n | B x^m) = s delta_(n,m)` for `n, m <= n_max` (with `s = 2` for
/// the classic bases, `1` otherwise), and `s A^(-1) = B^T` on the leading
/// block.
pub fn duality_check(family: &Family, n_max: usize, order: usize) -> Result<bool> {
    if order < n_max {
        return Err(Error::InsufficientOrder { needed: n_max, available: order });
    }
    let n = n_max + 1;
    let a = build_basis(&BasisKind::A(family.clone()), n, order);
    let b = build_basis(&BasisKind::B(family.clone()), n, order);
    let scale = family.pairing_scale();
    let a_cols = a.series_columns().expect("A side");
    let b_cols = b.poly_columns().expect("B side");
    for (i, ac) in a_cols.iter().enumerate() {
        for (j, bc) in b_cols.iter().enumerate() {
            let expected = if i == j { scale.clone() } else { Rational::zero() };
            if pairing(ac, bc)? != expected {
                return Ok(false);
            }
        }
    }
    let a_block = a.to_matrix(n)?;
    let b_block = b.to_matrix(n)?;
    Ok(a_block.lower_inverse()?.scale(&scale) == b_block.transpose())
}

/// `1/2`, used by the reduced-basis scalings.
pub(crate) fn half() -> Rational {
    ratio(1, 2)
}
