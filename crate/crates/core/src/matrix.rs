//! Dense exact matrices and column-finite polynomial matrices.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fps::{format_rational, parse_rational, rat, Poly, Rational};

/// Dense `rows x cols` block of an (infinite) matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The sign involution `M = diag(1, -1, 1, ...)`.
    pub fn sign_involution(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, if i % 2 == 0 { rat(1) } else { rat(-1) });
        }
        m
    }

    /// Rows must be equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        Matrix { rows: n_rows, cols: n_cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Leading `rows x cols` sub-block.
    pub fn block(&self, rows: usize, cols: usize) -> Matrix {
        assert!(rows <= self.rows && cols <= self.cols);
        Matrix::from_fn(rows, cols, |i, j| self.get(i, j).clone())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * out.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `M A M`: entry `(n, k)` multiplied by `(-1)^(n+k)`.
    pub fn sign_conjugate(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            let v = self.get(i, j).clone();
            if (i + j) % 2 == 0 {
                v
            } else {
                -v
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// Inverse of a square lower-triangular block with nonzero diagonal.
    pub fn lower_inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols || !self.is_lower_triangular() {
            return Err(Error::InvalidArgument("lower_inverse needs a square lower-triangular block".into()));
        }
        let n = self.rows;
        let mut inv = Matrix::zeros(n, n);
        for j in 0..n {
            let d = self.get(j, j);
            if d.is_zero() {
                return Err(Error::InvalidArgument(format!("zero diagonal entry at {j}")));
            }
            inv.set(j, j, d.recip());
            for i in j + 1..n {
                let mut acc = Rational::zero();
                for k in j..i {
                    acc += self.get(i, k) * inv.get(k, j);
                }
                inv.set(i, j, -acc / self.get(i, i));
            }
        }
        Ok(inv)
    }

    /// Cells where the two blocks differ, over their common extent.
    pub fn mismatches(&self, other: &Matrix) -> Vec<(usize, usize)> {
        let rows = self.rows.min(other.rows);
        let cols = self.cols.min(other.cols);
        let mut out = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                if self.get(i, j) != other.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// CSV with one `p/q` cell per entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(format_rational).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDoc {
            rows: self.rows,
            entries: (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = MatrixDoc::deserialize(d)?;
        if doc.entries.len() != doc.rows {
            return Err(D::Error::custom("row count does not match entries"));
        }
        let cols = doc.entries.first().map_or(0, Vec::len);
        if doc.entries.iter().any(|r| r.len() != cols) {
            return Err(D::Error::custom("ragged matrix rows"));
        }
        let rows = doc
            .entries
            .iter()
            .map(|r| r.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(Matrix::from_rows(rows))
    }
}

/// A column-finite matrix stored as its polynomial columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyColumns {
    columns: Vec<Poly>,
}

impl PolyColumns {
    pub fn new(columns: Vec<Poly>) -> Self {
        PolyColumns { columns }
    }

    pub fn columns(&self) -> &[Poly] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `(self * other)` column `k` is `sum_j other[j][k] * self_col_j`.
    /// Fails if some column of `other` reaches past the stored columns of `self`.
    pub fn mul(&self, other: &PolyColumns) -> Result<PolyColumns> {
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let needed = col.degree().map_or(0, |d| d + 1);
                if needed > self.columns.len() {
                    return Err(Error::InsufficientOrder { needed, available: self.columns.len() });
                }
                Ok(col
                    .coeffs()
                    .iter()
                    .zip(&self.columns)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(Poly::zero(), |acc, (c, p)| &acc + &p.scale(c)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyColumns { columns })
    }

    pub fn to_matrix(&self, rows: usize) -> Matrix {
        Matrix::from_fn(rows, self.columns.len(), |i, j| self.columns[j].coeff(i))
    }
}
