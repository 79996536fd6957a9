use std::fmt;
use std::ops::{Index, IndexMut};

use crate::arith::Ring;
use crate::error::{Error, Result};

/// A dense row-major matrix whose entries share one coefficient structure.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(first) = data.first() {
            if data.iter().any(|e| !first.same_structure(e)) {
                return Err(Error::MixedCoefficients);
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        Matrix::from_fn(rows, cols, |_, _| proto.zero_like())
    }

    pub fn identity(n: usize, proto: &T) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                proto.one_like()
            } else {
                proto.zero_like()
            }
        })
    }

    /// `diag(entries)` padded with zeros to `rows × cols`.
    pub fn diagonal(rows: usize, cols: usize, entries: &[T], proto: &T) -> Self {
        Matrix::from_fn(rows, cols, |i, j| {
            if i == j && i < entries.len() {
                entries[i].clone()
            } else {
                proto.zero_like()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|e| c.clone() * e.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let Some(proto) = self.data.first().or(o.data.first()) else {
            return Ok(Matrix {
                rows: self.rows,
                cols: o.cols,
                data: Vec::new(),
            });
        };
        if !self.data.is_empty() && !o.data.is_empty() && !self.data[0].same_structure(&o.data[0]) {
            return Err(Error::MixedCoefficients);
        }
        let zero = proto.zero_like();
        Ok(Matrix::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(zero.clone(), |acc, k| {
                acc + self[(i, k)].clone() * o[(k, j)].clone()
            })
        }))
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.zip_with(o, |a, b| a.clone() + b.clone())
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.zip_with(o, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, o: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    /// Assembles `[[a, b], [c, d]]` from four blocks.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch("incompatible blocks".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let data = (0..rows)
            .flat_map(|i| {
                (0..cols).map(move |j| match (i < a.rows, j < a.cols) {
                    (true, true) => a[(i, j)].clone(),
                    (true, false) => b[(i, j - a.cols)].clone(),
                    (false, true) => c[(i - a.rows, j)].clone(),
                    (false, false) => d[(i - a.rows, j - a.cols)].clone(),
                })
            })
            .collect();
        Matrix::new(rows, cols, data)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Bracketed rows, one per line: `[1, 0, -a]`.
impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]))
            .finish()
    }
}
