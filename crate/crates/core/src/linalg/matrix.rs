use std::fmt;

use super::reduce::{RowReducer, SparseRow};
use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single exact field. Empty shapes
/// (`0 x n`, `n x 0`) are legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Self {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Panics if `values.len() != rows * cols`.
    pub fn from_ints(field: Field, rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols, "entry count");
        Self {
            field,
            rows,
            cols,
            entries: values.iter().map(|&v| Scalar::from_i64(field, v)).collect(),
        }
    }

    /// Builds a matrix from nested integer rows; all rows must have equal length.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_ints(field, rows.len(), cols, &flat)
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, v) in col.iter().enumerate() {
                if v.field() != field {
                    return Err(Error::FieldMismatch(field, v.field()));
                }
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn set_int(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = Scalar::from_i64(self.field, v);
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn check_field(&self, other: &ExactMatrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        if let Some(bad) = x.iter().find(|v| v.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, bad.field()));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(self.field.zero(), |acc, j| &acc + &(self.get(i, j) * &x[j]))
            })
            .collect())
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.add(&rhs.scale(&-&self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix {
            entries: self.entries.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, rhs.rows
            )));
        }
        let mut out = ExactMatrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, rhs);
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(rhs)?;
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, rhs.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.field, self.rows + rhs.rows, self.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, 0, rhs);
        Ok(out)
    }

    pub fn block_diag(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(rhs)?;
        let mut out = ExactMatrix::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, rhs);
        Ok(out)
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub(crate) fn sparse_rows(&self) -> impl Iterator<Item = SparseRow> + '_ {
        (0..self.rows).map(move |i| {
            (0..self.cols)
                .filter_map(|j| {
                    let v = self.get(i, j);
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect()
        })
    }

    fn reducer(&self) -> RowReducer {
        let mut red = RowReducer::new(self.field, self.cols);
        for r in self.sparse_rows() {
            red.push(r);
        }
        red
    }

    pub fn rank(&self) -> usize {
        self.reducer().rank()
    }

    /// Basis of `{x : A x = 0}`; see [`RowReducer::kernel_basis`] for the normalization.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.reducer().kernel_basis()
    }

    /// One solution of `A x = b` (free variables set to zero), or `None`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        if let Some(bad) = b.iter().find(|v| v.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, bad.field()));
        }
        let n = self.cols;
        let mut red = RowReducer::new(self.field, n + 1);
        for (mut r, rhs) in self.sparse_rows().zip(b) {
            if !rhs.is_zero() {
                r.push((n, rhs.clone()));
            }
            red.push(r);
        }
        if red.pivot_columns().any(|c| c == n) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); n];
        for (p, row) in red.rows() {
            if let Some((c, v)) = row.last() {
                if *c == n {
                    x[p] = v.clone();
                }
            }
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[j] = self.field.one();
            cols.push(self.solve(&e).ok()??);
        }
        if !self.is_invertible() {
            return None;
        }
        ExactMatrix::from_columns(self.field, n, &cols).ok()
    }
}

impl fmt::Display for ExactMatrix {
    /// Space-aligned rows, one per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "({}x{} empty)", self.rows, self.cols);
        }
        let cells: Vec<String> = self.entries.iter().map(Scalar::display_signed).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            write!(f, "{}", line.join(" "))?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
