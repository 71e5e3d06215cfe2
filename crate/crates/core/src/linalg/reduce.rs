//! Incremental reduced row echelon form over sparse rows.
//!
//! Rows are pushed one at a time; the reducer keeps every stored row with a
//! leading 1 at its pivot column and zeros at all other pivot columns, so the
//! stored set is always the (unique) RREF of the span pushed so far.

use std::collections::BTreeMap;

use super::{Field, Scalar};

/// A sparse row: `(column, value)` pairs, sorted by column, no zero values.
pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct RowReducer {
    field: Field,
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

/// `a - c * b` for sorted sparse rows.
fn axpy(a: &SparseRow, c: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = -&(c * &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 - &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl RowReducer {
    pub fn new(field: Field, ncols: usize) -> Self {
        Self {
            field,
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots without storing it.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut r = row.clone();
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .cloned()
            .collect();
        // Stored rows vanish at every other pivot column, so the coefficient
        // at each pivot column of `row` is unchanged by the other subtractions.
        for (c, coeff) in hits {
            r = axpy(&r, &coeff, &self.pivots[&c]);
        }
        r
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn push(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, v)| *c < self.ncols && !v.is_zero()));
        let mut r = self.reduce(&row);
        let Some((lead, lead_val)) = r.first().cloned() else {
            return false;
        };
        if !lead_val.is_one() {
            let inv = lead_val.inverse().expect("nonzero lead");
            for (_, v) in r.iter_mut() {
                *v = &*v * &inv;
            }
        }
        for stored in self.pivots.values_mut() {
            if let Ok(pos) = stored.binary_search_by_key(&lead, |(c, _)| *c) {
                let coeff = stored[pos].1.clone();
                *stored = axpy(stored, &coeff, &r);
            }
        }
        self.pivots.insert(lead, r);
        true
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseRow)> + '_ {
        self.pivots.iter().map(|(c, r)| (*c, r))
    }

    /// Basis of the null space of the pushed rows: one vector per free
    /// column `f`, with a 1 at `f`, 0 at every other free column, ordered by `f`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let zero = self.field.zero();
        let mut basis: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![zero.clone(); self.ncols];
                v[f] = self.field.one();
                v
            })
            .collect();
        for (&p, row) in &self.pivots {
            for (c, val) in row.iter().skip(1) {
                basis[slot[*c]][p] = -val;
            }
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(field: Field, entries: &[(usize, i64)]) -> SparseRow {
        entries
            .iter()
            .map(|&(c, v)| (c, Scalar::from_i64(field, v)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    #[test]
    fn dependent_rows_do_not_raise_rank() {
        let q = Field::Rationals;
        let mut red = RowReducer::new(q, 3);
        assert!(red.push(row(q, &[(0, 1), (1, 2)])));
        assert!(red.push(row(q, &[(1, 1), (2, 1)])));
        assert!(!red.push(row(q, &[(0, 2), (1, 5), (2, 1)])));
        assert_eq!(red.rank(), 2);
    }

    #[test]
    fn stored_rows_stay_reduced() {
        let q = Field::Rationals;
        let mut red = RowReducer::new(q, 3);
        red.push(row(q, &[(0, 1), (1, 1), (2, 1)]));
        red.push(row(q, &[(1, 2), (2, 1)]));
        for (p, r) in red.rows() {
            assert_eq!(r[0].0, p);
            assert!(r[0].1.is_one());
            for (c, _) in r.iter().skip(1) {
                assert!(red.pivot_columns().all(|q| q != *c));
            }
        }
    }
}
