//! Dense exact linear algebra over a [`Field`]: matrices, reduced row
//! echelon form, and canonically represented subspaces.
//!
//! Subspaces are always stored by their RREF basis with zero rows dropped,
//! so subspace equality is plain matrix equality.

use crate::field::{Elem, Field};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Elem>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Elem>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { field, rows: r, cols: c, data }
    }

    /// Builds from signed integer entries, mostly for fixtures.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
                .collect(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(|e| self.field.is_zero(e))
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = f.zero();
                for k in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Image of a coordinate column vector under this matrix.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} * {}-vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = f.zero();
            for k in 0..self.cols {
                acc = f.add(&acc, &f.mul(self.get(i, k), &v[k]));
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// In-place Gauss-Jordan elimination; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !f.is_zero(self.get(i, c)) {
                    let factor = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = f.sub(self.get(i, j), &f.mul(&factor, self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Mat, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Dimension("inverse of non-square".into()));
        }
        let n = self.rows;
        let f = self.field;
        // Augment with the identity and reduce.
        let mut aug = Mat::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        let mut inv = Mat::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// One solution x of `self * x = rhs`, if the system is consistent.
    pub fn solve(&self, rhs: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(rhs.len(), self.rows);
        let f = self.field;
        let mut aug = Mat::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of `{x : self * x = 0}`, returned as rows.
    pub fn kernel(&self) -> Mat {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &pivots {
                s[c] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        Mat::from_rows(f, basis)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| self.field.format(e)).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A linear subspace of F^n in canonical (RREF basis) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub field: Field,
    pub ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Mat::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Mat::identity(field, ambient),
        }
    }

    /// Span of the given vectors.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Elem>>) -> Subspace {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length != ambient dimension");
        }
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let mut m = Mat::from_rows(field, vectors);
        let rank = m.rref_in_place().len();
        let mut basis = Mat::zeros(field, rank, ambient);
        for i in 0..rank {
            for j in 0..ambient {
                basis.set(i, j, m.get(i, j).clone());
            }
        }
        Subspace { field, ambient, basis }
    }

    /// Span of coordinate axes (unit vectors) at the given indices.
    pub fn coordinate(field: Field, ambient: usize, indices: &[usize]) -> Subspace {
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut basis = Mat::zeros(field, sorted.len(), ambient);
        for (r, &i) in sorted.iter().enumerate() {
            basis.set(r, i, field.one());
        }
        Subspace { field, ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.basis.rows_iter()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut v = v.to_vec();
        for i in 0..self.basis.rows {
            // Pivot column of basis row i is its first nonzero entry.
            let pc = (0..self.ambient)
                .find(|&j| !f.is_zero(self.basis.get(i, j)))
                .expect("basis rows are nonzero");
            if !f.is_zero(&v[pc]) {
                let factor = v[pc].clone();
                for j in 0..self.ambient {
                    v[j] = f.sub(&v[j], &f.mul(&factor, self.basis.get(i, j)));
                }
            }
        }
        v.iter().all(|e| f.is_zero(e))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vecs: Vec<Vec<Elem>> = self.basis_rows().map(|r| r.to_vec()).collect();
        vecs.extend(other.basis_rows().map(|r| r.to_vec()));
        Subspace::span(self.field, self.ambient, vecs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let f = self.field;
        let (r, s) = (self.dim(), other.dim());
        if r == 0 || s == 0 {
            return Subspace::zero(f, self.ambient);
        }
        // Solve a^T U = b^T W: kernel of the n x (r+s) matrix [U^T | -W^T].
        let mut m = Mat::zeros(f, self.ambient, r + s);
        for i in 0..r {
            for j in 0..self.ambient {
                m.set(j, i, self.basis.get(i, j).clone());
            }
        }
        for i in 0..s {
            for j in 0..self.ambient {
                m.set(j, r + i, f.neg(other.basis.get(i, j)));
            }
        }
        let ker = m.kernel();
        let mut vecs = Vec::new();
        for t in 0..ker.rows {
            let mut v = vec![f.zero(); self.ambient];
            for i in 0..r {
                let coeff = ker.get(t, i);
                for j in 0..self.ambient {
                    v[j] = f.add(&v[j], &f.mul(coeff, self.basis.get(i, j)));
                }
            }
            vecs.push(v);
        }
        Subspace::span(f, self.ambient, vecs)
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = self
            .basis_rows()
            .map(|r| {
                let entries: Vec<String> = r.iter().map(|e| self.field.format(e)).collect();
                format!("({})", entries.join(", "))
            })
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_is_canonical() {
        let q = Field::rational();
        let a = Subspace::span(
            q,
            3,
            vec![
                vec![q.from_i64(2), q.from_i64(2), q.from_i64(0)],
                vec![q.from_i64(1), q.from_i64(1), q.from_i64(1)],
            ],
        );
        let b = Subspace::span(
            q,
            3,
            vec![
                vec![q.from_i64(1), q.from_i64(1), q.from_i64(3)],
                vec![q.from_i64(3), q.from_i64(3), q.from_i64(1)],
            ],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership() {
        let f5 = Field::fp(5).unwrap();
        let s = Subspace::span(
            f5,
            3,
            vec![
                vec![f5.from_i64(1), f5.from_i64(2), f5.from_i64(0)],
                vec![f5.from_i64(0), f5.from_i64(1), f5.from_i64(4)],
            ],
        );
        let v = vec![f5.from_i64(1), f5.from_i64(3), f5.from_i64(4)];
        assert!(s.contains(&v));
        let w = vec![f5.from_i64(0), f5.from_i64(0), f5.from_i64(1)];
        assert!(!s.contains(&w));
    }

    #[test]
    fn kernel_and_inverse() {
        let f7 = Field::fp(7).unwrap();
        let m = Mat::from_i64(f7, &[&[1, 2, 3], &[2, 4, 6]]);
        let ker = m.kernel();
        assert_eq!(ker.rows, 2);
        for i in 0..ker.rows {
            let img = m.mul_vec(ker.row(i)).unwrap();
            assert!(img.iter().all(|e| f7.is_zero(e)));
        }

        let inv = Mat::from_i64(f7, &[&[1, 1], &[0, 1]]).inverse().unwrap();
        assert_eq!(inv, Mat::from_i64(f7, &[&[1, 6], &[0, 1]]));
        assert!(Mat::from_i64(f7, &[&[1, 1], &[2, 2]]).inverse().is_err());
    }

    #[test]
    fn intersection() {
        let q = Field::rational();
        let a = Subspace::coordinate(q, 4, &[0, 1]);
        let b = Subspace::coordinate(q, 4, &[1, 2]);
        assert_eq!(a.intersect(&b), Subspace::coordinate(q, 4, &[1]));
        let c = Subspace::span(
            q,
            4,
            vec![vec![q.from_i64(1), q.from_i64(1), q.from_i64(0), q.from_i64(0)]],
        );
        let d = a.intersect(&c);
        assert_eq!(d.dim(), 1);
        assert!(a.contains_subspace(&d));
    }
}
