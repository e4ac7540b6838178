//! Evolution algebras presented by a natural basis.
//!
//! An algebra of dimension m is determined by its m x m structure matrix:
//! row i holds the coordinates of e_i^2, and products of distinct basis
//! vectors vanish by definition of the representation.

use crate::field::{Elem, Field};
use crate::linalg::{Mat, Subspace};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("vector has length {got}, algebra dimension is {want}")]
    DimensionMismatch { want: usize, got: usize },
    #[error("structure matrix must be {0}x{0}")]
    BadStructureMatrix(usize),
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(Field, Field),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolutionAlgebra {
    field: Field,
    dim: usize,
    squares: Mat,
}

impl EvolutionAlgebra {
    pub fn new(field: Field, dim: usize, squares: Mat) -> Result<Self, AlgebraError> {
        if squares.rows != dim || squares.cols != dim {
            return Err(AlgebraError::BadStructureMatrix(dim));
        }
        Ok(EvolutionAlgebra { field, dim, squares })
    }

    /// The zero algebra of the given dimension.
    pub fn zero_algebra(field: Field, dim: usize) -> Self {
        EvolutionAlgebra {
            field,
            dim,
            squares: Mat::zeros(field, dim, dim),
        }
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let m = Mat::from_i64(field, rows);
        EvolutionAlgebra::new(field, m.rows, m).expect("square fixture")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn squares(&self) -> &Mat {
        &self.squares
    }

    /// Coordinates of e_i^2.
    pub fn square_row(&self, i: usize) -> &[Elem] {
        self.squares.row(i)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Product of two coordinate vectors: sum_i x_i y_i e_i^2.
    pub fn multiply(&self, x: &[Elem], y: &[Elem]) -> Result<Vec<Elem>, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { want: self.dim, got: x.len() });
        }
        if y.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { want: self.dim, got: y.len() });
        }
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for i in 0..self.dim {
            let c = f.mul(&x[i], &y[i]);
            if f.is_zero(&c) {
                continue;
            }
            for j in 0..self.dim {
                out[j] = f.add(&out[j], &f.mul(&c, self.squares.get(i, j)));
            }
        }
        Ok(out)
    }

    /// The descending chain of power subspaces, starting from the whole
    /// algebra and ending at the first repeated or zero term. Each term is
    /// spanned by products of a basis of the previous term with the natural
    /// basis.
    pub fn power_chain(&self) -> Vec<Subspace> {
        let f = self.field;
        let mut chain = vec![Subspace::full(f, self.dim)];
        loop {
            let current = chain.last().unwrap();
            let mut products = Vec::new();
            for w in current.basis_rows() {
                for j in 0..self.dim {
                    let e = self.basis_vector(j);
                    products.push(self.multiply(w, &e).unwrap());
                }
            }
            let next = Subspace::span(f, self.dim, products);
            let stop = next.is_zero() || next == *current;
            chain.push(next);
            if stop {
                break;
            }
        }
        chain
    }

    /// Minimal n with the n-th power subspace zero, or `None` when the chain
    /// stabilizes at a nonzero subspace.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let chain = self.power_chain();
        chain.last().unwrap().is_zero().then(|| chain.len())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    /// Indices i with e_i^2 = 0; these basis vectors span the annihilator.
    pub fn annihilator_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.squares.is_zero_row(i)).collect()
    }

    /// ann = span of the natural basis vectors with zero square.
    pub fn annihilator(&self) -> Subspace {
        Subspace::coordinate(self.field, self.dim, &self.annihilator_indices())
    }

    pub fn direct_sum(&self, other: &EvolutionAlgebra) -> Result<EvolutionAlgebra, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        let f = self.field;
        let n = self.dim + other.dim;
        let mut m = Mat::zeros(f, n, n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.squares.get(i, j).clone());
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                m.set(self.dim + i, self.dim + j, other.squares.get(i, j).clone());
            }
        }
        Ok(EvolutionAlgebra { field: f, dim: n, squares: m })
    }

    /// Index of a basis vector spanning a one-dimensional direct ideal
    /// summand inside the annihilator: e_r with both its square row and its
    /// column in the structure matrix zero.
    pub fn annihilator_component(&self) -> Option<usize> {
        (0..self.dim).find(|&r| {
            self.squares.is_zero_row(r)
                && (0..self.dim).all(|i| self.field.is_zero(self.squares.get(i, r)))
        })
    }

    /// Relabels the natural basis: new basis vector k is old vector perm[k].
    pub fn permuted(&self, perm: &[usize]) -> EvolutionAlgebra {
        assert_eq!(perm.len(), self.dim);
        let f = self.field;
        let mut m = Mat::zeros(f, self.dim, self.dim);
        // inverse: position of old index in the new ordering
        let mut pos = vec![0usize; self.dim];
        for (k, &old) in perm.iter().enumerate() {
            pos[old] = k;
        }
        for k in 0..self.dim {
            let old_row = self.squares.row(perm[k]);
            for (old_j, val) in old_row.iter().enumerate() {
                m.set(k, pos[old_j], val.clone());
            }
        }
        EvolutionAlgebra { field: f, dim: self.dim, squares: m }
    }

    /// Human-readable multiplication table listing the nonzero squares.
    pub fn table(&self) -> String {
        let f = self.field;
        let mut parts = Vec::new();
        for i in 0..self.dim {
            if self.squares.is_zero_row(i) {
                continue;
            }
            let mut terms = Vec::new();
            for j in 0..self.dim {
                let c = self.squares.get(i, j);
                if f.is_zero(c) {
                    continue;
                }
                if *c == f.one() {
                    terms.push(format!("e{}", j + 1));
                } else {
                    terms.push(format!("{}*e{}", f.format(c), j + 1));
                }
            }
            parts.push(format!("e{}^2 = {}", i + 1, terms.join(" + ")));
        }
        if parts.is_empty() {
            "all products zero".to_string()
        } else {
            parts.join(", ")
        }
    }
}

impl fmt::Display for EvolutionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} over {}: {}", self.dim, self.field, self.table())
    }
}
