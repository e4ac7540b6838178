//! Diagonal cocycles on an evolution algebra, the coboundary space, the
//! class space H = Z/B, radicals, and the Psi invariant of class subspaces.
//!
//! A cocycle is a symmetric bilinear form vanishing on distinct natural
//! basis vectors, so it is stored as the length-m vector of its diagonal
//! values and all cocycle linear algebra happens on those vectors.

use crate::algebra::EvolutionAlgebra;
use crate::field::{Elem, Field};
use crate::linalg::{Mat, Subspace};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    pub field: Field,
    pub diag: Vec<Elem>,
}

impl Cocycle {
    pub fn new(field: Field, diag: Vec<Elem>) -> Cocycle {
        Cocycle { field, diag }
    }

    pub fn zero(field: Field, m: usize) -> Cocycle {
        Cocycle { field, diag: vec![field.zero(); m] }
    }

    /// The basis form delta_{e_i, e_i}.
    pub fn delta(field: Field, m: usize, i: usize) -> Cocycle {
        let mut diag = vec![field.zero(); m];
        diag[i] = field.one();
        Cocycle { field, diag }
    }

    pub fn from_i64(field: Field, diag: &[i64]) -> Cocycle {
        Cocycle {
            field,
            diag: diag.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|e| self.field.is_zero(e))
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.dim(), other.dim());
        let f = self.field;
        Cocycle {
            field: f,
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.dim(), other.dim());
        let f = self.field;
        Cocycle {
            field: f,
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(a, b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Elem) -> Cocycle {
        let f = self.field;
        Cocycle {
            field: f,
            diag: self.diag.iter().map(|a| f.mul(c, a)).collect(),
        }
    }

    /// The radical: span of basis vectors with zero diagonal entry.
    pub fn radical(&self) -> Subspace {
        let zeros: Vec<usize> = (0..self.dim())
            .filter(|&i| self.field.is_zero(&self.diag[i]))
            .collect();
        Subspace::coordinate(self.field, self.dim(), &zeros)
    }

    pub fn radical_dim(&self) -> usize {
        self.diag.iter().filter(|e| self.field.is_zero(e)).count()
    }

    /// The form as a diagonal matrix, for congruence computations.
    pub fn as_matrix(&self) -> Mat {
        let m = self.dim();
        let mut out = Mat::zeros(self.field, m, m);
        for i in 0..m {
            out.set(i, i, self.diag[i].clone());
        }
        out
    }
}

impl fmt::Display for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, v) in self.diag.iter().enumerate() {
            if self.field.is_zero(v) {
                continue;
            }
            if *v == self.field.one() {
                terms.push(format!("d{}", i + 1));
            } else {
                terms.push(format!("{}*d{}", self.field.format(v), i + 1));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A descending sequence of radical dimensions, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PsiSequence(pub Vec<usize>);

impl fmt::Display for PsiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("empty cocycle tuple")]
    EmptyTuple,
    #[error("classes are linearly dependent modulo coboundaries")]
    DependentClasses,
    #[error("psi computation unsupported here: {0}")]
    Unsupported(String),
}

/// Sorted-descending radical dimensions of a tuple of cocycles.
pub fn psi_tuple(thetas: &[Cocycle]) -> Result<PsiSequence, CocycleError> {
    if thetas.is_empty() {
        return Err(CocycleError::EmptyTuple);
    }
    let mut dims: Vec<usize> = thetas.iter().map(|t| t.radical_dim()).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    Ok(PsiSequence(dims))
}

/// The coboundary space B, as a subspace of diagonal vectors. A functional
/// f yields the diagonal (f(e_i^2))_i, so B is spanned by the columns of
/// the structure matrix.
pub fn coboundary_space(a: &EvolutionAlgebra) -> Subspace {
    let m = a.dim();
    let cols: Vec<Vec<Elem>> = (0..m).map(|j| a.squares().col(j)).collect();
    Subspace::span(a.field(), m, cols)
}

/// Canonical coset representatives spanning H = Z/B: the lexicographically
/// earliest delta basis forms completing B to the full diagonal space.
pub fn class_space(a: &EvolutionAlgebra) -> Vec<Cocycle> {
    let f = a.field();
    let m = a.dim();
    let mut current = coboundary_space(a);
    let mut reps = Vec::new();
    for i in 0..m {
        let delta = Cocycle::delta(f, m, i);
        if !current.contains(&delta.diag) {
            current = current.sum(&Subspace::span(f, m, vec![delta.diag.clone()]));
            reps.push(delta);
        }
    }
    reps
}

pub fn h_dim(a: &EvolutionAlgebra) -> usize {
    a.dim() - coboundary_space(a).dim()
}

/// Whether two cocycles define the same class in H.
pub fn class_eq(a: &EvolutionAlgebra, x: &Cocycle, y: &Cocycle) -> bool {
    coboundary_space(a).contains(&x.sub(y).diag)
}

/// The subspace B + span(thetas) of Z; equal subspaces here mean the theta
/// classes span the same subspace of H.
pub fn classes_span(a: &EvolutionAlgebra, thetas: &[Cocycle]) -> Subspace {
    let b = coboundary_space(a);
    let mut vecs: Vec<Vec<Elem>> = b.basis_rows().map(|r| r.to_vec()).collect();
    vecs.extend(thetas.iter().map(|t| t.diag.clone()));
    Subspace::span(a.field(), a.dim(), vecs)
}

/// True when the classes of the given cocycles are linearly independent in H.
pub fn classes_independent(a: &EvolutionAlgebra, thetas: &[Cocycle]) -> bool {
    classes_span(a, thetas).dim() == coboundary_space(a).dim() + thetas.len()
}

/// Psi of the subspace of H spanned by the given (independent) classes: the
/// lexicographic maximum of [`psi_tuple`] over all cocycle tuples whose
/// classes span the same subspace.
///
/// Over F_p the maximum is found by exhausting all basis changes and
/// coboundary shifts; over the rationals a zero-pattern feasibility search
/// is used, supported for subspaces of dimension <= 2.
pub fn psi_subspace(
    a: &EvolutionAlgebra,
    classes: &[Cocycle],
    budget: u64,
) -> Result<PsiSequence, CocycleError> {
    if classes.is_empty() {
        return Err(CocycleError::EmptyTuple);
    }
    if !classes_independent(a, classes) {
        return Err(CocycleError::DependentClasses);
    }
    match a.field() {
        Field::Fp { p } => psi_subspace_exhaustive(a, classes, p, budget),
        Field::Rational => psi_subspace_zero_pattern(a, classes),
    }
}

fn psi_subspace_exhaustive(
    a: &EvolutionAlgebra,
    classes: &[Cocycle],
    p: u64,
    budget: u64,
) -> Result<PsiSequence, CocycleError> {
    let s = classes.len();
    let m = a.dim();
    let bspace = coboundary_space(a);
    let b = bspace.dim();
    // Each tuple entry ranges over p^s coefficient vectors and p^b shifts.
    let total = (p as u128)
        .checked_pow((s + b) as u32)
        .and_then(|per_row| per_row.checked_pow(s as u32));
    match total {
        Some(t) if t <= budget as u128 => {}
        _ => {
            return Err(CocycleError::Unsupported(format!(
                "exhaustive search over F_{p} with {s} classes exceeds the budget {budget}"
            )))
        }
    }
    let to_u64 = |e: &Elem| match e {
        Elem::Fp(v) => *v,
        Elem::Rat(_) => unreachable!("finite-field path"),
    };
    let class_diags: Vec<Vec<u64>> = classes
        .iter()
        .map(|c| c.diag.iter().map(to_u64).collect())
        .collect();
    let bbasis: Vec<Vec<u64>> = bspace
        .basis_rows()
        .map(|r| r.iter().map(to_u64).collect())
        .collect();

    // Precompute, for every representative choice (coefficients c over the
    // classes plus a coboundary shift), its coefficient vector and radical
    // dimension; the tuple recursion then only tracks independence of the
    // coefficient rows.
    let coeff_count = (p as u128).pow(s as u32) as u64;
    let shift_count = (p as u128).pow(b as u32) as u64;
    let mut candidates: Vec<(Vec<u64>, usize)> = Vec::new();
    for cidx in 0..coeff_count {
        let mut c = vec![0u64; s];
        let mut t = cidx;
        for slot in c.iter_mut() {
            *slot = t % p;
            t /= p;
        }
        for shidx in 0..shift_count {
            let mut mu = vec![0u64; b];
            let mut t = shidx;
            for slot in mu.iter_mut() {
                *slot = t % p;
                t /= p;
            }
            let mut zeros = 0usize;
            for i in 0..m {
                let mut acc = 0u64;
                for (j, cj) in c.iter().enumerate() {
                    acc += cj * class_diags[j][i] % p;
                }
                for (k, mk) in mu.iter().enumerate() {
                    acc += mk * bbasis[k][i] % p;
                }
                if acc % p == 0 {
                    zeros += 1;
                }
            }
            candidates.push((c.clone(), zeros));
        }
    }

    // DFS over tuple rows; the coefficient matrix is kept of full rank so
    // only spanning tuples are visited.
    struct State<'s> {
        p: u64,
        s: usize,
        candidates: &'s [(Vec<u64>, usize)],
        dims: Vec<usize>,
        coeff_rows: Vec<Vec<u64>>,
    }
    fn coeff_independent(rows: &[Vec<u64>], cand: &[u64], p: u64) -> bool {
        let mut m: Vec<Vec<u64>> = rows.to_vec();
        m.push(cand.to_vec());
        let nrows = m.len();
        let ncols = cand.len();
        let mut rank = 0;
        for c in 0..ncols {
            if rank == nrows {
                break;
            }
            let Some(pr) = (rank..nrows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, pr);
            let inv = mod_inv(m[rank][c], p);
            for j in 0..ncols {
                m[rank][j] = m[rank][j] * inv % p;
            }
            for i in 0..nrows {
                if i != rank && m[i][c] != 0 {
                    let t = m[i][c];
                    for j in 0..ncols {
                        m[i][j] = (m[i][j] + (p - t) * m[rank][j]) % p;
                    }
                }
            }
            rank += 1;
        }
        rank == nrows
    }
    fn rec(st: &mut State, row: usize, best: &mut Option<PsiSequence>) {
        if row == st.s {
            let mut buf = [0usize; 8];
            let s = st.s;
            buf[..s].copy_from_slice(&st.dims);
            buf[..s].sort_unstable_by(|a, b| b.cmp(a));
            let improves = match best {
                None => true,
                Some(b) => buf[..s] > b.0[..],
            };
            if improves {
                *best = Some(PsiSequence(buf[..s].to_vec()));
            }
            return;
        }
        let cands = st.candidates;
        let mut last_indep: Option<&[u64]> = None;
        for (c, zeros) in cands {
            // candidates are grouped by coefficient vector, so the rank
            // check runs once per group
            let indep = match last_indep {
                Some(prev) if prev == &c[..] => true,
                _ => {
                    let ok = coeff_independent(&st.coeff_rows, c, st.p);
                    if ok {
                        last_indep = Some(c);
                    } else {
                        last_indep = None;
                    }
                    ok
                }
            };
            if !indep {
                continue;
            }
            st.dims.push(*zeros);
            st.coeff_rows.push(c.clone());
            rec(st, row + 1, best);
            st.coeff_rows.pop();
            st.dims.pop();
        }
    }
    fn mod_inv(a: u64, p: u64) -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }
    let mut best: Option<PsiSequence> = None;
    let mut st = State {
        p,
        s,
        candidates: &candidates,
        dims: Vec::new(),
        coeff_rows: Vec::new(),
    };
    rec(&mut st, 0, &mut best);
    Ok(best.expect("identity tuple is always visited"))
}

fn psi_subspace_zero_pattern(
    a: &EvolutionAlgebra,
    classes: &[Cocycle],
) -> Result<PsiSequence, CocycleError> {
    let s = classes.len();
    if s > 2 {
        return Err(CocycleError::Unsupported(format!(
            "zero-pattern method over the rationals handles subspaces of dimension <= 2, got {s}"
        )));
    }
    let f = a.field();
    let m = a.dim();
    let bspace = coboundary_space(a);
    let bbasis: Vec<Vec<Elem>> = bspace.basis_rows().map(|r| r.to_vec()).collect();
    let b = bbasis.len();

    // Coefficient vectors c for which some representative
    // sum_j c_j theta_j + (coboundary) vanishes on all of S.
    let feasible_coeffs = |mask: u32| -> Subspace {
        let indices: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
        if indices.is_empty() {
            return Subspace::full(f, s);
        }
        let mut sys = Mat::zeros(f, indices.len(), s + b);
        for (r, &i) in indices.iter().enumerate() {
            for j in 0..s {
                sys.set(r, j, classes[j].diag[i].clone());
            }
            for k in 0..b {
                sys.set(r, s + k, bbasis[k][i].clone());
            }
        }
        let ker = sys.kernel();
        let proj: Vec<Vec<Elem>> = (0..ker.rows)
            .map(|t| ker.row(t)[..s].to_vec())
            .collect();
        Subspace::span(f, s, proj)
    };

    let masks_of_size = |k: usize| -> Vec<u32> {
        (0u32..(1 << m)).filter(|x| x.count_ones() as usize == k).collect()
    };

    if s == 1 {
        for k in (0..=m).rev() {
            for mask in masks_of_size(k) {
                if feasible_coeffs(mask).dim() >= 1 {
                    return Ok(PsiSequence(vec![k]));
                }
            }
        }
        unreachable!("the empty zero set is always feasible");
    }

    // s == 2: maximize (k1, k2) lexicographically over spanning pairs.
    for k1 in (0..=m).rev() {
        for k2 in (0..=k1).rev() {
            for m1 in masks_of_size(k1) {
                let v1 = feasible_coeffs(m1);
                if v1.dim() == 0 {
                    continue;
                }
                for m2 in masks_of_size(k2) {
                    let v2 = feasible_coeffs(m2);
                    if v2.dim() == 0 {
                        continue;
                    }
                    // An independent pair exists unless both are the same line.
                    let independent_pair =
                        v1.dim() >= 2 || v2.dim() >= 2 || v1 != v2;
                    if independent_pair {
                        return Ok(PsiSequence(vec![k1, k2]));
                    }
                }
            }
        }
    }
    unreachable!("empty zero sets give the identity basis");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn e22() -> EvolutionAlgebra {
        EvolutionAlgebra::from_i64_rows(q(), &[&[0, 1], &[0, 0]])
    }

    fn e33() -> EvolutionAlgebra {
        // e1^2 = e3, e2^2 = e3
        EvolutionAlgebra::from_i64_rows(q(), &[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]])
    }

    #[test]
    fn coboundaries_are_column_spans() {
        let b = coboundary_space(&e22());
        assert_eq!(b.dim(), 1);
        assert!(b.contains(&Cocycle::from_i64(q(), &[1, 0]).diag));

        let b33 = coboundary_space(&e33());
        assert_eq!(b33.dim(), 1);
        assert!(b33.contains(&Cocycle::from_i64(q(), &[1, 1, 0]).diag));

        // e1^2 = e3+e4, e2^2 = e3, e3^2 = e4
        let e48 = EvolutionAlgebra::from_i64_rows(
            q(),
            &[&[0, 0, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]],
        );
        let b48 = coboundary_space(&e48);
        assert_eq!(b48.dim(), 2);
        assert!(b48.contains(&Cocycle::from_i64(q(), &[1, 1, 0, 0]).diag));
        assert!(b48.contains(&Cocycle::from_i64(q(), &[1, 0, 1, 0]).diag));
    }

    #[test]
    fn class_space_representatives() {
        let reps = class_space(&e22());
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0], Cocycle::delta(q(), 2, 1));

        let zero3 = EvolutionAlgebra::zero_algebra(q(), 3);
        assert_eq!(class_space(&zero3).len(), 3);

        // chain of length 4: only the last delta survives
        let e49 = EvolutionAlgebra::from_i64_rows(
            q(),
            &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]],
        );
        let reps = class_space(&e49);
        assert_eq!(reps, vec![Cocycle::delta(q(), 4, 3)]);
    }

    #[test]
    fn dim_identity() {
        // dim B equals dim of the square subspace; dim B + dim H = m
        for alg in [e22(), e33(), EvolutionAlgebra::zero_algebra(q(), 4)] {
            let chain = alg.power_chain();
            let sq_dim = if chain.len() > 1 { chain[1].dim() } else { 0 };
            assert_eq!(coboundary_space(&alg).dim(), sq_dim);
            assert_eq!(class_space(&alg).len(), alg.dim() - sq_dim);
        }
    }

    #[test]
    fn radical_dims() {
        let t = Cocycle::from_i64(q(), &[0, 0, 5]);
        assert_eq!(t.radical_dim(), 2);
        assert_eq!(Cocycle::from_i64(q(), &[1, 2, 3]).radical_dim(), 0);
        assert_eq!(Cocycle::zero(q(), 3).radical_dim(), 3);
    }

    #[test]
    fn psi_tuples() {
        let a = Cocycle::from_i64(q(), &[1, 0, 0]);
        let b = Cocycle::from_i64(q(), &[0, 1, 1]);
        assert_eq!(psi_tuple(&[a, b]).unwrap(), PsiSequence(vec![2, 1]));
        assert_eq!(
            psi_tuple(&[Cocycle::zero(q(), 4)]).unwrap(),
            PsiSequence(vec![4])
        );
        assert_eq!(
            psi_tuple(&[Cocycle::from_i64(q(), &[0, 0, 0, 1])]).unwrap(),
            PsiSequence(vec![3])
        );
        assert!(psi_tuple(&[]).is_err());
    }

    #[test]
    fn psi_subspace_rational() {
        // over e1^2=e2^2=e3: <[d3]> has psi (2), <[d2]+[d3]> has psi (1)
        let a = e33();
        let d3 = Cocycle::from_i64(q(), &[0, 0, 1]);
        assert_eq!(
            psi_subspace(&a, &[d3], 1 << 20).unwrap(),
            PsiSequence(vec![2])
        );
        let d23 = Cocycle::from_i64(q(), &[0, 1, 1]);
        assert_eq!(
            psi_subspace(&a, &[d23], 1 << 20).unwrap(),
            PsiSequence(vec![1])
        );
    }

    #[test]
    fn psi_subspace_finite_matches_rational() {
        let f5 = Field::fp(5).unwrap();
        let a5 = EvolutionAlgebra::from_i64_rows(f5, &[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]]);
        let d3 = Cocycle::from_i64(f5, &[0, 0, 1]);
        assert_eq!(
            psi_subspace(&a5, &[d3], 1 << 24).unwrap(),
            PsiSequence(vec![2])
        );
        let d23 = Cocycle::from_i64(f5, &[0, 1, 1]);
        assert_eq!(
            psi_subspace(&a5, &[d23], 1 << 24).unwrap(),
            PsiSequence(vec![1])
        );
    }

    #[test]
    fn psi_subspace_dimension_two() {
        // zero algebra of dim 3, pairs from the two-dimensional extension split
        let z3 = EvolutionAlgebra::zero_algebra(q(), 3);
        let t1 = Cocycle::from_i64(q(), &[1, 0, 0]);
        let t2 = Cocycle::from_i64(q(), &[0, 1, 1]);
        assert_eq!(
            psi_subspace(&z3, &[t1, t2], 1 << 20).unwrap(),
            PsiSequence(vec![2, 1])
        );
        let u1 = Cocycle::from_i64(q(), &[1, 0, 1]);
        let u2 = Cocycle::from_i64(q(), &[0, 1, 1]);
        assert_eq!(
            psi_subspace(&z3, &[u1, u2], 1 << 20).unwrap(),
            PsiSequence(vec![1, 1])
        );
    }

    #[test]
    fn psi_subspace_rational_caps_at_two_classes() {
        let z4 = EvolutionAlgebra::zero_algebra(q(), 4);
        let classes = vec![
            Cocycle::from_i64(q(), &[1, 0, 0, 1]),
            Cocycle::from_i64(q(), &[0, 1, 0, 1]),
            Cocycle::from_i64(q(), &[0, 0, 1, 1]),
        ];
        assert!(matches!(
            psi_subspace(&z4, &classes, 1 << 20),
            Err(CocycleError::Unsupported(_))
        ));
        // over a finite field the same subspace is in reach
        let f3 = Field::fp(3).unwrap();
        let z4_3 = EvolutionAlgebra::zero_algebra(f3, 4);
        let classes_3 = vec![
            Cocycle::from_i64(f3, &[1, 0, 0, 1]),
            Cocycle::from_i64(f3, &[0, 1, 0, 1]),
            Cocycle::from_i64(f3, &[0, 0, 1, 1]),
        ];
        assert!(psi_subspace(&z4_3, &classes_3, 1 << 24).is_ok());
    }

    #[test]
    fn psi_subspace_rejects_dependent() {
        let a = e33();
        let b_elt = Cocycle::from_i64(q(), &[1, 1, 0]); // a coboundary
        assert_eq!(
            psi_subspace(&a, &[b_elt], 1 << 20),
            Err(CocycleError::DependentClasses)
        );
    }

    #[test]
    fn class_equality() {
        let a = e33();
        let x = Cocycle::from_i64(q(), &[0, 0, 1]);
        let y = Cocycle::from_i64(q(), &[1, 1, 1]);
        assert!(class_eq(&a, &x, &y));
        assert!(!class_eq(&a, &x, &Cocycle::from_i64(q(), &[0, 1, 1])));
    }
}
