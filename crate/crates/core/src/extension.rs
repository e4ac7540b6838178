//! Annihilator extensions: building the extended algebra from a base and a
//! tuple of cocycles, the admissibility checks, the closed-form annihilator
//! of an extension, and the inverse construction.

use crate::algebra::EvolutionAlgebra;
use crate::cocycle::{classes_independent, Cocycle};
use crate::field::Elem;
use crate::linalg::{Mat, Subspace};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub base: EvolutionAlgebra,
    pub thetas: Vec<Cocycle>,
}

impl ExtensionSpec {
    pub fn new(base: EvolutionAlgebra, thetas: Vec<Cocycle>) -> ExtensionSpec {
        for t in &thetas {
            assert_eq!(t.dim(), base.dim(), "cocycle dimension != base dimension");
            assert_eq!(t.field, base.field(), "cocycle field != base field");
        }
        ExtensionSpec { base, thetas }
    }

    pub fn ext_dim(&self) -> usize {
        self.thetas.len()
    }

    /// Joint radical: intersection of the component radicals.
    pub fn joint_radical(&self) -> Subspace {
        let m = self.base.dim();
        let f = self.base.field();
        let mut acc = Subspace::full(f, m);
        for t in &self.thetas {
            acc = acc.intersect(&t.radical());
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Inadmissible {
    #[error("the cocycle classes are linearly dependent in H (extension has an annihilator component)")]
    DependentClasses,
    #[error("joint radical meets the annihilator of the base (contains e{})", witness + 1)]
    RadicalMeetsAnnihilator { witness: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("spec rejected: {0}")]
    Rejected(#[from] Inadmissible),
    #[error("algebra has zero annihilator, nothing to reconstruct")]
    NoAnnihilator,
    #[error("extension needs at least one cocycle")]
    EmptyThetaTuple,
}

/// Checks the two invariants an extension spec must satisfy: independent
/// classes in H, and joint radical meeting the base annihilator trivially.
pub fn check_admissible(spec: &ExtensionSpec) -> Result<(), Inadmissible> {
    if !classes_independent(&spec.base, &spec.thetas) {
        return Err(Inadmissible::DependentClasses);
    }
    // Both spaces are coordinate spans, so a nonzero intersection contains a
    // basis vector: some i with zero square and zero diagonal in every theta.
    let f = spec.base.field();
    for i in spec.base.annihilator_indices() {
        if spec.thetas.iter().all(|t| f.is_zero(&t.diag[i])) {
            return Err(Inadmissible::RadicalMeetsAnnihilator { witness: i });
        }
    }
    Ok(())
}

/// Builds the extension without validating the spec, for studying the
/// annihilator and component lemmas on degenerate inputs.
pub fn extend_unchecked(spec: &ExtensionSpec) -> EvolutionAlgebra {
    let f = spec.base.field();
    let m = spec.base.dim();
    let k = spec.ext_dim();
    let n = m + k;
    let mut sq = Mat::zeros(f, n, n);
    for i in 0..m {
        for j in 0..m {
            sq.set(i, j, spec.base.squares().get(i, j).clone());
        }
        for (jj, t) in spec.thetas.iter().enumerate() {
            sq.set(i, m + jj, t.diag[i].clone());
        }
    }
    EvolutionAlgebra::new(f, n, sq).expect("well-formed extension matrix")
}

/// Builds the annihilator extension of the base by the cocycle tuple.
/// Rejects inadmissible specs with the violated condition named.
pub fn extend(spec: &ExtensionSpec) -> Result<EvolutionAlgebra, ExtensionError> {
    if spec.thetas.is_empty() {
        return Err(ExtensionError::EmptyThetaTuple);
    }
    check_admissible(spec)?;
    Ok(extend_unchecked(spec))
}

/// The annihilator of the extension, by the closed formula
/// (joint radical meet ann(base)) + V, as a subspace of the extension.
pub fn ann_of_extension(spec: &ExtensionSpec) -> Subspace {
    let f = spec.base.field();
    let m = spec.base.dim();
    let k = spec.ext_dim();
    let n = m + k;
    let inner = spec.joint_radical().intersect(&spec.base.annihilator());
    let mut vecs: Vec<Vec<Elem>> = inner
        .basis_rows()
        .map(|r| {
            let mut v = r.to_vec();
            v.extend(vec![f.zero(); k]);
            v
        })
        .collect();
    for j in 0..k {
        let mut v = vec![f.zero(); n];
        v[m + j] = f.one();
        vecs.push(v);
    }
    Subspace::span(f, n, vecs)
}

/// Result of inverting the construction: the complement base, the recovered
/// cocycle tuple, and the basis reordering that was applied (annihilator
/// vectors moved last).
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub spec: ExtensionSpec,
    /// permutation[k] = index in the input algebra of the k-th reordered
    /// basis vector
    pub permutation: Vec<usize>,
}

impl Reconstruction {
    pub fn base(&self) -> &EvolutionAlgebra {
        &self.spec.base
    }

    pub fn thetas(&self) -> &[Cocycle] {
        &self.spec.thetas
    }
}

/// Splits an algebra with nonzero annihilator as an extension of the
/// complement spanned by the non-annihilator basis vectors. Extending the
/// returned spec reproduces the input up to the returned reordering.
pub fn reconstruct(a: &EvolutionAlgebra) -> Result<Reconstruction, ExtensionError> {
    let ann: Vec<usize> = a.annihilator_indices();
    if ann.is_empty() {
        return Err(ExtensionError::NoAnnihilator);
    }
    let f = a.field();
    let n = a.dim();
    let rest: Vec<usize> = (0..n).filter(|i| !ann.contains(i)).collect();
    let m = rest.len();
    let k = ann.len();

    let mut base_sq = Mat::zeros(f, m, m);
    let mut theta_diags = vec![vec![f.zero(); m]; k];
    for (bi, &i) in rest.iter().enumerate() {
        let row = a.square_row(i);
        for (bj, &j) in rest.iter().enumerate() {
            base_sq.set(bi, bj, row[j].clone());
        }
        for (tj, &j) in ann.iter().enumerate() {
            theta_diags[tj][bi] = row[j].clone();
        }
    }
    let base = EvolutionAlgebra::new(f, m, base_sq).expect("square base matrix");
    let thetas = theta_diags
        .into_iter()
        .map(|d| Cocycle::new(f, d))
        .collect();
    let mut permutation = rest;
    permutation.extend(ann);
    Ok(Reconstruction {
        spec: ExtensionSpec::new(base, thetas),
        permutation,
    })
}

impl fmt::Display for ExtensionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let thetas: Vec<String> = self.thetas.iter().map(|t| t.to_string()).collect();
        write!(f, "base [{}] with thetas {}", self.base.table(), thetas.join("; "))
    }
}
