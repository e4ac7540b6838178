//! Isomorphism invariants and the three-stage isomorphism check: fast
//! invariant comparison, then the automorphism orbit test on the extension
//! classes, with every positive verdict backed by an explicitly verified
//! witness matrix.

use crate::algebra::EvolutionAlgebra;
use crate::aut::{find_isomorphism, is_isomorphism, same_orbit_mixed, AutError};
use crate::cocycle::{classes_span, coboundary_space, psi_subspace, Cocycle, PsiSequence};
use crate::extension::{extend_unchecked, reconstruct, ExtensionSpec};
use crate::field::{Elem, Field};
use crate::linalg::Mat;
use std::fmt;
use thiserror::Error;

/// Node budget given to the invariant Psi search inside fingerprints.
pub const PSI_FINGERPRINT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub chain_dims: Vec<usize>,
    pub ann_dim: usize,
    pub square_dim: usize,
    pub nilpotency: Option<usize>,
    /// rank of the extension class subspace in H of the quotient base
    pub ext_class_rank: usize,
    /// Psi of that subspace, when it is computable at the default budget
    pub psi: Option<PsiSequence>,
    pub base: Option<Box<Fingerprint>>,
}

pub fn fingerprint(a: &EvolutionAlgebra) -> Fingerprint {
    let chain_dims: Vec<usize> = a.power_chain().iter().map(|s| s.dim()).collect();
    let ann_dim = a.annihilator_indices().len();
    let square_dim = coboundary_space(a).dim();
    let nilpotency = a.nilpotency_index();
    let (ext_class_rank, psi, base) = if ann_dim == 0 || a.dim() == 0 {
        (0, None, None)
    } else {
        let rec = reconstruct(a).expect("nonzero annihilator");
        let base_alg = rec.base().clone();
        let independent = independent_class_subtuple(&base_alg, rec.thetas());
        let rank = independent.len();
        let psi = if rank == 0 {
            None
        } else {
            psi_subspace(&base_alg, &independent, PSI_FINGERPRINT_BUDGET).ok()
        };
        (rank, psi, Some(Box::new(fingerprint(&base_alg))))
    };
    Fingerprint {
        dim: a.dim(),
        chain_dims,
        ann_dim,
        square_dim,
        nilpotency,
        ext_class_rank,
        psi,
        base,
    }
}

/// Greedy maximal subtuple whose classes are independent in H.
fn independent_class_subtuple(base: &EvolutionAlgebra, thetas: &[Cocycle]) -> Vec<Cocycle> {
    let b_dim = coboundary_space(base).dim();
    let mut chosen: Vec<Cocycle> = Vec::new();
    for t in thetas {
        let mut cand = chosen.clone();
        cand.push(t.clone());
        if classes_span(base, &cand).dim() == b_dim + cand.len() {
            chosen = cand;
        }
    }
    chosen
}

/// Names the first differing invariant of two fingerprints, if any. The Psi
/// component only counts when both sides computed it.
pub fn first_mismatch(a: &Fingerprint, b: &Fingerprint) -> Option<String> {
    if a.dim != b.dim {
        return Some(format!("dimension ({} vs {})", a.dim, b.dim));
    }
    if a.chain_dims != b.chain_dims {
        return Some(format!(
            "power-chain dimensions ({:?} vs {:?})",
            a.chain_dims, b.chain_dims
        ));
    }
    if a.ann_dim != b.ann_dim {
        return Some(format!("annihilator dimension ({} vs {})", a.ann_dim, b.ann_dim));
    }
    if a.square_dim != b.square_dim {
        return Some(format!(
            "square subspace dimension ({} vs {})",
            a.square_dim, b.square_dim
        ));
    }
    if a.nilpotency != b.nilpotency {
        return Some(format!(
            "nilpotency index ({:?} vs {:?})",
            a.nilpotency, b.nilpotency
        ));
    }
    if a.ext_class_rank != b.ext_class_rank {
        return Some(format!(
            "extension class rank ({} vs {})",
            a.ext_class_rank, b.ext_class_rank
        ));
    }
    if let (Some(pa), Some(pb)) = (&a.psi, &b.psi) {
        if pa != pb {
            return Some(format!("Psi of the extension class subspace ({pa} vs {pb})"));
        }
    }
    match (&a.base, &b.base) {
        (Some(ba), Some(bb)) => first_mismatch(ba, bb).map(|m| format!("base {m}")),
        (None, None) => None,
        _ => Some("base presence".to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic { witness: Mat },
    NonIsomorphic { invariant: String },
    Inconclusive { reason: String },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Isomorphic { .. } => write!(f, "Isomorphic"),
            Verdict::NonIsomorphic { invariant } => {
                write!(f, "NonIsomorphic (distinguished by {invariant})")
            }
            Verdict::Inconclusive { reason } => write!(f, "Inconclusive ({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("inputs must share dimension and field")]
    Precondition,
    #[error("inputs must be nilpotent")]
    NotNilpotent,
    #[error("internal witness construction failed verification: {0}")]
    WitnessConstruction(String),
    #[error(transparent)]
    Search(#[from] AutError),
}

/// Normal form under splitting: the component-free core, the number of
/// split-off zero lines, and a verified isomorphism from `a` onto
/// `core + zero lines` (core coordinates first).
struct SplitForm {
    core: EvolutionAlgebra,
    zero_lines: usize,
    map: Mat,
}

fn block_identity_pad(field: Field, inner: &Mat, pad: usize) -> Mat {
    let n = inner.rows + pad;
    let mut out = Mat::zeros(field, n, n);
    for i in 0..inner.rows {
        for j in 0..inner.cols {
            out.set(i, j, inner.get(i, j).clone());
        }
    }
    for t in 0..pad {
        out.set(inner.rows + t, inner.rows + t, field.one());
    }
    out
}

fn permutation_map(field: Field, perm: &[usize]) -> Mat {
    // reconstruct's permutation: new basis vector k is old vector perm[k];
    // the coordinate map old -> new sends e_{perm[k]} to position k
    let n = perm.len();
    let mut q = Mat::zeros(field, n, n);
    for (k, &old) in perm.iter().enumerate() {
        q.set(k, old, field.one());
    }
    q
}

fn split_normalize(a: &EvolutionAlgebra) -> Result<SplitForm, IsoError> {
    let field = a.field();
    let n = a.dim();
    if a.annihilator_indices().is_empty() {
        return Ok(SplitForm {
            core: a.clone(),
            zero_lines: 0,
            map: Mat::identity(field, n),
        });
    }
    let rec = reconstruct(a).map_err(|_| IsoError::NotNilpotent)?;
    let base = rec.base().clone();
    let thetas = rec.thetas().to_vec();
    let m = base.dim();
    let k = thetas.len();
    let q = permutation_map(field, &rec.permutation);

    // choose a maximal independent class subtuple; express the rest in it
    let bspace = coboundary_space(&base);
    let b_dim = bspace.dim();
    let mut chosen: Vec<usize> = Vec::new();
    for (i, _) in thetas.iter().enumerate() {
        let mut cand: Vec<Cocycle> = chosen.iter().map(|&j| thetas[j].clone()).collect();
        cand.push(thetas[i].clone());
        if classes_span(&base, &cand).dim() == b_dim + cand.len() {
            chosen.push(i);
        }
    }
    let s = chosen.len();
    if s == k {
        // independent classes with trivial joint radical against the base
        // annihilator: nothing splits off
        return Ok(SplitForm {
            core: a.clone(),
            zero_lines: 0,
            map: Mat::identity(field, n),
        });
    }

    // T mixes the V-coordinates: first the chosen components, then the
    // dependent ones minus their expression in the chosen ones
    let mut t_rows: Vec<Vec<Elem>> = Vec::new();
    for &i in &chosen {
        let mut row = vec![field.zero(); k];
        row[i] = field.one();
        t_rows.push(row);
    }
    let dependents: Vec<usize> = (0..k).filter(|i| !chosen.contains(i)).collect();
    // coefficients: theta_dep = sum_j c_j theta_chosen_j + coboundary
    let bbasis: Vec<Vec<Elem>> = bspace.basis_rows().map(|r| r.to_vec()).collect();
    for &dep in &dependents {
        let mut sys = Mat::zeros(field, m, s + bbasis.len());
        for r in 0..m {
            for (cj, &j) in chosen.iter().enumerate() {
                sys.set(r, cj, thetas[j].diag[r].clone());
            }
            for (bj, bv) in bbasis.iter().enumerate() {
                sys.set(r, s + bj, bv[r].clone());
            }
        }
        let sol = sys
            .solve(&thetas[dep].diag)
            .expect("dependent class lies in the span");
        let mut row = vec![field.zero(); k];
        row[dep] = field.one();
        for (cj, &j) in chosen.iter().enumerate() {
            row[j] = field.sub(&row[j], &sol[cj]);
        }
        t_rows.push(row);
    }
    let t = Mat::from_rows(field, t_rows);
    let new_thetas = crate::aut::gl_v_action(&t, &thetas).expect("T is invertible");

    // the dependent components of the mixed tuple are coboundaries; cancel
    // them with a shift map x -> x + G(x)
    let mut gmat = Mat::zeros(field, k, m);
    let sq_t = base.squares().clone();
    for (pos, nt) in new_thetas.iter().enumerate().skip(s) {
        // solve squares * g = diag so that g(e_i^2) reproduces the diagonal
        let g = sq_t
            .solve(&nt.diag)
            .expect("coboundary components lie in the column space");
        for (col, val) in g.iter().enumerate() {
            gmat.set(pos, col, field.neg(val));
        }
    }

    // assemble the normal form and the composite map
    let core_thetas: Vec<Cocycle> = new_thetas[..s].to_vec();
    let core = if s == 0 {
        base.clone()
    } else {
        extend_unchecked(&ExtensionSpec::new(base.clone(), core_thetas.clone()))
    };
    let zero_lines = k - s;
    let normal = core
        .direct_sum(&EvolutionAlgebra::zero_algebra(field, zero_lines))
        .expect("same field");

    // sigma2: V-mix by T; sigma3: coboundary shift
    let mut sigma2 = Mat::identity(field, n);
    for i in 0..k {
        for j in 0..k {
            sigma2.set(m + i, m + j, t.get(i, j).clone());
        }
    }
    let mut sigma3 = Mat::identity(field, n);
    for i in 0..k {
        for j in 0..m {
            sigma3.set(m + i, j, gmat.get(i, j).clone());
        }
    }
    let map = sigma3
        .mul(&sigma2)
        .and_then(|x| x.mul(&q))
        .expect("square compositions");

    // the core may still split (its base can carry components); recurse
    let inner = split_normalize(&core)?;
    let full_inner = block_identity_pad(field, &inner.map, zero_lines);
    let map = full_inner.mul(&map).expect("square compositions");
    let final_core = inner.core;
    let final_zero = inner.zero_lines + zero_lines;
    let final_normal = final_core
        .direct_sum(&EvolutionAlgebra::zero_algebra(field, final_zero))
        .expect("same field");
    debug_assert_eq!(normal.dim(), n);
    if !is_isomorphism(a, &final_normal, &map).map_err(IsoError::Search)? {
        return Err(IsoError::WitnessConstruction(format!(
            "split normal form map failed for {a}"
        )));
    }
    Ok(SplitForm {
        core: final_core,
        zero_lines: final_zero,
        map,
    })
}

/// Builds the explicit extension isomorphism from a base witness: given
/// omega with the pullback classes spanning the target subspace, composes
/// the coboundary shift, the V-coordinate change, and the base map.
fn extension_witness(
    target: (&EvolutionAlgebra, &[Cocycle]),
    source: (&EvolutionAlgebra, &[Cocycle]),
    omega: &Mat,
) -> Result<Mat, IsoError> {
    let (tbase, thetas) = target;
    let (sbase, varthetas) = source;
    let field = tbase.field();
    let m = tbase.dim();
    let k = thetas.len();
    let n = m + k;

    // pulled_i = omega^T diag(vartheta_i) omega, diagonal by construction
    let pulled: Vec<Cocycle> = varthetas
        .iter()
        .map(|t| crate::aut::act_on_cocycle(omega, t).expect("witness keeps forms diagonal"))
        .collect();

    // pulled = C theta + coboundary: solve per component
    let bspace = coboundary_space(tbase);
    let bbasis: Vec<Vec<Elem>> = bspace.basis_rows().map(|r| r.to_vec()).collect();
    let mut c = Mat::zeros(field, k, k);
    let mut shifts: Vec<Vec<Elem>> = Vec::new();
    for (i, p) in pulled.iter().enumerate() {
        let mut sys = Mat::zeros(field, m, k + bbasis.len());
        for r in 0..m {
            for j in 0..k {
                sys.set(r, j, thetas[j].diag[r].clone());
            }
            for (bj, bv) in bbasis.iter().enumerate() {
                sys.set(r, k + bj, bv[r].clone());
            }
        }
        let sol = sys
            .solve(&p.diag)
            .expect("pulled classes span the target subspace");
        for j in 0..k {
            c.set(i, j, sol[j].clone());
        }
        let mut shift = vec![field.zero(); m];
        for (bj, bv) in bbasis.iter().enumerate() {
            for r in 0..m {
                shift[r] = field.add(&shift[r], &field.mul(&sol[k + bj], &bv[r]));
            }
        }
        shifts.push(shift);
    }
    let c_inv = c.inverse().map_err(|_| {
        IsoError::WitnessConstruction("class coefficient matrix is singular".into())
    })?;

    // g = C^{-1} * shifts gives the coboundary components of C^{-1} pulled
    // relative to theta; solve for the functionals behind them
    let mut gmat = Mat::zeros(field, k, m);
    for i in 0..k {
        let mut d = vec![field.zero(); m];
        for j in 0..k {
            let coef = c_inv.get(i, j);
            for r in 0..m {
                d[r] = field.add(&d[r], &field.mul(coef, &shifts[j][r]));
            }
        }
        let g = tbase
            .squares()
            .solve(&d)
            .expect("shift diagonals are coboundaries");
        for (col, val) in g.iter().enumerate() {
            gmat.set(i, col, val.clone());
        }
    }

    // sigma3: target ext -> ext by theta + g-shift (x stays, v += G（x));
    let mut sigma3 = Mat::identity(field, n);
    for i in 0..k {
        for j in 0..m {
            sigma3.set(m + i, j, gmat.get(i, j).clone());
        }
    }
    // sigma2: mix V by C
    let mut sigma2 = Mat::identity(field, n);
    for i in 0..k {
        for j in 0..k {
            sigma2.set(m + i, m + j, c.get(i, j).clone());
        }
    }
    // sigma1: base part by omega
    let mut sigma1 = Mat::identity(field, n);
    for i in 0..m {
        for j in 0..m {
            sigma1.set(i, j, omega.get(i, j).clone());
        }
    }
    let w = sigma1
        .mul(&sigma2)
        .and_then(|x| x.mul(&sigma3))
        .expect("square compositions");

    let a_ext = extend_unchecked(&ExtensionSpec::new(tbase.clone(), thetas.to_vec()));
    let b_ext = extend_unchecked(&ExtensionSpec::new(sbase.clone(), varthetas.to_vec()));
    if !is_isomorphism(&a_ext, &b_ext, &w).map_err(IsoError::Search)? {
        return Err(IsoError::WitnessConstruction(
            "composed extension witness failed verification".into(),
        ));
    }
    Ok(w)
}

/// Three-stage isomorphism decision. Never answers `Isomorphic` without a
/// verified witness and never `NonIsomorphic` without either a named
/// invariant mismatch or an exhausted orbit search.
pub fn isocheck(a: &EvolutionAlgebra, b: &EvolutionAlgebra, budget: u64) -> Result<Verdict, IsoError> {
    if a.dim() != b.dim() || a.field() != b.field() {
        return Err(IsoError::Precondition);
    }
    if !a.is_nilpotent() || !b.is_nilpotent() {
        return Err(IsoError::NotNilpotent);
    }
    let field = a.field();
    let n = a.dim();
    if a.squares() == b.squares() {
        return Ok(Verdict::Isomorphic { witness: Mat::identity(field, n) });
    }

    // stage 1: invariants
    let fa = fingerprint(a);
    let fb = fingerprint(b);
    if let Some(invariant) = first_mismatch(&fa, &fb) {
        return Ok(Verdict::NonIsomorphic { invariant });
    }

    // stage 2: orbit test over the common base
    if !field.is_finite() {
        return Ok(Verdict::Inconclusive {
            reason: "equal invariants; the orbit search needs a finite field".into(),
        });
    }

    let sa = split_normalize(a)?;
    let sb = split_normalize(b)?;
    if sa.zero_lines != sb.zero_lines {
        return Ok(Verdict::NonIsomorphic {
            invariant: format!(
                "annihilator component count ({} vs {})",
                sa.zero_lines, sb.zero_lines
            ),
        });
    }
    let pad = sa.zero_lines;

    let core_witness = if sa.core.squares() == sb.core.squares() {
        Mat::identity(field, sa.core.dim())
    } else if sa.core.dim() == 0 {
        Mat::zeros(field, 0, 0)
    } else if sa.core.annihilator_indices().is_empty() {
        // nilpotent cores always carry annihilator; defensive fallback
        match find_isomorphism(&sa.core, &sb.core, budget)? {
            Some(w) => w,
            None => {
                return Ok(Verdict::NonIsomorphic {
                    invariant: "component-free core isomorphism class".into(),
                })
            }
        }
    } else {
        let rec_a = reconstruct(&sa.core).map_err(|_| IsoError::NotNilpotent)?;
        let rec_b = reconstruct(&sb.core).map_err(|_| IsoError::NotNilpotent)?;
        debug_assert_eq!(rec_a.permutation, (0..sa.core.dim()).collect::<Vec<_>>());
        debug_assert_eq!(rec_b.permutation, (0..sb.core.dim()).collect::<Vec<_>>());
        match same_orbit_mixed(
            (rec_a.base(), rec_a.thetas()),
            (rec_b.base(), rec_b.thetas()),
            budget,
        ) {
            Ok(Some(omega)) => extension_witness(
                (rec_a.base(), rec_a.thetas()),
                (rec_b.base(), rec_b.thetas()),
                &omega,
            )?,
            Ok(None) => {
                let invariant = match find_isomorphism(rec_a.base(), rec_b.base(), budget)? {
                    None => "quotient base isomorphism class".to_string(),
                    Some(_) => {
                        "extension class subspace orbit (exhaustive automorphism search)"
                            .to_string()
                    }
                };
                return Ok(Verdict::NonIsomorphic { invariant });
            }
            Err(AutError::BudgetExceeded { budget }) => {
                return Ok(Verdict::Inconclusive {
                    reason: format!("orbit search budget of {budget} nodes exhausted"),
                })
            }
            Err(e) => return Err(IsoError::Search(e)),
        }
    };

    // assemble witness a -> b through the two split normal forms
    let padded = block_identity_pad(field, &core_witness, pad);
    let sb_inv = sb.map.inverse().map_err(|_| {
        IsoError::WitnessConstruction("split map is singular".into())
    })?;
    let witness = sb_inv
        .mul(&padded)
        .and_then(|x| x.mul(&sa.map))
        .expect("square compositions");
    if !is_isomorphism(a, b, &witness).map_err(IsoError::Search)? {
        return Err(IsoError::WitnessConstruction(
            "final composed witness failed verification".into(),
        ));
    }
    Ok(Verdict::Isomorphic { witness })
}
