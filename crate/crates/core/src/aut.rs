//! Automorphisms and their action on cocycles: verification, the pullback
//! action, finite-field enumeration by column backtracking, and the orbit
//! test that decides isomorphism of annihilator extensions.
//!
//! Matrices use the column convention: the image of e_i is column i.

use crate::algebra::EvolutionAlgebra;
use crate::cocycle::{classes_span, Cocycle};
use crate::extension::{check_admissible, ExtensionSpec, Inadmissible};
use crate::field::{Elem, Field};
use crate::linalg::Mat;
use std::ops::ControlFlow;
use thiserror::Error;

/// Default node budget for the backtracking searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("map must be a {0}x{0} matrix")]
    Dimension(usize),
    #[error("map is singular")]
    Singular,
    #[error("map does not keep the form diagonal")]
    NotInStabilizer,
    #[error("search supports only finite fields")]
    NotFinite,
    #[error("search supports dimensions up to {max}, got {got}")]
    TooLarge { max: usize, got: usize },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("orbit test needs tuples of equal length")]
    LengthMismatch,
    #[error("orbit test rejected a tuple: {0}")]
    Inadmissible(#[from] Inadmissible),
}

const MAX_SEARCH_DIM: usize = 5;

/// Checks that `map` is an algebra homomorphism `dom -> cod` on basis
/// products and is invertible, i.e. an isomorphism of evolution algebras.
pub fn is_isomorphism(dom: &EvolutionAlgebra, cod: &EvolutionAlgebra, map: &Mat) -> Result<bool, AutError> {
    let n = dom.dim();
    if cod.dim() != n || map.rows != n || map.cols != n {
        return Err(AutError::Dimension(n));
    }
    let f = dom.field();
    if !map.is_invertible() {
        return Ok(false);
    }
    for i in 0..n {
        for j in i..n {
            // image of e_i e_j under the product of cod
            let mut lhs = vec![f.zero(); n];
            for k in 0..n {
                let c = f.mul(map.get(k, i), map.get(k, j));
                if f.is_zero(&c) {
                    continue;
                }
                for l in 0..n {
                    lhs[l] = f.add(&lhs[l], &f.mul(&c, cod.squares().get(k, l)));
                }
            }
            let rhs = if i == j {
                map.mul_vec(dom.square_row(i)).unwrap()
            } else {
                vec![f.zero(); n]
            };
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_automorphism(a: &EvolutionAlgebra, phi: &Mat) -> Result<bool, AutError> {
    is_isomorphism(a, a, phi)
}

/// Pullback of a diagonal form along `phi`: computes `phi^T diag(theta) phi`
/// and returns its diagonal when all off-diagonal entries vanish (i.e. phi
/// lies in the stabilizer of the diagonal shape); `None` otherwise.
pub fn act_on_cocycle(phi: &Mat, theta: &Cocycle) -> Option<Cocycle> {
    let m = theta.dim();
    assert_eq!(phi.rows, m, "map size != cocycle size");
    let f = theta.field;
    for i in 0..m {
        for j in (i + 1)..m {
            let mut acc = f.zero();
            for k in 0..m {
                acc = f.add(&acc, &f.mul(&theta.diag[k], &f.mul(phi.get(k, i), phi.get(k, j))));
            }
            if !f.is_zero(&acc) {
                return None;
            }
        }
    }
    let diag = (0..m)
        .map(|i| {
            let mut acc = f.zero();
            for k in 0..m {
                acc = f.add(&acc, &f.mul(&theta.diag[k], &f.mul(phi.get(k, i), phi.get(k, i))));
            }
            acc
        })
        .collect();
    Some(Cocycle::new(f, diag))
}

/// Radical dimensions of a form and of its pullback; they must agree, which
/// the callers assert as an executable identity.
pub fn radical_dims_under(phi: &Mat, theta: &Cocycle) -> Result<(usize, usize), AutError> {
    let pulled = act_on_cocycle(phi, theta).ok_or(AutError::NotInStabilizer)?;
    Ok((theta.radical_dim(), pulled.radical_dim()))
}

/// Change of V-coordinates induced by an invertible `psi` on a cocycle
/// tuple: new component j is `sum_i psi[j][i] theta_i`.
pub fn gl_v_action(psi: &Mat, thetas: &[Cocycle]) -> Result<Vec<Cocycle>, AutError> {
    let k = thetas.len();
    if psi.rows != k || psi.cols != k {
        return Err(AutError::Dimension(k));
    }
    if !psi.is_invertible() {
        return Err(AutError::Singular);
    }
    let f = psi.field;
    let m = thetas.first().map_or(0, |t| t.dim());
    let out = (0..k)
        .map(|j| {
            let mut diag = vec![f.zero(); m];
            for (i, t) in thetas.iter().enumerate() {
                let c = psi.get(j, i);
                if f.is_zero(c) {
                    continue;
                }
                for l in 0..m {
                    diag[l] = f.add(&diag[l], &f.mul(c, &t.diag[l]));
                }
            }
            Cocycle::new(f, diag)
        })
        .collect();
    Ok(out)
}

/// Backtracking search over invertible matrices `dom -> cod` satisfying the
/// evolution-algebra homomorphism constraints, with optional diagonal forms
/// on the codomain that the pullback must keep diagonal.
///
/// Columns are placed from the last basis vector down to the first; each
/// product constraint fires as soon as every column it mentions is placed,
/// which prunes the tree long before leaves.
struct Search<'a> {
    p: u64,
    m: usize,
    dom_rows: Vec<Vec<u64>>,
    cod_rows: Vec<Vec<u64>>,
    /// row-reduced basis of the codomain square rows, for feasibility cuts
    cod_rowspace: Vec<(usize, Vec<u64>)>,
    forms: &'a [Vec<u64>],
    schedule: Vec<Vec<(usize, usize)>>,
    order: Vec<usize>,
    cols: Vec<Vec<u64>>,
    placed: Vec<bool>,
    // echelon basis of the placed columns, for the invertibility prune
    echelon: Vec<(usize, Vec<u64>)>,
    nodes: u64,
    budget: u64,
}

enum SearchEnd {
    Done,
    Stopped,
    OverBudget,
}

impl<'a> Search<'a> {
    fn new(
        dom: &EvolutionAlgebra,
        cod: &EvolutionAlgebra,
        forms: &'a [Vec<u64>],
        budget: u64,
    ) -> Result<Search<'a>, AutError> {
        let m = dom.dim();
        if m > MAX_SEARCH_DIM {
            return Err(AutError::TooLarge { max: MAX_SEARCH_DIM, got: m });
        }
        let p = match dom.field() {
            Field::Fp { p } => p,
            Field::Rational => return Err(AutError::NotFinite),
        };
        let dom_rows = fp_rows(dom);
        let cod_rows = fp_rows(cod);
        // Constraint (i, j) can be evaluated once columns {i, j} and, for
        // i == j, the support of dom row i are all placed. With descending
        // placement that is the minimum involved index.
        let mut schedule = vec![Vec::new(); m];
        for i in 0..m {
            for j in i..m {
                let mut trigger = i.min(j);
                if i == j {
                    for (t, v) in dom_rows[i].iter().enumerate() {
                        if *v != 0 {
                            trigger = trigger.min(t);
                        }
                    }
                }
                schedule[trigger].push((i, j));
            }
        }
        let cod_rowspace = row_reduce(&cod_rows, p);
        Ok(Search {
            p,
            m,
            dom_rows,
            cod_rows,
            cod_rowspace,
            forms,
            schedule,
            order: (0..m).rev().collect(),
            cols: vec![vec![0; m]; m],
            placed: vec![false; m],
            echelon: Vec::new(),
            nodes: 0,
            budget,
        })
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<u64>]) -> ControlFlow<()>) -> SearchEnd {
        self.place(0, visit)
    }

    /// Places column `c`: constraints that are linear in the new column
    /// (mixed product pairs, supports of already-placed squares, diagonal
    /// form conditions) are solved exactly, and only the resulting affine
    /// space is enumerated; the remaining diagonal-square constraint is
    /// checked per candidate.
    fn place(&mut self, depth: usize, visit: &mut dyn FnMut(&[Vec<u64>]) -> ControlFlow<()>) -> SearchEnd {
        if depth == self.m {
            return match visit(&self.cols) {
                ControlFlow::Continue(()) => SearchEnd::Done,
                ControlFlow::Break(()) => SearchEnd::Stopped,
            };
        }
        let p = self.p;
        let m = self.m;
        let c = self.order[depth];

        let mut eqs: Vec<(Vec<u64>, u64)> = Vec::new();
        let mut quads: Vec<usize> = Vec::new();
        for &(i, j) in &self.schedule[c].clone() {
            if i != j {
                // i == c by the trigger rule; vanishing products are linear
                // in the new column once col_j is fixed
                for l in 0..m {
                    let mut a = vec![0u64; m];
                    let mut nonzero = false;
                    for k in 0..m {
                        a[k] = self.cols[j][k] * self.cod_rows[k][l] % p;
                        nonzero |= a[k] != 0;
                    }
                    if nonzero {
                        eqs.push((a, 0));
                    }
                }
            } else if i == c {
                quads.push(i);
                if self.dom_rows[c][c] == 0 {
                    // necessary condition: the image of the square row must
                    // lie in the codomain square span
                    let mut rhs = vec![0u64; m];
                    for l in 0..m {
                        let mut acc = 0u64;
                        for t in 0..m {
                            let v = self.dom_rows[c][t];
                            if v != 0 && t != c {
                                acc = (acc + v * self.cols[t][l]) % p;
                            }
                        }
                        rhs[l] = acc;
                    }
                    if !in_rowspace(&self.cod_rowspace, &rhs, p, m) {
                        return SearchEnd::Done;
                    }
                }
            } else {
                // square constraint of a placed column whose image needs the
                // new column: linear with coefficient dom[i][c]
                let coef = self.dom_rows[i][c];
                debug_assert_ne!(coef, 0);
                for l in 0..m {
                    let mut lhs = 0u64;
                    for k in 0..m {
                        let ck = self.cols[i][k];
                        if ck != 0 {
                            lhs = (lhs + ck * ck % p * self.cod_rows[k][l]) % p;
                        }
                    }
                    let mut known = 0u64;
                    for t in 0..m {
                        let v = self.dom_rows[i][t];
                        if v != 0 && t != c {
                            known = (known + v * self.cols[t][l]) % p;
                        }
                    }
                    let mut a = vec![0u64; m];
                    a[l] = coef;
                    eqs.push((a, (lhs + p - known) % p));
                }
            }
        }
        for form in self.forms {
            for e in 0..m {
                if e == c || !self.placed[e] {
                    continue;
                }
                let mut a = vec![0u64; m];
                let mut nonzero = false;
                for k in 0..m {
                    a[k] = form[k] * self.cols[e][k] % p;
                    nonzero |= a[k] != 0;
                }
                if nonzero {
                    eqs.push((a, 0));
                }
            }
        }

        self.nodes += 1;
        if self.nodes > self.budget {
            return SearchEnd::OverBudget;
        }
        let Some((particular, kernel)) = solve_affine(&eqs, p, m) else {
            return SearchEnd::Done;
        };
        let combos = (p as u128).pow(kernel.len() as u32);
        for idx in 0..combos {
            self.nodes += 1;
            if self.nodes > self.budget {
                return SearchEnd::OverBudget;
            }
            let mut t = idx;
            let mut col = particular.clone();
            for kv in kernel.iter().rev() {
                let coef = (t % p as u128) as u64;
                t /= p as u128;
                if coef != 0 {
                    for k in 0..m {
                        col[k] = (col[k] + coef * kv[k]) % p;
                    }
                }
            }
            self.cols[c] = col;
            if !self.quads_ok(c, &quads) {
                continue;
            }
            let Some(pivot_row) = self.push_echelon(c) else {
                continue;
            };
            self.placed[c] = true;
            let end = self.place(depth + 1, visit);
            self.placed[c] = false;
            self.pop_echelon(pivot_row);
            match end {
                SearchEnd::Done => {}
                other => return other,
            }
        }
        SearchEnd::Done
    }

    /// The diagonal square constraints left after the linear solve.
    fn quads_ok(&self, c: usize, quads: &[usize]) -> bool {
        let p = self.p;
        let m = self.m;
        for &i in quads {
            debug_assert_eq!(i, c);
            for l in 0..m {
                let mut lhs = 0u64;
                for k in 0..m {
                    let ck = self.cols[c][k];
                    if ck != 0 {
                        lhs = (lhs + ck * ck % p * self.cod_rows[k][l]) % p;
                    }
                }
                let mut rhs = 0u64;
                for t in 0..m {
                    let v = self.dom_rows[c][t];
                    if v != 0 {
                        rhs = (rhs + v * self.cols[t][l]) % p;
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn push_echelon(&mut self, c: usize) -> Option<usize> {
        let p = self.p;
        let mut v = self.cols[c].clone();
        for (pivot, row) in &self.echelon {
            if v[*pivot] != 0 {
                let factor = v[*pivot];
                for k in 0..self.m {
                    v[k] = (v[k] + (p - factor) * row[k]) % p;
                }
            }
        }
        let pivot = (0..self.m).find(|&k| v[k] != 0)?;
        let inv = mod_inv(v[pivot], p);
        for k in 0..self.m {
            v[k] = v[k] * inv % p;
        }
        self.echelon.push((pivot, v));
        Some(self.echelon.len() - 1)
    }

    fn pop_echelon(&mut self, idx: usize) {
        self.echelon.truncate(idx);
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

/// Row-reduces vectors over F_p into (pivot, normalized row) pairs.
fn row_reduce(rows: &[Vec<u64>], p: u64) -> Vec<(usize, Vec<u64>)> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for (pivot, b) in &basis {
            if v[*pivot] != 0 {
                let factor = v[*pivot];
                for k in 0..v.len() {
                    v[k] = (v[k] + (p - factor) * b[k]) % p;
                }
            }
        }
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = mod_inv(v[pivot], p);
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
            basis.push((pivot, v));
        }
    }
    basis
}

fn in_rowspace(basis: &[(usize, Vec<u64>)], v: &[u64], p: u64, m: usize) -> bool {
    let mut v = v.to_vec();
    for (pivot, b) in basis {
        if v[*pivot] != 0 {
            let factor = v[*pivot];
            for k in 0..m {
                v[k] = (v[k] + (p - factor) * b[k]) % p;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Solves a small affine system over F_p: returns a particular solution and
/// a kernel basis, or `None` when inconsistent.
fn solve_affine(eqs: &[(Vec<u64>, u64)], p: u64, m: usize) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
    if eqs.is_empty() {
        let kernel = (0..m)
            .map(|i| {
                let mut v = vec![0u64; m];
                v[i] = 1;
                v
            })
            .collect();
        return Some((vec![0u64; m], kernel));
    }
    // reduced echelon of the augmented system
    let mut rows: Vec<Vec<u64>> = eqs
        .iter()
        .map(|(a, r)| {
            let mut v = a.clone();
            v.push(*r);
            v
        })
        .collect();
    let n = m + 1;
    let nrows = rows.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..m {
        let Some(pr) = (rank..nrows).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = mod_inv(rows[rank][col], p);
        for k in 0..n {
            rows[rank][k] = rows[rank][k] * inv % p;
        }
        for i in 0..nrows {
            if i != rank && rows[i][col] != 0 {
                let factor = rows[i][col];
                for k in 0..n {
                    rows[i][k] = (rows[i][k] + (p - factor) * rows[rank][k]) % p;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // inconsistent when a zero row has nonzero augmented entry
    for row in rows.iter().skip(rank) {
        if row[m] != 0 {
            return None;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut particular = vec![0u64; m];
    for &(r, c) in &pivots {
        particular[c] = rows[r][m];
    }
    let mut kernel = Vec::new();
    for free in 0..m {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; m];
        v[free] = 1;
        for &(r, c) in &pivots {
            v[c] = (p - rows[r][free] % p) % p;
        }
        kernel.push(v);
    }
    Some((particular, kernel))
}

fn fp_rows(a: &EvolutionAlgebra) -> Vec<Vec<u64>> {
    let m = a.dim();
    (0..m)
        .map(|i| {
            a.square_row(i)
                .iter()
                .map(|e| match e {
                    Elem::Fp(v) => *v,
                    Elem::Rat(_) => unreachable!("finite-field search on rational algebra"),
                })
                .collect()
        })
        .collect()
}

fn cols_to_mat(field: Field, cols: &[Vec<u64>]) -> Mat {
    let m = cols.len();
    let mut out = Mat::zeros(field, m, m);
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            out.set(r, c, field.from_i64(*v as i64));
        }
    }
    out
}

fn fp_diag(t: &Cocycle) -> Vec<u64> {
    t.diag
        .iter()
        .map(|e| match e {
            Elem::Fp(v) => *v,
            Elem::Rat(_) => unreachable!("finite-field search on rational cocycle"),
        })
        .collect()
}

/// Enumerates the automorphism group of a finite-field algebra. Output is
/// deterministic: matrices appear in lexicographic order of the column
/// placement.
pub fn enumerate_aut(a: &EvolutionAlgebra, budget: u64) -> Result<Vec<Mat>, AutError> {
    let mut out = Vec::new();
    let mut search = Search::new(a, a, &[], budget)?;
    let field = a.field();
    let end = search.run(&mut |cols| {
        out.push(cols_to_mat(field, cols));
        ControlFlow::Continue(())
    });
    match end {
        SearchEnd::OverBudget => Err(AutError::BudgetExceeded { budget }),
        _ => Ok(out),
    }
}

pub fn count_aut(a: &EvolutionAlgebra, budget: u64) -> Result<u64, AutError> {
    let mut n = 0u64;
    let mut search = Search::new(a, a, &[], budget)?;
    let end = search.run(&mut |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    match end {
        SearchEnd::OverBudget => Err(AutError::BudgetExceeded { budget }),
        _ => Ok(n),
    }
}

/// First isomorphism `dom -> cod` found, if the algebras are isomorphic.
pub fn find_isomorphism(
    dom: &EvolutionAlgebra,
    cod: &EvolutionAlgebra,
    budget: u64,
) -> Result<Option<Mat>, AutError> {
    if dom.dim() != cod.dim() || dom.field() != cod.field() {
        return Ok(None);
    }
    let mut found = None;
    let field = dom.field();
    let mut search = Search::new(dom, cod, &[], budget)?;
    let end = search.run(&mut |cols| {
        found = Some(cols_to_mat(field, cols));
        ControlFlow::Break(())
    });
    match end {
        SearchEnd::OverBudget => Err(AutError::BudgetExceeded { budget }),
        _ => Ok(found),
    }
}

/// The orbit test deciding isomorphism of annihilator extensions over a
/// common base: extensions by `thetas` and `varthetas` are isomorphic
/// exactly when some automorphism pulls the vartheta classes onto a tuple
/// spanning the same subspace of H as the theta classes. Returns that
/// witness automorphism.
pub fn same_orbit(
    base: &EvolutionAlgebra,
    thetas: &[Cocycle],
    varthetas: &[Cocycle],
    budget: u64,
) -> Result<Option<Mat>, AutError> {
    same_orbit_mixed((base, thetas), (base, varthetas), budget)
}

/// Generalized orbit test for extensions over two presentations of the
/// base: searches isomorphisms `target base -> source base` whose pullback
/// of the source tuple stays diagonal and spans the target class subspace.
pub fn same_orbit_mixed(
    target: (&EvolutionAlgebra, &[Cocycle]),
    source: (&EvolutionAlgebra, &[Cocycle]),
    budget: u64,
) -> Result<Option<Mat>, AutError> {
    orbit_search(target, source, false, budget)
}

/// Sharper variant used for enumeration bucketing: requires the pullback
/// classes to equal the target classes componentwise in H, not merely span
/// the same subspace.
pub fn same_class_orbit(
    base: &EvolutionAlgebra,
    thetas: &[Cocycle],
    varthetas: &[Cocycle],
    budget: u64,
) -> Result<Option<Mat>, AutError> {
    orbit_search((base, thetas), (base, varthetas), true, budget)
}

fn orbit_search(
    target: (&EvolutionAlgebra, &[Cocycle]),
    source: (&EvolutionAlgebra, &[Cocycle]),
    exact_classes: bool,
    budget: u64,
) -> Result<Option<Mat>, AutError> {
    let (tbase, thetas) = target;
    let (sbase, varthetas) = source;
    if thetas.len() != varthetas.len() {
        return Err(AutError::LengthMismatch);
    }
    check_admissible(&ExtensionSpec::new(tbase.clone(), thetas.to_vec()))?;
    check_admissible(&ExtensionSpec::new(sbase.clone(), varthetas.to_vec()))?;
    if tbase.dim() != sbase.dim() || tbase.field() != sbase.field() {
        return Ok(None);
    }

    let field = tbase.field();
    let m = tbase.dim();
    let target_span = classes_span(tbase, thetas);
    let bspace = crate::cocycle::coboundary_space(tbase);
    let forms: Vec<Vec<u64>> = varthetas.iter().map(fp_diag).collect();
    let mut found = None;

    let mut search = Search::new(tbase, sbase, &forms, budget)?;
    let end = search.run(&mut |cols| {
        // Pullback diagonals: (w^T D w)_rr = sum_k D_k w[k][r]^2. The search
        // already guarantees the off-diagonal entries vanish.
        let p = match field {
            Field::Fp { p } => p,
            Field::Rational => unreachable!(),
        };
        let pulled: Vec<Cocycle> = forms
            .iter()
            .map(|d| {
                let diag = (0..m)
                    .map(|r| {
                        let mut acc = 0u64;
                        for k in 0..m {
                            if d[k] != 0 {
                                acc = (acc + d[k] * (cols[r][k] * cols[r][k] % p)) % p;
                            }
                        }
                        field.from_i64(acc as i64)
                    })
                    .collect();
                Cocycle::new(field, diag)
            })
            .collect();
        let matched = if exact_classes {
            pulled
                .iter()
                .zip(thetas)
                .all(|(pu, th)| bspace.contains(&pu.sub(th).diag))
        } else {
            classes_span(tbase, &pulled) == target_span
        };
        if matched {
            found = Some(cols_to_mat(field, cols));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match end {
        SearchEnd::OverBudget => Err(AutError::BudgetExceeded { budget }),
        _ => Ok(found),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::fp(3).unwrap()
    }

    #[test]
    fn identity_is_an_automorphism() {
        let a = EvolutionAlgebra::from_i64_rows(f3(), &[&[0, 1], &[0, 0]]);
        let id = Mat::identity(f3(), 2);
        assert!(is_automorphism(&a, &id).unwrap());
    }

    #[test]
    fn lower_triangular_family_on_the_line_extension() {
        // e1^2 = e2: maps [[a, 0], [b, a^2]] with a != 0
        let q = Field::rational();
        let a = EvolutionAlgebra::from_i64_rows(q, &[&[0, 1], &[0, 0]]);
        let phi = Mat::from_i64(q, &[&[3, 0], &[7, 9]]);
        assert!(is_automorphism(&a, &phi).unwrap());
        let bad = Mat::from_i64(q, &[&[3, 0], &[7, 10]]);
        assert!(!is_automorphism(&a, &bad).unwrap());
        let singular = Mat::from_i64(q, &[&[0, 0], &[7, 9]]);
        assert!(!is_automorphism(&a, &singular).unwrap());
    }

    #[test]
    fn swap_on_the_two_square_algebra() {
        // e1^2 = e3, e2^2 = e3: swapping e1, e2 and fixing e3 is an automorphism
        let q = Field::rational();
        let a = EvolutionAlgebra::from_i64_rows(q, &[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]]);
        let swap = Mat::from_i64(q, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert!(is_automorphism(&a, &swap).unwrap());
    }

    #[test]
    fn pullback_of_diagonal_map_rescales() {
        let q = Field::rational();
        let phi = Mat::from_i64(q, &[&[2, 0], &[0, 3]]);
        let theta = Cocycle::from_i64(q, &[1, 1]);
        let pulled = act_on_cocycle(&phi, &theta).unwrap();
        assert_eq!(pulled, Cocycle::from_i64(q, &[4, 9]));
        // a shear does not keep a generic form diagonal
        let mix = Mat::from_i64(q, &[&[1, 1], &[0, 1]]);
        assert_eq!(act_on_cocycle(&mix, &theta), None);
        assert_eq!(act_on_cocycle(&mix, &Cocycle::zero(q, 2)), Some(Cocycle::zero(q, 2)));
    }

    #[test]
    fn radical_dim_is_preserved() {
        let q = Field::rational();
        let phi = Mat::from_i64(q, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]);
        let theta = Cocycle::from_i64(q, &[0, 2, 0]);
        let (before, after) = radical_dims_under(&phi, &theta).unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn gl_v_mixes_components() {
        let q = Field::rational();
        let t1 = Cocycle::from_i64(q, &[1, 0]);
        let t2 = Cocycle::from_i64(q, &[0, 1]);
        let swap = Mat::from_i64(q, &[&[0, 1], &[1, 0]]);
        let out = gl_v_action(&swap, &[t1.clone(), t2.clone()]).unwrap();
        assert_eq!(out, vec![t2, t1.clone()]);
        let scale = Mat::from_i64(q, &[&[5]]);
        assert_eq!(
            gl_v_action(&scale, &[t1]).unwrap(),
            vec![Cocycle::from_i64(q, &[5, 0])]
        );
        let singular = Mat::from_i64(q, &[&[0]]);
        assert!(gl_v_action(&singular, &[Cocycle::from_i64(q, &[1, 0])]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // zero algebra of dim 2 over F_3: all of GL_2(F_3)
        let z2 = EvolutionAlgebra::zero_algebra(f3(), 2);
        assert_eq!(count_aut(&z2, 1 << 24).unwrap(), 48);

        // e1^2 = e2 over F_3: a in {1, 2}, b in {0, 1, 2}
        let a = EvolutionAlgebra::from_i64_rows(f3(), &[&[0, 1], &[0, 0]]);
        assert_eq!(count_aut(&a, 1 << 24).unwrap(), 6);

        // chain e1^2 = e2, e2^2 = e3 over F_5: diagonal family with one free
        // lower entry, 4 * 5 maps
        let f5 = Field::fp(5).unwrap();
        let chain = EvolutionAlgebra::from_i64_rows(f5, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(count_aut(&chain, 1 << 24).unwrap(), 20);
    }

    #[test]
    fn enumeration_yields_automorphisms() {
        let a = EvolutionAlgebra::from_i64_rows(f3(), &[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]]);
        let all = enumerate_aut(&a, 1 << 24).unwrap();
        assert!(!all.is_empty());
        for phi in &all {
            assert!(is_automorphism(&a, phi).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let z = EvolutionAlgebra::zero_algebra(f3(), 3);
        assert!(matches!(
            count_aut(&z, 10),
            Err(AutError::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn orbit_test_on_identical_tuples() {
        let a = EvolutionAlgebra::from_i64_rows(f3(), &[&[0, 1], &[0, 0]]);
        let t = vec![Cocycle::from_i64(f3(), &[0, 1])];
        let w = same_orbit(&a, &t, &t, 1 << 24).unwrap().unwrap();
        assert!(is_automorphism(&a, &w).unwrap());
    }

    #[test]
    fn orbit_test_distinguishes_det_classes_on_the_zero_plane() {
        // over the zero algebra the orbit test is plain congruence of
        // diagonal forms; over F_3, diag(1,1) and diag(1,2) differ by the
        // square class of the determinant
        let z2 = EvolutionAlgebra::zero_algebra(f3(), 2);
        let t1 = vec![Cocycle::from_i64(f3(), &[1, 1])];
        let t2 = vec![Cocycle::from_i64(f3(), &[1, 2])];
        assert!(same_orbit(&z2, &t1, &t2, 1 << 24).unwrap().is_none());
        // diag(2, 2) has square determinant again
        let t3 = vec![Cocycle::from_i64(f3(), &[2, 2])];
        assert!(same_orbit(&z2, &t1, &t3, 1 << 24).unwrap().is_some());
    }

    #[test]
    fn orbit_test_rejects_inadmissible() {
        let z2 = EvolutionAlgebra::zero_algebra(f3(), 2);
        let dep = vec![Cocycle::from_i64(f3(), &[1, 0])];
        // radical of d1 contains e2 which lies in the annihilator
        assert!(matches!(
            same_orbit(&z2, &dep, &dep, 1 << 24),
            Err(AutError::Inadmissible(_))
        ));
    }
}
