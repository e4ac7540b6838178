//! The full verification runs behind the `verify` command: entry structure
//! data, the published Psi values by both methods, witness automorphisms,
//! and the rigidity of the second family.

use crate::aut::{same_orbit, AutError};
use crate::catalog::{self, verify_entry, EntryReport, ParamRule, PsiClaim, PSI_CLAIMS};
use crate::cocycle::{psi_subspace, PsiSequence};
use crate::field::{Elem, Field};
use crate::witnesses::{
    verify_family_witnesses, verify_normalizing_witnesses, WitnessOutcome,
    NORMALIZING_WITNESSES,
};
use serde_json::json;

pub const PSI_VERIFY_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub field: Field,
    pub seed: u64,
    pub budget: u64,
    /// verified instantiations required per witness
    pub witness_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: Field::rational(),
            seed: 0x5eed,
            budget: crate::aut::DEFAULT_SEARCH_BUDGET,
            witness_samples: 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PsiOutcome {
    pub base: String,
    pub classes: String,
    pub expected: Vec<usize>,
    pub computed: Option<PsiSequence>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct RigidityOutcome {
    pub p: u64,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyRun {
    pub dim: usize,
    pub field: Field,
    pub entries: Vec<EntryReport>,
    pub psi: Vec<PsiOutcome>,
    pub witnesses: Vec<WitnessOutcome>,
    pub rigidity: Vec<RigidityOutcome>,
}

impl VerifyRun {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|r| r.pass())
            && self.psi.iter().all(|p| p.pass)
            && self.witnesses.iter().all(|w| w.pass)
            && self.rigidity.iter().all(|r| r.pass)
    }
}

fn sample_params(field: &Field, rule: ParamRule) -> Vec<Option<Elem>> {
    match (rule, field) {
        (ParamRule::None, _) => vec![None],
        (ParamRule::NotZeroOne, Field::Fp { p }) => {
            (2..*p).map(|a| Some(field.from_i64(a as i64))).collect()
        }
        (ParamRule::NotZeroOne, Field::Rational) => [2i64, 3, -1, 7]
            .iter()
            .map(|&a| Some(field.from_i64(a)))
            .collect(),
        (ParamRule::Any, Field::Fp { p }) => {
            (0..*p).map(|a| Some(field.from_i64(a as i64))).collect()
        }
        (ParamRule::Any, Field::Rational) => [0i64, 1, 2, -3]
            .iter()
            .map(|&a| Some(field.from_i64(a)))
            .collect(),
    }
}

fn claim_dim(c: &PsiClaim) -> usize {
    let base = catalog::entry(c.base).expect("claim bases exist");
    base.dim + c.classes.len()
}

fn run_psi_claims(dim: usize, field: &Field) -> Vec<PsiOutcome> {
    let mut out = Vec::new();
    for claim in PSI_CLAIMS {
        if claim_dim(claim) != dim {
            continue;
        }
        let alphas: Vec<Option<Elem>> = if claim.parametric {
            sample_params(field, ParamRule::NotZeroOne)
        } else {
            vec![None]
        };
        for alpha in alphas {
            let base = catalog::get(claim.base, *field, None).expect("claim bases exist");
            let classes = claim.cocycles(*field, alpha.as_ref());
            let computed = psi_subspace(&base, &classes, PSI_VERIFY_BUDGET).ok();
            let pass = computed
                .as_ref()
                .map(|p| p.0 == claim.expected)
                .unwrap_or(false);
            let label = match &alpha {
                Some(a) => format!("{} (a={})", claim.base, field.format(a)),
                None => claim.base.to_string(),
            };
            out.push(PsiOutcome {
                base: label,
                classes: classes
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
                expected: claim.expected.to_vec(),
                computed,
                pass,
            });
        }
    }
    out
}

/// Exhaustive rigidity check of the second family over F_p: distinct
/// parameters are never orbit-equal, equal ones always are.
pub fn verify_e523_rigidity(p: u64, budget: u64) -> Result<RigidityOutcome, AutError> {
    let field = Field::fp(p).expect("odd prime");
    let base = catalog::get("E_4_8", field, None).expect("catalog base");
    let theta = |a: u64| witnesses_theta_e523(&field, a);
    for a in 0..p {
        for b in 0..p {
            let w = same_orbit(&base, &theta(a), &theta(b), budget)?;
            let expected = a == b;
            if w.is_some() != expected {
                return Ok(RigidityOutcome {
                    p,
                    pass: false,
                    detail: format!(
                        "parameters {a} and {b}: orbit test returned {}, expected {}",
                        w.is_some(),
                        expected
                    ),
                });
            }
        }
    }
    Ok(RigidityOutcome {
        p,
        pass: true,
        detail: format!("all {p}x{p} parameter pairs behave rigidly"),
    })
}

fn witnesses_theta_e523(field: &Field, a: u64) -> Vec<crate::cocycle::Cocycle> {
    vec![catalog::e523_stated_theta(*field, &field.from_i64(a as i64))]
}

/// No swap-shaped automorphism ever keeps the stated family form diagonal,
/// mirroring the published refutation of the second matrix family.
pub fn verify_e523_no_swap_witness(p: u64) -> Result<bool, AutError> {
    let field = Field::fp(p).expect("odd prime");
    let base = catalog::get("E_4_8", field, None).expect("catalog base");
    let auts = crate::aut::enumerate_aut(&base, 1 << 26)?;
    for phi in &auts {
        if !field.is_zero(phi.get(0, 0)) {
            continue; // straight family
        }
        for a in 0..p {
            let theta = catalog::e523_stated_theta(field, &field.from_i64(a as i64));
            if crate::aut::act_on_cocycle(phi, &theta).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Runs every check attached to entries of the given dimension.
pub fn run_verify(dim: usize, opts: &VerifyOptions) -> VerifyRun {
    let field = opts.field;
    let mut entries = Vec::new();
    for e in catalog::entries_of_dim(dim) {
        for alpha in sample_params(&field, e.param) {
            let rep = verify_entry(e.name, field, alpha.as_ref())
                .expect("catalog entries verify structurally");
            entries.push(rep);
        }
    }

    let psi = run_psi_claims(dim, &field);

    let mut witnesses_out = Vec::new();
    let dim_witness_ids: Vec<&str> = NORMALIZING_WITNESSES
        .iter()
        .filter(|w| catalog::entry(w.entry).map(|e| e.dim) == Ok(dim))
        .map(|w| w.id)
        .collect();
    if !dim_witness_ids.is_empty() {
        let all = verify_normalizing_witnesses(opts.seed, opts.witness_samples, 2);
        witnesses_out.extend(
            all.into_iter()
                .filter(|o| dim_witness_ids.contains(&o.id.as_str())),
        );
    }

    let mut rigidity = Vec::new();
    if dim == 5 {
        witnesses_out.extend(
            verify_family_witnesses(13).expect("13 is prime"),
        );
        for p in [3u64, 5] {
            match verify_e523_rigidity(p, opts.budget) {
                Ok(r) => rigidity.push(r),
                Err(e) => rigidity.push(RigidityOutcome {
                    p,
                    pass: false,
                    detail: format!("search error: {e}"),
                }),
            }
        }
        match verify_e523_no_swap_witness(5) {
            Ok(true) => rigidity.push(RigidityOutcome {
                p: 5,
                pass: true,
                detail: "no swap-shaped map stabilizes the family form".into(),
            }),
            Ok(false) => rigidity.push(RigidityOutcome {
                p: 5,
                pass: false,
                detail: "a swap-shaped map stabilizes the family form".into(),
            }),
            Err(e) => rigidity.push(RigidityOutcome {
                p: 5,
                pass: false,
                detail: format!("search error: {e}"),
            }),
        }
    }

    VerifyRun {
        dim,
        field,
        entries,
        psi,
        witnesses: witnesses_out,
        rigidity,
    }
}

pub fn render_text(run: &VerifyRun) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "verify dim {} over {} -> {}\n",
        run.dim,
        run.field,
        if run.pass() { "PASS" } else { "FAIL" }
    ));
    for r in &run.entries {
        out.push_str(&format!(
            "  entry {:<18} {}\n",
            r.name,
            if r.pass() { "ok" } else { "MISMATCH" }
        ));
        if !r.pass() {
            for c in &r.checks {
                if !c.pass {
                    out.push_str(&format!("    FAIL {}: {}\n", c.label, c.detail));
                }
            }
        }
    }
    for p in &run.psi {
        out.push_str(&format!(
            "  psi   {:<24} [{}] expected ({}) computed {} -> {}\n",
            p.base,
            p.classes,
            p.expected
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            p.computed
                .as_ref()
                .map(|s| s.to_string())
                .unwrap_or_else(|| "unsupported".into()),
            if p.pass { "ok" } else { "FAIL" }
        ));
    }
    if !run.witnesses.is_empty() {
        let by_pass = run.witnesses.iter().filter(|w| w.pass).count();
        out.push_str(&format!(
            "  witnesses: {}/{} instantiations verified\n",
            by_pass,
            run.witnesses.len()
        ));
        for w in run.witnesses.iter().filter(|w| !w.pass) {
            out.push_str(&format!("    FAIL {} over {}: {}\n", w.id, w.field, w.detail));
        }
    }
    for r in &run.rigidity {
        out.push_str(&format!(
            "  rigidity over F_{}: {} ({})\n",
            r.p,
            if r.pass { "ok" } else { "FAIL" },
            r.detail
        ));
    }
    out
}

pub fn render_json(run: &VerifyRun) -> serde_json::Value {
    json!({
        "dim": run.dim,
        "field": crate::json::FieldJson::of(run.field),
        "pass": run.pass(),
        "entries": run.entries.iter().map(|r| json!({
            "name": r.name,
            "pass": r.pass(),
            "checks": r.checks.iter().map(|c| json!({
                "label": c.label,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "psi": run.psi.iter().map(|p| json!({
            "base": p.base,
            "classes": p.classes,
            "expected": p.expected,
            "computed": p.computed.as_ref().map(|s| s.0.clone()),
            "pass": p.pass,
        })).collect::<Vec<_>>(),
        "witnesses": run.witnesses.iter().map(|w| json!({
            "id": w.id,
            "field": w.field.to_string(),
            "params": w.params.iter().map(|e| w.field.format(e)).collect::<Vec<_>>(),
            "pass": w.pass,
            "detail": w.detail,
            "matrix": w.matrix,
            "roots": w.roots.iter().map(|(of, k)| json!({
                "root": {"of": of, "k": k},
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "rigidity": run.rigidity.iter().map(|r| json!({
            "p": r.p,
            "pass": r.pass,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_dims_one_to_four_over_q() {
        for dim in 1..=4 {
            let run = run_verify(dim, &VerifyOptions::default());
            assert!(run.pass(), "{}", render_text(&run));
        }
    }

    #[test]
    fn psi_claims_match_over_q_and_f5() {
        for field in [Field::rational(), Field::fp(5).unwrap()] {
            for dim in 4..=5 {
                let outcomes = run_psi_claims(dim, &field);
                for o in &outcomes {
                    assert!(o.pass, "{} [{}] over {field}", o.base, o.classes);
                }
            }
        }
    }

    #[test]
    fn rigidity_over_f3() {
        let r = verify_e523_rigidity(3, 1 << 26).unwrap();
        assert!(r.pass, "{}", r.detail);
        assert!(verify_e523_no_swap_witness(5).unwrap());
    }
}
