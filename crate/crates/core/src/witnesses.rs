//! Witness automorphisms: the five maps realizing the parameter identities
//! of the one-parameter family over the three-square base, and the
//! normalizing automorphisms used to reduce a general cocycle to each
//! catalog representative.
//!
//! Witness entries involving square (or higher) roots are materialized over
//! a prime field where the required roots exist; the class equation is then
//! checked exactly.

use crate::algebra::EvolutionAlgebra;
use crate::aut::{act_on_cocycle, is_automorphism};
use crate::catalog::{self, CatalogError};
use crate::cocycle::{class_eq, Cocycle};
use crate::field::{Elem, Field};
use crate::linalg::Mat;
use crate::rng::SplitMix64;

/// A fully materialized witness: the automorphism, the input cocycle tuple,
/// and the claimed pullback classes with their scalars.
#[derive(Debug, Clone)]
pub struct WitnessCheck {
    pub base: EvolutionAlgebra,
    pub phi: Mat,
    pub input: Vec<Cocycle>,
    /// [phi . input_j] must equal lambda_j [target_j] in H.
    pub expected: Vec<(Cocycle, Elem)>,
}

/// Runs a materialized witness check; `Ok(())` means the map is an
/// automorphism, every pullback stays diagonal, and every class equation
/// holds exactly.
pub fn run_check(check: &WitnessCheck) -> Result<(), String> {
    if !is_automorphism(&check.base, &check.phi).map_err(|e| e.to_string())? {
        return Err("map is not an automorphism".into());
    }
    for (j, theta) in check.input.iter().enumerate() {
        let Some(pulled) = act_on_cocycle(&check.phi, theta) else {
            return Err(format!("pullback of component {j} is not diagonal"));
        };
        let (target, lambda) = &check.expected[j];
        let scaled = target.scale(lambda);
        if !class_eq(&check.base, &pulled, &scaled) {
            return Err(format!(
                "component {j}: pullback {pulled} is not {lambda:?} times {target} modulo coboundaries"
            ));
        }
    }
    Ok(())
}

fn first_root(field: &Field, v: &Elem, k: u32) -> Option<Elem> {
    field.kth_roots(v, k).ok()?.into_iter().next()
}

fn diag_mat(field: Field, entries: &[Elem]) -> Mat {
    let n = entries.len();
    let mut m = Mat::zeros(field, n, n);
    for (i, e) in entries.iter().enumerate() {
        m.set(i, i, e.clone());
    }
    m
}

fn cocycle(field: Field, m: usize, entries: &[(usize, &Elem)]) -> Cocycle {
    let mut diag = vec![field.zero(); m];
    for (i, e) in entries {
        diag[*i] = (*e).clone();
    }
    Cocycle::new(field, diag)
}

fn base_algebra(name: &str, field: Field) -> EvolutionAlgebra {
    catalog::get(name, field, None).expect("witness bases exist")
}

/// theta_a = d2 + a d3 + d4 over the three-square base of the family.
pub fn family_theta(field: Field, alpha: &Elem) -> Cocycle {
    let one = field.one();
    cocycle(field, 4, &[(1, &one), (2, alpha), (3, &one)])
}

/// One of the five isomorphism witnesses of the one-parameter family.
pub struct FamilyWitness {
    pub id: &'static str,
    /// value whose square root the matrix needs, as a label for reports
    pub root_label: &'static str,
    /// partner parameter reached from alpha
    pub beta: fn(&Field, &Elem) -> Elem,
    /// scalar lambda in the class equation
    pub lambda: fn(&Field, &Elem) -> Elem,
    pub instantiate: fn(Field, &Elem) -> Option<WitnessCheck>,
}

fn family_check(field: Field, alpha: &Elem, phi: Mat, w: &FamilyWitness) -> WitnessCheck {
    let beta = (w.beta)(&field, alpha);
    let lambda = (w.lambda)(&field, alpha);
    WitnessCheck {
        base: base_algebra("E_4_5", field),
        phi,
        input: vec![family_theta(field, alpha)],
        expected: vec![(family_theta(field, &beta), lambda)],
    }
}

pub static FAMILY_WITNESSES: &[FamilyWitness] = &[
    // beta = 1/alpha: scale by sqrt(alpha) and swap the second and third axes
    FamilyWitness {
        id: "inverse",
        root_label: "a",
        beta: |f, a| f.inv(a).expect("alpha nonzero"),
        lambda: |f, a| f.mul(a, a),
        instantiate: |f, a| {
            let r = first_root(&f, a, 2)?;
            let z = f.zero();
            let phi = Mat::from_rows(
                f,
                vec![
                    vec![f.neg(&r), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), r.clone(), z.clone()],
                    vec![z.clone(), r.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), a.clone()],
                ],
            );
            Some(family_check(f, a, phi, &FAMILY_WITNESSES[0]))
        },
    },
    // beta = 1 - alpha: swap the first two axes with a root of -1
    FamilyWitness {
        id: "one_minus",
        root_label: "-1",
        beta: |f, a| f.sub(&f.one(), a),
        lambda: |f, _| f.one(),
        instantiate: |f, a| {
            let i = first_root(&f, &f.from_i64(-1), 2)?;
            let z = f.zero();
            let phi = Mat::from_rows(
                f,
                vec![
                    vec![z.clone(), i.clone(), z.clone(), z.clone()],
                    vec![i.clone(), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), i.clone(), z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), f.from_i64(-1)],
                ],
            );
            Some(family_check(f, a, phi, &FAMILY_WITNESSES[1]))
        },
    },
    // beta = 1/(1-alpha): downward three-cycle scaled by sqrt(alpha - 1)
    FamilyWitness {
        id: "inverse_one_minus",
        root_label: "a-1",
        beta: |f, a| f.inv(&f.sub(&f.one(), a)).expect("alpha != 1"),
        lambda: |f, a| {
            let d = f.sub(a, &f.one());
            f.mul(&d, &d)
        },
        instantiate: |f, a| {
            let am1 = f.sub(a, &f.one());
            let s = first_root(&f, &am1, 2)?;
            let z = f.zero();
            let phi = Mat::from_rows(
                f,
                vec![
                    vec![z.clone(), z.clone(), s.clone(), z.clone()],
                    vec![s.clone(), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), s.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), am1.clone()],
                ],
            );
            Some(family_check(f, a, phi, &FAMILY_WITNESSES[2]))
        },
    },
    // beta = alpha/(alpha-1): upward three-cycle scaled by sqrt(1 - alpha)
    FamilyWitness {
        id: "ratio",
        root_label: "1-a",
        beta: |f, a| f.div(a, &f.sub(a, &f.one())).expect("alpha != 1"),
        lambda: |f, a| {
            let d = f.sub(a, &f.one());
            f.mul(&d, &d)
        },
        instantiate: |f, a| {
            let om = f.sub(&f.one(), a);
            let w = first_root(&f, &om, 2)?;
            let z = f.zero();
            let phi = Mat::from_rows(
                f,
                vec![
                    vec![z.clone(), z.clone(), w.clone(), z.clone()],
                    vec![z.clone(), w.clone(), z.clone(), z.clone()],
                    vec![w.clone(), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), om.clone()],
                ],
            );
            Some(family_check(f, a, phi, &FAMILY_WITNESSES[3]))
        },
    },
    // beta = (alpha-1)/alpha: signed swap scaled by sqrt(-alpha)
    FamilyWitness {
        id: "inverse_ratio",
        root_label: "-a",
        beta: |f, a| f.div(&f.sub(a, &f.one()), a).expect("alpha nonzero"),
        lambda: |f, a| f.mul(a, a),
        instantiate: |f, a| {
            let na = f.neg(a);
            let u = first_root(&f, &na, 2)?;
            let z = f.zero();
            let phi = Mat::from_rows(
                f,
                vec![
                    vec![z.clone(), u.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), u.clone(), z.clone()],
                    vec![f.neg(&u), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), na.clone()],
                ],
            );
            Some(family_check(f, a, phi, &FAMILY_WITNESSES[4]))
        },
    },
];

/// A normalizing automorphism from a derivation section: reduces a general
/// admissible cocycle with nonzero parameters to the catalog representative.
pub struct NormalizingWitness {
    pub id: &'static str,
    /// entry whose derivation this witness normalizes
    pub entry: &'static str,
    pub base: &'static str,
    pub param_count: usize,
    /// labels of the root requests, for reports and the JSON interface
    pub root_requests: &'static [(&'static str, u32)],
    /// None when a required root does not exist over the field
    pub instantiate: fn(Field, &[Elem]) -> Option<WitnessCheck>,
}

fn inv(f: &Field, e: &Elem) -> Elem {
    f.inv(e).expect("parameters are nonzero")
}

pub static NORMALIZING_WITNESSES: &[NormalizingWitness] = &[
    NormalizingWitness {
        id: "norm_three_squares",
        entry: "E_4_5",
        base: "E_3_1",
        param_count: 3,
        root_requests: &[("a1", 2), ("a2", 2), ("a3", 2)],
        instantiate: |f, p| {
            let roots: Vec<Elem> = p
                .iter()
                .map(|a| first_root(&f, a, 2))
                .collect::<Option<_>>()?;
            let phi = diag_mat(f, &[inv(&f, &roots[0]), inv(&f, &roots[1]), inv(&f, &roots[2])]);
            let one = f.one();
            Some(WitnessCheck {
                base: base_algebra("E_3_1", f),
                phi,
                input: vec![cocycle(f, 3, &[(0, &p[0]), (1, &p[1]), (2, &p[2])])],
                expected: vec![(
                    cocycle(f, 3, &[(0, &one), (1, &one), (2, &one)]),
                    one.clone(),
                )],
            })
        },
    },
    NormalizingWitness {
        id: "norm_line_plus_pair",
        entry: "E_4_6",
        base: "E_3_2",
        param_count: 2,
        root_requests: &[("a1", 4), ("a2", 2)],
        instantiate: |f, p| {
            let r = first_root(&f, &p[0], 4)?;
            let s = first_root(&f, &p[1], 2)?;
            let d1 = inv(&f, &r);
            let d2 = f.mul(&d1, &d1);
            let phi = diag_mat(f, &[d1, d2, inv(&f, &s)]);
            let one = f.one();
            Some(WitnessCheck {
                base: base_algebra("E_3_2", f),
                phi,
                input: vec![cocycle(f, 3, &[(1, &p[0]), (2, &p[1])])],
                expected: vec![(cocycle(f, 3, &[(1, &one), (2, &one)]), one.clone())],
            })
        },
    },
    NormalizingWitness {
        id: "norm_two_squares_tilt",
        entry: "E_4_8",
        base: "E_3_3",
        param_count: 2,
        root_requests: &[("a1/a2", 2)],
        instantiate: |f, p| {
            let ratio = f.div(&p[0], &p[1]).expect("nonzero");
            let s = first_root(&f, &ratio, 2)?;
            let s2 = f.mul(&s, &s);
            let phi = diag_mat(f, &[s.clone(), s.clone(), s2]);
            let one = f.one();
            let lambda = f.div(&f.mul(&p[0], &p[0]), &p[1]).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_3_3", f),
                phi,
                input: vec![cocycle(f, 3, &[(0, &p[0]), (2, &p[1])])],
                expected: vec![(cocycle(f, 3, &[(0, &one), (2, &one)]), lambda)],
            })
        },
    },
    NormalizingWitness {
        id: "norm_four_squares",
        entry: "E_5_11",
        base: "E_4_1",
        param_count: 4,
        root_requests: &[("a1", 2), ("a2", 2), ("a3", 2), ("a4", 2)],
        instantiate: |f, p| {
            let roots: Vec<Elem> = p
                .iter()
                .map(|a| first_root(&f, a, 2))
                .collect::<Option<_>>()?;
            let inv_roots: Vec<Elem> = roots.iter().map(|r| inv(&f, r)).collect();
            let phi = diag_mat(f, &inv_roots);
            let one = f.one();
            Some(WitnessCheck {
                base: base_algebra("E_4_1", f),
                phi,
                input: vec![cocycle(
                    f,
                    4,
                    &[(0, &p[0]), (1, &p[1]), (2, &p[2]), (3, &p[3])],
                )],
                expected: vec![(
                    cocycle(f, 4, &[(0, &one), (1, &one), (2, &one), (3, &one)]),
                    one.clone(),
                )],
            })
        },
    },
    NormalizingWitness {
        id: "norm_line_plus_three",
        entry: "E_5_12",
        base: "E_4_2",
        param_count: 3,
        root_requests: &[("a1", 4), ("a2", 2), ("a3", 2)],
        instantiate: |f, p| {
            let r = first_root(&f, &p[0], 4)?;
            let s2 = first_root(&f, &p[1], 2)?;
            let s3 = first_root(&f, &p[2], 2)?;
            let d1 = inv(&f, &r);
            let d2 = f.mul(&d1, &d1);
            let phi = diag_mat(f, &[d1, d2, inv(&f, &s2), inv(&f, &s3)]);
            let one = f.one();
            Some(WitnessCheck {
                base: base_algebra("E_4_2", f),
                phi,
                input: vec![cocycle(f, 4, &[(1, &p[0]), (2, &p[1]), (3, &p[2])])],
                expected: vec![(
                    cocycle(f, 4, &[(1, &one), (2, &one), (3, &one)]),
                    one.clone(),
                )],
            })
        },
    },
    NormalizingWitness {
        id: "norm_pair_tail",
        entry: "E_5_13",
        base: "E_4_3",
        param_count: 2,
        root_requests: &[("a2", 4), ("a3", 2)],
        instantiate: |f, p| {
            let r = first_root(&f, &p[0], 4)?;
            let s = first_root(&f, &p[1], 2)?;
            let d1 = inv(&f, &r);
            let d3 = f.mul(&d1, &d1);
            let phi = diag_mat(f, &[d1.clone(), d1, d3, inv(&f, &s)]);
            let one = f.one();
            Some(WitnessCheck {
                base: base_algebra("E_4_3", f),
                phi,
                input: vec![cocycle(f, 4, &[(2, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(2, &one), (3, &one)]), one.clone())],
            })
        },
    },
    NormalizingWitness {
        id: "norm_pair_tail_tilt",
        entry: "E_5_14",
        base: "E_4_3",
        param_count: 3,
        root_requests: &[("a1/a2", 2), ("a2*a3", 2)],
        instantiate: |f, p| {
            let ratio = f.div(&p[0], &p[1]).expect("nonzero");
            let s = first_root(&f, &ratio, 2)?;
            let t = first_root(&f, &f.mul(&p[1], &p[2]), 2)?;
            let s2 = f.mul(&s, &s);
            let d4 = f.div(&p[0], &t).expect("nonzero");
            let phi = diag_mat(f, &[s.clone(), s, s2, d4]);
            let one = f.one();
            let lambda = f.div(&f.mul(&p[0], &p[0]), &p[1]).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_4_3", f),
                phi,
                input: vec![cocycle(f, 4, &[(0, &p[0]), (2, &p[1]), (3, &p[2])])],
                expected: vec![(
                    cocycle(f, 4, &[(0, &one), (2, &one), (3, &one)]),
                    lambda,
                )],
            })
        },
    },
    NormalizingWitness {
        id: "norm_chain_tail",
        entry: "E_5_15",
        base: "E_4_4",
        param_count: 2,
        root_requests: &[("a1", 8), ("a2", 2)],
        instantiate: |f, p| {
            let r = first_root(&f, &p[0], 8)?;
            let s = first_root(&f, &p[1], 2)?;
            let d1 = inv(&f, &r);
            let d2 = f.mul(&d1, &d1);
            let d3 = f.mul(&d2, &d2);
            let phi = diag_mat(f, &[d1, d2, d3, inv(&f, &s)]);
            let one = f.one();
            Some(WitnessCheck {
                base: base_algebra("E_4_4", f),
                phi,
                input: vec![cocycle(f, 4, &[(2, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(2, &one), (3, &one)]), one.clone())],
            })
        },
    },
    NormalizingWitness {
        id: "norm_fan_second",
        entry: "E_5_17",
        base: "E_4_5",
        param_count: 2,
        root_requests: &[("a1/a3", 2)],
        instantiate: |f, p| {
            let ratio = f.div(&p[0], &p[1]).expect("nonzero");
            let s = first_root(&f, &ratio, 2)?;
            let s2 = f.mul(&s, &s);
            let phi = diag_mat(f, &[s.clone(), s.clone(), s, s2]);
            let one = f.one();
            let lambda = f.div(&f.mul(&p[0], &p[0]), &p[1]).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_4_5", f),
                phi,
                input: vec![cocycle(f, 4, &[(1, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(1, &one), (3, &one)]), lambda)],
            })
        },
    },
    NormalizingWitness {
        id: "norm_fan_third",
        entry: "E_5_17",
        base: "E_4_5",
        param_count: 2,
        root_requests: &[("a2/a3", 2)],
        instantiate: |f, p| {
            let ratio = f.div(&p[0], &p[1]).expect("nonzero");
            let s = first_root(&f, &ratio, 2)?;
            let s2 = f.mul(&s, &s);
            let z = f.zero();
            let phi = Mat::from_rows(
                f,
                vec![
                    vec![s.clone(), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), s.clone(), z.clone()],
                    vec![z.clone(), s.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), s2],
                ],
            );
            let one = f.one();
            let lambda = f.div(&f.mul(&p[0], &p[0]), &p[1]).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_4_5", f),
                phi,
                input: vec![cocycle(f, 4, &[(2, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(1, &one), (3, &one)]), lambda)],
            })
        },
    },
    NormalizingWitness {
        id: "norm_fan_equal",
        entry: "E_5_17",
        base: "E_4_5",
        param_count: 2,
        root_requests: &[("-a1/a3", 2)],
        instantiate: |f, p| {
            let ratio = f.neg(&f.div(&p[0], &p[1]).expect("nonzero"));
            let u = first_root(&f, &ratio, 2)?;
            let z = f.zero();
            let phi = Mat::from_rows(
                f,
                vec![
                    vec![z.clone(), u.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), u.clone(), z.clone()],
                    vec![u.clone(), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), ratio.clone()],
                ],
            );
            let one = f.one();
            let lambda = f.div(&f.mul(&p[0], &p[0]), &p[1]).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_4_5", f),
                phi,
                input: vec![cocycle(f, 4, &[(1, &p[0]), (2, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(1, &one), (3, &one)]), lambda)],
            })
        },
    },
    NormalizingWitness {
        id: "norm_family_canonical",
        entry: "E_5_18",
        base: "E_4_5",
        param_count: 3,
        root_requests: &[("a1/a3", 2)],
        instantiate: |f, p| {
            let ratio = f.div(&p[0], &p[2]).expect("nonzero");
            let s = first_root(&f, &ratio, 2)?;
            let s2 = f.mul(&s, &s);
            let phi = diag_mat(f, &[s.clone(), s.clone(), s, s2]);
            let one = f.one();
            let lambda = f.div(&f.mul(&p[0], &p[0]), &p[2]).expect("nonzero");
            let new_alpha = f.div(&p[1], &p[0]).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_4_5", f),
                phi,
                input: vec![cocycle(f, 4, &[(1, &p[0]), (2, &p[1]), (3, &p[2])])],
                expected: vec![(
                    cocycle(f, 4, &[(1, &one), (2, &new_alpha), (3, &one)]),
                    lambda,
                )],
            })
        },
    },
    NormalizingWitness {
        id: "norm_ladder",
        entry: "E_5_20",
        base: "E_4_6",
        param_count: 2,
        root_requests: &[("a1/a2", 4)],
        instantiate: |f, p| {
            let ratio = f.div(&p[0], &p[1]).expect("nonzero");
            let r = first_root(&f, &ratio, 4)?;
            let r2 = f.mul(&r, &r);
            let r4 = f.mul(&r2, &r2);
            let phi = diag_mat(f, &[r, r2.clone(), r2, r4]);
            let one = f.one();
            let lambda = f.div(&f.mul(&p[0], &p[0]), &p[1]).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_4_6", f),
                phi,
                input: vec![cocycle(f, 4, &[(2, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(2, &one), (3, &one)]), lambda)],
            })
        },
    },
    NormalizingWitness {
        id: "norm_tower",
        entry: "E_5_22",
        base: "E_4_7",
        param_count: 2,
        root_requests: &[("a1/a2", 6)],
        instantiate: |f, p| {
            let ratio = f.div(&p[0], &p[1]).expect("nonzero");
            let t = first_root(&f, &ratio, 6)?;
            let t2 = f.mul(&t, &t);
            let t4 = f.mul(&t2, &t2);
            let t8 = f.mul(&t4, &t4);
            let phi = diag_mat(f, &[t.clone(), t, t2, t4]);
            let one = f.one();
            let lambda = f.mul(&t8, &p[1]);
            Some(WitnessCheck {
                base: base_algebra("E_4_7", f),
                phi,
                input: vec![cocycle(f, 4, &[(1, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(1, &one), (3, &one)]), lambda)],
            })
        },
    },
    NormalizingWitness {
        id: "norm_split_pair",
        entry: "E_5_25",
        base: "E_4_10",
        param_count: 2,
        root_requests: &[("a1", 4), ("a2", 4)],
        instantiate: |f, p| {
            let r1 = first_root(&f, &p[0], 4)?;
            let r2 = first_root(&f, &p[1], 4)?;
            let d1 = inv(&f, &r1);
            let d2 = inv(&f, &r2);
            let d3 = f.mul(&d1, &d1);
            let d4 = f.mul(&d2, &d2);
            let phi = diag_mat(f, &[d1, d2, d3, d4]);
            let one = f.one();
            Some(WitnessCheck {
                base: base_algebra("E_4_10", f),
                phi,
                input: vec![cocycle(f, 4, &[(2, &p[0]), (3, &p[1])])],
                expected: vec![(cocycle(f, 4, &[(2, &one), (3, &one)]), one.clone())],
            })
        },
    },
    NormalizingWitness {
        id: "norm_plane_split",
        entry: "E_5_26",
        base: "E_3_1",
        param_count: 1,
        root_requests: &[("b", 2)],
        instantiate: |f, p| {
            let s = first_root(&f, &p[0], 2)?;
            let one = f.one();
            let phi = diag_mat(f, &[one.clone(), one.clone(), inv(&f, &s)]);
            Some(WitnessCheck {
                base: base_algebra("E_3_1", f),
                phi,
                input: vec![
                    cocycle(f, 3, &[(0, &one)]),
                    cocycle(f, 3, &[(1, &one), (2, &p[0])]),
                ],
                expected: vec![
                    (cocycle(f, 3, &[(0, &one)]), one.clone()),
                    (cocycle(f, 3, &[(1, &one), (2, &one)]), one.clone()),
                ],
            })
        },
    },
    NormalizingWitness {
        id: "norm_plane_tilt",
        entry: "E_5_27",
        base: "E_3_1",
        param_count: 2,
        root_requests: &[("b/a", 2), ("a", 2)],
        instantiate: |f, p| {
            let (a, b) = (&p[0], &p[1]);
            let s = first_root(&f, &f.div(b, a).expect("nonzero"), 2)?;
            let t = first_root(&f, a, 2)?;
            let one = f.one();
            let phi = diag_mat(f, &[one.clone(), s, inv(&f, &t)]);
            let lambda2 = f.div(b, a).expect("nonzero");
            Some(WitnessCheck {
                base: base_algebra("E_3_1", f),
                phi,
                input: vec![
                    cocycle(f, 3, &[(0, &one), (2, a)]),
                    cocycle(f, 3, &[(1, &one), (2, b)]),
                ],
                expected: vec![
                    (cocycle(f, 3, &[(0, &one), (2, &one)]), one.clone()),
                    (cocycle(f, 3, &[(1, &one), (2, &one)]), lambda2),
                ],
            })
        },
    },
];

/// Primes tried when materializing root-bearing witnesses.
pub const WITNESS_PRIMES: &[u64] = &[13, 17, 29, 37, 41, 53, 61, 73, 89, 97];

#[derive(Debug, Clone)]
pub struct WitnessOutcome {
    pub id: String,
    pub field: Field,
    pub params: Vec<Elem>,
    pub pass: bool,
    pub detail: String,
    /// the materialized matrix, row by row, when instantiation succeeded
    pub matrix: Option<Vec<Vec<String>>>,
    /// root requests behind the matrix entries
    pub roots: Vec<(String, u32)>,
}

fn format_matrix(field: &Field, m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows)
        .map(|i| m.row(i).iter().map(|e| field.format(e)).collect())
        .collect()
}

/// Samples nonzero parameters over the witness primes and verifies each
/// normalizing witness wherever its roots exist. Returns one outcome per
/// successful instantiation; `min_instances` failures to instantiate at all
/// is reported as a failing outcome.
pub fn verify_normalizing_witnesses(
    seed: u64,
    samples_per_prime: usize,
    min_instances: usize,
) -> Vec<WitnessOutcome> {
    let mut out = Vec::new();
    for w in NORMALIZING_WITNESSES {
        let mut rng = SplitMix64::new(seed ^ fxhash(w.id));
        let mut instances = 0usize;
        'primes: for &p in WITNESS_PRIMES {
            let field = Field::fp(p).expect("witness primes are odd primes");
            // draw until the witness materializes often enough; root
            // existence thins the samples, so allow generous retries
            let attempts = samples_per_prime * (1 << w.root_requests.len().min(6));
            for _ in 0..attempts {
                let params: Vec<Elem> = (0..w.param_count)
                    .map(|_| field.from_i64(rng.nonzero_below(p) as i64))
                    .collect();
                let Some(check) = (w.instantiate)(field, &params) else {
                    continue;
                };
                instances += 1;
                let result = run_check(&check);
                out.push(WitnessOutcome {
                    id: w.id.to_string(),
                    field,
                    params: params.clone(),
                    pass: result.is_ok(),
                    detail: result.err().unwrap_or_default(),
                    matrix: Some(format_matrix(&field, &check.phi)),
                    roots: w.root_requests.iter().map(|(l, k)| (l.to_string(), *k)).collect(),
                });
                if instances >= min_instances.max(samples_per_prime) {
                    break 'primes;
                }
            }
        }
        if instances < min_instances {
            out.push(WitnessOutcome {
                id: w.id.to_string(),
                field: Field::Rational,
                params: vec![],
                pass: false,
                detail: format!(
                    "only {instances} instantiations found (need {min_instances}); no prime \
                     within the list admits the required roots"
                ),
                matrix: None,
                roots: w.root_requests.iter().map(|(l, k)| (l.to_string(), *k)).collect(),
            });
        }
    }
    out
}

/// Verifies each family witness for every parameter over the given prime
/// where its roots exist; returns outcomes plus the count of instantiations.
pub fn verify_family_witnesses(p: u64) -> Result<Vec<WitnessOutcome>, CatalogError> {
    let field = Field::fp(p).expect("odd prime");
    let mut out = Vec::new();
    for w in FAMILY_WITNESSES {
        let mut instances = 0;
        for a in 2..p {
            let alpha = field.from_i64(a as i64);
            // family parameter must stay off {0, 1}
            if field.is_zero(&alpha) || alpha == field.one() {
                continue;
            }
            let Some(check) = (w.instantiate)(field, &alpha) else {
                continue;
            };
            instances += 1;
            let result = run_check(&check);
            out.push(WitnessOutcome {
                id: w.id.to_string(),
                field,
                params: vec![alpha],
                pass: result.is_ok(),
                detail: result.err().unwrap_or_default(),
                matrix: Some(format_matrix(&field, &check.phi)),
                roots: vec![(w.root_label.to_string(), 2)],
            });
        }
        if instances == 0 {
            out.push(WitnessOutcome {
                id: w.id.to_string(),
                field,
                params: vec![],
                pass: false,
                detail: "no parameter admits the required root over this prime".into(),
                matrix: None,
                roots: vec![(w.root_label.to_string(), 2)],
            });
        }
    }
    Ok(out)
}

fn fxhash(s: &str) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}
