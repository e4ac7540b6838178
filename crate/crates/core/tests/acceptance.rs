//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! 1. structure tables of dimensions 1-4 reproduce exactly
//! 2. the 19 dimension-5 extension derivations match their tables verbatim
//! 3. the published Psi values agree across both computation methods
//! 4. the lemma identities hold on randomized instances over F_5
//! 5. the first family: polynomial identity plus the full orbit law on F_13
//! 6. the second family is rigid over F_3 and F_5
//! 7. enumeration over F_3 covers every derived dimension-5 entry exactly once
//! 8. pairwise non-isomorphism of the dimension-5 list with no inconclusives

use evoclass_core::algebra::EvolutionAlgebra;
use evoclass_core::aut::{act_on_cocycle, is_isomorphism, same_orbit, same_orbit_mixed};
use evoclass_core::aut_shapes::AUT_SHAPES;
use evoclass_core::catalog::{self, Derivation, ParamRule};
use evoclass_core::cocycle::{psi_subspace, psi_tuple, Cocycle};
use evoclass_core::enumerate::enumerate_orbits;
use evoclass_core::extension::{
    ann_of_extension, check_admissible, extend, extend_unchecked, reconstruct, ExtensionSpec,
};
use evoclass_core::field::{Elem, Field};
use evoclass_core::fingerprint::{isocheck, Verdict};
use evoclass_core::linalg::Mat;
use evoclass_core::rng::SplitMix64;
use evoclass_core::verify::{self, run_verify, VerifyOptions};
use evoclass_core::witnesses::{family_theta, verify_family_witnesses};

const BUDGET: u64 = 100_000_000;

fn q() -> Field {
    Field::rational()
}

fn f(p: u64) -> Field {
    Field::fp(p).unwrap()
}

#[test]
fn criterion_1_table_reproduction() {
    let mut entries = 0;
    for dim in 1..=4 {
        let run = run_verify(dim, &VerifyOptions::default());
        assert!(run.pass(), "dimension {dim}:\n{}", verify::render_text(&run));
        entries += run.entries.len();
    }
    assert_eq!(entries, 17);
    println!("criterion 1 (tables for dimensions 1-4, {entries} entries): PASS");
}

#[test]
fn criterion_2_dim5_derivations_verbatim() {
    let mut constructions = 0;
    for e in catalog::entries_of_dim(5) {
        let Derivation::Ext { .. } = e.derivation else { continue };
        let alphas: Vec<Option<Elem>> = match e.param {
            ParamRule::None => vec![None],
            ParamRule::NotZeroOne => [2i64, -1, 5]
                .iter()
                .map(|&a| Some(q().from_i64(a)))
                .collect(),
            ParamRule::Any => [0i64, 1, 2, -1]
                .iter()
                .map(|&a| Some(q().from_i64(a)))
                .collect(),
        };
        for alpha in &alphas {
            let spec = e
                .derivation_spec(q(), alpha.as_ref())
                .unwrap()
                .expect("extension derivation");
            let built = extend(&spec).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            let expected = e.algebra(q(), alpha.as_ref()).unwrap();
            assert_eq!(
                built.squares(),
                expected.squares(),
                "{} does not match its derivation verbatim",
                e.name
            );
        }
        constructions += 1;
    }
    assert_eq!(constructions, 19);
    println!("criterion 2 (19 dimension-5 derivations verbatim over Q): PASS");
}

#[test]
fn criterion_3_psi_oracle_equivalence() {
    let f5 = f(5);
    let mut checked = 0;
    for claim in catalog::PSI_CLAIMS {
        let alphas: Vec<Option<Elem>> = if claim.parametric {
            vec![
                Some(q().from_i64(2)),
                Some(q().from_i64(3)),
                Some(q().from_i64(-1)),
            ]
        } else {
            vec![None]
        };
        for alpha in alphas {
            // rational route: zero-pattern feasibility
            let base_q = catalog::get(claim.base, q(), None).unwrap();
            let classes_q = claim.cocycles(q(), alpha.as_ref());
            let psi_q = psi_subspace(&base_q, &classes_q, BUDGET).unwrap();
            assert_eq!(psi_q.0, claim.expected, "{} over Q", claim.base);

            // finite route: exhaustive search over F_5
            let alpha5 = alpha.as_ref().map(|a| match a {
                Elem::Rat(r) => f5.from_i64(
                    to_i64(r),
                ),
                _ => unreachable!(),
            });
            let base_5 = catalog::get(claim.base, f5, None).unwrap();
            let classes_5 = claim.cocycles(f5, alpha5.as_ref());
            let psi_5 = psi_subspace(&base_5, &classes_5, BUDGET).unwrap();
            assert_eq!(psi_5, psi_q, "{} over F_5 vs Q", claim.base);
            checked += 1;
        }
    }
    assert!(checked >= 14);
    println!("criterion 3 (Psi values by both methods, {checked} instances): PASS");
}

fn to_i64(r: &num_rational::BigRational) -> i64 {
    use num_traits::ToPrimitive;
    r.to_integer().to_i64().expect("small sample parameters")
}

/// Random nilpotent evolution algebra: squares supported above the diagonal.
fn random_nilpotent(field: Field, dim: usize, rng: &mut SplitMix64) -> EvolutionAlgebra {
    let p = field.modulus().unwrap();
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for i in 0..dim {
        let mut row = vec![field.zero(); dim];
        for j in (i + 1)..dim {
            row[j] = field.from_i64(rng.below(p) as i64);
        }
        rows.push(row);
    }
    EvolutionAlgebra::new(field, dim, Mat::from_rows(field, rows)).unwrap()
}

fn random_cocycle(field: Field, dim: usize, rng: &mut SplitMix64) -> Cocycle {
    let p = field.modulus().unwrap();
    let diag = (0..dim).map(|_| field.from_i64(rng.below(p) as i64)).collect();
    Cocycle::new(field, diag)
}

fn block_map(field: Field, upper: &Mat, lower: &Mat) -> Mat {
    let n = upper.rows + lower.rows;
    let mut out = Mat::zeros(field, n, n);
    for i in 0..upper.rows {
        for j in 0..upper.cols {
            out.set(i, j, upper.get(i, j).clone());
        }
    }
    for i in 0..lower.rows {
        for j in 0..lower.cols {
            out.set(upper.rows + i, upper.rows + j, lower.get(i, j).clone());
        }
    }
    out
}

#[test]
fn criterion_4_lemma_suite() {
    let f5 = f(5);
    let mut rng = SplitMix64::new(0xacce914);

    // annihilator formula of extensions, quantified over arbitrary cocycles
    for _ in 0..100 {
        let dim = 2 + (rng.below(3) as usize);
        let base = random_nilpotent(f5, dim, &mut rng);
        let k = 1 + (rng.below(2) as usize);
        let thetas: Vec<Cocycle> = (0..k).map(|_| random_cocycle(f5, dim, &mut rng)).collect();
        let spec = ExtensionSpec::new(base, thetas);
        let ext = extend_unchecked(&spec);
        assert_eq!(ann_of_extension(&spec), ext.annihilator());
    }

    // base-map isomorphism: sigma(x + v) = phi(x) + v
    let mut done = 0;
    let mut attempts = 0;
    while done < 100 && attempts < 20_000 {
        attempts += 1;
        let shape = &AUT_SHAPES[(rng.below(AUT_SHAPES.len() as u64)) as usize];
        let base = catalog::get(shape.base, f5, None).unwrap();
        let phi = (shape.sample)(f5, &mut rng);
        let k = 1 + (rng.below(2) as usize);
        let thetas: Vec<Cocycle> =
            (0..k).map(|_| random_cocycle(f5, base.dim(), &mut rng)).collect();
        let Some(pulled): Option<Vec<Cocycle>> =
            thetas.iter().map(|t| act_on_cocycle(&phi, t)).collect()
        else {
            continue;
        };
        let e_pulled = extend_unchecked(&ExtensionSpec::new(base.clone(), pulled));
        let e_orig = extend_unchecked(&ExtensionSpec::new(base.clone(), thetas));
        let sigma = block_map(f5, &phi, &Mat::identity(f5, k));
        assert!(is_isomorphism(&e_pulled, &e_orig, &sigma).unwrap());
        done += 1;
    }
    assert_eq!(done, 100, "not enough stabilizer samples");

    // V-map isomorphism: sigma(x + v) = x + psi(v)
    for _ in 0..100 {
        let dim = 2 + (rng.below(3) as usize);
        let base = random_nilpotent(f5, dim, &mut rng);
        let k = 1 + (rng.below(2) as usize);
        let thetas: Vec<Cocycle> = (0..k).map(|_| random_cocycle(f5, dim, &mut rng)).collect();
        let psi = loop {
            let cand = Mat::from_rows(
                f5,
                (0..k)
                    .map(|_| {
                        (0..k).map(|_| f5.from_i64(rng.below(5) as i64)).collect()
                    })
                    .collect(),
            );
            if cand.is_invertible() {
                break cand;
            }
        };
        let mixed = evoclass_core::aut::gl_v_action(&psi, &thetas).unwrap();
        let e_theta = extend_unchecked(&ExtensionSpec::new(base.clone(), thetas));
        let e_mixed = extend_unchecked(&ExtensionSpec::new(base.clone(), mixed));
        let sigma = block_map(f5, &Mat::identity(f5, dim), &psi);
        assert!(is_isomorphism(&e_theta, &e_mixed, &sigma).unwrap());
    }

    // coboundary shifts preserve the annihilator and give explicit
    // isomorphisms sigma(x + v) = x + v + G(x)
    for _ in 0..100 {
        let dim = 2 + (rng.below(3) as usize);
        let base = random_nilpotent(f5, dim, &mut rng);
        let k = 1 + (rng.below(2) as usize);
        let thetas: Vec<Cocycle> = (0..k).map(|_| random_cocycle(f5, dim, &mut rng)).collect();
        let func: Vec<Elem> = (0..dim).map(|_| f5.from_i64(rng.below(5) as i64)).collect();
        let shift = base.squares().mul_vec(&func).unwrap();
        let j0 = (rng.below(k as u64)) as usize;
        let mut shifted = thetas.clone();
        shifted[j0] = shifted[j0].add(&Cocycle::new(f5, shift));
        let spec_a = ExtensionSpec::new(base.clone(), thetas);
        let spec_b = ExtensionSpec::new(base.clone(), shifted);
        let ea = extend_unchecked(&spec_a);
        let eb = extend_unchecked(&spec_b);
        assert_eq!(ea.annihilator(), eb.annihilator());
        let mut sigma = Mat::identity(f5, dim + k);
        for (col, v) in func.iter().enumerate() {
            sigma.set(dim + j0, col, v.clone());
        }
        assert!(is_isomorphism(&ea, &eb, &sigma).unwrap());
    }

    // radical-dimension sequences are stabilizer invariants
    let mut done = 0;
    let mut attempts = 0;
    while done < 100 && attempts < 20_000 {
        attempts += 1;
        let shape = &AUT_SHAPES[(rng.below(AUT_SHAPES.len() as u64)) as usize];
        let base = catalog::get(shape.base, f5, None).unwrap();
        let phi = (shape.sample)(f5, &mut rng);
        let k = 1 + (rng.below(2) as usize);
        let thetas: Vec<Cocycle> =
            (0..k).map(|_| random_cocycle(f5, base.dim(), &mut rng)).collect();
        let Some(pulled): Option<Vec<Cocycle>> =
            thetas.iter().map(|t| act_on_cocycle(&phi, t)).collect()
        else {
            continue;
        };
        assert_eq!(psi_tuple(&thetas).unwrap(), psi_tuple(&pulled).unwrap());
        done += 1;
    }
    assert_eq!(done, 100);

    // round trip: rebuilding from the reconstruction is the identity
    let mut done = 0;
    let mut attempts = 0;
    while done < 100 && attempts < 40_000 {
        attempts += 1;
        let dim = 2 + (rng.below(3) as usize);
        let base = random_nilpotent(f5, dim, &mut rng);
        let k = 1 + (rng.below(2) as usize);
        let thetas: Vec<Cocycle> = (0..k).map(|_| random_cocycle(f5, dim, &mut rng)).collect();
        let spec = ExtensionSpec::new(base, thetas);
        if check_admissible(&spec).is_err() {
            continue;
        }
        let ext = extend(&spec).unwrap();
        let rec = reconstruct(&ext).unwrap();
        assert_eq!(rec.spec, spec);
        assert_eq!(rec.permutation, (0..ext.dim()).collect::<Vec<_>>());
        done += 1;
    }
    assert_eq!(done, 100, "not enough admissible random specs");

    // permuted presentations reconstruct into the same orbit
    let names = ["E_4_7", "E_4_8", "E_5_16", "E_5_17", "E_5_22", "E_5_26", "E_5_28"];
    for (i, name) in names.iter().cycle().take(28).enumerate() {
        let e = catalog::entry(name).unwrap();
        let alg = e.algebra(f5, None).unwrap();
        let spec = e.derivation_spec(f5, None).unwrap().unwrap();
        let mut perm: Vec<usize> = (0..alg.dim()).collect();
        // deterministic shuffle
        let mut r = SplitMix64::new(i as u64 + 99);
        for t in (1..perm.len()).rev() {
            perm.swap(t, (r.below((t + 1) as u64)) as usize);
        }
        let shuffled = alg.permuted(&perm);
        let rec = reconstruct(&shuffled).unwrap();
        let w = same_orbit_mixed(
            (&spec.base, &spec.thetas),
            (rec.base(), rec.thetas()),
            BUDGET,
        )
        .unwrap();
        assert!(w.is_some(), "{name} permuted by {perm:?} lost its orbit");
    }

    println!("criterion 4 (randomized lemma suite over F_5, 100 instances each): PASS");
}

#[test]
fn criterion_5_first_family_orbits() {
    // symbolic identity between the expanded and factored parameter relation
    let (ok, unit) = catalog::verify_sextic_identity();
    assert!(ok);
    assert_eq!(unit, 1);

    // witnesses materialize and verify over F_13
    let outcomes = verify_family_witnesses(13).unwrap();
    assert!(outcomes.iter().all(|o| o.pass));

    // Over F_13 the exhaustive orbit test must refute every pair outside
    // the six-value law (the direction replacing the elimination argument).
    // Inside the law, a pair is isomorphic over F_13 exactly when a linking
    // witness materializes; the map to 1 - alpha always does, since -1 is a
    // square mod 13.
    let f13 = f(13);
    let base = catalog::get("E_4_5", f13, None).unwrap();
    let params: Vec<u64> = (2..13).collect();
    let mut confirmed = 0;
    let mut refuted_off_orbit = 0;
    let mut split_in_orbit = 0;
    for (i, &a) in params.iter().enumerate() {
        let alpha = f13.from_i64(a as i64);
        let orbit = catalog::e518_orbit_set(&f13, &alpha).unwrap();
        let one_minus = f13.sub(&f13.one(), &alpha);
        for &b in params.iter().skip(i + 1) {
            let beta = f13.from_i64(b as i64);
            let in_law = orbit.contains(&beta);
            let got = same_orbit(
                &base,
                &[family_theta(f13, &alpha)],
                &[family_theta(f13, &beta)],
                BUDGET,
            )
            .unwrap()
            .is_some();
            if !in_law {
                assert!(!got, "parameters {a} and {b} are isomorphic outside the law");
                refuted_off_orbit += 1;
            } else {
                if beta == one_minus {
                    assert!(got, "the always-realizable witness failed for {a} vs {b}");
                }
                if got {
                    confirmed += 1;
                } else {
                    split_in_orbit += 1;
                }
            }
        }
    }
    assert_eq!(confirmed + refuted_off_orbit + split_in_orbit, 55);
    assert!(refuted_off_orbit >= 36);
    assert!(confirmed >= 9);

    // Over F_73 with parameter 3 every root the witnesses request exists,
    // so the full six-value orbit is realized.
    let f73 = f(73);
    let base73 = catalog::get("E_4_5", f73, None).unwrap();
    let alpha = f73.from_i64(3);
    for (label, k) in [("a", 2u32), ("-1", 2), ("a-1", 2), ("1-a", 2), ("-a", 2)] {
        let value = match label {
            "a" => alpha.clone(),
            "-1" => f73.from_i64(-1),
            "a-1" => f73.sub(&alpha, &f73.one()),
            "1-a" => f73.sub(&f73.one(), &alpha),
            _ => f73.neg(&alpha),
        };
        assert!(f73.has_kth_root(&value, k), "root of {label} missing over F_73");
    }
    let orbit73 = catalog::e518_orbit_set(&f73, &alpha).unwrap();
    assert_eq!(orbit73.len(), 6);
    for beta in &orbit73 {
        let got = same_orbit(
            &base73,
            &[family_theta(f73, &alpha)],
            &[family_theta(f73, beta)],
            4 * BUDGET,
        )
        .unwrap();
        assert!(got.is_some(), "full law failed at beta = {}", f73.format(beta));
    }

    println!(
        "criterion 5 (first family: exact sextic; F_13: {refuted_off_orbit} off-law pairs \
         refuted, {confirmed} in-law pairs confirmed, {split_in_orbit} split by missing \
         roots; F_73: full six-value orbit realized): PASS"
    );
}

#[test]
fn criterion_6_second_family_rigidity() {
    for p in [3u64, 5] {
        let r = verify::verify_e523_rigidity(p, BUDGET).unwrap();
        assert!(r.pass, "over F_{p}: {}", r.detail);
    }
    assert!(verify::verify_e523_no_swap_witness(5).unwrap());
    println!("criterion 6 (second family rigid over F_3 and F_5): PASS");
}

#[test]
fn criterion_7_coverage_enumeration() {
    let f3 = f(3);
    let mut total_classes = 0;

    // enumerations per base: dimension-4 bases extended by one line,
    // dimension-3 bases by two
    let runs: Vec<(&str, usize)> = vec![
        ("E_4_1", 1),
        ("E_4_2", 1),
        ("E_4_3", 1),
        ("E_4_4", 1),
        ("E_4_5", 1),
        ("E_4_6", 1),
        ("E_4_7", 1),
        ("E_4_8", 1),
        ("E_4_9", 1),
        ("E_4_10", 1),
        ("E_3_1", 2),
        ("E_3_2", 2),
        ("E_3_3", 2),
    ];
    let mut enums = std::collections::BTreeMap::new();
    for (name, ext) in &runs {
        let base = catalog::get(name, f3, None).unwrap();
        let e = enumerate_orbits(&base, *ext, BUDGET).unwrap();
        assert!(e.complete, "enumeration over {name} hit the budget");
        total_classes += e.iso_classes.len();
        enums.insert((*name, *ext), (base, e));
    }

    // every derived dimension-5 entry lands in exactly one class of its
    // base's enumeration, and distinct entries land in distinct classes
    let mut seen: std::collections::BTreeMap<(&str, usize, usize), String> =
        std::collections::BTreeMap::new();
    let mut covered = 0;
    for e in catalog::entries_of_dim(5) {
        let Derivation::Ext { base: bname, .. } = e.derivation else { continue };
        let alphas: Vec<Option<Elem>> = match e.param {
            ParamRule::None => vec![None],
            ParamRule::NotZeroOne => vec![Some(f3.from_i64(2))],
            ParamRule::Any => (0..3).map(|a| Some(f3.from_i64(a))).collect(),
        };
        for alpha in alphas {
            let spec = e.derivation_spec(f3, alpha.as_ref()).unwrap().unwrap();
            let key = (bname, spec.thetas.len());
            let (base, enumeration) = &enums[&key];
            let mut hits = Vec::new();
            for (ci, class) in enumeration.iso_classes.iter().enumerate() {
                if same_orbit(base, &class.rep, &spec.thetas, BUDGET)
                    .unwrap()
                    .is_some()
                {
                    hits.push(ci);
                }
            }
            assert_eq!(
                hits.len(),
                1,
                "{} (alpha {:?}) matched classes {hits:?} over {bname}",
                e.name,
                alpha.as_ref().map(|a| f3.format(a)),
            );
            let label = match &alpha {
                Some(a) => format!("{}@{}", e.name, f3.format(a)),
                None => e.name.to_string(),
            };
            if let Some(previous) = seen.insert((bname, spec.thetas.len(), hits[0]), label.clone())
            {
                panic!("{previous} and {label} land in the same enumeration class");
            }
            covered += 1;
        }
    }
    assert_eq!(covered, 21); // 17 isolated + E_5_18@2 + three E_5_23 members
    println!(
        "criterion 7 (coverage over F_3: {covered} derived entries across {total_classes} \
         enumerated classes, each hit exactly once): PASS"
    );
}

#[test]
fn criterion_8_pairwise_distinctness() {
    let f13 = f(13);
    // the full dimension-5 list over F_13: 27 isolated entries plus both
    // families at every defined parameter
    let mut items: Vec<(String, EvolutionAlgebra, Option<(&str, Elem)>)> = Vec::new();
    for e in catalog::entries_of_dim(5) {
        match e.param {
            ParamRule::None => {
                items.push((e.name.to_string(), e.algebra(f13, None).unwrap(), None));
            }
            ParamRule::NotZeroOne => {
                for a in 2..13 {
                    let alpha = f13.from_i64(a);
                    items.push((
                        format!("{}@{a}", e.name),
                        e.algebra(f13, Some(&alpha)).unwrap(),
                        Some((e.name, alpha)),
                    ));
                }
            }
            ParamRule::Any => {
                for a in 0..13 {
                    let alpha = f13.from_i64(a);
                    items.push((
                        format!("{}@{a}", e.name),
                        e.algebra(f13, Some(&alpha)).unwrap(),
                        Some((e.name, alpha)),
                    ));
                }
            }
        }
    }
    assert_eq!(items.len(), 27 + 11 + 13);

    // ground truth for the first family over F_13, straight from the orbit
    // criterion: the realized classes refine the documented six-value
    // orbits because some linking witnesses need missing roots
    let base18 = catalog::get("E_4_5", f13, None).unwrap();
    let mut family_classes: Vec<Vec<Elem>> = Vec::new();
    'params: for a in 2..13 {
        let alpha = f13.from_i64(a);
        for class in family_classes.iter_mut() {
            let got = same_orbit(
                &base18,
                &[family_theta(f13, &class[0])],
                &[family_theta(f13, &alpha)],
                BUDGET,
            )
            .unwrap();
            if got.is_some() {
                class.push(alpha);
                continue 'params;
            }
        }
        family_classes.push(vec![alpha]);
    }
    // realized classes stay within the documented orbits
    for class in &family_classes {
        let orbit = catalog::e518_orbit_set(&f13, &class[0]).unwrap();
        for member in class {
            assert!(orbit.contains(member));
        }
    }
    let expected_isomorphic = |a: &Option<(&str, Elem)>, b: &Option<(&str, Elem)>| -> bool {
        match (a, b) {
            (Some(("E_5_18", x)), Some(("E_5_18", y))) => family_classes
                .iter()
                .any(|class| class.contains(x) && class.contains(y)),
            _ => false,
        }
    };
    let expected_iso_pairs: usize = family_classes
        .iter()
        .map(|c| c.len() * (c.len() - 1) / 2)
        .sum();

    let mut nonisomorphic = 0;
    let mut isomorphic = 0;
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            let (na, a, pa) = &items[i];
            let (nb, b, pb) = &items[j];
            let verdict = isocheck(a, b, BUDGET).unwrap();
            let expect_iso = expected_isomorphic(pa, pb);
            match verdict {
                Verdict::Isomorphic { .. } => {
                    assert!(expect_iso, "{na} vs {nb} wrongly isomorphic");
                    isomorphic += 1;
                }
                Verdict::NonIsomorphic { invariant } => {
                    assert!(!expect_iso, "{na} vs {nb} wrongly non-isomorphic");
                    assert!(!invariant.is_empty());
                    nonisomorphic += 1;
                }
                Verdict::Inconclusive { reason } => {
                    panic!("{na} vs {nb} inconclusive: {reason}");
                }
            }
        }
    }
    assert_eq!(isomorphic, expected_iso_pairs);
    assert!(isomorphic >= 9);
    println!(
        "criterion 8 (pairwise over F_13: {nonisomorphic} named non-isomorphisms, \
         {isomorphic} in-family isomorphisms, zero inconclusive): PASS"
    );
}
