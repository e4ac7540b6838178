//! Exhaustive enumeration of admissible cocycle tuples over a finite-field
//! base, bucketed into automorphism orbits.
//!
//! Two bucketing layers are reported: class orbits (automorphisms acting on
//! class tuples componentwise) and isomorphism classes (class orbits merged
//! when their spans coincide up to an automorphism, which by the orbit
//! criterion is exactly isomorphism of the extensions). Representatives are
//! the lexicographically least admissible tuples of their buckets.

use crate::algebra::EvolutionAlgebra;
use crate::aut::{same_class_orbit, same_orbit, AutError};
use crate::cocycle::Cocycle;
use crate::extension::{check_admissible, extend_unchecked, ExtensionSpec};
use crate::field::Field;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("enumeration needs a finite field")]
    NotFinite,
    #[error(transparent)]
    Search(#[from] AutError),
}

#[derive(Debug, Clone)]
pub struct ClassOrbit {
    pub rep: Vec<Cocycle>,
    pub members: u64,
    /// index of the isomorphism class this orbit belongs to
    pub iso_class: usize,
}

#[derive(Debug, Clone)]
pub struct IsoClass {
    pub rep: Vec<Cocycle>,
    pub algebra: EvolutionAlgebra,
    pub class_orbits: usize,
    pub members: u64,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub ext_dim: usize,
    pub admissible: u64,
    pub class_orbits: Vec<ClassOrbit>,
    pub iso_classes: Vec<IsoClass>,
    /// false when the node budget ran out; output is then partial
    pub complete: bool,
}

/// Enumerates all admissible tuples of `ext_dim` cocycles over the base, in
/// lexicographic order, and buckets them.
pub fn enumerate_orbits(
    base: &EvolutionAlgebra,
    ext_dim: usize,
    budget: u64,
) -> Result<Enumeration, EnumError> {
    let p = match base.field() {
        Field::Fp { p } => p,
        Field::Rational => return Err(EnumError::NotFinite),
    };
    let field = base.field();
    let m = base.dim();
    let slots = m * ext_dim;
    let total = (p as u128).pow(slots as u32);

    let mut class_orbits: Vec<ClassOrbit> = Vec::new();
    let mut admissible = 0u64;
    let mut complete = true;

    'tuples: for idx in 0..total {
        let mut digits = vec![0u64; slots];
        let mut t = idx;
        for d in digits.iter_mut().rev() {
            *d = (t % p as u128) as u64;
            t /= p as u128;
        }
        let tuple: Vec<Cocycle> = (0..ext_dim)
            .map(|j| {
                let diag = digits[j * m..(j + 1) * m]
                    .iter()
                    .map(|&v| field.from_i64(v as i64))
                    .collect();
                Cocycle::new(field, diag)
            })
            .collect();
        let spec = ExtensionSpec::new(base.clone(), tuple.clone());
        if check_admissible(&spec).is_err() {
            continue;
        }
        admissible += 1;

        for orbit in class_orbits.iter_mut() {
            match same_class_orbit(base, &orbit.rep, &tuple, budget) {
                Ok(Some(_)) => {
                    orbit.members += 1;
                    continue 'tuples;
                }
                Ok(None) => {}
                Err(AutError::BudgetExceeded { .. }) => {
                    complete = false;
                    break 'tuples;
                }
                Err(e) => return Err(EnumError::Search(e)),
            }
        }
        class_orbits.push(ClassOrbit { rep: tuple, members: 1, iso_class: usize::MAX });
    }

    // merge class orbits into isomorphism classes via the span criterion
    let mut iso_classes: Vec<IsoClass> = Vec::new();
    for oi in 0..class_orbits.len() {
        let mut assigned = None;
        for (ci, iso) in iso_classes.iter().enumerate() {
            match same_orbit(base, &iso.rep, &class_orbits[oi].rep, budget) {
                Ok(Some(_)) => {
                    assigned = Some(ci);
                    break;
                }
                Ok(None) => {}
                Err(AutError::BudgetExceeded { .. }) => {
                    complete = false;
                    break;
                }
                Err(e) => return Err(EnumError::Search(e)),
            }
        }
        let members = class_orbits[oi].members;
        match assigned {
            Some(ci) => {
                class_orbits[oi].iso_class = ci;
                iso_classes[ci].class_orbits += 1;
                iso_classes[ci].members += members;
            }
            None => {
                class_orbits[oi].iso_class = iso_classes.len();
                let rep = class_orbits[oi].rep.clone();
                let algebra =
                    extend_unchecked(&ExtensionSpec::new(base.clone(), rep.clone()));
                iso_classes.push(IsoClass { rep, algebra, class_orbits: 1, members });
            }
        }
    }

    Ok(Enumeration {
        ext_dim,
        admissible,
        class_orbits,
        iso_classes,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn f3() -> Field {
        Field::fp(3).unwrap()
    }

    #[test]
    fn single_line_extension() {
        // extending the zero line: both nonzero scalars collapse into one
        // isomorphism class
        let base = catalog::get("E_1_1", f3(), None).unwrap();
        let e = enumerate_orbits(&base, 1, 1 << 24).unwrap();
        assert!(e.complete);
        assert_eq!(e.admissible, 2);
        assert_eq!(e.iso_classes.len(), 1);
        let ext = &e.iso_classes[0].algebra;
        assert_eq!(ext.table(), "e1^2 = e2");
    }

    #[test]
    fn chain_extension_has_two_class_orbits_one_iso_class() {
        // over the length-four chain H is a line; the two scalar choices sit
        // in distinct class orbits but give isomorphic extensions
        let base = catalog::get("E_4_9", f3(), None).unwrap();
        let e = enumerate_orbits(&base, 1, 1 << 26).unwrap();
        assert!(e.complete);
        assert_eq!(e.class_orbits.len(), 2);
        assert_eq!(e.iso_classes.len(), 1);
        let d4 = Cocycle::from_i64(f3(), &[0, 0, 0, 1]);
        let d4_twice = Cocycle::from_i64(f3(), &[0, 0, 0, 2]);
        assert_eq!(e.class_orbits[0].rep, vec![d4]);
        assert_eq!(e.class_orbits[1].rep, vec![d4_twice]);
    }

    #[test]
    fn zero_plane_pairs_split_by_pattern() {
        // two-dimensional extensions of the zero plane: the only admissible
        // pattern is two independent forms with no common zero, one class
        let base = catalog::get("E_2_1", f3(), None).unwrap();
        let e = enumerate_orbits(&base, 2, 1 << 26).unwrap();
        assert!(e.complete);
        assert!(e.iso_classes.len() >= 1);
        // the catalog pattern with two split squares shows up
        let t1 = Cocycle::from_i64(f3(), &[1, 0]);
        let t2 = Cocycle::from_i64(f3(), &[0, 1]);
        let hits: Vec<_> = e
            .iso_classes
            .iter()
            .filter(|c| same_orbit(&base, &c.rep, &[t1.clone(), t2.clone()], 1 << 24).unwrap().is_some())
            .collect();
        assert_eq!(hits.len(), 1);
    }

    #[test]
    fn budget_marks_partial_output() {
        let base = catalog::get("E_4_9", f3(), None).unwrap();
        let e = enumerate_orbits(&base, 1, 64).unwrap();
        assert!(!e.complete);
    }
}
