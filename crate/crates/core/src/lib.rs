//! Exact-arithmetic toolkit for classifying nilpotent evolution algebras:
//! annihilator extensions, cocycle class spaces, automorphism orbit tests,
//! and the machine-checked catalog of all nilpotent evolution algebras of
//! dimension up to five.

pub mod algebra;
pub mod aut;
pub mod aut_shapes;
pub mod catalog;
pub mod cocycle;
pub mod enumerate;
pub mod extension;
pub mod field;
pub mod fingerprint;
pub mod json;
pub mod linalg;
pub mod poly2;
pub mod report;
pub mod rng;
pub mod verify;
pub mod witnesses;

pub use algebra::EvolutionAlgebra;
pub use cocycle::{Cocycle, PsiSequence};
pub use field::{Elem, Field};
pub use linalg::{Mat, Subspace};
