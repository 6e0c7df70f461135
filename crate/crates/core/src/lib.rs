//! Finite effect algebras, pseudo effect algebras and relational Frobenius
//! algebras, together with their nerves as edge-marked, 2-truncated simplicial
//! complexes.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: carriers, partial sum tables, relational Frobenius algebras,
//!   axiom validation, catalog constructors and a brute-force enumerator.
//! * [`simplicial`]: truncated ε-complexes, standard shapes, morphism search,
//!   lifting checks, box products and a backtracking filler.
//! * [`nerve`]: the nerve of an ε-monoid, its inverse and the lifting-property
//!   recogniser for nerves of Frobenius algebras.
//! * [`ortho`]: the internal lifting relation ⊡ and the effect algebra,
//!   orthoalgebra and orthomodular poset classifiers.
//! * [`homology`]: normalized chains, exact Smith normal form and H1.
//! * [`mapping`]: mapping complexes, hom objects, conjugation and the
//!   evaluation fibration.
//! * [`format`]: the JSON exchange format.

pub mod algebra;
pub mod error;
pub mod format;
pub mod homology;
pub mod mapping;
pub mod nerve;
pub mod ortho;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
pub use report::{AxiomVerdict, Status, ValidationReport};
