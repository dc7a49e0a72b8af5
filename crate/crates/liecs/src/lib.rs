//! Exact-arithmetic toolkit for Lie algebras carrying abelian complex
//! structures.
//!
//! The crate encodes the full classification of such structures in
//! dimensions up to six as an executable catalog: structure-constant
//! tables, complex-structure families with their parameter domains,
//! automorphism-group elements, orbit invariants and canonical
//! representatives. Everything is computed over the rationals (or Gaussian
//! rationals); there is no floating point anywhere, so every identity is
//! checked exactly.
//!
//! Layout:
//!
//! * [`scalar`], [`mat`], [`subspace`] - the exact linear algebra substrate;
//! * [`lie`] - structure constants, series, centers, derivations;
//! * [`cstruct`] - the structure identities, the i-eigenspace over Q(i),
//!   saturated commutators and the signature of the center pairing;
//! * [`catalog`] - the executable classification lists;
//! * [`equiv`] - intertwiners, automorphism families, orbit invariants and
//!   fingerprints;
//! * [`affalg`] - commutative associative algebras and the doubling
//!   construction;
//! * [`sampling`] - the deterministic rational streams used everywhere.
//!
//! ```
//! use liecs::catalog::{self, Params};
//! use liecs::cstruct::check_structure;
//! use liecs::scalar::rat;
//!
//! // Instantiate a catalog family at an exact rational parameter and
//! // verify its structure identities.
//! let params = Params::new().set("t", rat(1, 2));
//! let (algebra, j) = catalog::instantiate("n7-canonical", &params).unwrap();
//! let report = check_structure(&algebra, &j).unwrap();
//! assert!(report.is_acs && report.integrable && report.abelian);
//! assert!(!report.bi_invariant);
//! ```

pub mod affalg;
pub mod catalog;
pub mod cstruct;
pub mod equiv;
pub mod lie;
pub mod mat;
pub mod sampling;
pub mod scalar;
pub mod subspace;
