//! Finite matroids and the flatness hierarchy of their lattices of flats.
//!
//! A [`Matroid`] is a labeled ground set with a memoized rank oracle. The
//! [`constructions`] module builds them from uniform parameters, rank tables,
//! circuits, flat lists, graphs, set-system presentations (transversal
//! matroids) and digraphs (gammoids). On top of that:
//!
//! * [`flatness`] evaluates the inclusion-exclusion defect `Δ` of a collection
//!   of flats, decides `n`-flatness and computes the flatness degree;
//! * [`pseudomod`] handles contraction ranks, pseudointersections,
//!   pseudomodularity and modularity;
//! * [`verify`] holds brute-force oracles and the regression corpus.

pub mod axioms;
pub mod constructions;
pub mod document;
mod error;
pub mod flatness;
mod matroid;
pub mod pseudomod;
mod subset;
pub mod verify;

pub use axioms::{AxiomCheck, AxiomViolation};
pub use error::{Axiom, Error, Result};
pub use matroid::{Matroid, RankOracle};
pub use subset::{GroundSet, Subset, DEFAULT_CAP, MAX_GROUND};
