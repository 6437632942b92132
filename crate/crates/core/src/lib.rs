//! Exact invariants of circle subgroups of torus actions on `nCP^2`.
//!
//! A torus action is encoded by the half-fan of its toric surface, a circle
//! subgroup by the weight sequence `(k_2, ..., k_{n+2})` seen from the
//! component it fixes. From the sequence the crate computes the integer `m`,
//! the divisor `Y` and its multiplicities, the quadratic equation of the
//! minitwistor space with its singularities, the discriminant loci of the
//! conic-bundle models, and catalogs of all sequences for a given `n`.

pub mod catalog;
pub mod conic_bundle;
pub mod error;
pub mod invariants;
pub mod minitwistor;
pub mod rational;
pub mod report;
pub mod sequence;
pub mod tables;
pub mod toric_fan;

pub use error::{Error, Result};
pub use invariants::{LVector, ProcedureTrace, SequenceInvariants, YDivisor};
pub use minitwistor::{ConformalInvariant, MinitwistorModel, Sign};
pub use rational::ExtRational;
pub use sequence::MarkedSequence;
pub use toric_fan::{HalfFan, RayVec};
