//! Invariant almost complex structures on the full flag manifold `F(n)`,
//! encoded as `n`-player tournaments, and the exact classification of the
//! invariant (1,2)-symplectic metrics they admit.
//!
//! Everything in this crate is pure and allocation-only: no IO, no floating
//! point. The `flagsym` crate layers file formats, parallel census runs and
//! the command line on top.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod families;
pub mod isoclass;
pub mod linalg;
pub mod rational;
pub mod simplex;
pub mod survey;
pub mod symplectic;
pub mod tournament;

pub use families::{family_metric, family_tournament, verify_family, FamilyError, FamilyParams};
pub use isoclass::{are_isomorphic, canonical_code, enumerate_classes, CanonicalCode};
pub use rational::Rational;
pub use survey::{census, CensusRecord};
pub use symplectic::{
    classify_metric, coefficient, constraint_system, d_omega_report, solve_family, MetricClass,
    MetricSpec, SolutionSpace,
};
pub use tournament::{ParseError, TripleClass, Tournament};
