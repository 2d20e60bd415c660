//! Feasibility classification and recursive composition for
//! `{(K2*)^r, C_m^s}` and `{C_m^r, C_2m^s}` factorizations of `K_v*`.
//!
//! [`feasibility`] classifies a request without constructing anything.
//! [`Composer::solve`] assembles a factorization of `K_v*` from verified
//! blocks (explicit constructions from `hw-constructions`, difference
//! factorizations of `K_(k:2)*`, and bounded searches on small blocks),
//! following the layouts in [`layout`], and returns a certificate that has
//! passed the independent checker.

mod block;
mod composer;
mod error;
mod feasibility;
pub mod layout;
mod survey;

pub use block::{Block, Kinds};
pub use composer::{choose, Composer, Plan, PlanClass, LEAF_MAX};
pub use error::ComposerError;
pub use feasibility::{feasibility, ImpossibleReason, OpenClause, SolvableCase, Verdict};
pub use survey::{survey, survey_requests, SurveyOutcome, SurveyRow};
