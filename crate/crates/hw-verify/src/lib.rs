//! Independent verification of factorization certificates, plus an
//! exhaustive oracle for tiny hosts.
//!
//! The checker ([`check_factor`], [`check_certificate`]) shares only the
//! digraph types with the construction crates. The oracle
//! ([`exhaustive_factorize`]) is a complete exact-cover search whose
//! `Exhausted` outcome is a proof of nonexistence.

mod check;
mod oracle;
mod report;

pub use check::{check_certificate, check_factor};
pub use oracle::{
    arcs_per_factor, exhaustive_factorize, search_with_restarts, OracleError, OracleOutcome,
    OracleResult, SearchBudget, SearchMode,
};
pub use report::{counts_text, Failure, VerificationReport, Violation};
