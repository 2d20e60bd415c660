//! Explicit factorizations of the small hosts used by the composer.
//!
//! Three host shapes appear: the blown-up cycle `C_m*[2]`, the same plus the
//! layer matching `I_2m*`, and `Γ_m* = C_m*[2] ⊕ F_m*[2]`; plus the fixed
//! hosts `K_12*` and `K_(4:3)*`. Vertices use the layered labels
//! `(a, i) ↦ a·m + i`. Each [`BlockFamily`] pairs a host with two factor
//! kinds, and [`construct`] returns a certificate with `r` factors of the
//! first kind. Every result passes through a verify-on-construct gate: a
//! transcription rejected by the independent checker is either repaired by
//! bounded search (with a [`hw_digraph::Repair`] annotation) or reported as
//! a transcription fault, never returned silently.

mod construct;
mod doubled;
mod error;
mod explicit;
mod family;
mod gate;
mod points;
mod printed;

pub use construct::construct;
pub use doubled::{
    blowup_cycle_pair, blowup_hamilton_pair, copy_major_to_part_major, quadrupled_cycle_c4_factors,
};
pub use error::ConstructionError;
pub use family::{BlockFamily, GAMMA_SEARCH_MAX};
pub use gate::{requested_counts, REPAIR_MAX_ORDER};
pub use printed::{format_factor_list, parse_factor_list, printed_factors, ParseError, Printed};
