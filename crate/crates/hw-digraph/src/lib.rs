//! Digraph primitives for directed Hamilton–Waterloo factorizations.
//!
//! Every construction in the workspace populates the types defined here:
//! [`Digraph`] (a materialized arc set on `0..order`), [`Factor`] (a
//! kind-tagged spanning arc subset) and [`Certificate`] (an ordered factor
//! list claimed to partition a host). The named digraphs of the constructions
//! (`K_v*`, `K_(x:y)*`, `D[k]`, `C_m*[2]`, `I_2m*`, `F_m*`, `Γ_m*`, Cayley
//! digraphs) are built with documented, deterministic labelings.

mod arc;
mod cayley;
mod certificate;
mod digraph;
mod error;
mod factor;
mod named;

pub use arc::{cycle_arcs, double_arc, Arc, LayeredLabels, Vertex};
pub use cayley::{cayley, cycle_blowup_connection, CayleyGroup, CayleySpec};
pub use certificate::{
    canonical_key, kind_counts, Certificate, Family, HostSpec, ParamRequest, Repair, Trace,
};
pub use digraph::{Digraph, PartitionScheme};
pub use error::DigraphError;
pub use factor::{Factor, FactorKind};
pub use named::{
    blowup, complete_symmetric, complete_symmetric_equipartite, cycle_blowup_plus_i,
    cycle_symmetric, directed_cycle, named_factor_f, named_factor_i, named_graph_gamma,
    reflection_pairs,
};
