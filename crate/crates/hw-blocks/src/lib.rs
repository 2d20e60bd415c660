//! Classical decompositions consumed by the factorization constructions.

mod bipartite;
mod error;
mod haggkvist;
mod lift;
mod kts;
mod one_factorization;
mod search;
mod undirected;
mod walecki;

pub use error::BlockError;
pub use haggkvist::{haggkvist_double, BaseShape};
pub use lift::{matching_split, orient_split, split_symmetric, symmetric_lift};
pub use one_factorization::{
    complete_equipartite_graph, equipartite_one_factorization, one_factorization_complete,
};
pub use undirected::{
    cycle_edges, edge, Edge, UFactorKind, UndirectedFactor, UndirectedFactorization, UndirectedGraph,
};
pub use walecki::{walecki_even, walecki_odd, WaleckiDecomposition, WaleckiOdd};
pub use bipartite::{
    bipartite_cycle_factorization, bipartite_difference_factor, bipartite_directed_factorization,
    bipartite_directed_options, bipartite_host, difference_kind, place_bipartite,
    BipartiteCycleFactorization,
};
pub use kts::{kirkman_triple_system, kirkman_triple_system_cached, KTS_CACHE_ENV};
pub use search::{backtrack_search, search_factors, SearchOutcome};
pub use hw_verify::SearchBudget;
