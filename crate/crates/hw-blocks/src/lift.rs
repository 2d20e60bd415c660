//! Symmetric lifts of undirected factorizations and splits of symmetric
//! factors into directed or K2* factors.

use std::collections::BTreeSet;

use hw_digraph::{Certificate, Factor, FactorKind, HostSpec, Trace, Vertex};

use crate::undirected::{edge, Edge, UndirectedFactorization, UndirectedGraph};
use crate::BlockError;

/// Lifts a verified undirected factorization of `G` to a factorization of
/// `G*`: every factor keeps its position and becomes the symmetric factor
/// with both orientations of each edge.
pub fn symmetric_lift(f: &UndirectedFactorization) -> Result<Certificate, BlockError> {
    f.verify()?;
    let host = HostSpec::explicit(&f.host.symmetric());
    let factors = f.factors.iter().map(|uf| uf.lift()).collect();
    Ok(Certificate::from_factors(
        host,
        factors,
        Trace::new("symmetric-lift").param("factors", f.factors.len()),
    ))
}

/// The undirected graph underlying a symmetric factor, or an error naming an
/// arc whose reverse is missing.
fn underlying(f: &Factor) -> Result<UndirectedGraph, BlockError> {
    let order = f.arcs.iter().map(|a| a.tail.max(a.head) + 1).max().unwrap_or(0);
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for a in &f.arcs {
        if !f.arcs.contains(&a.reversed()) {
            return Err(BlockError::InvalidParameter(format!(
                "factor is not symmetric: arc {a} has no reverse"
            )));
        }
        edges.insert(edge(a.tail, a.head));
    }
    UndirectedGraph::from_edges(order, edges)
}

fn symmetric_cycles(f: &Factor) -> Result<Vec<Vec<Vertex>>, BlockError> {
    let g = underlying(f)?;
    let cycles = g.two_regular_cycles().ok_or_else(|| {
        BlockError::InvalidParameter("symmetric factor is not a union of cycles".into())
    })?;
    if let Some(len) = cycles.first().map(Vec::len) {
        if cycles.iter().any(|c| c.len() != len) {
            return Err(BlockError::InvalidParameter("cycles of different lengths".into()));
        }
    }
    Ok(cycles)
}

/// Splits the symmetric double of a union of `m`-cycles into its two
/// orientations. Each cycle is traversed from its smallest vertex towards
/// that vertex's smaller neighbor in the first output; the second output is
/// the reverse of the first.
pub fn orient_split(f: &Factor) -> Result<[Factor; 2], BlockError> {
    let cycles = symmetric_cycles(f)?;
    let forward = Factor::directed_cycles(&cycles);
    let backward = forward.reversed();
    Ok([forward, backward])
}

/// Splits the symmetric double of a union of even cycles into two K2*-factors
/// by taking alternate edges of every cycle.
pub fn matching_split(f: &Factor) -> Result<[Factor; 2], BlockError> {
    let cycles = symmetric_cycles(f)?;
    if cycles.iter().any(|c| c.len() % 2 == 1) {
        return Err(BlockError::InvalidParameter(
            "only even cycles split into two matchings".into(),
        ));
    }
    let mut halves: [Vec<(Vertex, Vertex)>; 2] = [Vec::new(), Vec::new()];
    for c in &cycles {
        for i in 0..c.len() {
            halves[i % 2].push((c[i], c[(i + 1) % c.len()]));
        }
    }
    let [a, b] = halves;
    Ok([Factor::double_arcs(a), Factor::double_arcs(b)])
}

/// Splits a symmetric cycle factor into two factors of the requested kind:
/// two directed cycle factors of the same length, or two K2*-factors (even
/// length only).
pub fn split_symmetric(f: &Factor, into: FactorKind) -> Result<[Factor; 2], BlockError> {
    match into {
        FactorKind::K2Star => matching_split(f),
        FactorKind::Cycles(l) => {
            let halves = orient_split(f)?;
            if halves[0].kind != FactorKind::Cycles(l) {
                return Err(BlockError::InvalidParameter(format!(
                    "cannot split {} into {}",
                    f.kind, into
                )));
            }
            Ok(halves)
        }
        FactorKind::SymCycles(_) => Err(BlockError::InvalidParameter(
            "a symmetric factor is already symmetric".into(),
        )),
    }
}
