//! Undirected graphs and factorizations, the input side of symmetric lifts.

use std::collections::{BTreeMap, BTreeSet};

use hw_digraph::{Arc, Certificate, Digraph, Factor, FactorKind, HostSpec, Trace, Vertex};
use hw_verify::check_certificate;

use crate::BlockError;

/// An undirected edge stored with `lo < hi`.
pub type Edge = (Vertex, Vertex);

/// Normalizes an edge so the smaller endpoint comes first.
pub fn edge(x: Vertex, y: Vertex) -> Edge {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Edges of the cycle visiting `cycle` in order and closing back.
pub fn cycle_edges(cycle: &[Vertex]) -> Vec<Edge> {
    (0..cycle.len()).map(|i| edge(cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

/// A simple undirected graph on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    order: u32,
    edges: BTreeSet<Edge>,
}

impl UndirectedGraph {
    pub fn empty(order: u32) -> Self {
        UndirectedGraph { order, edges: BTreeSet::new() }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges(order: u32, edges: impl IntoIterator<Item = Edge>) -> Result<Self, BlockError> {
        let mut g = UndirectedGraph::empty(order);
        for (x, y) in edges {
            g.insert(x, y)?;
        }
        Ok(g)
    }

    pub fn complete(n: u32) -> Self {
        let edges = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
        UndirectedGraph { order: n, edges }
    }

    /// The complete bipartite graph with parts `0..x` and `x..2x`.
    pub fn complete_bipartite(x: u32) -> Self {
        let edges = (0..x).flat_map(|a| (x..2 * x).map(move |b| (a, b))).collect();
        UndirectedGraph { order: 2 * x, edges }
    }

    pub fn insert(&mut self, x: Vertex, y: Vertex) -> Result<(), BlockError> {
        if x == y || x >= self.order || y >= self.order {
            return Err(BlockError::InvalidParameter(format!(
                "edge {{{x},{y}}} is a loop or out of range for order {}",
                self.order
            )));
        }
        if !self.edges.insert(edge(x, y)) {
            return Err(BlockError::InvalidParameter(format!("duplicate edge {{{x},{y}}}")));
        }
        Ok(())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The symmetric digraph `G*` (both orientations of every edge).
    pub fn symmetric(&self) -> Digraph {
        Digraph::from_arcs(
            self.order,
            self.edges.iter().flat_map(|&(a, b)| [Arc::new(a, b), Arc::new(b, a)]),
        )
        .expect("edges of a simple graph give distinct arcs")
    }

    /// The cycles of a 2-regular graph, each starting at its smallest vertex
    /// and continuing to its smaller neighbor; `None` if not 2-regular.
    pub fn two_regular_cycles(&self) -> Option<Vec<Vec<Vertex>>> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        if adj.values().any(|n| n.len() != 2) {
            return None;
        }
        let mut seen = BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in adj.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut prev = start;
            let mut cur = *adj[&start].iter().min().expect("degree 2");
            while cur != start {
                cycle.push(cur);
                seen.insert(cur);
                let next = adj[&cur].iter().copied().find(|&w| w != prev).expect("degree 2");
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        Some(cycles)
    }
}

/// Declared kind of an undirected factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UFactorKind {
    /// A perfect matching.
    OneFactor,
    /// A 2-factor whose cycles all have the given length.
    Cycles(u32),
}

impl UFactorKind {
    /// The kind of the symmetric lift of a factor of this kind.
    pub fn lifted(self) -> FactorKind {
        match self {
            UFactorKind::OneFactor => FactorKind::K2Star,
            UFactorKind::Cycles(l) => FactorKind::SymCycles(l),
        }
    }
}

/// A spanning edge subset tagged with its declared kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedFactor {
    pub kind: UFactorKind,
    pub edges: BTreeSet<Edge>,
}

impl UndirectedFactor {
    pub fn matching(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        UndirectedFactor {
            kind: UFactorKind::OneFactor,
            edges: pairs.into_iter().map(|(a, b)| edge(a, b)).collect(),
        }
    }

    /// A cycle factor from vertex sequences (all cycles of the first one's length).
    pub fn cycles<C: AsRef<[Vertex]>>(cycles: &[C]) -> Self {
        let len = cycles.first().map_or(0, |c| c.as_ref().len()) as u32;
        UndirectedFactor {
            kind: UFactorKind::Cycles(len),
            edges: cycles.iter().flat_map(|c| cycle_edges(c.as_ref())).collect(),
        }
    }

    /// The factor's symmetric lift.
    pub fn lift(&self) -> Factor {
        Factor::new(
            self.kind.lifted(),
            self.edges.iter().flat_map(|&(a, b)| [Arc::new(a, b), Arc::new(b, a)]),
        )
    }

    pub fn relabeled(&self, map: &[Vertex]) -> Self {
        UndirectedFactor {
            kind: self.kind,
            edges: self.edges.iter().map(|&(a, b)| edge(map[a as usize], map[b as usize])).collect(),
        }
    }
}

/// An ordered list of factors claimed to partition a host graph's edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedFactorization {
    pub host: UndirectedGraph,
    pub factors: Vec<UndirectedFactor>,
}

impl UndirectedFactorization {
    /// Checks the factorization by lifting it and running the independent
    /// digraph checker (a symmetric lift is a factorization of `G*` iff the
    /// original is a factorization of `G`).
    pub fn verify(&self) -> Result<(), BlockError> {
        let cert = Certificate::from_factors(
            HostSpec::explicit(&self.host.symmetric()),
            self.factors.iter().map(UndirectedFactor::lift).collect(),
            Trace::new("undirected-check"),
        );
        let report = check_certificate(&cert);
        if report.accepted() {
            Ok(())
        } else {
            Err(BlockError::Verification(report.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_reject_loops_and_bad_vertices() {
        let mut g = UndirectedGraph::empty(3);
        g.insert(0, 1).unwrap();
        assert!(g.insert(1, 1).is_err());
        assert!(g.insert(0, 3).is_err());
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(UndirectedGraph::complete(6).edge_count(), 15);
        assert_eq!(UndirectedGraph::complete_bipartite(3).edge_count(), 9);
        let d = UndirectedGraph::complete(4).symmetric();
        assert_eq!(d.arc_count(), 12);
    }

    #[test]
    fn two_regular_components() {
        let g = UndirectedGraph::from_edges(7, cycle_edges(&[0, 1, 2]).into_iter().chain(cycle_edges(&[3, 4, 5, 6])))
            .unwrap();
        let cycles = g.two_regular_cycles().unwrap();
        assert_eq!(cycles.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 4]);
        let path = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(path.two_regular_cycles().is_none());
    }

    #[test]
    fn factors_lift_and_relabel() {
        let m = UndirectedFactor::matching([(0, 1), (3, 2)]);
        assert_eq!(m.lift().kind, FactorKind::K2Star);
        assert_eq!(m.lift().arcs.len(), 4);
        let c = UndirectedFactor::cycles(&[[0, 1, 2]]);
        assert_eq!(c.kind, UFactorKind::Cycles(3));
        assert_eq!(c.relabeled(&[2, 0, 1]).edges, c.edges);
        assert_eq!(m.relabeled(&[1, 0, 3, 2]).edges, m.edges);
    }

    #[test]
    fn factorizations_are_checked() {
        let host = UndirectedGraph::complete(4);
        let good = UndirectedFactorization {
            host: host.clone(),
            factors: vec![
                UndirectedFactor::matching([(0, 1), (2, 3)]),
                UndirectedFactor::matching([(0, 2), (1, 3)]),
                UndirectedFactor::matching([(0, 3), (1, 2)]),
            ],
        };
        good.verify().unwrap();
        let mut bad = good.clone();
        bad.factors[2] = UndirectedFactor::matching([(0, 1), (2, 3)]);
        assert!(matches!(bad.verify(), Err(BlockError::Verification(_))));
    }
}
