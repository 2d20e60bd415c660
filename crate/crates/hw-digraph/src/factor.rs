use std::collections::BTreeSet;
use std::fmt;

use crate::{cycle_arcs, double_arc, Arc, Vertex};

/// The declared kind of a spanning factor.
///
/// The derived order puts K2*-factors first, which is the canonical factor
/// order used by certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKind {
    /// Every component is a double arc `(x, y)*`.
    K2Star,
    /// Every component is a directed cycle of the given length.
    Cycles(u32),
    /// Every component is a symmetric cycle `C_l*` (both orientations of an
    /// undirected `l`-cycle, `l >= 3`); produced by symmetric lifts.
    SymCycles(u32),
}

impl FactorKind {
    /// Short stable name used in documents and reports (`k2`, `c4`, `sym-c5`).
    pub fn code(&self) -> String {
        match self {
            FactorKind::K2Star => "k2".to_string(),
            FactorKind::Cycles(l) => format!("c{l}"),
            FactorKind::SymCycles(l) => format!("sym-c{l}"),
        }
    }

    /// Parses [`FactorKind::code`].
    pub fn from_code(code: &str) -> Option<FactorKind> {
        if code == "k2" {
            return Some(FactorKind::K2Star);
        }
        if let Some(rest) = code.strip_prefix("sym-c") {
            return rest.parse().ok().map(FactorKind::SymCycles);
        }
        code.strip_prefix('c').and_then(|rest| rest.parse().ok()).map(FactorKind::Cycles)
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::K2Star => write!(f, "K2*"),
            FactorKind::Cycles(l) => write!(f, "C{l}"),
            FactorKind::SymCycles(l) => write!(f, "C{l}*"),
        }
    }
}

/// A spanning arc subset tagged with its declared kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    pub kind: FactorKind,
    pub arcs: BTreeSet<Arc>,
}

impl Factor {
    pub fn new(kind: FactorKind, arcs: impl IntoIterator<Item = Arc>) -> Self {
        Factor { kind, arcs: arcs.into_iter().collect() }
    }

    /// A K2*-factor from its double arcs.
    pub fn double_arcs(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        Factor::new(FactorKind::K2Star, pairs.into_iter().flat_map(|(x, y)| double_arc(x, y)))
    }

    /// A directed cycle factor from vertex sequences; the length is taken from
    /// the first cycle (callers pass equal-length cycles).
    pub fn directed_cycles<C: AsRef<[Vertex]>>(cycles: &[C]) -> Self {
        let len = cycles.first().map_or(0, |c| c.as_ref().len()) as u32;
        Factor::new(
            FactorKind::Cycles(len),
            cycles.iter().flat_map(|c| cycle_arcs(c.as_ref())),
        )
    }

    /// A symmetric cycle factor (both orientations of each cycle).
    pub fn symmetric_cycles<C: AsRef<[Vertex]>>(cycles: &[C]) -> Self {
        let len = cycles.first().map_or(0, |c| c.as_ref().len()) as u32;
        Factor::new(
            FactorKind::SymCycles(len),
            cycles
                .iter()
                .flat_map(|c| cycle_arcs(c.as_ref()))
                .flat_map(|a| [a, a.reversed()]),
        )
    }

    pub fn smallest_arc(&self) -> Option<Arc> {
        self.arcs.iter().next().copied()
    }

    /// The factor with every vertex `x` renamed to `map[x]`.
    pub fn relabeled(&self, map: &[Vertex]) -> Factor {
        Factor::new(
            self.kind,
            self.arcs.iter().map(|a| Arc::new(map[a.tail as usize], map[a.head as usize])),
        )
    }

    /// The factor with every arc reversed (kind preserved).
    pub fn reversed(&self) -> Factor {
        Factor::new(self.kind, self.arcs.iter().map(|a| a.reversed()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_codes_round_trip() {
        for kind in [FactorKind::K2Star, FactorKind::Cycles(8), FactorKind::SymCycles(3)] {
            assert_eq!(FactorKind::from_code(&kind.code()), Some(kind));
        }
        assert_eq!(FactorKind::from_code("c"), None);
        assert_eq!(FactorKind::from_code("k3"), None);
        assert_eq!(FactorKind::SymCycles(5).to_string(), "C5*");
        assert!(FactorKind::K2Star < FactorKind::Cycles(3));
    }

    #[test]
    fn constructors_tag_kinds() {
        let c = Factor::directed_cycles(&[[0, 1, 2], [3, 4, 5]]);
        assert_eq!(c.kind, FactorKind::Cycles(3));
        assert_eq!(c.arcs.len(), 6);
        let s = Factor::symmetric_cycles(&[[0, 1, 2, 3]]);
        assert_eq!((s.kind, s.arcs.len()), (FactorKind::SymCycles(4), 8));
        let k = Factor::double_arcs([(0, 1)]);
        assert_eq!(k.reversed(), k);
        assert_eq!(c.smallest_arc(), Some(Arc::new(0, 1)));
        assert_eq!(c.relabeled(&[1, 2, 0, 3, 4, 5]).arcs.len(), 6);
    }
}
