use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{
    complete_symmetric, complete_symmetric_equipartite, cycle_blowup_plus_i, cycle_symmetric,
    blowup, named_graph_gamma, Arc, Digraph, DigraphError, Factor, FactorKind,
};

/// The two problem families: `{(K2*)^r, C_m^s}` and `{C_m^r, C_2m^s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    K2Cm,
    CmC2m,
}

impl Family {
    /// Stable CLI / document code.
    pub fn code(&self) -> &'static str {
        match self {
            Family::K2Cm => "k2cm",
            Family::CmC2m => "cm2m",
        }
    }

    pub fn from_code(code: &str) -> Option<Family> {
        match code {
            "k2cm" => Some(Family::K2Cm),
            "cm2m" => Some(Family::CmC2m),
            _ => None,
        }
    }

    /// The (first, second) factor kinds for cycle length `m`.
    pub fn kinds(&self, m: u32) -> (FactorKind, FactorKind) {
        match self {
            Family::K2Cm => (FactorKind::K2Star, FactorKind::Cycles(m)),
            Family::CmC2m => (FactorKind::Cycles(m), FactorKind::Cycles(2 * m)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A request for a factorization of `K_v*` with `r` factors of the first kind
/// and `s` of the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamRequest {
    pub family: Family,
    pub v: u32,
    pub m: u32,
    pub r: u32,
    pub s: u32,
}

impl ParamRequest {
    pub fn new(family: Family, v: u32, m: u32, r: u32, s: u32) -> Self {
        ParamRequest { family, v, m, r, s }
    }

    pub fn kinds(&self) -> (FactorKind, FactorKind) {
        self.family.kinds(self.m)
    }

    /// The declared kind multiset (zero counts omitted).
    pub fn expected_counts(&self) -> Vec<(FactorKind, usize)> {
        let (a, b) = self.kinds();
        let mut out = BTreeMap::new();
        if self.r > 0 {
            *out.entry(a).or_insert(0) += self.r as usize;
        }
        if self.s > 0 {
            *out.entry(b).or_insert(0) += self.s as usize;
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for ParamRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} v={} m={} r={} s={}", self.family, self.v, self.m, self.r, self.s)
    }
}

/// Describes the host digraph a certificate factorizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HostSpec {
    CompleteSymmetric { order: u32 },
    Equipartite { part_size: u32, part_count: u32 },
    /// `C_m*[2]`.
    CycleBlowup { m: u32 },
    /// `C_m*[2] ⊕ I_2m*`.
    CycleBlowupPlusI { m: u32 },
    /// `Γ_m*`.
    Gamma { m: u32 },
    /// Any other host, listed arc by arc.
    Explicit { order: u32, arcs: Vec<Arc> },
}

impl HostSpec {
    /// Materializes the host.
    pub fn digraph(&self) -> Result<Digraph, DigraphError> {
        match self {
            HostSpec::CompleteSymmetric { order } => complete_symmetric(*order),
            HostSpec::Equipartite { part_size, part_count } => {
                complete_symmetric_equipartite(*part_size, *part_count).map(|(d, _)| d)
            }
            HostSpec::CycleBlowup { m } => blowup(&cycle_symmetric(*m)?, 2),
            HostSpec::CycleBlowupPlusI { m } => cycle_blowup_plus_i(*m),
            HostSpec::Gamma { m } => named_graph_gamma(*m),
            HostSpec::Explicit { order, arcs } => Digraph::from_arcs(*order, arcs.iter().copied()),
        }
    }

    /// Number of vertices of the host.
    pub fn order(&self) -> u32 {
        match self {
            HostSpec::CompleteSymmetric { order } | HostSpec::Explicit { order, .. } => *order,
            HostSpec::Equipartite { part_size, part_count } => part_size * part_count,
            HostSpec::CycleBlowup { m }
            | HostSpec::CycleBlowupPlusI { m }
            | HostSpec::Gamma { m } => 2 * m,
        }
    }

    /// An explicit description of an arbitrary digraph.
    pub fn explicit(d: &Digraph) -> HostSpec {
        HostSpec::Explicit { order: d.order(), arcs: d.arcs().iter().copied().collect() }
    }
}

/// One named construction step; the tree explains how a certificate was built.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Trace {
    pub step: String,
    pub params: Vec<(String, String)>,
    pub children: Vec<Trace>,
}

impl Trace {
    pub fn new(step: impl Into<String>) -> Self {
        Trace { step: step.into(), params: Vec::new(), children: Vec::new() }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn child(mut self, child: Trace) -> Self {
        self.children.push(child);
        self
    }

    pub fn with_children(mut self, children: impl IntoIterator<Item = Trace>) -> Self {
        self.children.extend(children);
        self
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Trace::size).sum::<usize>()
    }

    /// Depth-first search for a step name.
    pub fn contains_step(&self, step: &str) -> bool {
        self.step == step || self.children.iter().any(|c| c.contains_step(step))
    }
}

/// A documented deviation from a literal transcription.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Repair {
    pub factor: usize,
    pub description: String,
    pub before: String,
    pub after: String,
}

/// An ordered list of factors claimed to partition a host's arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub request: Option<ParamRequest>,
    pub host: HostSpec,
    /// Declared kind multiset, sorted by kind.
    pub expected: Vec<(FactorKind, usize)>,
    pub factors: Vec<Factor>,
    pub trace: Trace,
    pub repairs: Vec<Repair>,
}

impl Certificate {
    /// A certificate whose declared kinds are read off the factors themselves.
    pub fn from_factors(host: HostSpec, factors: Vec<Factor>, trace: Trace) -> Self {
        let expected = kind_counts(&factors);
        Certificate { request: None, host, expected, factors, trace, repairs: Vec::new() }
    }

    /// A certificate answering `request` on `K_v*`.
    pub fn for_request(request: ParamRequest, factors: Vec<Factor>, trace: Trace) -> Self {
        Certificate {
            request: Some(request),
            host: HostSpec::CompleteSymmetric { order: request.v },
            expected: request.expected_counts(),
            factors,
            trace,
            repairs: Vec::new(),
        }
    }

    /// Kind multiset actually present among the factors.
    pub fn actual_counts(&self) -> Vec<(FactorKind, usize)> {
        kind_counts(&self.factors)
    }

    /// Count of factors of `kind`.
    pub fn count_of(&self, kind: FactorKind) -> usize {
        self.factors.iter().filter(|f| f.kind == kind).count()
    }

    /// Sorts factors into canonical order: K2*-factors first, then the other
    /// factors, each group ordered by smallest arc (ties, which only arise
    /// when factors overlap, broken by kind and then by the whole arc set).
    pub fn canonicalize(&mut self) {
        self.factors.sort_by(|a, b| canonical_key(a).cmp(&canonical_key(b)));
        self.expected.sort();
    }

    pub fn is_canonical(&self) -> bool {
        self.factors.windows(2).all(|w| canonical_key(&w[0]) <= canonical_key(&w[1]))
    }
}

/// The sort key realizing the canonical factor order. It is total on
/// distinct factors, so overlapping (invalid) factor lists still have a
/// single canonical order; equal factors compare equal.
pub fn canonical_key(f: &Factor) -> (u8, Option<Arc>, FactorKind, &BTreeSet<Arc>) {
    let group = if f.kind == FactorKind::K2Star { 0 } else { 1 };
    (group, f.smallest_arc(), f.kind, &f.arcs)
}

/// Sorted kind multiset of a factor list.
pub fn kind_counts(factors: &[Factor]) -> Vec<(FactorKind, usize)> {
    let mut counts = BTreeMap::new();
    for f in factors {
        *counts.entry(f.kind).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}
