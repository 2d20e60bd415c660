//! The block digraphs a composition is assembled from, with their labelings.

use std::fmt;

use hw_constructions::BlockFamily;
use hw_digraph::{Arc, Digraph, DigraphError, FactorKind};

/// The two factor kinds of a request: `count` always counts `first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Kinds {
    pub first: FactorKind,
    pub second: FactorKind,
}

impl Kinds {
    pub fn new(first: FactorKind, second: FactorKind) -> Self {
        Kinds { first, second }
    }

    pub fn contains(&self, kind: FactorKind) -> bool {
        kind == self.first || kind == self.second
    }

    /// The cycle length the layouts are organized around: the length of the
    /// shortest cycle kind.
    pub fn cycle_length(&self) -> Option<u32> {
        [self.first, self.second]
            .iter()
            .filter_map(|k| match k {
                FactorKind::Cycles(l) => Some(*l),
                _ => None,
            })
            .min()
    }

    /// How many factors of kind `first` a block yields when it yields `a`
    /// factors of kind `ka` and `b` of kind `kb`; `None` if a nonempty class
    /// has a kind outside the request.
    pub fn count_first(&self, ka: FactorKind, a: u32, kb: FactorKind, b: u32) -> Option<u32> {
        if (a > 0 && !self.contains(ka)) || (b > 0 && !self.contains(kb)) {
            return None;
        }
        let mut count = 0;
        if ka == self.first {
            count += a;
        }
        if kb == self.first {
            count += b;
        }
        Some(count)
    }
}

impl fmt::Display for Kinds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.first, self.second)
    }
}

/// A block digraph. Labelings:
///
/// * `Complete(n)`: `0..n`.
/// * `Bipartite(k)`: `K_(k:2)*` with parts `0..k` and `k..2k`.
/// * `CycleBlowup(l)`, `CycleBlowupI(l)`, `Gamma(l)`: `a·l + i` for layer
///   `a ∈ {0,1}` over cycle position `i`.
/// * `Equipartite43`: `K_(4:3)*` with parts `4j..4j+4`.
/// * `CycleQuadrupled(l)`, `CycleTemplate { len, part }`: `c·len + i` for
///   copy `c` of cycle position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    /// `K_n*`.
    Complete(u32),
    /// `K_(k:2)*`.
    Bipartite(u32),
    /// `C_l*[2]`.
    CycleBlowup(u32),
    /// `C_l*[2] ⊕ I_2l*`.
    CycleBlowupI(u32),
    /// `Γ_l*`.
    Gamma(u32),
    /// `K_(4:3)*`.
    Equipartite43,
    /// `C_l*[4]`.
    CycleQuadrupled(u32),
    /// `C_len*[part] ⊕ len·K_part*`: a cycle of parts with every part
    /// completed internally.
    CycleTemplate { len: u32, part: u32 },
}

impl Block {
    pub fn order(&self) -> u32 {
        match *self {
            Block::Complete(n) => n,
            Block::Bipartite(k) => 2 * k,
            Block::CycleBlowup(l) | Block::CycleBlowupI(l) | Block::Gamma(l) => 2 * l,
            Block::Equipartite43 => 12,
            Block::CycleQuadrupled(l) => 4 * l,
            Block::CycleTemplate { len, part } => len * part,
        }
    }

    /// Number of factors in any factorization (the common out-degree).
    pub fn factor_count(&self) -> u32 {
        match *self {
            Block::Complete(n) => n.saturating_sub(1),
            Block::Bipartite(k) => k,
            Block::CycleBlowup(_) => 4,
            Block::CycleBlowupI(_) => 5,
            Block::Gamma(_) => 6,
            Block::Equipartite43 | Block::CycleQuadrupled(_) => 8,
            Block::CycleTemplate { part, .. } => 3 * part - 1,
        }
    }

    /// The explicit-construction families realizing this block, each with
    /// its cycle-length parameter, in order of preference.
    pub fn families(&self) -> Vec<(BlockFamily, u32)> {
        let list: Vec<(BlockFamily, u32)> = match *self {
            Block::CycleBlowup(l) => vec![
                (BlockFamily::BlowupK2VsDouble, l),
                (BlockFamily::BlowupK2VsCycle, l),
                (BlockFamily::BlowupCycleVsDouble, l),
            ],
            Block::CycleBlowupI(l) => vec![
                (BlockFamily::BlowupIK2VsDouble, l),
                (BlockFamily::BlowupIK2VsCycle, l),
                (BlockFamily::BlowupICycleVsDouble, l),
                (BlockFamily::C4BlowupI8, l),
            ],
            Block::Gamma(l) => vec![
                (BlockFamily::GammaK2VsDouble, l),
                (BlockFamily::GammaK2VsCycle, l),
                (BlockFamily::GammaCycleVsDouble, l),
            ],
            Block::Equipartite43 => vec![(BlockFamily::K43, 4)],
            Block::Complete(12) => vec![(BlockFamily::K12, 4)],
            _ => Vec::new(),
        };
        list.into_iter().filter(|&(f, m)| f.accepts_m(m)).collect()
    }

    /// The block as an explicit digraph in its labeling (used by searches).
    pub fn host(&self) -> Result<Digraph, DigraphError> {
        match *self {
            Block::CycleTemplate { len, part } => {
                let id = |c: u32, i: u32| c * len + i % len;
                let mut arcs = Vec::new();
                for i in 0..len {
                    for c in 0..part {
                        for d in 0..part {
                            arcs.push(Arc::new(id(c, i), id(d, i + 1)));
                            arcs.push(Arc::new(id(d, i + 1), id(c, i)));
                            if c != d {
                                arcs.push(Arc::new(id(c, i), id(d, i)));
                            }
                        }
                    }
                }
                arcs.sort();
                arcs.dedup();
                Digraph::from_arcs(len * part, arcs)
            }
            Block::Complete(n) => hw_digraph::complete_symmetric(n),
            _ => Err(DigraphError::InvalidParameter(format!(
                "{self} has no explicit host in the composer"
            ))),
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Block::Complete(n) => write!(f, "K{n}*"),
            Block::Bipartite(k) => write!(f, "K({k}:2)*"),
            Block::CycleBlowup(l) => write!(f, "C{l}*[2]"),
            Block::CycleBlowupI(l) => write!(f, "C{l}*[2]+I{}", 2 * l),
            Block::Gamma(l) => write!(f, "Gamma{l}*"),
            Block::Equipartite43 => write!(f, "K(4:3)*"),
            Block::CycleQuadrupled(l) => write!(f, "C{l}*[4]"),
            Block::CycleTemplate { len, part } => write!(f, "C{len}*[{part}]+{len}K{part}*"),
        }
    }
}
