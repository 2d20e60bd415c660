//! Ways of partitioning the arcs of `K_n*` into classes of block copies.
//!
//! A layout is a list of classes. Every class is a set of vertex-disjoint
//! block copies covering all `n` vertices, and every block in a class has
//! the same number of factors; factor `j` of the class is the union of
//! factor `j` of each copy. When all copies of a class are built with the
//! same first-kind count (and their factors sorted first kind first), the
//! union is again a spanning factor of a single kind, so any solution of
//! `Σ count(class) = r` yields a factorization of `K_n*`.

use std::fmt;

use hw_blocks::{
    kirkman_triple_system, one_factorization_complete, search_factors, walecki_even, walecki_odd,
    UndirectedGraph,
};
use hw_digraph::{complete_symmetric, Arc, Digraph, FactorKind, Vertex};

use crate::block::Block;
use crate::ComposerError;

/// The undirected decomposition of `K_h` a doubling layout blows up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    /// `h - 1` perfect matchings (`h` even).
    RoundRobin,
    /// `(h - 1)/2` Hamilton cycles (`h` odd).
    HamiltonOdd,
    /// `(h - 2)/2` Hamilton cycles plus the reflection matching (`h` even);
    /// the first cycle is `0, 1, .., h-1`.
    HamiltonEven,
    /// `h/2 - 1` factors of 4-cycles plus a perfect matching
    /// (`h ≡ 0 mod 4`): the round robin of `K_(h/2)` blown up by two.
    Squares,
}

impl Base {
    fn name(&self) -> &'static str {
        match self {
            Base::RoundRobin => "round-robin",
            Base::HamiltonOdd => "hamilton-odd",
            Base::HamiltonEven => "hamilton-even",
            Base::Squares => "squares",
        }
    }
}

/// How the remaining quotient edges are split in a template layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Remainder {
    /// Perfect matchings, each a class of `K_(k:2)*` copies.
    Matchings,
    /// Hamilton cycles, each a class with one `C_g*[4]` copy.
    HamiltonCycles,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layout {
    /// Every round of a round robin on `K_n` doubled: K2*-factors only.
    RoundRobin { n: u32 },
    /// Parts of size `part`; round 0 of a round robin on the parts gives a
    /// class of `K_(2·part)*` copies, every other round a class of
    /// `K_(part:2)*` copies.
    Quotient { n: u32, part: u32 },
    /// Parts of size 4 indexed by a Kirkman triple system: the first
    /// parallel class gives `K_12*` copies, the others `K_(4:3)*` copies.
    Triples { n: u32 },
    /// `K_2h* = K_h*[2] ⊕ I_2h*`: each factor of an undirected decomposition
    /// of `K_h` is blown up by two. `gamma` merges the first Hamilton cycle
    /// with the reflection matching into `Γ_h*`; `merge_i` joins `I_2h*` to
    /// the first remaining cycle factor (otherwise it is a class of its own).
    Doubling { half: u32, base: Base, gamma: bool, merge_i: bool },
    /// Parts of size `part` over a quotient `K_g`: a 2-factor of `K_g` with
    /// cycle lengths `lengths` gives template copies (its parts completed
    /// internally); the rest of `K_g` is decomposed by search.
    Template { n: u32, part: u32, lengths: Vec<u32>, remainder: Remainder },
}

/// The shape of one class: the block of each copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassShape {
    pub blocks: Vec<Block>,
}

impl ClassShape {
    fn uniform(block: Block, copies: u32) -> Self {
        ClassShape { blocks: vec![block; copies as usize] }
    }

    /// Distinct blocks, in first-appearance order.
    pub fn distinct(&self) -> Vec<Block> {
        let mut out: Vec<Block> = Vec::new();
        for b in &self.blocks {
            if !out.contains(b) {
                out.push(*b);
            }
        }
        out
    }

    pub fn factor_count(&self) -> u32 {
        self.blocks.first().map_or(0, Block::factor_count)
    }
}

/// One placed block copy: local vertex `x` is global vertex `map[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Copy {
    pub block: Block,
    pub map: Vec<Vertex>,
}

/// Copy-major placement of a template copy: local `c·len + i` goes to part
/// `cycle[i]`, offset `c`.
fn cycle_parts_map(cycle: &[Vertex], part: u32) -> Vec<Vertex> {
    let len = cycle.len() as u32;
    (0..part * len).map(|x| cycle[(x % len) as usize] * part + x / len).collect()
}

/// Part `p` then part `q` (parts of size `part`).
fn pair_map(p: u32, q: u32, part: u32) -> Vec<Vertex> {
    (0..2 * part).map(|x| if x < part { p * part + x } else { q * part + x - part }).collect()
}

fn template_lengths(g: u32, remainder: Remainder) -> Option<Vec<u32>> {
    match remainder {
        Remainder::Matchings if g % 2 == 0 && g >= 4 => {
            let mut l = vec![4; (g / 4) as usize];
            if g % 4 == 2 {
                l.truncate(((g - 6) / 4) as usize);
                l.push(6);
            }
            Some(l)
        }
        Remainder::HamiltonCycles if g % 2 == 1 && g >= 5 => Some(match g % 4 {
            3 => [vec![3], vec![4; ((g - 3) / 4) as usize]].concat(),
            _ if g >= 9 => [vec![3, 3, 3], vec![4; ((g - 9) / 4) as usize]].concat(),
            _ => vec![5],
        }),
        _ => None,
    }
}

impl Layout {
    /// The layouts for `K_n*` with factors organized around cycle length `m`,
    /// in order of preference. `templates` includes the search-backed
    /// template layouts.
    pub fn candidates(n: u32, m: u32, templates: bool) -> Vec<Layout> {
        let mut out = Vec::new();
        if n % 2 == 0 && n >= 2 {
            out.push(Layout::RoundRobin { n });
        }
        let mut parts = vec![m / 2, m];
        parts.dedup();
        for part in parts {
            if part >= 2 && n % part == 0 && (n / part) % 2 == 0 && n / part >= 4 {
                out.push(Layout::Quotient { n, part });
            }
        }
        if n % 24 == 12 && n >= 36 {
            out.push(Layout::Triples { n });
        }
        if n % 2 == 0 && n >= 4 {
            let half = n / 2;
            let mut bases = Vec::new();
            if half % 2 == 0 && half >= 4 {
                bases.push(Base::HamiltonEven);
            }
            if half % 2 == 1 {
                bases.push(Base::HamiltonOdd);
            }
            if half % 4 == 0 {
                bases.push(Base::Squares);
            }
            if half % 2 == 0 {
                bases.push(Base::RoundRobin);
            }
            for base in bases {
                let gammas: &[bool] = if base == Base::HamiltonEven { &[true, false] } else { &[false] };
                let has_cycles = base != Base::RoundRobin;
                let merges: &[bool] = if has_cycles { &[true, false] } else { &[false] };
                for &gamma in gammas {
                    for &merge_i in merges {
                        // Γ consumes the only Hamilton cycle when h = 4.
                        if gamma && merge_i && half == 4 {
                            continue;
                        }
                        out.push(Layout::Doubling { half, base, gamma, merge_i });
                    }
                }
            }
        }
        if templates {
            let mut parts = vec![m / 2, m];
            parts.dedup();
            for part in parts {
                if part < 2 || n % part != 0 {
                    continue;
                }
                let g = n / part;
                if let Some(lengths) = template_lengths(g, Remainder::Matchings) {
                    out.push(Layout::Template { n, part, lengths, remainder: Remainder::Matchings });
                }
                if part == 4 {
                    if let Some(lengths) = template_lengths(g, Remainder::HamiltonCycles) {
                        out.push(Layout::Template {
                            n,
                            part,
                            lengths,
                            remainder: Remainder::HamiltonCycles,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_template(&self) -> bool {
        matches!(self, Layout::Template { .. })
    }

    /// The class shapes, computed arithmetically (no decomposition is built).
    pub fn classes(&self) -> Vec<ClassShape> {
        match self {
            Layout::RoundRobin { n } => {
                (1..*n).map(|_| ClassShape::uniform(Block::Complete(2), n / 2)).collect()
            }
            Layout::Quotient { n, part } => {
                let g = n / part;
                let mut out = vec![ClassShape::uniform(Block::Complete(2 * part), g / 2)];
                out.extend((2..g).map(|_| ClassShape::uniform(Block::Bipartite(*part), g / 2)));
                out
            }
            Layout::Triples { n } => {
                let t = n / 4;
                let mut out = vec![ClassShape::uniform(Block::Complete(12), t / 3)];
                out.extend((1..(t - 1) / 2).map(|_| ClassShape::uniform(Block::Equipartite43, t / 3)));
                out
            }
            Layout::Doubling { half, base, gamma, merge_i } => {
                let h = *half;
                let (mut cycles, len, mut matchings): (Vec<()>, u32, u32) = match base {
                    Base::RoundRobin => (Vec::new(), 0, h - 1),
                    Base::HamiltonOdd => (vec![(); ((h - 1) / 2) as usize], h, 0),
                    Base::HamiltonEven => (vec![(); ((h - 2) / 2) as usize], h, 1),
                    Base::Squares => (vec![(); (h / 2 - 1) as usize], 4, 1),
                };
                let copies = if len == 0 { 0 } else { h / len };
                let mut out = Vec::new();
                if *gamma {
                    out.push(ClassShape::uniform(Block::Gamma(h), 1));
                    cycles.pop();
                    matchings -= 1;
                }
                if *merge_i {
                    out.push(ClassShape::uniform(Block::CycleBlowupI(len), copies));
                    cycles.pop();
                } else {
                    out.push(ClassShape::uniform(Block::Complete(2), h));
                }
                out.extend(cycles.iter().map(|_| ClassShape::uniform(Block::CycleBlowup(len), copies)));
                out.extend((0..matchings).map(|_| ClassShape::uniform(Block::Bipartite(2), h / 2)));
                out
            }
            Layout::Template { n, part, lengths, remainder } => {
                let g = n / part;
                let first = ClassShape {
                    blocks: lengths
                        .iter()
                        .map(|&len| Block::CycleTemplate { len, part: *part })
                        .collect(),
                };
                let mut out = vec![first];
                match remainder {
                    Remainder::Matchings => out.extend(
                        (0..g - 3).map(|_| ClassShape::uniform(Block::Bipartite(*part), g / 2)),
                    ),
                    Remainder::HamiltonCycles => out.extend(
                        (0..(g - 3) / 2).map(|_| ClassShape::uniform(Block::CycleQuadrupled(g), 1)),
                    ),
                }
                out
            }
        }
    }

    /// Places every copy of every class. Only template layouts search (for
    /// the remainder decomposition), deterministically.
    pub fn realize(&self) -> Result<Vec<Vec<Copy>>, ComposerError> {
        match self {
            Layout::RoundRobin { n } => Ok(one_factorization_complete(*n)?
                .factors
                .iter()
                .map(|f| {
                    f.edges
                        .iter()
                        .map(|&(x, y)| Copy { block: Block::Complete(2), map: vec![x, y] })
                        .collect()
                })
                .collect()),
            Layout::Quotient { n, part } => {
                let g = n / part;
                let rounds = one_factorization_complete(g)?;
                Ok(rounds
                    .factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| {
                        let block =
                            if i == 0 { Block::Complete(2 * part) } else { Block::Bipartite(*part) };
                        f.edges
                            .iter()
                            .map(|&(p, q)| Copy { block, map: pair_map(p, q, *part) })
                            .collect()
                    })
                    .collect())
            }
            Layout::Triples { n } => {
                let kts = kirkman_triple_system(n / 4)?;
                let mut out = Vec::new();
                for (i, f) in kts.factors.iter().enumerate() {
                    let block = if i == 0 { Block::Complete(12) } else { Block::Equipartite43 };
                    let graph = UndirectedGraph::from_edges(n / 4, f.edges.iter().copied())?;
                    let triangles = graph.two_regular_cycles().ok_or_else(|| {
                        ComposerError::Fault("a Kirkman class is not a triangle factor".into())
                    })?;
                    out.push(
                        triangles
                            .into_iter()
                            .map(|mut t| {
                                t.sort_unstable();
                                let map = (0..12).map(|x| t[(x / 4) as usize] * 4 + x % 4).collect();
                                Copy { block, map }
                            })
                            .collect(),
                    );
                }
                Ok(out)
            }
            Layout::Doubling { half, base, gamma, merge_i } => {
                realize_doubling(*half, *base, *gamma, *merge_i)
            }
            Layout::Template { n, part, lengths, remainder } => {
                realize_template(*n, *part, lengths, *remainder)
            }
        }
    }
}

/// Undirected decomposition of `K_h`: cycle factors (as cycle lists) and
/// matchings, in base order.
fn base_decomposition(h: u32, base: Base) -> Result<(Vec<Vec<Vec<Vertex>>>, Vec<Vec<(Vertex, Vertex)>>), ComposerError> {
    Ok(match base {
        Base::RoundRobin => (
            Vec::new(),
            one_factorization_complete(h)?.factors.into_iter().map(|f| f.edges.into_iter().collect()).collect(),
        ),
        Base::HamiltonOdd => (walecki_odd(h)?.cycles().into_iter().map(|c| vec![c]).collect(), Vec::new()),
        Base::HamiltonEven => {
            let w = walecki_even(h)?;
            (w.cycles.into_iter().map(|c| vec![c]).collect(), vec![w.f_m])
        }
        Base::Squares => {
            let q = h / 2;
            let rounds = one_factorization_complete(q)?;
            let squares = rounds
                .factors
                .iter()
                .map(|f| f.edges.iter().map(|&(x, y)| vec![x, y, q + x, q + y]).collect())
                .collect();
            (squares, vec![(0..q).map(|x| (x, q + x)).collect()])
        }
    })
}

fn realize_doubling(h: u32, base: Base, gamma: bool, merge_i: bool) -> Result<Vec<Vec<Copy>>, ComposerError> {
    let (mut cycles, mut matchings) = base_decomposition(h, base)?;
    // Layer a of vertex x is a·h + x.
    let blowup_map = |cycle: &[Vertex]| -> Vec<Vertex> {
        let l = cycle.len() as u32;
        (0..2 * l).map(|x| (x / l) * h + cycle[(x % l) as usize]).collect()
    };
    let mut out = Vec::new();
    if gamma {
        let first = cycles.remove(0);
        matchings.pop();
        let identity: Vec<Vertex> = (0..h).collect();
        if first != vec![identity.clone()] {
            return Err(ComposerError::Fault("the first Hamilton cycle is not 0..h".into()));
        }
        out.push(vec![Copy { block: Block::Gamma(h), map: blowup_map(&identity) }]);
    }
    if merge_i {
        let first = cycles.remove(0);
        out.push(
            first
                .iter()
                .map(|c| Copy { block: Block::CycleBlowupI(c.len() as u32), map: blowup_map(c) })
                .collect(),
        );
    } else {
        out.push((0..h).map(|x| Copy { block: Block::Complete(2), map: vec![x, h + x] }).collect());
    }
    for factor in &cycles {
        out.push(
            factor
                .iter()
                .map(|c| Copy { block: Block::CycleBlowup(c.len() as u32), map: blowup_map(c) })
                .collect(),
        );
    }
    for matching in &matchings {
        out.push(
            matching
                .iter()
                .map(|&(x, y)| Copy { block: Block::Bipartite(2), map: vec![x, h + x, y, h + y] })
                .collect(),
        );
    }
    Ok(out)
}

/// Search settings for template remainders.
const REMAINDER_NODES: u64 = 100_000;
const REMAINDER_RESTARTS: u32 = 6;

fn realize_template(
    n: u32,
    part: u32,
    lengths: &[u32],
    remainder: Remainder,
) -> Result<Vec<Vec<Copy>>, ComposerError> {
    let g = n / part;
    let mut cycles = Vec::new();
    let mut next = 0;
    for &len in lengths {
        cycles.push((next..next + len).collect::<Vec<Vertex>>());
        next += len;
    }
    let mut first = Vec::new();
    let mut used = Vec::new();
    for c in &cycles {
        let len = c.len() as u32;
        first.push(Copy { block: Block::CycleTemplate { len, part }, map: cycle_parts_map(c, part) });
        for i in 0..c.len() {
            let (x, y) = (c[i], c[(i + 1) % c.len()]);
            used.extend([Arc::new(x, y), Arc::new(y, x)]);
        }
    }
    let rest: Digraph = {
        let all = complete_symmetric(g)?;
        Digraph::from_arcs(g, all.arcs().iter().copied().filter(|a| !used.contains(a)))?
    };
    let mut out = vec![first];
    match remainder {
        Remainder::Matchings => {
            let factors =
                search_factors(&rest, &[(FactorKind::K2Star, (g - 3) as usize)], REMAINDER_NODES, REMAINDER_RESTARTS)?;
            for f in factors {
                out.push(
                    f.arcs
                        .iter()
                        .filter(|a| a.tail < a.head)
                        .map(|a| Copy { block: Block::Bipartite(part), map: pair_map(a.tail, a.head, part) })
                        .collect(),
                );
            }
        }
        Remainder::HamiltonCycles => {
            let factors = search_factors(
                &rest,
                &[(FactorKind::SymCycles(g), ((g - 3) / 2) as usize)],
                REMAINDER_NODES,
                REMAINDER_RESTARTS,
            )?;
            for f in factors {
                let graph = UndirectedGraph::from_edges(
                    g,
                    f.arcs.iter().filter(|a| a.tail < a.head).map(|a| (a.tail, a.head)),
                )?;
                let cycle = graph
                    .two_regular_cycles()
                    .and_then(|mut c| (c.len() == 1).then(|| c.remove(0)))
                    .ok_or_else(|| ComposerError::Fault("remainder factor is not a Hamilton cycle".into()))?;
                out.push(vec![Copy { block: Block::CycleQuadrupled(g), map: cycle_parts_map(&cycle, 4) }]);
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layout::RoundRobin { n } => write!(f, "round-robin(n={n})"),
            Layout::Quotient { n, part } => write!(f, "quotient(n={n}, part={part})"),
            Layout::Triples { n } => write!(f, "kirkman-triples(n={n})"),
            Layout::Doubling { half, base, gamma, merge_i } => write!(
                f,
                "doubling(h={half}, base={}, gamma={gamma}, merge-i={merge_i})",
                base.name()
            ),
            Layout::Template { n, part, lengths, remainder } => write!(
                f,
                "template(n={n}, part={part}, cycles={lengths:?}, remainder={})",
                match remainder {
                    Remainder::Matchings => "matchings",
                    Remainder::HamiltonCycles => "hamilton-cycles",
                }
            ),
        }
    }
}

impl Layout {
    /// Short step name for traces.
    pub fn step(&self) -> &'static str {
        match self {
            Layout::RoundRobin { .. } => "round-robin",
            Layout::Quotient { .. } => "quotient",
            Layout::Triples { .. } => "kirkman-triples",
            Layout::Doubling { .. } => "doubling",
            Layout::Template { .. } => "cycle-template",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Realized copies must match the shapes, each class must partition the
    /// vertices, and the copies' hosts must partition the arcs of `K_n*`.
    fn check(layout: &Layout) {
        let n = match layout {
            Layout::RoundRobin { n }
            | Layout::Quotient { n, .. }
            | Layout::Triples { n }
            | Layout::Template { n, .. } => *n,
            Layout::Doubling { half, .. } => 2 * half,
        };
        let shapes = layout.classes();
        let classes = layout.realize().unwrap();
        assert_eq!(shapes.len(), classes.len(), "{layout}");
        let mut arcs = BTreeSet::new();
        let mut degree = 0;
        for (shape, class) in shapes.iter().zip(&classes) {
            let blocks: Vec<Block> = class.iter().map(|c| c.block).collect();
            let mut expected = shape.blocks.clone();
            let mut got = blocks.clone();
            expected.sort();
            got.sort();
            assert_eq!(expected, got, "{layout}");
            let covered: BTreeSet<Vertex> = class.iter().flat_map(|c| c.map.iter().copied()).collect();
            assert_eq!(covered.len() as u32, n, "{layout}: class is not spanning");
            degree += shape.factor_count();
            for copy in class {
                let host = match copy.block {
                    Block::Complete(k) => complete_symmetric(k).unwrap(),
                    Block::Bipartite(k) => hw_blocks::bipartite_host(k).unwrap(),
                    Block::CycleBlowup(l) => hw_digraph::HostSpec::CycleBlowup { m: l }.digraph().unwrap(),
                    Block::CycleBlowupI(l) => {
                        hw_digraph::HostSpec::CycleBlowupPlusI { m: l }.digraph().unwrap()
                    }
                    Block::Gamma(l) => hw_digraph::HostSpec::Gamma { m: l }.digraph().unwrap(),
                    Block::Equipartite43 => {
                        hw_digraph::HostSpec::Equipartite { part_size: 4, part_count: 3 }.digraph().unwrap()
                    }
                    Block::CycleQuadrupled(l) => {
                        hw_digraph::blowup(&hw_digraph::cycle_symmetric(l).unwrap(), 4).unwrap()
                    }
                    b @ Block::CycleTemplate { .. } => b.host().unwrap(),
                };
                for a in host.arcs() {
                    let g = Arc::new(copy.map[a.tail as usize], copy.map[a.head as usize]);
                    assert!(arcs.insert(g), "{layout}: arc {g} covered twice");
                }
            }
        }
        assert_eq!(degree, n - 1, "{layout}");
        assert_eq!(arcs.len() as u32, n * (n - 1), "{layout}");
    }

    #[test]
    fn every_candidate_layout_partitions_the_arcs() {
        for n in [4, 6, 8, 10, 12, 16, 18, 20, 24, 30, 36] {
            for m in [4, 6, 8, 10] {
                for layout in Layout::candidates(n, m, false) {
                    check(&layout);
                }
            }
        }
    }

    #[test]
    fn template_layouts_partition_the_arcs() {
        for (n, m) in [(18, 6), (30, 6), (28, 4), (44, 4), (20, 4), (36, 4)] {
            let layouts: Vec<Layout> =
                Layout::candidates(n, m, true).into_iter().filter(Layout::is_template).collect();
            assert!(!layouts.is_empty(), "n={n} m={m}");
            for layout in layouts {
                check(&layout);
            }
        }
    }
}
