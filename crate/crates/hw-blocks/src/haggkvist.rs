//! The Haggkvist doubling: `G[2] = G' ⊕ G''` with `G' ≅ G'' ≅ H` for a path
//! or cycle `G` with `n` edges and a 2-regular `H` with even cycles on `2n`
//! vertices.

use hw_digraph::Vertex;

use crate::undirected::UndirectedGraph;
use crate::BlockError;

/// The base graph `G`, given by its vertex sequence in a host of some order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseShape {
    /// The cycle through the listed vertices (at least 3).
    Cycle(Vec<Vertex>),
    /// The path through the listed vertices (at least 2).
    Path(Vec<Vertex>),
}

impl BaseShape {
    fn vertices(&self) -> &[Vertex] {
        match self {
            BaseShape::Cycle(v) | BaseShape::Path(v) => v,
        }
    }

    fn edge_count(&self) -> usize {
        match self {
            BaseShape::Cycle(v) => v.len(),
            BaseShape::Path(v) => v.len().saturating_sub(1),
        }
    }
}

/// Splits `G[2]` into two copies of `H`, where `H` is given by its cycle
/// lengths. Vertex `(v, copy)` of the blow-up is `copy * base_order + v`.
///
/// The edges of `G` are cut into consecutive blocks of `ℓ_j = h_j / 2` edges.
/// For each edge `{g_i, g_(i+1)}`, `G'` takes two of the four edges of
/// `K_(2,2)` and `G''` the other two, decided left to right: the first edge
/// of a block takes the two edges at `(g_i, 0)`, the last edge of a block the
/// two edges at `(g_(i+1), 1)`, and inner edges the parallel pair (`G''`
/// takes the mirror choices). Each block then closes into one cycle of
/// length `2ℓ_j` in each of `G'` and `G''`.
pub fn haggkvist_double(
    g: &BaseShape,
    base_order: u32,
    h: &[u32],
) -> Result<[UndirectedGraph; 2], BlockError> {
    let verts = g.vertices();
    let n = g.edge_count();
    match g {
        BaseShape::Cycle(v) if v.len() < 3 => {
            return Err(BlockError::InvalidParameter("a cycle needs at least 3 vertices".into()))
        }
        BaseShape::Path(v) if v.len() < 2 => {
            return Err(BlockError::InvalidParameter("a path needs at least 1 edge".into()))
        }
        _ => {}
    }
    if verts.iter().any(|&x| x >= base_order)
        || verts.iter().collect::<std::collections::BTreeSet<_>>().len() != verts.len()
    {
        return Err(BlockError::InvalidParameter(
            "base vertices must be distinct and below the base order".into(),
        ));
    }
    if let Some(&odd) = h.iter().find(|&&l| l % 2 == 1) {
        return Err(BlockError::Unsupported(format!("H has an odd cycle of length {odd}")));
    }
    if let Some(&short) = h.iter().find(|&&l| l < 4) {
        return Err(BlockError::InvalidParameter(format!(
            "H has a cycle of length {short}; simple even cycles have length >= 4"
        )));
    }
    let total: u32 = h.iter().sum();
    if total as usize != 2 * n {
        return Err(BlockError::InvalidParameter(format!(
            "H has {total} vertices but G has {n} edges (need 2n)"
        )));
    }

    let id = |pos: usize, copy: u32| copy * base_order + verts[pos % verts.len()];
    let mut first = UndirectedGraph::empty(2 * base_order);
    let mut second = UndirectedGraph::empty(2 * base_order);
    let mut start = 0usize;
    for &len in h {
        let ell = (len / 2) as usize;
        for i in start..start + ell {
            let (a0, a1, b0, b1) = (id(i, 0), id(i, 1), id(i + 1, 0), id(i + 1, 1));
            let (mine, other) = if i == start {
                ([(a0, b0), (a0, b1)], [(a1, b0), (a1, b1)])
            } else if i == start + ell - 1 {
                ([(a0, b1), (a1, b1)], [(a0, b0), (a1, b0)])
            } else {
                ([(a0, b0), (a1, b1)], [(a0, b1), (a1, b0)])
            };
            for (x, y) in mine {
                first.insert(x, y)?;
            }
            for (x, y) in other {
                second.insert(x, y)?;
            }
        }
        start += ell;
    }

    let mut expected: Vec<usize> = h.iter().map(|&l| l as usize).collect();
    expected.sort_unstable();
    for half in [&first, &second] {
        let mut lengths: Vec<usize> = half
            .two_regular_cycles()
            .ok_or_else(|| BlockError::Verification("doubling output is not 2-regular".into()))?
            .iter()
            .map(Vec::len)
            .collect();
        lengths.sort_unstable();
        if lengths != expected {
            return Err(BlockError::Verification(format!(
                "doubling produced cycle type {lengths:?}, expected {expected:?}"
            )));
        }
    }
    Ok([first, second])
}
