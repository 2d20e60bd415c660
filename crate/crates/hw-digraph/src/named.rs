//! The named digraphs and factors the constructions manipulate.
//!
//! Labeling conventions (all documented bijections):
//! * blow-ups: the copy `c` of original vertex `x` in `D[k]` is `c * |V(D)| + x`;
//! * `Z_2 x Z_m`: `(a, i)` is `a * m + i` (see [`crate::LayeredLabels`]);
//! * equipartite digraphs: offset `o` of part `j` is `j * x + o`.

use crate::{double_arc, Arc, Digraph, DigraphError, Factor, PartitionScheme, Vertex};

/// `K_v*`: all `v(v-1)` ordered pairs.
pub fn complete_symmetric(v: u32) -> Result<Digraph, DigraphError> {
    if v < 2 {
        return Err(DigraphError::InvalidOrder { order: v, reason: "K_v* needs v >= 2" });
    }
    Digraph::from_arcs(
        v,
        (0..v).flat_map(|x| (0..v).filter(move |&y| y != x).map(move |y| Arc::new(x, y))),
    )
}

/// `K_(x:y)*`: ordered pairs whose endpoints lie in distinct parts of size `x`.
pub fn complete_symmetric_equipartite(
    x: u32,
    y: u32,
) -> Result<(Digraph, PartitionScheme), DigraphError> {
    if x < 1 {
        return Err(DigraphError::InvalidParameter("part size must be at least 1".into()));
    }
    if y < 2 {
        return Err(DigraphError::InvalidParameter("need at least two parts".into()));
    }
    let scheme = PartitionScheme { part_size: x, part_count: y };
    let n = x * y;
    let d = Digraph::from_arcs(
        n,
        (0..n).flat_map(|a| {
            (0..n).filter(move |&b| b / x != a / x).map(move |b| Arc::new(a, b))
        }),
    )?;
    Ok((d, scheme))
}

/// `D[k]`: vertex `(c, x)` has id `c * |V(D)| + x`; `(u_i, v_j)` is an arc iff
/// `(u, v)` is an arc of `D`, for all copies `i, j`.
pub fn blowup(d: &Digraph, k: u32) -> Result<Digraph, DigraphError> {
    if k < 1 {
        return Err(DigraphError::InvalidParameter("blow-up multiplicity must be >= 1".into()));
    }
    let n = d.order();
    let mut out = Digraph::empty(n * k);
    for a in d.arcs() {
        for i in 0..k {
            for j in 0..k {
                out.insert(Arc::new(i * n + a.tail, j * n + a.head))?;
            }
        }
    }
    Ok(out)
}

/// The directed cycle `(0, 1, ..., n-1)`.
pub fn directed_cycle(n: u32) -> Result<Digraph, DigraphError> {
    if n < 2 {
        return Err(DigraphError::InvalidOrder { order: n, reason: "a cycle needs n >= 2" });
    }
    Digraph::from_arcs(n, (0..n).map(|i| Arc::new(i, (i + 1) % n)))
}

/// `C_n*`: both orientations of the cycle `(0, 1, ..., n-1)`, `n >= 3`.
pub fn cycle_symmetric(n: u32) -> Result<Digraph, DigraphError> {
    if n < 3 {
        return Err(DigraphError::InvalidOrder { order: n, reason: "C_n* needs n >= 3" });
    }
    Digraph::from_arcs(n, (0..n).flat_map(|i| double_arc(i, (i + 1) % n)))
}

/// `I_2m*`: the antipodal K2*-factor `{(i, m+i)*}` of `K_2m*`.
pub fn named_factor_i(m: u32) -> Result<Factor, DigraphError> {
    if m < 1 {
        return Err(DigraphError::InvalidParameter("I_2m needs m >= 1".into()));
    }
    Ok(Factor::double_arcs((0..m).map(|i| (i, m + i))))
}

/// The reflection pairs of `F_m`: `{0, m/2}` and `{i, m-i}` for `1 <= i < m/2`.
pub fn reflection_pairs(m: u32) -> Result<Vec<(Vertex, Vertex)>, DigraphError> {
    if m % 2 != 0 || m < 4 {
        return Err(DigraphError::InvalidParameter(format!("F_m needs even m >= 4, got {m}")));
    }
    let mut pairs = vec![(0, m / 2)];
    pairs.extend((1..m / 2).map(|i| (i, m - i)));
    Ok(pairs)
}

/// `F_m*`: the reflection K2*-factor of `K_m*`.
pub fn named_factor_f(m: u32) -> Result<Factor, DigraphError> {
    Ok(Factor::double_arcs(reflection_pairs(m)?))
}

/// `Γ_m* = C_m*[2] ⊕ F_m*[2]` on `Z_2 x Z_m`.
pub fn named_graph_gamma(m: u32) -> Result<Digraph, DigraphError> {
    let f = named_factor_f(m)?;
    let f_graph = Digraph::from_arcs(m, f.arcs.iter().copied())?;
    blowup(&cycle_symmetric(m)?, 2)?.disjoint_union(&blowup(&f_graph, 2)?)
}

/// `C_m*[2] ⊕ I_2m*`.
pub fn cycle_blowup_plus_i(m: u32) -> Result<Digraph, DigraphError> {
    let i = named_factor_i(m)?;
    blowup(&cycle_symmetric(m)?, 2)?.disjoint_union(&Digraph::from_arcs(2 * m, i.arcs)?)
}

impl Factor {
    /// Convenience for tests and callers: the factor as a kind-tagged digraph.
    pub fn as_digraph(&self, order: u32) -> Result<Digraph, DigraphError> {
        Digraph::from_arcs(order, self.arcs.iter().copied())
    }
}
