//! Points of `Z_2 x Z_m` and the cycle/factor helpers used to transcribe
//! piecewise formulas. A point `(a, i)` is vertex `(a mod 2)·m + (i mod m)`.

use hw_digraph::{cycle_arcs, Arc, Factor, FactorKind, LayeredLabels, Vertex};

pub(crate) type Point = (i64, i64);

/// Vertex ids of a sequence of points.
pub(crate) fn ids(m: u32, points: &[Point]) -> Vec<Vertex> {
    let labels = LayeredLabels::new(m);
    points.iter().map(|&(a, i)| labels.id(a, i)).collect()
}

/// The sequence translated by `(1, 0)`.
pub(crate) fn shifted(points: &[Point]) -> Vec<Point> {
    points.iter().map(|&(a, i)| (a + 1, i)).collect()
}

/// Arcs of the directed cycle through `points`.
pub(crate) fn cycle(m: u32, points: &[Point]) -> Vec<Arc> {
    cycle_arcs(&ids(m, points))
}

/// Reverses every arc.
pub(crate) fn rev(arcs: Vec<Arc>) -> Vec<Arc> {
    arcs.into_iter().map(|a| a.reversed()).collect()
}

/// A directed cycle factor of the given length from arc lists.
pub(crate) fn cycles_factor(len: u32, parts: impl IntoIterator<Item = Vec<Arc>>) -> Factor {
    Factor::new(FactorKind::Cycles(len), parts.into_iter().flatten())
}

/// `X ∪ (X + (1, 0))` for a directed cycle `X` on `m` points.
pub(crate) fn with_translate(m: u32, points: &[Point]) -> Factor {
    cycles_factor(points.len() as u32, [cycle(m, points), cycle(m, &shifted(points))])
}

/// The factor of arcs of `host` left after removing `used`, declared as
/// directed `len`-cycles; the gate checks its shape.
pub(crate) fn residual(host: &hw_digraph::Digraph, used: &[Factor], len: u32) -> Factor {
    let taken: std::collections::BTreeSet<Arc> =
        used.iter().flat_map(|f| f.arcs.iter().copied()).collect();
    Factor::new(
        FactorKind::Cycles(len),
        host.arcs().iter().copied().filter(|a| !taken.contains(a)),
    )
}

/// The reflection matching `{0, m/2}, {i, m - i}` doubled inside each layer
/// (`same = true`) or across the layers.
pub(crate) fn reflection_layers(m: u32, same: bool) -> Factor {
    let labels = LayeredLabels::new(m);
    let m = m as i64;
    let mut pairs = vec![(0, m / 2)];
    pairs.extend((1..m / 2).map(|i| (i, m - i)));
    Factor::double_arcs(pairs.into_iter().flat_map(|(p, q)| {
        (0..2).map(move |a| {
            let b = if same { a } else { a + 1 };
            (labels.id(a, p), labels.id(b, q))
        })
    }))
}

/// `I_2m*`: the double arcs `((0, i), (1, i))*`.
pub(crate) fn layer_matching(m: u32) -> Factor {
    Factor::double_arcs((0..m).map(|i| (i, m + i)))
}
