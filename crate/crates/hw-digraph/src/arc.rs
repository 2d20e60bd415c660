use std::fmt;

/// Vertex identifier. Vertices of an order-`v` digraph are `0..v`.
pub type Vertex = u32;

/// An ordered pair of distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub const fn new(tail: Vertex, head: Vertex) -> Self {
        Arc { tail, head }
    }

    /// The arc with the opposite direction.
    pub const fn reversed(self) -> Self {
        Arc { tail: self.head, head: self.tail }
    }

    pub const fn is_loop(self) -> bool {
        self.tail == self.head
    }
}

impl From<(Vertex, Vertex)> for Arc {
    fn from((tail, head): (Vertex, Vertex)) -> Self {
        Arc { tail, head }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

/// Both arcs of the double arc `(x, y)*`.
pub fn double_arc(x: Vertex, y: Vertex) -> [Arc; 2] {
    [Arc::new(x, y), Arc::new(y, x)]
}

/// Arcs of the directed cycle visiting `cycle` in order and closing back to
/// its first vertex.
pub fn cycle_arcs(cycle: &[Vertex]) -> Vec<Arc> {
    let n = cycle.len();
    (0..n).map(|i| Arc::new(cycle[i], cycle[(i + 1) % n])).collect()
}

/// Structured labels on `Z_2 x Z_m` (and more generally `Z_k x Z_m`): the pair
/// `(layer, index)` maps to `layer * m + (index mod m)`. This is the bijection
/// used for every blown-up digraph in the workspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayeredLabels {
    pub m: u32,
}

impl LayeredLabels {
    pub const fn new(m: u32) -> Self {
        LayeredLabels { m }
    }

    /// Id of `(layer, index)`; the index is reduced modulo `m` (negative
    /// indices wrap), the layer modulo 2.
    pub fn id(&self, layer: i64, index: i64) -> Vertex {
        let m = self.m as i64;
        (layer.rem_euclid(2) * m + index.rem_euclid(m)) as Vertex
    }

    /// Inverse of [`LayeredLabels::id`].
    pub fn coords(&self, v: Vertex) -> (u32, u32) {
        (v / self.m, v % self.m)
    }

    /// Adds `(da, di)` to the structured label of `v` in `Z_2 x Z_m`.
    pub fn translate(&self, v: Vertex, da: i64, di: i64) -> Vertex {
        let (a, i) = self.coords(v);
        self.id(a as i64 + da, i as i64 + di)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_reverse_and_display() {
        let a = Arc::new(2, 5);
        assert_eq!(a.reversed(), Arc::new(5, 2));
        assert_eq!(a.reversed().reversed(), a);
        assert!(Arc::new(3, 3).is_loop());
        assert_eq!(a.to_string(), "(2,5)");
        assert_eq!(Arc::from((2, 5)), a);
    }

    #[test]
    fn cycles_close_back() {
        assert_eq!(
            cycle_arcs(&[0, 3, 1]),
            vec![Arc::new(0, 3), Arc::new(3, 1), Arc::new(1, 0)]
        );
        assert_eq!(double_arc(1, 4), [Arc::new(1, 4), Arc::new(4, 1)]);
    }

    #[test]
    fn layered_labels_wrap() {
        let l = LayeredLabels::new(5);
        assert_eq!(l.id(1, 2), 7);
        assert_eq!(l.id(-1, -1), 9);
        assert_eq!(l.id(2, 5), 0);
        assert_eq!(l.coords(7), (1, 2));
        assert_eq!(l.translate(9, 1, 1), 0);
        for v in 0..10 {
            let (a, i) = l.coords(v);
            assert_eq!(l.id(a as i64, i as i64), v);
        }
    }
}
