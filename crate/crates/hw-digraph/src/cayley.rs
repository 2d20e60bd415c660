use std::collections::BTreeSet;

use crate::{Arc, Digraph, DigraphError};

/// The abelian groups used for Cayley digraphs: `Z_n` and `Z_2 x Z_m`.
///
/// Elements are written `(a, i)`; for `Z_n` the first coordinate is always 0.
/// Vertex ids follow [`crate::LayeredLabels`]: `(a, i) -> a*m + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CayleyGroup {
    Cyclic { n: u32 },
    Z2Cross { m: u32 },
}

impl CayleyGroup {
    pub fn order(&self) -> u32 {
        match *self {
            CayleyGroup::Cyclic { n } => n,
            CayleyGroup::Z2Cross { m } => 2 * m,
        }
    }

    fn layers_and_modulus(&self) -> (u32, u32) {
        match *self {
            CayleyGroup::Cyclic { n } => (1, n),
            CayleyGroup::Z2Cross { m } => (2, m),
        }
    }

    /// Normalizes `(a, i)` into the group's canonical representatives.
    pub fn element(&self, a: i64, i: i64) -> (u32, u32) {
        let (layers, m) = self.layers_and_modulus();
        (a.rem_euclid(layers as i64) as u32, i.rem_euclid(m as i64) as u32)
    }

    fn id(&self, (a, i): (u32, u32)) -> u32 {
        let (_, m) = self.layers_and_modulus();
        a * m + i
    }

    fn add(&self, x: (u32, u32), y: (u32, u32)) -> (u32, u32) {
        self.element(x.0 as i64 + y.0 as i64, x.1 as i64 + y.1 as i64)
    }

    fn elements(&self) -> impl Iterator<Item = (u32, u32)> {
        let (layers, m) = self.layers_and_modulus();
        (0..layers).flat_map(move |a| (0..m).map(move |i| (a, i)))
    }
}

/// A group together with a connection set not containing the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleySpec {
    pub group: CayleyGroup,
    pub connection: BTreeSet<(u32, u32)>,
}

impl CayleySpec {
    /// Builds a spec from raw (possibly negative) coordinates, normalizing
    /// them into the group. Repeated elements collapse (it is a set).
    pub fn new(group: CayleyGroup, connection: &[(i64, i64)]) -> Self {
        let connection = connection.iter().map(|&(a, i)| group.element(a, i)).collect();
        CayleySpec { group, connection }
    }
}

/// The directed Cayley digraph: `(x, y)` is an arc iff `y - x` lies in the
/// connection set.
pub fn cayley(spec: &CayleySpec) -> Result<Digraph, DigraphError> {
    if spec.connection.contains(&(0, 0)) {
        return Err(DigraphError::InvalidParameter(
            "connection set contains the identity".into(),
        ));
    }
    let g = spec.group;
    let mut d = Digraph::empty(g.order());
    for x in g.elements() {
        for &s in &spec.connection {
            d.insert(Arc::new(g.id(x), g.id(g.add(x, s))))?;
        }
    }
    Ok(d)
}

/// The connection set `S = {(0,1), (1,1), (0,-1), (1,-1)}` realizing `C_m*[2]`.
pub fn cycle_blowup_connection() -> Vec<(i64, i64)> {
    vec![(0, 1), (1, 1), (0, -1), (1, -1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{blowup, cycle_symmetric, directed_cycle};

    #[test]
    fn cyclic_cayley_digraphs() {
        let c5 = cayley(&CayleySpec::new(CayleyGroup::Cyclic { n: 5 }, &[(0, 1)])).unwrap();
        assert_eq!(c5, directed_cycle(5).unwrap());
        let k4 = cayley(&CayleySpec::new(CayleyGroup::Cyclic { n: 4 }, &[(0, 1), (0, 2), (0, 3)]))
            .unwrap();
        assert_eq!(k4, crate::complete_symmetric(4).unwrap());
    }

    #[test]
    fn the_blowup_connection_set_gives_the_doubled_cycle() {
        for m in 3..8 {
            let spec = CayleySpec::new(CayleyGroup::Z2Cross { m }, &cycle_blowup_connection());
            let d = cayley(&spec).unwrap();
            assert_eq!(d.arc_count() as u32, 8 * m);
            assert_eq!(d, blowup(&cycle_symmetric(m).unwrap(), 2).unwrap());
        }
    }

    #[test]
    fn elements_normalize_and_identity_is_rejected() {
        let g = CayleyGroup::Z2Cross { m: 4 };
        assert_eq!(g.element(-1, -1), (1, 3));
        assert_eq!(g.order(), 8);
        let spec = CayleySpec::new(g, &[(2, 4)]);
        assert!(matches!(cayley(&spec), Err(DigraphError::InvalidParameter(_))));
        assert_eq!(CayleySpec::new(g, &[(0, 1), (0, 5)]).connection.len(), 1);
    }
}
