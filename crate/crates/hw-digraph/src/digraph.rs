use std::collections::BTreeSet;

use crate::{Arc, DigraphError, Vertex};

/// A finite digraph on vertices `0..order` with a materialized arc set.
///
/// Arcs are never silently merged: inserting an arc that is already present
/// is an error, which catches transcription mistakes in explicit families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    order: u32,
    arcs: BTreeSet<Arc>,
}

impl Digraph {
    /// The empty digraph of the given order.
    pub fn empty(order: u32) -> Self {
        Digraph { order, arcs: BTreeSet::new() }
    }

    /// Builds a digraph from arcs, rejecting loops, out-of-range endpoints and
    /// duplicates.
    pub fn from_arcs<I>(order: u32, arcs: I) -> Result<Self, DigraphError>
    where
        I: IntoIterator<Item = Arc>,
    {
        let mut d = Digraph::empty(order);
        for a in arcs {
            d.insert(a)?;
        }
        Ok(d)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn into_arcs(self) -> BTreeSet<Arc> {
        self.arcs
    }

    pub fn contains(&self, arc: Arc) -> bool {
        self.arcs.contains(&arc)
    }

    /// Inserts one arc; duplicates, loops and out-of-range endpoints are errors.
    pub fn insert(&mut self, arc: Arc) -> Result<(), DigraphError> {
        if arc.is_loop() {
            return Err(DigraphError::Loop(arc));
        }
        if arc.tail >= self.order || arc.head >= self.order {
            return Err(DigraphError::OutOfRange { arc, order: self.order });
        }
        if !self.arcs.insert(arc) {
            return Err(DigraphError::DuplicateArc(arc));
        }
        Ok(())
    }

    /// Arc-disjoint union (`⊕`): every arc of `other` must be new.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph, DigraphError> {
        let order = self.order.max(other.order);
        let mut d = Digraph { order, arcs: self.arcs.clone() };
        for &a in &other.arcs {
            d.insert(a)?;
        }
        Ok(d)
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph { order: self.order, arcs: self.arcs.iter().map(|a| a.reversed()).collect() }
    }

    /// True when every arc's reverse is also present.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|a| self.arcs.contains(&a.reversed()))
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.arcs.range(Arc::new(v, 0)..=Arc::new(v, u32::MAX)).count()
    }

    pub fn out_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.arcs.range(Arc::new(v, 0)..=Arc::new(v, u32::MAX)).map(|a| a.head)
    }

    /// Relabels vertex `x` to `map[x]` inside a digraph of order `new_order`.
    pub fn relabel(&self, map: &[Vertex], new_order: u32) -> Result<Digraph, DigraphError> {
        if map.len() < self.order as usize {
            return Err(DigraphError::InvalidParameter(format!(
                "relabel map has {} entries for order {}",
                map.len(),
                self.order
            )));
        }
        Digraph::from_arcs(
            new_order,
            self.arcs.iter().map(|a| Arc::new(map[a.tail as usize], map[a.head as usize])),
        )
    }
}

/// The partition of `x * y` vertices into `y` consecutive blocks of size `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionScheme {
    pub part_size: u32,
    pub part_count: u32,
}

impl PartitionScheme {
    pub fn order(&self) -> u32 {
        self.part_size * self.part_count
    }

    /// Index of the part containing `v` (parts are `[jx, (j+1)x)`).
    pub fn part_of(&self, v: Vertex) -> u32 {
        v / self.part_size
    }

    /// Id of the vertex at `offset` inside `part`.
    pub fn vertex(&self, part: u32, offset: u32) -> Vertex {
        part * self.part_size + offset
    }
}
