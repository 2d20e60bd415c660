//! Walecki Hamilton decompositions of complete graphs.

use crate::undirected::{Edge, UndirectedFactor, UndirectedFactorization, UndirectedGraph};
use crate::BlockError;
use hw_digraph::Vertex;

/// Hamilton cycles of `K_m` for odd `m >= 3`: vertex `m-1` is the hub and
/// cycle `j` is `(m-1, j, j+1, j-1, j+2, j-2, ..., j+k)` over `Z_(m-1)`,
/// `k = (m-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaleckiOdd {
    pub order: u32,
    pub factorization: UndirectedFactorization,
}

impl WaleckiOdd {
    /// The Hamilton cycles as vertex sequences.
    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        self.factorization
            .factors
            .iter()
            .map(|f| {
                let g = UndirectedGraph::from_edges(self.order, f.edges.iter().copied())
                    .expect("factor edges are simple");
                g.two_regular_cycles().expect("Hamilton cycle").remove(0)
            })
            .collect()
    }
}

pub fn walecki_odd(m: u32) -> Result<WaleckiOdd, BlockError> {
    if m < 3 || m % 2 == 0 {
        return Err(BlockError::InvalidParameter(format!(
            "odd Walecki decomposition needs odd m >= 3, got {m}"
        )));
    }
    let q = m - 1;
    let k = q / 2;
    let zigzag: Vec<i64> = (0..q as i64)
        .map(|t| if t % 2 == 1 { (t + 1) / 2 } else { -(t / 2) })
        .collect();
    let factors = (0..k)
        .map(|j| {
            let mut cycle = vec![q];
            cycle.extend(zigzag.iter().map(|z| (j as i64 + z).rem_euclid(q as i64) as u32));
            UndirectedFactor::cycles(&[cycle])
        })
        .collect();
    let factorization = UndirectedFactorization { host: UndirectedGraph::complete(m), factors };
    factorization.verify()?;
    Ok(WaleckiOdd { order: m, factorization })
}

/// The even-order Walecki decomposition `K_m = F_m ⊕ C ⊕ σ(C) ⊕ ... ⊕
/// σ^((m-4)/2)(C)` with `C = (0, 1, ..., m-1)` and
/// `F_m = {{0, m/2}} ∪ {{i, m-i}}`.
///
/// `σ` fixes `0` and `k = m/2` and commutes with the reflection
/// `i ↦ -i`. On the other residues it is the cyclic shift along the sequence
/// `S = T ++ (-T)` where `T = [1, 2, 4, 6, ... (evens < k), -o_1, -o_2, ...]`
/// with `o_1 > o_2 > ... >= 3` the odd numbers below `k`. Because `σ`
/// commutes with the reflection, every `σ^t(C)` avoids the edges of `F_m`,
/// and the images partition the remaining edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaleckiDecomposition {
    pub order: u32,
    pub starter: Vec<Vertex>,
    pub sigma: Vec<Vertex>,
    pub f_m: Vec<Edge>,
    /// `cycles[t] = σ^t(C)`, as vertex sequences.
    pub cycles: Vec<Vec<Vertex>>,
}

impl WaleckiDecomposition {
    /// The decomposition as an undirected factorization: the Hamilton cycles
    /// (in order) followed by `F_m`.
    pub fn factorization(&self) -> UndirectedFactorization {
        let mut factors: Vec<UndirectedFactor> =
            self.cycles.iter().map(|c| UndirectedFactor::cycles(&[c.clone()])).collect();
        factors.push(UndirectedFactor::matching(self.f_m.iter().copied()));
        UndirectedFactorization { host: UndirectedGraph::complete(self.order), factors }
    }
}

pub fn walecki_even(m: u32) -> Result<WaleckiDecomposition, BlockError> {
    if m < 4 || m % 2 == 1 {
        return Err(BlockError::InvalidParameter(format!(
            "even Walecki decomposition needs even m >= 4, got {m}"
        )));
    }
    let k = m / 2;
    let mut t: Vec<i64> = vec![1];
    t.extend((2..k as i64).step_by(2));
    let top_odd = if (k - 1) % 2 == 1 { k as i64 - 1 } else { k as i64 - 2 };
    t.extend((3..=top_odd).rev().step_by(2).map(|o| -o));
    let mut seq: Vec<u32> = t.iter().map(|&x| x.rem_euclid(m as i64) as u32).collect();
    seq.extend(t.iter().map(|&x| (-x).rem_euclid(m as i64) as u32));
    let mut sigma: Vec<Vertex> = (0..m).collect();
    for j in 0..seq.len() {
        sigma[seq[j] as usize] = seq[(j + 1) % seq.len()];
    }
    let starter: Vec<Vertex> = (0..m).collect();
    let mut cycles = vec![starter.clone()];
    for _ in 1..(m - 2) / 2 {
        let prev = cycles.last().expect("nonempty");
        cycles.push(prev.iter().map(|&x| sigma[x as usize]).collect());
    }
    let mut f_m = vec![(0, k)];
    f_m.extend((1..k).map(|i| (i, m - i)));
    let d = WaleckiDecomposition { order: m, starter, sigma, f_m, cycles };
    d.factorization().verify()?;
    Ok(d)
}
