//! Cycle factorizations of complete bipartite graphs and digraphs.
//!
//! With parts `A = {a_0..a_(k-1)} = 0..k` and `B = {b_0..b_(k-1)} = k..2k`,
//! every arc of `K_(k:2)*` lies in exactly one translation class: `a_i ->
//! b_(i+d)` or `b_(i+e) -> a_i` (indices mod `k`). Pairing the forward class
//! `d` with the backward class `e` gives a spanning factor whose components
//! are directed cycles of length `2 ord(d - e)` (a K2*-factor when `d = e`).
//! A factorization of `K_(k:2)*` is a permutation `d ↦ e` of `Z_k`.

use hw_digraph::{
    complete_symmetric_equipartite, Arc, Digraph, Factor, FactorKind, Trace, Vertex,
};

use crate::search::search_factors;
use crate::undirected::{UndirectedFactor, UndirectedFactorization, UndirectedGraph};
use crate::BlockError;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The kind of the factor pairing forward class `d` with backward class `e`.
pub fn difference_kind(k: u32, d: u32, e: u32) -> FactorKind {
    let delta = (d + k - e) % k;
    if delta == 0 {
        FactorKind::K2Star
    } else {
        FactorKind::Cycles(2 * k / gcd(k, delta))
    }
}

/// The factor of `K_(k:2)*` made of `a_i -> b_(i+d)` and `b_(i+e) -> a_i`.
pub fn bipartite_difference_factor(k: u32, d: u32, e: u32) -> Factor {
    let arcs = (0..k).flat_map(|i| {
        [Arc::new(i, k + (i + d) % k), Arc::new(k + (i + e) % k, i)]
    });
    Factor::new(difference_kind(k, d, e), arcs)
}

/// The host `K_(k:2)*` with the labeling above.
pub fn bipartite_host(k: u32) -> Result<Digraph, BlockError> {
    Ok(complete_symmetric_equipartite(k, 2)?.0)
}

const NODE_LIMIT: u64 = 2_000_000;

struct PermSearch<'a> {
    k: u32,
    quota: Vec<(FactorKind, usize)>,
    used: Vec<bool>,
    chosen: Vec<u32>,
    nodes: u64,
    kinds: &'a [Vec<Option<usize>>],
}

impl PermSearch<'_> {
    fn run(&mut self) -> Option<bool> {
        let d = self.chosen.len();
        if d == self.k as usize {
            return Some(true);
        }
        for e in 0..self.k as usize {
            if self.used[e] {
                continue;
            }
            let Some(slot) = self.kinds[d][e] else { continue };
            if self.quota[slot].1 == 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > NODE_LIMIT {
                return None;
            }
            self.quota[slot].1 -= 1;
            self.used[e] = true;
            self.chosen.push(e as u32);
            if self.run()? {
                return Some(true);
            }
            self.chosen.pop();
            self.used[e] = false;
            self.quota[slot].1 += 1;
        }
        Some(false)
    }
}

/// A factorization of `K_(k:2)*` with the given kind counts, as difference
/// factors ordered by forward class. The permutation search is complete, so
/// `Exhausted` proves that no difference factorization exists.
pub fn bipartite_directed_factorization(
    k: u32,
    spec: &[(FactorKind, usize)],
) -> Result<Vec<Factor>, BlockError> {
    if k == 0 {
        return Err(BlockError::InvalidParameter("part size must be positive".into()));
    }
    let quota: Vec<(FactorKind, usize)> = spec.iter().copied().filter(|&(_, c)| c > 0).collect();
    let total: usize = quota.iter().map(|&(_, c)| c).sum();
    if total != k as usize {
        return Err(BlockError::Infeasible(format!(
            "K_({k}:2)* has {k} factors, {total} requested"
        )));
    }
    let kinds: Vec<Vec<Option<usize>>> = (0..k)
        .map(|d| {
            (0..k)
                .map(|e| {
                    let kind = difference_kind(k, d, e);
                    quota.iter().position(|&(q, _)| q == kind)
                })
                .collect()
        })
        .collect();
    let mut search = PermSearch {
        k,
        quota,
        used: vec![false; k as usize],
        chosen: Vec::new(),
        nodes: 0,
        kinds: &kinds,
    };
    match search.run() {
        Some(true) => Ok(search
            .chosen
            .iter()
            .enumerate()
            .map(|(d, &e)| bipartite_difference_factor(k, d as u32, e))
            .collect()),
        Some(false) => Err(BlockError::Exhausted(format!(
            "no difference factorization of K_({k}:2)* with the requested kinds"
        ))),
        None => Err(BlockError::BudgetExceeded(format!(
            "difference factorization search on K_({k}:2)* exceeded {NODE_LIMIT} nodes"
        ))),
    }
}

/// The counts `r` for which `K_(k:2)*` has a difference factorization into
/// `r` factors of kind `a` and `k - r` of kind `b`.
pub fn bipartite_directed_options(k: u32, a: FactorKind, b: FactorKind) -> Vec<u32> {
    (0..=k)
        .filter(|&r| bipartite_directed_factorization(k, &[(a, r as usize), (b, (k - r) as usize)]).is_ok())
        .collect()
}

/// An undirected `C_m`-factorization of `K_(x,x)` (parts `0..x`, `x..2x`)
/// together with a trace naming the method used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCycleFactorization {
    pub factorization: UndirectedFactorization,
    pub trace: Trace,
}

/// Pairs `Z_x` so that every pair `{d, e}` has `gcd(x, d - e) = g`.
fn difference_pairing(x: u32, g: u32) -> Option<Vec<(u32, u32)>> {
    fn go(x: u32, g: u32, used: &mut Vec<bool>, out: &mut Vec<(u32, u32)>) -> bool {
        let Some(d) = used.iter().position(|u| !u) else { return true };
        used[d] = true;
        for e in d + 1..x as usize {
            if !used[e] && gcd(x, (e - d) as u32) == g {
                used[e] = true;
                out.push((d as u32, e as u32));
                if go(x, g, used, out) {
                    return true;
                }
                out.pop();
                used[e] = false;
            }
        }
        used[d] = false;
        false
    }
    let mut used = vec![false; x as usize];
    let mut out = Vec::new();
    go(x, g, &mut used, &mut out).then_some(out)
}

/// Factors `K_(x,x)` into `x/2` spanning unions of `m`-cycles.
///
/// The translation matchings `M_d = {a_i b_(i+d)}` are paired so that paired
/// differences `δ` satisfy `gcd(x, δ) = 2x/m`; `M_d ∪ M_e` is then a union of
/// `m`-cycles. When no such pairing exists (e.g. `m/2` odd and `m < 2x`),
/// the factorization is found by backtracking search on `K_(x,x)*`.
pub fn bipartite_cycle_factorization(x: u32, m: u32) -> Result<BipartiteCycleFactorization, BlockError> {
    if m < 4 || m % 2 == 1 {
        return Err(BlockError::InvalidParameter(format!(
            "cycles in a bipartite graph have even length >= 4, got {m}"
        )));
    }
    if (2 * x) % m != 0 {
        return Err(BlockError::Infeasible(format!("{m} does not divide 2x = {}", 2 * x)));
    }
    if x % 2 == 1 {
        return Err(BlockError::Infeasible(format!(
            "K_({x},{x}) is {x}-regular; an odd degree admits no 2-factorization"
        )));
    }
    let host = UndirectedGraph::complete_bipartite(x);
    let matching = |d: u32| (0..x).map(move |i| (i, x + (i + d) % x));
    let g = 2 * x / m;
    let (factors, trace) = match difference_pairing(x, g) {
        Some(pairs) => {
            let factors = pairs
                .iter()
                .map(|&(d, e)| {
                    let g = UndirectedGraph::from_edges(2 * x, matching(d).chain(matching(e)))
                        .expect("distinct translation classes");
                    UndirectedFactor::cycles(&g.two_regular_cycles().expect("2-regular"))
                })
                .collect();
            let trace = Trace::new("bipartite-cycle-factorization")
                .param("method", "matching-differences")
                .param("pairs", format!("{pairs:?}"));
            (factors, trace)
        }
        None => {
            let sym = host.symmetric();
            let found = search_factors(&sym, &[(FactorKind::SymCycles(m), (x / 2) as usize)], 100_000, 8)?;
            let factors = found
                .iter()
                .map(|f| {
                    let edges = f.arcs.iter().filter(|a| a.tail < a.head).map(|a| (a.tail, a.head));
                    let g = UndirectedGraph::from_edges(2 * x, edges).expect("symmetric factor");
                    UndirectedFactor::cycles(&g.two_regular_cycles().expect("2-regular"))
                })
                .collect();
            let trace = Trace::new("bipartite-cycle-factorization").param("method", "search");
            (factors, trace)
        }
    };
    let factorization = UndirectedFactorization { host, factors };
    factorization.verify()?;
    Ok(BipartiteCycleFactorization { factorization, trace })
}

/// Relabels a factor of `K_(k:2)*` onto parts `p` and `q` of an
/// equipartite vertex set with parts of size `k` (`p` plays `A`).
pub fn place_bipartite(f: &Factor, k: u32, p: u32, q: u32) -> Factor {
    let map: Vec<Vertex> = (0..2 * k).map(|v| if v < k { p * k + v } else { q * k + v - k }).collect();
    f.relabeled(&map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hw_digraph::{Certificate, HostSpec};
    use hw_verify::check_certificate;

    #[test]
    fn difference_kinds() {
        assert_eq!(difference_kind(4, 1, 1), FactorKind::K2Star);
        assert_eq!(difference_kind(4, 1, 0), FactorKind::Cycles(8));
        assert_eq!(difference_kind(4, 2, 0), FactorKind::Cycles(4));
        assert_eq!(difference_kind(6, 3, 1), FactorKind::Cycles(6));
    }

    #[test]
    fn directed_factorizations_verify() {
        let host = bipartite_host(4).unwrap();
        let spec = [(FactorKind::K2Star, 2), (FactorKind::Cycles(4), 2)];
        let factors = bipartite_directed_factorization(4, &spec).unwrap();
        let cert = Certificate::from_factors(HostSpec::explicit(&host), factors, Trace::new("test"));
        assert!(check_certificate(&cert).accepted());
        assert!(bipartite_directed_factorization(4, &[(FactorKind::K2Star, 3)]).is_err());
    }

    #[test]
    fn options_match_permutation_parity() {
        // Kinds of K_(2:2)*: d = e gives K2*, d ≠ e gives a 4-cycle factor.
        assert_eq!(bipartite_directed_options(2, FactorKind::K2Star, FactorKind::Cycles(4)), vec![0, 2]);
        let opts = bipartite_directed_options(3, FactorKind::K2Star, FactorKind::Cycles(6));
        assert_eq!(opts, vec![0, 1, 3]);
    }

    #[test]
    fn undirected_cycle_factorizations() {
        let f = bipartite_cycle_factorization(4, 4).unwrap().factorization;
        assert_eq!(f.factors.len(), 2);
        assert!(f.factors.iter().all(|x| x.kind == crate::UFactorKind::Cycles(4)));
        for (x, m) in [(2, 4), (6, 4), (6, 12), (8, 8), (10, 4)] {
            let f = bipartite_cycle_factorization(x, m).unwrap().factorization;
            assert_eq!(f.factors.len() as u32, x / 2, "K({x},{x}) into C{m}");
            f.verify().unwrap();
        }
        // K_(6,6) has no 2-factorization into 6-cycles: a known exception.
        assert!(matches!(bipartite_cycle_factorization(6, 6), Err(BlockError::Exhausted(_))));
        assert!(matches!(bipartite_cycle_factorization(4, 6), Err(BlockError::Infeasible(_))));
        assert!(matches!(bipartite_cycle_factorization(3, 6), Err(BlockError::Infeasible(_))));
        assert!(matches!(bipartite_cycle_factorization(4, 5), Err(BlockError::InvalidParameter(_))));
    }

    #[test]
    fn placement_relabels_parts() {
        let f = bipartite_difference_factor(2, 0, 0);
        let placed = place_bipartite(&f, 2, 2, 0);
        assert!(placed.arcs.iter().all(|a| (a.tail / 2 == 2) != (a.head / 2 == 2)));
        assert!(placed.arcs.iter().all(|a| a.tail / 2 != 1 && a.head / 2 != 1));
    }
}
