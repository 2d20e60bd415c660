//! 1-factorizations of complete and complete equipartite graphs.

use crate::haggkvist::{haggkvist_double, BaseShape};
use crate::undirected::{UndirectedFactor, UndirectedFactorization, UndirectedGraph};
use crate::walecki::walecki_odd;
use crate::BlockError;

/// The round-robin 1-factorization of `K_n`: vertex `n-1` is fixed and
/// factor `i` pairs `i` with `n-1` and `i+j` with `i-j` (mod `n-1`).
pub fn one_factorization_complete(n: u32) -> Result<UndirectedFactorization, BlockError> {
    if n < 2 || n % 2 == 1 {
        return Err(BlockError::InvalidParameter(format!(
            "round robin needs an even order >= 2, got {n}"
        )));
    }
    let q = n - 1;
    let factors = (0..q)
        .map(|i| {
            let mut pairs = vec![(i, q)];
            for j in 1..=(n - 2) / 2 {
                pairs.push(((i + j) % q, (i + q - j) % q));
            }
            UndirectedFactor::matching(pairs)
        })
        .collect();
    Ok(UndirectedFactorization { host: UndirectedGraph::complete(n), factors })
}

/// The complete equipartite graph `K_(x:y)`: `y` parts of size `x`, part `j`
/// being `[jx, (j+1)x)`.
pub fn complete_equipartite_graph(x: u32, y: u32) -> UndirectedGraph {
    let n = x * y;
    let edges = (0..n).flat_map(|a| (a + 1..n).filter(move |b| a / x != b / x).map(move |b| (a, b)));
    UndirectedGraph::from_edges(n, edges).expect("distinct edges")
}

/// A 1-factorization of `K_(x:y)` into `x(y-1)` perfect matchings.
///
/// For even `y` each round-robin matching of the quotient `K_y` is inflated
/// by the `x` difference matchings of `K_(x,x)`. For odd `y` (then `x` is
/// even) each Walecki Hamilton cycle `C` of `K_y` gives `C[2]`, which the
/// Haggkvist doubling splits into two Hamilton cycles, hence four matchings,
/// each inflated by the `x/2` difference matchings of `K_(x/2,x/2)`.
pub fn equipartite_one_factorization(x: u32, y: u32) -> Result<UndirectedFactorization, BlockError> {
    if x == 0 || y < 2 {
        return Err(BlockError::InvalidParameter(format!("K_({x}:{y}) needs x >= 1, y >= 2")));
    }
    if (x * y) % 2 == 1 {
        return Err(BlockError::Infeasible(format!(
            "K_({x}:{y}) has odd order and no perfect matching"
        )));
    }
    let host = complete_equipartite_graph(x, y);
    let mut factors = Vec::new();
    if y % 2 == 0 {
        for quotient in one_factorization_complete(y)?.factors {
            for d in 0..x {
                factors.push(UndirectedFactor::matching(quotient.edges.iter().flat_map(
                    |&(p, q)| (0..x).map(move |i| (p * x + i, q * x + (i + d) % x)),
                )));
            }
        }
    } else {
        let h = x / 2;
        for cycle in walecki_odd(y)?.cycles() {
            // C[2] on vertices copy*y + part; split into two Hamilton cycles.
            let halves = haggkvist_double(&BaseShape::Cycle(cycle.clone()), y, &[2 * y])?;
            for half in halves {
                let ham = half.two_regular_cycles().expect("Haggkvist output is 2-regular");
                let ham = &ham[0];
                for parity in 0..2 {
                    let matching: Vec<(u32, u32)> = (0..ham.len())
                        .filter(|i| i % 2 == parity)
                        .map(|i| (ham[i], ham[(i + 1) % ham.len()]))
                        .collect();
                    for d in 0..h {
                        factors.push(UndirectedFactor::matching(matching.iter().flat_map(
                            |&(a, b)| {
                                // Vertex copy*y + part of C[2] owns offsets copy*h .. copy*h + h.
                                let (pa, ca) = (a % y, a / y);
                                let (pb, cb) = (b % y, b / y);
                                (0..h).map(move |o| {
                                    (pa * x + ca * h + o, pb * x + cb * h + (o + d) % h)
                                })
                            },
                        )));
                    }
                }
            }
        }
    }
    let f = UndirectedFactorization { host, factors };
    f.verify()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_robin_examples() {
        let k2 = one_factorization_complete(2).unwrap();
        assert_eq!(k2.factors.len(), 1);
        assert!(k2.factors[0].edges.contains(&(0, 1)));
        let k4 = one_factorization_complete(4).unwrap();
        assert_eq!(k4.factors.len(), 3);
        assert_eq!(k4.factors.iter().map(|f| f.edges.len()).sum::<usize>(), 6);
        let k8 = one_factorization_complete(8).unwrap();
        assert_eq!(k8.factors.len(), 7);
        k8.verify().unwrap();
    }

    #[test]
    fn odd_orders_are_rejected() {
        assert!(matches!(one_factorization_complete(5), Err(BlockError::InvalidParameter(_))));
        assert!(matches!(one_factorization_complete(0), Err(BlockError::InvalidParameter(_))));
    }

    #[test]
    fn equipartite_examples() {
        let f = equipartite_one_factorization(1, 2).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(equipartite_one_factorization(2, 2).unwrap().factors.len(), 2);
        let f = equipartite_one_factorization(4, 3).unwrap();
        assert_eq!(f.factors.len(), 8);
        assert_eq!(f.host.edge_count(), 48);
        f.verify().unwrap();
        for (x, y) in [(2, 5), (6, 3), (3, 4), (2, 7)] {
            let f = equipartite_one_factorization(x, y).unwrap();
            assert_eq!(f.factors.len() as u32, x * (y - 1), "K({x}:{y})");
            f.verify().unwrap();
        }
        assert!(matches!(equipartite_one_factorization(3, 3), Err(BlockError::Infeasible(_))));
    }

    #[test]
    fn equipartite_graph_has_no_edges_inside_parts() {
        let g = complete_equipartite_graph(3, 4);
        assert_eq!(g.edge_count(), 54);
        assert!(g.edges().iter().all(|&(a, b)| a / 3 != b / 3));
    }
}
