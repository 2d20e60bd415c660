//! Undirected decompositions of blown-up cycles via the Haggkvist doubling,
//! returned as symmetric factors.

use hw_blocks::{haggkvist_double, BaseShape, BlockError, UndirectedFactor, UndirectedGraph};
use hw_digraph::{Factor, Vertex};

fn as_symmetric(g: &UndirectedGraph) -> Result<Factor, BlockError> {
    let cycles = g
        .two_regular_cycles()
        .ok_or_else(|| BlockError::Verification("doubling produced a non-2-regular graph".into()))?;
    Ok(Factor::symmetric_cycles(&cycles))
}

fn base_cycle(m: u32) -> BaseShape {
    BaseShape::Cycle((0..m).collect())
}

/// `C_m[2]` as two Hamilton cycles, lifted to symmetric `2m`-cycle factors.
pub fn blowup_hamilton_pair(m: u32) -> Result<[Factor; 2], BlockError> {
    let [a, b] = haggkvist_double(&base_cycle(m), m, &[2 * m])?;
    Ok([as_symmetric(&a)?, as_symmetric(&b)?])
}

/// `C_m[2]` (m even) as two `C_m`-factors, lifted to symmetric factors.
pub fn blowup_cycle_pair(m: u32) -> Result<[Factor; 2], BlockError> {
    let [a, b] = haggkvist_double(&base_cycle(m), m, &[m, m])?;
    Ok([as_symmetric(&a)?, as_symmetric(&b)?])
}

/// Four `C_4`-factors of `C_l[4]`, obtained by doubling twice: `C_l[2]`
/// splits into two Hamilton cycles `H`, and each `H[2]` into two
/// `C_4`-factors. Vertex `(v, k)` of the blow-up (copy `k < 4`) is `k·l + v`.
pub fn quadrupled_cycle_c4_factors(l: u32) -> Result<Vec<UndirectedFactor>, BlockError> {
    let mut out = Vec::with_capacity(4);
    for ham in haggkvist_double(&base_cycle(l), l, &[2 * l])? {
        let cycle = ham
            .two_regular_cycles()
            .and_then(|mut c| (c.len() == 1).then(|| c.remove(0)))
            .ok_or_else(|| BlockError::Verification("expected a Hamilton cycle".into()))?;
        // Inner copy c' of vertex u = c·l + v is c'·2l + u = (2c' + c)·l + v.
        for g in haggkvist_double(&BaseShape::Cycle(cycle), 2 * l, &vec![4; l as usize])? {
            let cycles = g
                .two_regular_cycles()
                .ok_or_else(|| BlockError::Verification("expected a 2-factor".into()))?;
            out.push(UndirectedFactor::cycles(&cycles));
        }
    }
    Ok(out)
}

/// The vertex map from the copy-major labels `k·l + v` of `C_l[4]` to the
/// part-major labels `4·v + k` of the equipartite host with parts of size 4.
pub fn copy_major_to_part_major(l: u32) -> Vec<Vertex> {
    (0..4 * l).map(|x| 4 * (x % l) + x / l).collect()
}
