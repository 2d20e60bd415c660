//! Kirkman triple systems: resolutions of `K_n` (`n ≡ 3 mod 6`) into
//! triangle factors.

use std::path::{Path, PathBuf};

use hw_digraph::{Certificate, FactorKind, HostSpec, Trace, Vertex};
use hw_verify::check_certificate;

use crate::lift::symmetric_lift;
use crate::search::search_factors;
use crate::undirected::{UndirectedFactor, UndirectedFactorization, UndirectedGraph};
use crate::BlockError;

/// Environment variable naming the directory of cached systems.
pub const KTS_CACHE_ENV: &str = "HWFACT_KTS_CACHE";

fn factorization(n: u32, classes: Vec<Vec<[Vertex; 3]>>) -> Result<UndirectedFactorization, BlockError> {
    let factors = classes.iter().map(|class| UndirectedFactor::cycles(class)).collect();
    let f = UndirectedFactorization { host: UndirectedGraph::complete(n), factors };
    f.verify()?;
    Ok(f)
}

/// The affine plane `AG(2,3)`: point `(a, b)` is `3a + b`; the four parallel
/// classes are the lines of slopes `∞, 0, 1, 2`.
fn kts9() -> Vec<Vec<[Vertex; 3]>> {
    let p = |a: u32, b: u32| 3 * (a % 3) + b % 3;
    let vertical = (0..3).map(|a| [p(a, 0), p(a, 1), p(a, 2)]).collect();
    let mut classes = vec![vertical];
    for slope in 0..3 {
        classes.push((0..3).map(|c| [0, 1, 2].map(|a| p(a, slope * a + c))).collect());
    }
    classes
}

/// The schoolgirl system on `Z_7 × {0,1} ∪ {∞}` (`(a,0) = a`, `(a,1) = 7+a`,
/// `∞ = 14`), developed from one base class mod 7.
fn kts15() -> Vec<Vec<[Vertex; 3]>> {
    const INF: i64 = -1;
    let base: [[(i64, u32); 3]; 5] = [
        [(INF, 0), (0, 0), (0, 1)],
        [(1, 0), (2, 0), (4, 0)],
        [(3, 0), (1, 1), (5, 1)],
        [(5, 0), (4, 1), (6, 1)],
        [(6, 0), (2, 1), (3, 1)],
    ];
    (0..7)
        .map(|t| {
            base.iter()
                .map(|triple| {
                    triple.map(|(a, layer)| {
                        if a == INF {
                            14
                        } else {
                            7 * layer + ((a + t) % 7) as u32
                        }
                    })
                })
                .collect()
        })
        .collect()
}

fn cache_file(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("kts-{n}.json"))
}

/// Reads a cached system, ignoring files that fail to parse or verify.
fn read_cached(dir: &Path, n: u32) -> Option<UndirectedFactorization> {
    let cert = hw_cert::read_document(&cache_file(dir, n)).ok()?;
    if cert.host != (HostSpec::CompleteSymmetric { order: n })
        || !check_certificate(&cert).accepted()
        || cert.factors.iter().any(|f| f.kind != FactorKind::SymCycles(3))
    {
        return None;
    }
    let factors = cert
        .factors
        .iter()
        .map(|f| UndirectedFactor {
            kind: crate::UFactorKind::Cycles(3),
            edges: f.arcs.iter().filter(|a| a.tail < a.head).map(|a| (a.tail, a.head)).collect(),
        })
        .collect();
    Some(UndirectedFactorization { host: UndirectedGraph::complete(n), factors })
}

fn search_kts(n: u32) -> Result<UndirectedFactorization, BlockError> {
    let host = UndirectedGraph::complete(n).symmetric();
    let found = search_factors(&host, &[(FactorKind::SymCycles(3), ((n - 1) / 2) as usize)], 1_000_000, 12)?;
    let factors = found
        .iter()
        .map(|f| UndirectedFactor {
            kind: crate::UFactorKind::Cycles(3),
            edges: f.arcs.iter().filter(|a| a.tail < a.head).map(|a| (a.tail, a.head)).collect(),
        })
        .collect();
    let f = UndirectedFactorization { host: UndirectedGraph::complete(n), factors };
    f.verify()?;
    Ok(f)
}

/// A Kirkman triple system of order `n`, using the directory named by
/// [`KTS_CACHE_ENV`] (if set) to cache searched systems.
pub fn kirkman_triple_system(n: u32) -> Result<UndirectedFactorization, BlockError> {
    let dir = std::env::var_os(KTS_CACHE_ENV).map(PathBuf::from);
    kirkman_triple_system_cached(n, dir.as_deref())
}

/// As [`kirkman_triple_system`] with an explicit cache directory. Orders 3,
/// 9 and 15 are built in; larger orders are searched, and a found system is
/// written to `cache/kts-<n>.json` (atomically) as a certificate of the
/// lifted factorization of `K_n*`.
pub fn kirkman_triple_system_cached(
    n: u32,
    cache: Option<&Path>,
) -> Result<UndirectedFactorization, BlockError> {
    if n % 6 != 3 {
        return Err(BlockError::Infeasible(format!(
            "a Kirkman triple system needs n ≡ 3 (mod 6), got {n}"
        )));
    }
    match n {
        3 => return factorization(3, vec![vec![[0, 1, 2]]]),
        9 => return factorization(9, kts9()),
        15 => return factorization(15, kts15()),
        _ => {}
    }
    if let Some(dir) = cache {
        if let Some(f) = read_cached(dir, n) {
            return Ok(f);
        }
    }
    let f = search_kts(n)?;
    if let Some(dir) = cache {
        let lifted = symmetric_lift(&f)?;
        let cert = Certificate::from_factors(
            HostSpec::CompleteSymmetric { order: n },
            lifted.factors,
            Trace::new("kirkman-triple-system").param("n", n).param("method", "search"),
        );
        std::fs::create_dir_all(dir).map_err(|e| BlockError::Cache(e.to_string()))?;
        hw_cert::write_document(&cache_file(dir, n), &cert)
            .map_err(|e| BlockError::Cache(e.to_string()))?;
    }
    Ok(f)
}
