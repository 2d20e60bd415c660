//! The trust anchor: arc-by-arc validation of factors and certificates.
//!
//! Nothing here calls construction code; only the shared digraph types are
//! used. Cycle structure is read off the out-neighbour permutation.

use std::collections::BTreeMap;

use hw_digraph::{Arc, Certificate, Digraph, Factor, FactorKind, HostSpec, Vertex};

use crate::report::{VerificationReport, Violation};

/// Checks that `f` is a spanning factor of `host` of its declared kind.
pub fn check_factor(f: &Factor, host: &Digraph) -> VerificationReport {
    let mut report = VerificationReport::default();
    let n = host.order() as usize;

    let foreign: Vec<Arc> = f
        .arcs
        .iter()
        .filter(|a| a.tail as usize >= n || a.head as usize >= n || !host.contains(**a))
        .copied()
        .collect();
    if !foreign.is_empty() {
        report.push(None, Violation::NotInHost { arcs: foreign });
        return report;
    }

    let mut outs: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut ins = vec![0usize; n];
    for a in &f.arcs {
        outs[a.tail as usize].push(a.head);
        ins[a.head as usize] += 1;
    }
    let uncovered: Vec<Vertex> =
        (0..n).filter(|&v| outs[v].is_empty() && ins[v] == 0).map(|v| v as Vertex).collect();
    if !uncovered.is_empty() {
        report.push(None, Violation::NotSpanning { vertices: uncovered });
    }

    let degree = match f.kind {
        FactorKind::K2Star | FactorKind::Cycles(_) => 1,
        FactorKind::SymCycles(_) => 2,
    };
    let bad: Vec<Vertex> = (0..n)
        .filter(|&v| outs[v].len() != degree || ins[v] != degree)
        .map(|v| v as Vertex)
        .collect();
    if !bad.is_empty() {
        report.push(None, Violation::Degree { vertices: bad, expected: degree });
        return report;
    }

    match f.kind {
        FactorKind::K2Star => check_permutation_cycles(&outs, 2, f.kind, &mut report),
        FactorKind::Cycles(l) => check_permutation_cycles(&outs, l as usize, f.kind, &mut report),
        FactorKind::SymCycles(l) => check_symmetric_cycles(f, &outs, l as usize, &mut report),
    }
    report
}

/// Every cycle of the out-neighbour permutation must have length `len`.
fn check_permutation_cycles(
    outs: &[Vec<Vertex>],
    len: usize,
    kind: FactorKind,
    report: &mut VerificationReport,
) {
    let n = outs.len();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v as Vertex);
            v = outs[v][0] as usize;
        }
        if cycle.len() != len || len < 2 {
            report.push(
                None,
                Violation::Component { expected: kind, found_length: cycle.len(), witness: cycle },
            );
        }
    }
}

/// Symmetric, 2-regular underlying graph whose cycles all have length `len`.
fn check_symmetric_cycles(
    f: &Factor,
    outs: &[Vec<Vertex>],
    len: usize,
    report: &mut VerificationReport,
) {
    let asym: Vec<Arc> = f.arcs.iter().filter(|a| !f.arcs.contains(&a.reversed())).copied().collect();
    if !asym.is_empty() {
        report.push(None, Violation::NotSymmetric { arcs: asym });
        return;
    }
    let n = outs.len();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start as Vertex];
        seen[start] = true;
        let mut prev = start;
        let mut cur = outs[start][0] as usize;
        while cur != start {
            seen[cur] = true;
            cycle.push(cur as Vertex);
            let next = if outs[cur][0] as usize == prev { outs[cur][1] } else { outs[cur][0] };
            prev = cur;
            cur = next as usize;
        }
        if cycle.len() != len || len < 3 {
            report.push(
                None,
                Violation::Component {
                    expected: FactorKind::SymCycles(len as u32),
                    found_length: cycle.len(),
                    witness: cycle,
                },
            );
        }
    }
}

/// Checks a full certificate: every factor valid, factors pairwise
/// arc-disjoint, union equal to the host, kind counts equal to the declared
/// multiset, and the request echo consistent with host and declaration.
pub fn check_certificate(c: &Certificate) -> VerificationReport {
    let mut report = VerificationReport::default();
    let host = match c.host.digraph() {
        Ok(h) => h,
        Err(e) => {
            report.push(None, Violation::InvalidHost(e.to_string()));
            return report;
        }
    };

    if let Some(req) = &c.request {
        if host.order() != req.v {
            report.push(
                None,
                Violation::Request(format!("request order {} but host order {}", req.v, host.order())),
            );
        }
        if req.r + req.s + 1 != req.v && c.host == (HostSpec::CompleteSymmetric { order: req.v }) {
            report.push(None, Violation::Request(format!("r+s = {} but v-1 = {}", req.r + req.s, req.v - 1)));
        }
        let mut declared = c.expected.clone();
        declared.sort();
        if declared != req.expected_counts() {
            report.push(
                None,
                Violation::Request("declared kinds differ from the request's (r, s)".into()),
            );
        }
    }

    for (i, f) in c.factors.iter().enumerate() {
        report.absorb(i, check_factor(f, &host));
    }

    let mut owner: BTreeMap<Arc, usize> = BTreeMap::new();
    for (i, f) in c.factors.iter().enumerate() {
        for &a in &f.arcs {
            if let Some(&first) = owner.get(&a) {
                report.push(Some(i), Violation::Overlap { arc: a, first, second: i });
            } else {
                owner.insert(a, i);
            }
        }
    }
    let uncovered: Vec<Arc> = host.arcs().iter().filter(|a| !owner.contains_key(a)).copied().collect();
    if !uncovered.is_empty() {
        let total = uncovered.len();
        report.push(None, Violation::Uncovered { arcs: uncovered, total });
    }

    let mut expected = c.expected.clone();
    expected.sort();
    let actual = c.actual_counts();
    if expected != actual {
        report.push(None, Violation::Counts { expected, actual });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use hw_digraph::{complete_symmetric, Trace};

    fn k4() -> Digraph {
        complete_symmetric(4).unwrap()
    }

    #[test]
    fn valid_factors_of_each_kind() {
        assert!(check_factor(&Factor::double_arcs([(0, 1), (2, 3)]), &k4()).accepted());
        assert!(check_factor(&Factor::directed_cycles(&[[0, 2, 1, 3]]), &k4()).accepted());
        assert!(check_factor(&Factor::symmetric_cycles(&[[0, 1, 2, 3]]), &k4()).accepted());
    }

    #[test]
    fn wrong_cycle_lengths_are_components() {
        let f = Factor::new(FactorKind::Cycles(4), Factor::directed_cycles(&[[0, 1], [2, 3]]).arcs);
        let r = check_factor(&f, &k4());
        assert!(matches!(r.failures[0].violation, Violation::Component { found_length: 2, .. }));
        let k2 = Factor::new(FactorKind::K2Star, Factor::directed_cycles(&[[0, 1, 2, 3]]).arcs);
        assert!(!check_factor(&k2, &k4()).accepted());
    }

    #[test]
    fn partial_and_foreign_factors() {
        let partial = Factor::double_arcs([(0, 1)]);
        let r = check_factor(&partial, &k4());
        assert!(matches!(&r.failures[0].violation, Violation::NotSpanning { vertices } if vertices == &[2, 3]));
        let foreign = Factor::double_arcs([(0, 1), (2, 7)]);
        assert!(matches!(check_factor(&foreign, &k4()).failures[0].violation, Violation::NotInHost { .. }));
    }

    #[test]
    fn asymmetric_symmetric_factors() {
        let mut f = Factor::symmetric_cycles(&[[0, 1, 2, 3]]);
        f.arcs.remove(&Arc::new(1, 0));
        f.arcs.insert(Arc::new(1, 3));
        f.arcs.remove(&Arc::new(3, 2));
        f.arcs.insert(Arc::new(3, 1));
        assert!(!check_factor(&f, &k4()).accepted());
    }

    #[test]
    fn request_echo_must_match() {
        let factors = vec![
            Factor::double_arcs([(0, 1), (2, 3)]),
            Factor::double_arcs([(0, 2), (1, 3)]),
            Factor::double_arcs([(0, 3), (1, 2)]),
        ];
        let req = hw_digraph::ParamRequest::new(hw_digraph::Family::K2Cm, 4, 4, 3, 0);
        let good = Certificate::for_request(req, factors.clone(), Trace::new("t"));
        assert!(check_certificate(&good).accepted());
        let mut bad = good.clone();
        bad.request = Some(hw_digraph::ParamRequest::new(hw_digraph::Family::K2Cm, 4, 4, 1, 2));
        assert!(check_certificate(&bad)
            .failures
            .iter()
            .any(|f| matches!(f.violation, Violation::Request(_))));
        let mut wrong_host = good;
        wrong_host.host = HostSpec::CompleteSymmetric { order: 1 };
        assert!(matches!(
            check_certificate(&wrong_host).failures[0].violation,
            Violation::InvalidHost(_)
        ));
    }
}
