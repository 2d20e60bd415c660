//! Verify-on-construct gate shared by every construction.

use hw_blocks::search_factors;
use hw_digraph::{kind_counts, Certificate, Factor, FactorKind, Repair, Trace};
use hw_verify::check_certificate;

use crate::{BlockFamily, ConstructionError};

/// Hosts up to this order are repaired by search when a transcription fails.
pub const REPAIR_MAX_ORDER: u32 = 24;
const REPAIR_NODES: u64 = 200_000;
const REPAIR_RESTARTS: u32 = 6;

/// The kind multiset requested by `(family, m, r)`.
pub fn requested_counts(family: BlockFamily, m: u32, r: u32) -> Vec<(FactorKind, usize)> {
    let (a, b) = family.kinds(m);
    let total = family.factor_count();
    let mut counts: Vec<(FactorKind, usize)> = [(a, r as usize), (b, (total - r) as usize)]
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .collect();
    counts.sort();
    counts
}

/// Checks the factors against the family's host and the requested counts.
/// A rejected transcription is replaced by a bounded search on small hosts,
/// with the deviation recorded as a [`Repair`]; otherwise the failure is a
/// transcription fault.
pub(crate) fn certify(
    family: BlockFamily,
    m: u32,
    r: u32,
    factors: Vec<Factor>,
    trace: Trace,
) -> Result<Certificate, ConstructionError> {
    let host = family.host(m);
    let want = requested_counts(family, m, r);
    let mut cert = Certificate::from_factors(host.clone(), factors, trace);
    let report = check_certificate(&cert);
    let counts_ok = kind_counts(&cert.factors) == want;
    if report.accepted() && counts_ok {
        return Ok(cert);
    }
    let summary = if report.accepted() {
        format!("kind counts {:?} differ from the requested {:?}", cert.actual_counts(), want)
    } else {
        report.to_string()
    };
    if host.order() > REPAIR_MAX_ORDER {
        return Err(ConstructionError::Transcription { family, m, r, report: summary });
    }
    let failing = report.failures.iter().find_map(|f| f.factor).unwrap_or(0);
    let digraph = host.digraph()?;
    let found = search_factors(&digraph, &want, REPAIR_NODES, REPAIR_RESTARTS).map_err(|e| {
        ConstructionError::Transcription { family, m, r, report: format!("{summary}; repair failed: {e}") }
    })?;
    cert.factors = found;
    cert.expected = want;
    cert.trace = cert.trace.param("repaired", "search");
    cert.repairs.push(Repair {
        factor: failing,
        description: "the literal formulas were rejected by the verifier; the block was completed by bounded search".into(),
        before: summary,
        after: "search completion".into(),
    });
    let recheck = check_certificate(&cert);
    if recheck.accepted() {
        Ok(cert)
    } else {
        Err(ConstructionError::Transcription { family, m, r, report: recheck.to_string() })
    }
}
