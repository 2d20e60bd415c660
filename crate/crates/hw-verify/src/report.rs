use std::fmt;

use hw_digraph::{Arc, FactorKind, Vertex};

/// What went wrong with a factor or certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The host descriptor could not be materialized.
    InvalidHost(String),
    /// Arcs of a factor that are not arcs of the host.
    NotInHost { arcs: Vec<Arc> },
    /// Vertices missed by a factor.
    NotSpanning { vertices: Vec<Vertex> },
    /// Vertices whose in- or out-degree differs from the kind's requirement.
    Degree { vertices: Vec<Vertex>, expected: usize },
    /// A component of the wrong shape (cycle length, missing reverse arc, ...).
    Component { expected: FactorKind, found_length: usize, witness: Vec<Vertex> },
    /// The factor's symmetric kind is violated by an arc without its reverse.
    NotSymmetric { arcs: Vec<Arc> },
    /// An arc used by two factors.
    Overlap { arc: Arc, first: usize, second: usize },
    /// Host arcs not covered by any factor.
    Uncovered { arcs: Vec<Arc>, total: usize },
    /// Declared and actual kind multisets differ.
    Counts { expected: Vec<(FactorKind, usize)>, actual: Vec<(FactorKind, usize)> },
    /// The request echo is inconsistent with the host or declared kinds.
    Request(String),
}

/// One failure; `factor` is the factor index when the failure is local.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub factor: Option<usize>,
    pub violation: Violation,
}

/// Outcome of a check. `accepted()` holds iff there are no failures.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn accepted(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn push(&mut self, factor: Option<usize>, violation: Violation) {
        self.failures.push(Failure { factor, violation });
    }

    pub(crate) fn absorb(&mut self, factor: usize, other: VerificationReport) {
        for f in other.failures {
            self.push(Some(factor), f.violation);
        }
    }
}

fn arcs_text(arcs: &[Arc]) -> String {
    let shown: Vec<String> = arcs.iter().take(8).map(|a| a.to_string()).collect();
    let more = if arcs.len() > 8 { format!(" ... ({} total)", arcs.len()) } else { String::new() };
    format!("{}{}", shown.join(" "), more)
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidHost(e) => write!(f, "invalid host: {e}"),
            Violation::NotInHost { arcs } => write!(f, "arcs not in host: {}", arcs_text(arcs)),
            Violation::NotSpanning { vertices } => write!(f, "vertices not covered: {vertices:?}"),
            Violation::Degree { vertices, expected } => {
                write!(f, "vertices without in/out-degree {expected}: {vertices:?}")
            }
            Violation::Component { expected, found_length, witness } => write!(
                f,
                "component of length {found_length} in a {expected}-factor: {witness:?}"
            ),
            Violation::NotSymmetric { arcs } => {
                write!(f, "arcs without their reverse: {}", arcs_text(arcs))
            }
            Violation::Overlap { arc, first, second } => {
                write!(f, "arc {arc} used by factors {first} and {second}")
            }
            Violation::Uncovered { arcs, total } => {
                write!(f, "{total} host arcs uncovered: {}", arcs_text(arcs))
            }
            Violation::Counts { expected, actual } => {
                write!(f, "declared kinds {} but found {}", counts_text(expected), counts_text(actual))
            }
            Violation::Request(msg) => write!(f, "request mismatch: {msg}"),
        }
    }
}

/// Renders a kind multiset as `K2*x2 + C4x9`.
pub fn counts_text(counts: &[(FactorKind, usize)]) -> String {
    if counts.is_empty() {
        return "nothing".into();
    }
    counts.iter().map(|(k, n)| format!("{k}x{n}")).collect::<Vec<_>>().join(" + ")
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.accepted() {
            return write!(f, "accepted");
        }
        writeln!(f, "rejected ({} failures)", self.failures.len())?;
        for failure in &self.failures {
            match failure.factor {
                Some(i) => writeln!(f, "  factor {i}: {}", failure.violation)?,
                None => writeln!(f, "  certificate: {}", failure.violation)?,
            }
        }
        Ok(())
    }
}
