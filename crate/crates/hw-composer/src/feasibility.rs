//! Classification of a parameter request before any construction runs.
//!
//! The rules, in the order they are applied:
//!
//! 1. *Proven impossible* — the counting and divisibility conditions every
//!    factorization must satisfy (`r + s = v - 1`; a cycle length used by a
//!    nonempty class divides `v`; K2*-factors need even `v`), a single
//!    `C_m`-factor next to K2*-factors, and the uniform cases that reduce to
//!    the known exceptions of the directed Oberwolfach problem with uniform
//!    cycle length (`(l, k) ∈ {(3,2), (4,1), (6,1)}` for `k` cycles of length
//!    `l`).
//! 2. *Out of scope* — cycle lengths outside the supported range (odd `m` or
//!    `m < 4`).
//! 3. *Open exception* — the parameter sets the existence results leave
//!    undecided.
//! 4. *Solvable* — everything else, tagged with the governing case.

use std::fmt;

use hw_digraph::{Family, ParamRequest};

/// The case under which a request is known to be solvable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SolvableCase {
    /// Only K2*-factors (`s = 0`): a round-robin 1-factorization, doubled.
    AllDoubleArcs,
    /// Only cycle factors of one length: a uniform directed Oberwolfach
    /// instance outside the exception list.
    UniformCycles,
    /// K2*-factors with `C_m`, `m >= 6`, and `r` odd.
    DoubleArcsOddCount,
    /// K2*-factors with `C_m`, `m >= 6`, `r` even and `m ≡ 0 (mod 4)`.
    DoubleArcsEvenCountQuarterLength,
    /// K2*-factors with `C_m`, `m >= 6`, `r` even, `m ≡ 2 (mod 4)` and
    /// `v/m` even.
    DoubleArcsEvenCountEvenQuotient,
    /// K2*-factors with `C_m`, `m >= 6`, `r` even, `m ≡ 2 (mod 4)` and
    /// `v/m` odd.
    DoubleArcsEvenCountOddQuotient,
    /// K2*-factors with `C_4` and `v ≡ 0 (mod 8)`.
    SquaresOrderEight,
    /// K2*-factors with `C_4` and `v ≡ 12 (mod 24)`.
    SquaresOrderTwelve,
    /// K2*-factors with `C_4`, `v ≡ 4 (mod 8)` and `r` odd.
    SquaresOddCount,
    /// `C_m` with `C_2m`, both classes nonempty.
    MixedLengths,
}

impl SolvableCase {
    /// Stable tag used in documents and survey output.
    pub fn code(&self) -> &'static str {
        match self {
            SolvableCase::AllDoubleArcs => "all-double-arcs",
            SolvableCase::UniformCycles => "uniform-cycles",
            SolvableCase::DoubleArcsOddCount => "double-arcs-odd-count",
            SolvableCase::DoubleArcsEvenCountQuarterLength => "double-arcs-even-count-m0mod4",
            SolvableCase::DoubleArcsEvenCountEvenQuotient => "double-arcs-even-count-even-quotient",
            SolvableCase::DoubleArcsEvenCountOddQuotient => "double-arcs-even-count-odd-quotient",
            SolvableCase::SquaresOrderEight => "squares-v0mod8",
            SolvableCase::SquaresOrderTwelve => "squares-v12mod24",
            SolvableCase::SquaresOddCount => "squares-odd-count",
            SolvableCase::MixedLengths => "mixed-lengths",
        }
    }
}

/// Why a request cannot be realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ImpossibleReason {
    /// `r + s` differs from the out-degree `v - 1`.
    CountMismatch,
    /// A nonempty class uses cycles of length `len` and `len ∤ v`.
    LengthDoesNotDivide { len: u32 },
    /// K2*-factors requested on an odd number of vertices.
    OddOrderDoubleArcs,
    /// Exactly one `C_m`-factor next to K2*-factors: its complement would be
    /// symmetric, forcing the factor itself to be symmetric.
    SingleCycleFactor,
    /// All factors are `C_len` with `copies = v/len` cycles each, one of the
    /// exceptional uniform Oberwolfach instances.
    UniformException { len: u32, copies: u32 },
}

/// An undecided parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpenClause {
    /// K2*-factors with `C_m`, `m ≡ 0 (mod 4)`, `m >= 8`, `s = 3`.
    ThreeCyclesQuarterLength,
    /// K2*-factors with `C_m`, `m ≡ 2 (mod 4)`, `v/m` odd, `s = 3`.
    ThreeCyclesOddQuotient,
    /// K2*-factors with `C_4`, `v ≡ 4 or 20 (mod 24)`, `r >= 2` even.
    SquaresEvenCount,
    /// K2*-factors with `C_4`, `v ≡ 12 (mod 24)`, `s ∈ {3, 5}`.
    SquaresFewCycles,
    /// `C_m` with `C_2m`, `s ∈ {1, 3}`.
    FewLongCycles,
}

impl OpenClause {
    pub fn code(&self) -> &'static str {
        match self {
            OpenClause::ThreeCyclesQuarterLength => "three-cycle-factors-m0mod4",
            OpenClause::ThreeCyclesOddQuotient => "three-cycle-factors-odd-quotient",
            OpenClause::SquaresEvenCount => "squares-even-count-v4mod8",
            OpenClause::SquaresFewCycles => "squares-three-or-five-v12mod24",
            OpenClause::FewLongCycles => "one-or-three-long-factors",
        }
    }
}

/// The classification of a request.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Solvable(SolvableCase),
    ProvenImpossible(ImpossibleReason),
    OpenException(OpenClause),
    OutOfScope(String),
}

impl Verdict {
    pub fn is_solvable(&self) -> bool {
        matches!(self, Verdict::Solvable(_))
    }

    /// Short tag: `solvable`, `impossible`, `open` or `out-of-scope`.
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Solvable(_) => "solvable",
            Verdict::ProvenImpossible(_) => "impossible",
            Verdict::OpenException(_) => "open",
            Verdict::OutOfScope(_) => "out-of-scope",
        }
    }
}

impl fmt::Display for ImpossibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImpossibleReason::CountMismatch => write!(f, "r + s must equal v - 1"),
            ImpossibleReason::LengthDoesNotDivide { len } => {
                write!(f, "cycle length {len} does not divide v")
            }
            ImpossibleReason::OddOrderDoubleArcs => {
                write!(f, "K2*-factors need an even number of vertices")
            }
            ImpossibleReason::SingleCycleFactor => {
                write!(f, "a single cycle factor cannot complement K2*-factors")
            }
            ImpossibleReason::UniformException { len, copies } => write!(
                f,
                "no factorization into C{len}-factors with {copies} cycle(s) each exists"
            ),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Solvable(case) => write!(f, "solvable ({})", case.code()),
            Verdict::ProvenImpossible(reason) => write!(f, "impossible ({reason})"),
            Verdict::OpenException(clause) => write!(f, "open ({})", clause.code()),
            Verdict::OutOfScope(why) => write!(f, "out of scope ({why})"),
        }
    }
}

/// Whether `k` disjoint `l`-cycles fail to give a uniform factorization of
/// `K_(lk)*`.
fn uniform_exception(len: u32, copies: u32) -> bool {
    matches!((len, copies), (3, 2) | (4, 1) | (6, 1))
}

fn impossibility(req: &ParamRequest) -> Option<ImpossibleReason> {
    let ParamRequest { family, v, m, r, s } = *req;
    if v == 0 || r + s + 1 != v {
        return Some(ImpossibleReason::CountMismatch);
    }
    if m == 0 {
        return None;
    }
    let (short, long) = match family {
        Family::K2Cm => (None, m),
        Family::CmC2m => (Some(m), 2 * m),
    };
    match short {
        Some(len) if r > 0 && v % len != 0 => {
            return Some(ImpossibleReason::LengthDoesNotDivide { len })
        }
        None if r > 0 && v % 2 != 0 => return Some(ImpossibleReason::OddOrderDoubleArcs),
        _ => {}
    }
    if s > 0 && v % long != 0 {
        return Some(ImpossibleReason::LengthDoesNotDivide { len: long });
    }
    if family == Family::K2Cm && s == 1 {
        return Some(ImpossibleReason::SingleCycleFactor);
    }
    if r == 0 && uniform_exception(long, v / long) {
        return Some(ImpossibleReason::UniformException { len: long, copies: v / long });
    }
    if let Some(len) = short {
        if s == 0 && uniform_exception(len, v / len) {
            return Some(ImpossibleReason::UniformException { len, copies: v / len });
        }
    }
    None
}

fn open_clause(req: &ParamRequest) -> Option<OpenClause> {
    let ParamRequest { family, v, m, r, s } = *req;
    match family {
        Family::CmC2m => matches!(s, 1 | 3).then_some(OpenClause::FewLongCycles),
        Family::K2Cm if m == 4 => {
            if matches!(v % 24, 4 | 20) && r >= 2 && r % 2 == 0 {
                Some(OpenClause::SquaresEvenCount)
            } else if v % 24 == 12 && matches!(s, 3 | 5) {
                Some(OpenClause::SquaresFewCycles)
            } else {
                None
            }
        }
        Family::K2Cm => {
            if s != 3 {
                None
            } else if m % 4 == 0 {
                Some(OpenClause::ThreeCyclesQuarterLength)
            } else if (v / m) % 2 == 1 {
                Some(OpenClause::ThreeCyclesOddQuotient)
            } else {
                None
            }
        }
    }
}

fn solvable_case(req: &ParamRequest) -> SolvableCase {
    let ParamRequest { family, v, m, r, s } = *req;
    match family {
        Family::K2Cm if s == 0 => SolvableCase::AllDoubleArcs,
        _ if r == 0 || s == 0 => SolvableCase::UniformCycles,
        Family::CmC2m => SolvableCase::MixedLengths,
        Family::K2Cm if m == 4 => {
            if v % 8 == 0 {
                SolvableCase::SquaresOrderEight
            } else if v % 24 == 12 {
                SolvableCase::SquaresOrderTwelve
            } else {
                SolvableCase::SquaresOddCount
            }
        }
        Family::K2Cm if r % 2 == 1 => SolvableCase::DoubleArcsOddCount,
        Family::K2Cm if m % 4 == 0 => SolvableCase::DoubleArcsEvenCountQuarterLength,
        Family::K2Cm if (v / m) % 2 == 0 => SolvableCase::DoubleArcsEvenCountEvenQuotient,
        Family::K2Cm => SolvableCase::DoubleArcsEvenCountOddQuotient,
    }
}

/// Classifies `req`. Pure and total.
pub fn feasibility(req: &ParamRequest) -> Verdict {
    if let Some(reason) = impossibility(req) {
        return Verdict::ProvenImpossible(reason);
    }
    if req.m < 4 || req.m % 2 == 1 {
        return Verdict::OutOfScope(format!(
            "cycle length {} is outside the supported range (even m >= 4)",
            req.m
        ));
    }
    if let Some(clause) = open_clause(req) {
        return Verdict::OpenException(clause);
    }
    Verdict::Solvable(solvable_case(req))
}
