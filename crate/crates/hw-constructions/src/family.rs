use std::fmt;

use hw_digraph::{FactorKind, HostSpec};

/// Largest `m` for which the `Γ_m*` factorizations without an explicit
/// formula are produced by bounded search.
pub const GAMMA_SEARCH_MAX: u32 = 12;

/// The block families with explicit constructions. Each family fixes a host
/// digraph (depending on `m`) and a pair of factor kinds; a construction is
/// selected by `r`, the number of factors of the first kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockFamily {
    /// `C_m*[2]` into K2*-factors and directed `2m`-cycle factors.
    BlowupK2VsDouble,
    /// `Γ_m*` into K2*-factors and directed `2m`-cycle factors.
    GammaK2VsDouble,
    /// `C_m*[2] ⊕ I_2m*` into K2*-factors and directed `2m`-cycle factors.
    BlowupIK2VsDouble,
    /// `C_m*[2]` into K2*-factors and directed `m`-cycle factors.
    BlowupK2VsCycle,
    /// `C_m*[2] ⊕ I_2m*` into K2*-factors and directed `m`-cycle factors.
    BlowupIK2VsCycle,
    /// `Γ_m*` into K2*-factors and directed `m`-cycle factors.
    GammaK2VsCycle,
    /// `Γ_m*` into directed `m`- and `2m`-cycle factors.
    GammaCycleVsDouble,
    /// `C_m*[2] ⊕ I_2m*` into directed `m`- and `2m`-cycle factors.
    BlowupICycleVsDouble,
    /// `C_m*[2]` into directed `m`- and `2m`-cycle factors.
    BlowupCycleVsDouble,
    /// `C_4*[2] ⊕ I_8*` into K2*-factors and directed 4-cycle factors.
    C4BlowupI8,
    /// `K_12*` into K2*-factors and directed 4-cycle factors.
    K12,
    /// `K_(4:3)*` into K2*-factors and directed 4-cycle factors.
    K43,
}

impl BlockFamily {
    pub const ALL: [BlockFamily; 12] = [
        BlockFamily::BlowupK2VsDouble,
        BlockFamily::GammaK2VsDouble,
        BlockFamily::BlowupIK2VsDouble,
        BlockFamily::BlowupK2VsCycle,
        BlockFamily::BlowupIK2VsCycle,
        BlockFamily::GammaK2VsCycle,
        BlockFamily::GammaCycleVsDouble,
        BlockFamily::BlowupICycleVsDouble,
        BlockFamily::BlowupCycleVsDouble,
        BlockFamily::C4BlowupI8,
        BlockFamily::K12,
        BlockFamily::K43,
    ];

    /// Stable identifier used in traces.
    pub fn id(self) -> &'static str {
        match self {
            BlockFamily::BlowupK2VsDouble => "blowup-k2-c2m",
            BlockFamily::GammaK2VsDouble => "gamma-k2-c2m",
            BlockFamily::BlowupIK2VsDouble => "blowup-i-k2-c2m",
            BlockFamily::BlowupK2VsCycle => "blowup-k2-cm",
            BlockFamily::BlowupIK2VsCycle => "blowup-i-k2-cm",
            BlockFamily::GammaK2VsCycle => "gamma-k2-cm",
            BlockFamily::GammaCycleVsDouble => "gamma-cm-c2m",
            BlockFamily::BlowupICycleVsDouble => "blowup-i-cm-c2m",
            BlockFamily::BlowupCycleVsDouble => "blowup-cm-c2m",
            BlockFamily::C4BlowupI8 => "c4-blowup-i8",
            BlockFamily::K12 => "k12",
            BlockFamily::K43 => "k43",
        }
    }

    /// Whether the host is fixed (the family ignores `m`, which must be 4).
    pub fn is_fixed(self) -> bool {
        matches!(self, BlockFamily::C4BlowupI8 | BlockFamily::K12 | BlockFamily::K43)
    }

    /// The host digraph for cycle length `m`.
    pub fn host(self, m: u32) -> HostSpec {
        match self {
            BlockFamily::BlowupK2VsDouble
            | BlockFamily::BlowupK2VsCycle
            | BlockFamily::BlowupCycleVsDouble => HostSpec::CycleBlowup { m },
            BlockFamily::BlowupIK2VsDouble
            | BlockFamily::BlowupIK2VsCycle
            | BlockFamily::BlowupICycleVsDouble => HostSpec::CycleBlowupPlusI { m },
            BlockFamily::GammaK2VsDouble
            | BlockFamily::GammaK2VsCycle
            | BlockFamily::GammaCycleVsDouble => HostSpec::Gamma { m },
            BlockFamily::C4BlowupI8 => HostSpec::CycleBlowupPlusI { m: 4 },
            BlockFamily::K12 => HostSpec::CompleteSymmetric { order: 12 },
            BlockFamily::K43 => HostSpec::Equipartite { part_size: 4, part_count: 3 },
        }
    }

    /// Number of factors in every factorization of the host.
    pub fn factor_count(self) -> u32 {
        match self.host(4) {
            HostSpec::CycleBlowup { .. } => 4,
            HostSpec::CycleBlowupPlusI { .. } => 5,
            HostSpec::Gamma { .. } => 6,
            HostSpec::CompleteSymmetric { order } => order - 1,
            _ => 8,
        }
    }

    /// The two factor kinds `(first, second)`; `r` counts the first.
    pub fn kinds(self, m: u32) -> (FactorKind, FactorKind) {
        use FactorKind::{Cycles, K2Star};
        match self {
            BlockFamily::BlowupK2VsDouble
            | BlockFamily::GammaK2VsDouble
            | BlockFamily::BlowupIK2VsDouble => (K2Star, Cycles(2 * m)),
            BlockFamily::BlowupK2VsCycle
            | BlockFamily::BlowupIK2VsCycle
            | BlockFamily::GammaK2VsCycle => (K2Star, Cycles(m)),
            BlockFamily::GammaCycleVsDouble
            | BlockFamily::BlowupICycleVsDouble
            | BlockFamily::BlowupCycleVsDouble => (Cycles(m), Cycles(2 * m)),
            BlockFamily::C4BlowupI8 | BlockFamily::K12 | BlockFamily::K43 => (K2Star, Cycles(4)),
        }
    }

    /// Whether `m` is a valid cycle length for the family.
    pub fn accepts_m(self, m: u32) -> bool {
        match self {
            BlockFamily::BlowupK2VsDouble | BlockFamily::BlowupIK2VsDouble => m >= 3,
            BlockFamily::C4BlowupI8 | BlockFamily::K12 | BlockFamily::K43 => m == 4,
            _ => m >= 4 && m % 2 == 0,
        }
    }

    /// The values of `r` for which [`crate::construct`] has a construction.
    /// Empty when `m` is not accepted.
    pub fn supported(self, m: u32) -> Vec<u32> {
        if !self.accepts_m(m) {
            return Vec::new();
        }
        let searchable = m <= GAMMA_SEARCH_MAX;
        let mut out: Vec<u32> = match self {
            BlockFamily::BlowupK2VsDouble => vec![0, 2, 4],
            BlockFamily::GammaK2VsDouble => {
                let mut v = vec![2, 4, 6];
                if searchable {
                    v.push(0);
                }
                v
            }
            BlockFamily::BlowupIK2VsDouble => {
                let mut v = vec![1, 3, 5];
                if m >= 5 {
                    v.push(0);
                }
                v
            }
            BlockFamily::BlowupK2VsCycle => vec![0, 2, 4],
            BlockFamily::BlowupIK2VsCycle => vec![1, 3, 5],
            BlockFamily::GammaK2VsCycle => {
                let mut v = vec![2, 4, 6];
                if m % 4 == 2 {
                    v.extend([0, 1, 3]);
                } else if searchable {
                    v.push(0);
                }
                v
            }
            BlockFamily::GammaCycleVsDouble => {
                let mut v = Vec::new();
                if searchable {
                    v.push(0);
                }
                if m % 4 == 2 || searchable {
                    v.push(6);
                }
                v
            }
            BlockFamily::BlowupICycleVsDouble => {
                if m >= 6 {
                    vec![0, 1, 3]
                } else {
                    vec![1, 3]
                }
            }
            BlockFamily::BlowupCycleVsDouble => vec![0, 2, 4],
            BlockFamily::C4BlowupI8 => vec![0, 1, 2, 3, 5],
            BlockFamily::K12 => vec![0, 1, 2, 3, 4, 5, 7, 9, 11],
            BlockFamily::K43 => vec![0, 1, 2, 4, 6, 8],
        };
        out.sort_unstable();
        out
    }
}

impl fmt::Display for BlockFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_distinct_and_displayed() {
        let ids: std::collections::BTreeSet<&str> = BlockFamily::ALL.iter().map(|f| f.id()).collect();
        assert_eq!(ids.len(), BlockFamily::ALL.len());
        assert_eq!(BlockFamily::K12.to_string(), "k12");
    }

    #[test]
    fn factor_counts_match_host_degrees() {
        for family in BlockFamily::ALL {
            let m = if family.is_fixed() { 4 } else { 6 };
            let host = family.host(m).digraph().unwrap();
            assert_eq!(host.out_degree(0) as u32, family.factor_count(), "{family}");
        }
    }

    #[test]
    fn supported_counts_stay_in_range() {
        for family in BlockFamily::ALL {
            for m in 3..=16 {
                let s = family.supported(m);
                assert!(s.iter().all(|&r| r <= family.factor_count()), "{family} m={m}");
                if !family.accepts_m(m) {
                    assert!(s.is_empty());
                }
            }
        }
        assert!(!BlockFamily::K12.accepts_m(6));
        assert!(BlockFamily::BlowupK2VsDouble.accepts_m(3));
        assert!(!BlockFamily::GammaK2VsCycle.accepts_m(5));
    }
}
