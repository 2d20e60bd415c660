//! Bounded backtracking search, wrapped to return verified certificates.

use hw_digraph::{Certificate, Digraph, Factor, FactorKind, HostSpec, Trace};
use hw_verify::{
    check_certificate, exhaustive_factorize, search_with_restarts, OracleError, OracleOutcome,
    SearchBudget, SearchMode,
};

use crate::BlockError;

/// Result of [`backtrack_search`]. Only `Exhausted` proves nonexistence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Certificate),
    Exhausted,
    BudgetExceeded,
}

fn oracle_error(e: OracleError) -> BlockError {
    match e {
        OracleError::ArcCountMismatch { .. } => BlockError::Infeasible(e.to_string()),
        OracleError::TooLarge { .. } => BlockError::Unsupported(e.to_string()),
    }
}

fn certify(host: &Digraph, factors: Vec<Factor>, trace: Trace) -> Result<Certificate, BlockError> {
    let cert = Certificate::from_factors(HostSpec::explicit(host), factors, trace);
    let report = check_certificate(&cert);
    if report.accepted() {
        Ok(cert)
    } else {
        Err(BlockError::Verification(report.to_string()))
    }
}

/// Searches `host` for a factorization with the given kind counts. The
/// branching order is fixed by `budget.seed`, so identical inputs give
/// identical output.
pub fn backtrack_search(
    host: &Digraph,
    spec: &[(FactorKind, usize)],
    budget: SearchBudget,
) -> Result<SearchOutcome, BlockError> {
    let result = exhaustive_factorize(host, spec, SearchMode::First, budget).map_err(oracle_error)?;
    let nodes = result.nodes;
    match result.outcome {
        OracleOutcome::Found(mut sols) => {
            let trace = Trace::new("backtrack-search")
                .param("seed", budget.seed)
                .param("nodes", nodes);
            Ok(SearchOutcome::Found(certify(host, sols.swap_remove(0), trace)?))
        }
        OracleOutcome::Exhausted => Ok(SearchOutcome::Exhausted),
        OracleOutcome::Counted { .. } | OracleOutcome::Inconclusive => {
            Ok(SearchOutcome::BudgetExceeded)
        }
    }
}

/// Restarting search used by constructions that need a factorization of a
/// small host: seeds `0..=restarts` with doubling node limits. Returns the
/// factors in the order found, or `Exhausted` / `BudgetExceeded` errors.
pub fn search_factors(
    host: &Digraph,
    spec: &[(FactorKind, usize)],
    initial_nodes: u64,
    restarts: u32,
) -> Result<Vec<Factor>, BlockError> {
    let result = search_with_restarts(host, spec, initial_nodes, restarts).map_err(oracle_error)?;
    let describe = || {
        spec.iter().map(|(k, c)| format!("{k}x{c}")).collect::<Vec<_>>().join(" + ")
    };
    match result.outcome {
        OracleOutcome::Found(mut sols) => {
            let factors = sols.swap_remove(0);
            certify(host, factors.clone(), Trace::new("search"))?;
            Ok(factors)
        }
        OracleOutcome::Exhausted => Err(BlockError::Exhausted(format!(
            "no {} factorization of the {}-vertex host",
            describe(),
            host.order()
        ))),
        _ => Err(BlockError::BudgetExceeded(format!(
            "{} factorization of the {}-vertex host not found within {} nodes",
            describe(),
            host.order(),
            result.nodes
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hw_digraph::complete_symmetric;

    #[test]
    fn round_robin_is_found() {
        let k4 = complete_symmetric(4).unwrap();
        match backtrack_search(&k4, &[(FactorKind::K2Star, 3)], SearchBudget::nodes(10_000)).unwrap() {
            SearchOutcome::Found(cert) => assert!(check_certificate(&cert).accepted()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nonexistence_is_exhausted() {
        let k4 = complete_symmetric(4).unwrap();
        let budget = SearchBudget::nodes(1_000_000);
        let mixed = [(FactorKind::K2Star, 2), (FactorKind::Cycles(4), 1)];
        assert_eq!(backtrack_search(&k4, &mixed, budget).unwrap(), SearchOutcome::Exhausted);
        let squares = [(FactorKind::Cycles(4), 3)];
        assert_eq!(backtrack_search(&k4, &squares, budget).unwrap(), SearchOutcome::Exhausted);
        assert!(matches!(search_factors(&k4, &squares, 1000, 2), Err(BlockError::Exhausted(_))));
    }

    #[test]
    fn arc_count_mismatch_is_infeasible() {
        let k4 = complete_symmetric(4).unwrap();
        let r = backtrack_search(&k4, &[(FactorKind::K2Star, 2)], SearchBudget::nodes(100));
        assert!(matches!(r, Err(BlockError::Infeasible(_))));
    }

    #[test]
    fn restarting_search_returns_verified_factors() {
        let k6 = complete_symmetric(6).unwrap();
        let spec = [(FactorKind::K2Star, 1), (FactorKind::Cycles(3), 4)];
        let factors = search_factors(&k6, &spec, 1000, 8).unwrap();
        assert_eq!(factors.len(), 5);
        assert_eq!(factors.iter().filter(|f| f.kind == FactorKind::K2Star).count(), 1);
    }
}
