//! Complete backtracking search for factorizations of small digraphs.
//!
//! The search is an exact cover over arcs: the lexicographically smallest
//! uncovered arc must lie in the next factor, so every factorization (as a
//! set of factors) is enumerated exactly once. This canonical choice is the
//! symmetry pruning; it also makes an uninterrupted run a proof of
//! nonexistence. Factors are enumerated cycle by cycle, each new cycle
//! starting at the smallest vertex not yet covered by the factor.

use std::time::{Duration, Instant};

use hw_digraph::{Arc, Digraph, Factor, FactorKind};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Limits for one search run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of search nodes (extension steps).
    pub node_limit: u64,
    /// Optional wall-clock limit.
    pub time_limit: Option<Duration>,
    /// `0` searches the host as given; any other value first relabels the
    /// vertices by a permutation drawn from this seed, which changes the
    /// branching order but not completeness.
    pub seed: u64,
}

impl SearchBudget {
    pub fn nodes(node_limit: u64) -> Self {
        SearchBudget { node_limit: node_limit.max(1), time_limit: None, seed: 0 }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::nodes(50_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Stop at the first factorization.
    First,
    /// Count all factorizations.
    Count,
    /// Collect all factorizations.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// Factorizations found (one in `First` mode).
    Found(Vec<Vec<Factor>>),
    /// Exact counts: unordered = distinct factor sets; ordered = sequences of
    /// factors in which factors of equal kind are distinguished by position.
    Counted { unordered: u128, ordered: u128 },
    /// The complete search space was explored without a factorization: a
    /// proof of nonexistence.
    Exhausted,
    /// The budget ran out first; nothing can be concluded.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub outcome: OracleOutcome,
    pub nodes: u64,
}

impl OracleResult {
    pub fn first(&self) -> Option<&Vec<Factor>> {
        match &self.outcome {
            OracleOutcome::Found(all) => all.first(),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.outcome == OracleOutcome::Exhausted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The kinds' arc counts do not add up to the host's arc count.
    ArcCountMismatch { expected: usize, host: usize },
    /// The engine uses 64-bit vertex masks.
    TooLarge { order: u32 },
}

impl std::fmt::Display for OracleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleError::ArcCountMismatch { expected, host } => write!(
                f,
                "factor kinds need {expected} arcs but the host has {host}"
            ),
            OracleError::TooLarge { order } => {
                write!(f, "search supports at most 64 vertices, host has {order}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Arcs used by one factor of `kind` on `n` vertices.
pub fn arcs_per_factor(kind: FactorKind, n: u32) -> usize {
    match kind {
        FactorKind::K2Star | FactorKind::Cycles(_) => n as usize,
        FactorKind::SymCycles(_) => 2 * n as usize,
    }
}

fn kind_admissible(kind: FactorKind, n: u32) -> bool {
    match kind {
        FactorKind::K2Star => n % 2 == 0,
        FactorKind::Cycles(l) => l >= 2 && n % l == 0,
        FactorKind::SymCycles(l) => l >= 3 && n % l == 0,
    }
}

/// Searches for factorizations of `host` into factors with the given kind
/// multiplicities.
pub fn exhaustive_factorize(
    host: &Digraph,
    spec: &[(FactorKind, usize)],
    mode: SearchMode,
    budget: SearchBudget,
) -> Result<OracleResult, OracleError> {
    let n = host.order();
    if n > 64 {
        return Err(OracleError::TooLarge { order: n });
    }
    let mut merged: Vec<(FactorKind, usize)> = Vec::new();
    for &(k, c) in spec {
        if c == 0 {
            continue;
        }
        match merged.iter_mut().find(|(mk, _)| *mk == k) {
            Some(entry) => entry.1 += c,
            None => merged.push((k, c)),
        }
    }
    merged.sort();
    let expected: usize = merged.iter().map(|&(k, c)| c * arcs_per_factor(k, n)).sum();
    if expected != host.arc_count() {
        return Err(OracleError::ArcCountMismatch { expected, host: host.arc_count() });
    }
    if merged.iter().any(|&(k, _)| !kind_admissible(k, n)) {
        return Ok(OracleResult { outcome: OracleOutcome::Exhausted, nodes: 0 });
    }

    let perm = relabeling(n, budget.seed);
    let mut inverse = vec![0u32; n as usize];
    for (x, &px) in perm.iter().enumerate() {
        inverse[px as usize] = x as u32;
    }
    let mut engine = Engine::new(n as usize, &merged, mode, budget);
    for a in host.arcs() {
        engine.add_arc(perm[a.tail as usize] as usize, perm[a.head as usize] as usize);
    }
    engine.descend();

    let nodes = engine.nodes;
    if engine.aborted {
        return Ok(OracleResult { outcome: OracleOutcome::Inconclusive, nodes });
    }
    let outcome = match mode {
        SearchMode::Count => {
            let mult: u128 = merged.iter().map(|&(_, c)| factorial(c)).product();
            OracleOutcome::Counted { unordered: engine.count, ordered: engine.count * mult }
        }
        SearchMode::First | SearchMode::All => {
            if engine.solutions.is_empty() {
                OracleOutcome::Exhausted
            } else {
                let sols = engine
                    .solutions
                    .iter()
                    .map(|sol| {
                        sol.iter()
                            .map(|(k, arcs)| {
                                Factor::new(
                                    *k,
                                    arcs.iter().map(|&(a, b)| {
                                        Arc::new(inverse[a as usize], inverse[b as usize])
                                    }),
                                )
                            })
                            .collect()
                    })
                    .collect();
                OracleOutcome::Found(sols)
            }
        }
    };
    Ok(OracleResult { outcome, nodes })
}

/// Runs [`exhaustive_factorize`] in `First` mode with a sequence of seeds and
/// doubling node limits. An uninterrupted run that finds nothing is reported
/// as `Exhausted` (completeness does not depend on the labeling).
pub fn search_with_restarts(
    host: &Digraph,
    spec: &[(FactorKind, usize)],
    initial_nodes: u64,
    restarts: u32,
) -> Result<OracleResult, OracleError> {
    let mut total = 0;
    let mut limit = initial_nodes.max(1);
    for attempt in 0..=restarts {
        let budget = SearchBudget::nodes(limit).with_seed(attempt as u64);
        let result = exhaustive_factorize(host, spec, SearchMode::First, budget)?;
        total += result.nodes;
        match result.outcome {
            OracleOutcome::Inconclusive => {}
            outcome => return Ok(OracleResult { outcome, nodes: total }),
        }
        limit = limit.saturating_mul(2);
    }
    Ok(OracleResult { outcome: OracleOutcome::Inconclusive, nodes: total })
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn relabeling(n: u32, seed: u64) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..n).collect();
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        perm.shuffle(&mut rng);
    }
    perm
}

struct Engine {
    n: usize,
    full: u64,
    out: Vec<u64>,
    inn: Vec<u64>,
    kinds: Vec<FactorKind>,
    counts: Vec<usize>,
    only_k2_after: bool,
    levels: Vec<Vec<(u8, u8)>>,
    level_kinds: Vec<FactorKind>,
    mode: SearchMode,
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
    aborted: bool,
    count: u128,
    solutions: Vec<Vec<(FactorKind, Vec<(u8, u8)>)>>,
}

impl Engine {
    fn new(n: usize, spec: &[(FactorKind, usize)], mode: SearchMode, budget: SearchBudget) -> Self {
        Engine {
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            out: vec![0; n],
            inn: vec![0; n],
            kinds: spec.iter().map(|&(k, _)| k).collect(),
            counts: spec.iter().map(|&(_, c)| c).collect(),
            only_k2_after: false,
            levels: Vec::new(),
            level_kinds: Vec::new(),
            mode,
            nodes: 0,
            limit: budget.node_limit,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            aborted: false,
            count: 0,
            solutions: Vec::new(),
        }
    }

    fn add_arc(&mut self, a: usize, b: usize) {
        self.out[a] |= 1 << b;
        self.inn[b] |= 1 << a;
    }

    fn stopped(&self) -> bool {
        self.aborted || (self.mode == SearchMode::First && !self.solutions.is_empty())
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            self.aborted = true;
        } else if self.nodes % 4096 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    self.aborted = true;
                }
            }
        }
        !self.aborted
    }

    fn descend(&mut self) {
        if self.stopped() {
            return;
        }
        if self.counts.iter().all(|&c| c == 0) {
            if self.out.iter().all(|&m| m == 0) {
                self.count += 1;
                if self.mode != SearchMode::Count {
                    let sol = self
                        .level_kinds
                        .iter()
                        .zip(&self.levels)
                        .map(|(k, arcs)| (*k, arcs.clone()))
                        .collect();
                    self.solutions.push(sol);
                }
            }
            return;
        }
        self.only_k2_after = self
            .kinds
            .iter()
            .zip(&self.counts)
            .all(|(k, &c)| c == 0 || *k == FactorKind::K2Star);
        if self.only_k2_after && (0..self.n).any(|v| self.out[v] != self.inn[v]) {
            return;
        }
        let t = match (0..self.n).find(|&v| self.out[v] != 0) {
            Some(t) => t,
            None => return,
        };
        let h = self.out[t].trailing_zeros() as usize;
        for k in 0..self.kinds.len() {
            if self.counts[k] == 0 {
                continue;
            }
            let kind = self.kinds[k];
            self.counts[k] -= 1;
            self.levels.push(Vec::with_capacity(self.n * 2));
            self.level_kinds.push(kind);
            match kind {
                FactorKind::K2Star => {
                    if self.out[h] & (1 << t) != 0 {
                        self.push_arc(t, h);
                        self.push_arc(h, t);
                        self.k2_next((1 << t) | (1 << h));
                    }
                }
                FactorKind::Cycles(l) => {
                    self.push_arc(t, h);
                    self.cyc_extend(l as usize, (1 << t) | (1 << h), t, h, 2);
                }
                FactorKind::SymCycles(l) => {
                    if self.out[h] & (1 << t) != 0 {
                        self.push_arc(t, h);
                        self.push_arc(h, t);
                        self.sym_extend(l as usize, (1 << t) | (1 << h), t, h, h, 2, true);
                    }
                }
            }
            self.levels.pop();
            self.level_kinds.pop();
            self.counts[k] += 1;
            if self.stopped() {
                return;
            }
        }
    }

    fn push_arc(&mut self, a: usize, b: usize) {
        self.levels.last_mut().expect("level").push((a as u8, b as u8));
    }

    fn pop_arc(&mut self) {
        self.levels.last_mut().expect("level").pop();
    }

    /// The current level is a complete factor: remove its arcs and recurse.
    fn complete_factor(&mut self) {
        let arcs = self.levels.last().expect("level").clone();
        for &(a, b) in &arcs {
            self.out[a as usize] &= !(1 << b);
            self.inn[b as usize] &= !(1 << a);
        }
        self.descend();
        for &(a, b) in &arcs {
            self.out[a as usize] |= 1 << b;
            self.inn[b as usize] |= 1 << a;
        }
    }

    fn lowest_uncovered(&self, covered: u64) -> Option<usize> {
        let free = !covered & self.full;
        (free != 0).then(|| free.trailing_zeros() as usize)
    }

    fn k2_next(&mut self, covered: u64) {
        if !self.tick() || self.stopped() {
            return;
        }
        let s = match self.lowest_uncovered(covered) {
            Some(s) => s,
            None => return self.complete_factor(),
        };
        let mut cand = self.out[s] & self.inn[s] & !covered;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.push_arc(s, w);
            self.push_arc(w, s);
            self.k2_next(covered | (1 << s) | (1 << w));
            self.pop_arc();
            self.pop_arc();
            if self.stopped() {
                return;
            }
        }
    }

    fn cyc_next_cycle(&mut self, l: usize, covered: u64) {
        match self.lowest_uncovered(covered) {
            None => self.complete_factor(),
            Some(s) => self.cyc_extend(l, covered | (1 << s), s, s, 1),
        }
    }

    /// Extends the path `start .. cur` (with `len` vertices) of the current
    /// cycle of length `l`.
    fn cyc_extend(&mut self, l: usize, covered: u64, start: usize, cur: usize, len: usize) {
        if !self.tick() || self.stopped() {
            return;
        }
        if len == l {
            if self.out[cur] & (1 << start) != 0 {
                self.push_arc(cur, start);
                self.cyc_next_cycle(l, covered);
                self.pop_arc();
            }
            return;
        }
        let mut cand = self.out[cur] & !covered;
        if len + 1 == l {
            cand &= self.inn[start];
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.push_arc(cur, w);
            self.cyc_extend(l, covered | (1 << w), start, w, len + 1);
            self.pop_arc();
            if self.stopped() {
                return;
            }
        }
    }

    fn sym_next_cycle(&mut self, l: usize, covered: u64) {
        match self.lowest_uncovered(covered) {
            None => self.complete_factor(),
            Some(s) => {
                let mut cand = self.out[s] & self.inn[s] & !covered;
                while cand != 0 {
                    let w = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    self.push_arc(s, w);
                    self.push_arc(w, s);
                    self.sym_extend(l, covered | (1 << s) | (1 << w), s, w, w, 2, false);
                    self.pop_arc();
                    self.pop_arc();
                    if self.stopped() {
                        return;
                    }
                }
            }
        }
    }

    /// Symmetric-cycle analogue of [`Engine::cyc_extend`]. For cycles other
    /// than the first, the closing vertex must exceed the second vertex so each
    /// undirected cycle is produced once.
    #[allow(clippy::too_many_arguments)]
    fn sym_extend(
        &mut self,
        l: usize,
        covered: u64,
        start: usize,
        second: usize,
        cur: usize,
        len: usize,
        first: bool,
    ) {
        if !self.tick() || self.stopped() {
            return;
        }
        let both = |e: &Engine, x: usize| e.out[x] & e.inn[x];
        if len == l {
            if both(self, cur) & (1 << start) != 0 && (first || cur > second) {
                self.push_arc(cur, start);
                self.push_arc(start, cur);
                self.sym_next_cycle(l, covered);
                self.pop_arc();
                self.pop_arc();
            }
            return;
        }
        let mut cand = both(self, cur) & !covered;
        if len + 1 == l {
            cand &= both(self, start);
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.push_arc(cur, w);
            self.push_arc(w, cur);
            self.sym_extend(l, covered | (1 << w), start, second, w, len + 1, first);
            self.pop_arc();
            self.pop_arc();
            if self.stopped() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hw_digraph::complete_symmetric;

    #[test]
    fn arc_counts_per_kind() {
        assert_eq!(arcs_per_factor(FactorKind::K2Star, 6), 6);
        assert_eq!(arcs_per_factor(FactorKind::Cycles(3), 6), 6);
        assert_eq!(arcs_per_factor(FactorKind::SymCycles(3), 6), 12);
        assert!(kind_admissible(FactorKind::Cycles(3), 6));
        assert!(!kind_admissible(FactorKind::Cycles(4), 6));
        assert!(!kind_admissible(FactorKind::K2Star, 5));
    }

    #[test]
    fn the_round_robin_of_k4_is_unique() {
        let k4 = complete_symmetric(4).unwrap();
        let r = exhaustive_factorize(&k4, &[(FactorKind::K2Star, 3)], SearchMode::Count, SearchBudget::default())
            .unwrap();
        assert_eq!(r.outcome, OracleOutcome::Counted { unordered: 1, ordered: 6 });
    }

    #[test]
    fn budgets_and_mismatches() {
        let k6 = complete_symmetric(6).unwrap();
        let spec = [(FactorKind::Cycles(6), 5)];
        let r = exhaustive_factorize(&k6, &spec, SearchMode::First, SearchBudget::nodes(2)).unwrap();
        assert_eq!(r.outcome, OracleOutcome::Inconclusive);
        let bad = exhaustive_factorize(&k6, &[(FactorKind::Cycles(6), 4)], SearchMode::First, SearchBudget::default());
        assert_eq!(bad, Err(OracleError::ArcCountMismatch { expected: 24, host: 30 }));
    }

    #[test]
    fn seeds_relabel_deterministically() {
        assert_eq!(relabeling(5, 0), vec![0, 1, 2, 3, 4]);
        assert_eq!(relabeling(9, 7), relabeling(9, 7));
        let mut sorted = relabeling(9, 7);
        sorted.sort_unstable();
        assert_eq!(sorted, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn restarts_find_small_factorizations() {
        let k5 = complete_symmetric(5).unwrap();
        let r = search_with_restarts(&k5, &[(FactorKind::Cycles(5), 4)], 10, 6).unwrap();
        assert!(r.first().is_some());
        assert_eq!(factorial(4), 24);
    }
}
