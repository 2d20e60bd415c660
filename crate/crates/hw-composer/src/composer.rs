//! The recursive composer: option sets, coefficient choice and assembly.
//!
//! For a block `B` and request kinds, `options(B)` is the set of first-kind
//! counts for which a factorization of `B` is available. For `K_n*` it is
//! the union over layouts of the Minkowski sum of the class option sets
//! (a class's options are the intersection over its distinct blocks). The
//! composer picks the first layout, in preference order, whose sum reaches
//! the requested count, with the lexicographically smallest class vector.
//!
//! Two stages keep search out of the way: the *direct* stage uses explicit
//! constructions only; the *search* stage additionally admits bounded
//! searches (small complete leaves and template layouts). Search-backed
//! options are tentative: when a build fails, the `(block, kinds, count)`
//! triple is recorded as failed, option sets are recomputed and the choice
//! is repeated. Searches are limited by node counts only, so every outcome,
//! and therefore every certificate, is deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use hw_blocks::{
    bipartite_directed_factorization, bipartite_directed_options, search_factors,
    split_symmetric,
};
use hw_constructions::{construct, quadrupled_cycle_c4_factors};
use hw_digraph::{Certificate, Factor, FactorKind, Family, ParamRequest, Trace};
use hw_verify::check_certificate;

use crate::block::{Block, Kinds};
use crate::layout::{ClassShape, Copy, Layout};
use crate::{feasibility, ComposerError, Verdict};

/// Largest complete block handed to a direct search.
pub const LEAF_MAX: u32 = 12;
const LEAF_NODES: u64 = 50_000;
const LEAF_RESTARTS: u32 = 5;
const TEMPLATE_NODES: u64 = 100_000;
const TEMPLATE_RESTARTS: u32 = 6;
/// Guard against a retry loop that records nothing new.
const MAX_RETRIES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Stage {
    Direct,
    Search,
}

/// One class of a plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanClass {
    /// Blocks of the class, e.g. `4 x K(3:2)*`.
    pub blocks: String,
    /// Factors contributed by the class.
    pub factors: u32,
    /// First-kind factors among them.
    pub count: u32,
}

/// The top-level decision of a composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub layout: String,
    pub classes: Vec<PlanClass>,
}

impl Plan {
    /// Total first-kind count; equals the requested `r` for any returned plan.
    pub fn total_count(&self) -> u32 {
        self.classes.iter().map(|c| c.count).sum()
    }
}

/// A factorization of a block in its own labeling.
#[derive(Debug, Clone)]
struct Built {
    factors: Vec<Factor>,
    trace: Trace,
    plan: Plan,
}

enum AssembleFailure {
    /// A sub-block failed; the failure is recorded.
    SubBlock,
    /// The layout itself cannot be realized.
    Layout(ComposerError),
}

/// Holds memoized option sets and built blocks; reuse one composer across
/// requests to share work. Results do not depend on what was solved before.
#[derive(Default)]
pub struct Composer {
    options: BTreeMap<(Block, Kinds, Stage), Rc<Vec<u32>>>,
    fixed_options: BTreeMap<(Block, Kinds), Rc<Vec<u32>>>,
    built: BTreeMap<(Block, Kinds, u32), Rc<Built>>,
    failed: BTreeSet<(Block, Kinds, u32)>,
    realized: BTreeMap<Layout, Rc<Vec<Vec<Copy>>>>,
    unusable: BTreeMap<Layout, String>,
    search_failures: usize,
}

/// The lexicographically smallest vector `c` with `c[i] ∈ options[i]` and
/// `Σ c = target`.
pub fn choose(options: &[Vec<u32>], target: u32) -> Option<Vec<u32>> {
    let target = target as usize;
    // suffix[i][x]: classes i.. can sum to x.
    let mut suffix = vec![vec![false; target + 1]; options.len() + 1];
    suffix[options.len()][0] = true;
    for i in (0..options.len()).rev() {
        for x in 0..=target {
            suffix[i][x] =
                options[i].iter().any(|&o| (o as usize) <= x && suffix[i + 1][x - o as usize]);
        }
    }
    if !suffix[0][target] {
        return None;
    }
    let mut left = target;
    let mut out = Vec::with_capacity(options.len());
    for i in 0..options.len() {
        let mut sorted = options[i].clone();
        sorted.sort_unstable();
        let pick = sorted
            .into_iter()
            .find(|&o| (o as usize) <= left && suffix[i + 1][left - o as usize])?;
        left -= pick as usize;
        out.push(pick);
    }
    Some(out)
}

/// All sums `Σ c[i]` with `c[i] ∈ options[i]`.
fn sumset(options: &[Vec<u32>]) -> Vec<u32> {
    let mut reach: BTreeSet<u32> = [0].into_iter().collect();
    for opts in options {
        reach = reach.iter().flat_map(|&a| opts.iter().map(move |&b| a + b)).collect();
        if reach.is_empty() {
            break;
        }
    }
    reach.into_iter().collect()
}

fn family_request(kinds: Kinds, n: u32, count: u32) -> Option<ParamRequest> {
    let rest = n.checked_sub(1)?.checked_sub(count)?;
    match (kinds.first, kinds.second) {
        (FactorKind::K2Star, FactorKind::Cycles(m)) => {
            Some(ParamRequest::new(Family::K2Cm, n, m, count, rest))
        }
        (FactorKind::Cycles(m), FactorKind::Cycles(l)) if l == 2 * m => {
            Some(ParamRequest::new(Family::CmC2m, n, m, count, rest))
        }
        _ => None,
    }
}

impl Composer {
    pub fn new() -> Self {
        Composer::default()
    }

    /// Solves a request, returning a verified, canonical certificate.
    pub fn solve(&mut self, req: &ParamRequest) -> Result<Certificate, ComposerError> {
        self.solve_with_plan(req).map(|(cert, _)| cert)
    }

    /// The plan the composer uses for `req` (building it to confirm any
    /// search-backed choices).
    pub fn plan(&mut self, req: &ParamRequest) -> Result<Plan, ComposerError> {
        self.solve_with_plan(req).map(|(_, plan)| plan)
    }

    pub fn solve_with_plan(&mut self, req: &ParamRequest) -> Result<(Certificate, Plan), ComposerError> {
        let verdict = feasibility(req);
        let case = match &verdict {
            Verdict::Solvable(case) => *case,
            _ => return Err(ComposerError::NotSolvable { request: *req, verdict }),
        };
        let (first, second) = req.kinds();
        let kinds = Kinds::new(first, second);
        let failures_before = self.search_failures;
        let built = match self.build(Block::Complete(req.v), kinds, req.r) {
            Ok(b) => b,
            Err(_) => {
                let attempted = self.describe_attempts(req.v, kinds);
                return Err(if self.search_failures > failures_before
                    || self.failed.iter().any(|(b, k, _)| *k == kinds && self.is_search_block(b))
                {
                    ComposerError::BudgetExceeded { request: *req, attempted }
                } else {
                    ComposerError::Fault(format!(
                        "{req} is classified solvable but no layout reaches r={}; {}",
                        req.r,
                        attempted.join("; ")
                    ))
                });
            }
        };
        if built.plan.total_count() != req.r && !built.plan.classes.is_empty() {
            return Err(ComposerError::Fault(format!(
                "plan for {req} sums to {}",
                built.plan.total_count()
            )));
        }
        let trace = Trace::new("compose")
            .param("family", req.family)
            .param("v", req.v)
            .param("m", req.m)
            .param("r", req.r)
            .param("s", req.s)
            .param("case", case.code())
            .child(built.trace.clone());
        let mut cert = Certificate::for_request(*req, built.factors.clone(), trace);
        cert.canonicalize();
        let report = check_certificate(&cert);
        if !report.accepted() {
            return Err(ComposerError::Verification(report.to_string()));
        }
        Ok((cert, built.plan.clone()))
    }

    fn is_search_block(&self, block: &Block) -> bool {
        match block {
            Block::Complete(n) => *n <= LEAF_MAX,
            Block::CycleTemplate { .. } => true,
            _ => false,
        }
    }

    fn describe_attempts(&mut self, n: u32, kinds: Kinds) -> Vec<String> {
        let m = kinds.cycle_length().unwrap_or(2);
        Layout::candidates(n, m, true)
            .into_iter()
            .map(|layout| {
                if let Some(why) = self.unusable.get(&layout) {
                    return format!("{layout}: not realizable ({why})");
                }
                let opts: Vec<Vec<u32>> = layout
                    .classes()
                    .iter()
                    .map(|s| self.class_options(s, kinds, Stage::Search))
                    .collect();
                format!("{layout}: reachable {:?}", sumset(&opts))
            })
            .collect()
    }

    // ---- options -------------------------------------------------------

    fn options(&mut self, block: Block, kinds: Kinds, stage: Stage) -> Rc<Vec<u32>> {
        let raw = match block {
            Block::Complete(_) | Block::CycleTemplate { .. } => {
                if let Some(o) = self.options.get(&(block, kinds, stage)) {
                    o.clone()
                } else {
                    let o = Rc::new(self.compute_options(block, kinds, stage));
                    self.options.insert((block, kinds, stage), o.clone());
                    o
                }
            }
            _ => {
                if let Some(o) = self.fixed_options.get(&(block, kinds)) {
                    o.clone()
                } else {
                    let o = Rc::new(self.compute_options(block, kinds, stage));
                    self.fixed_options.insert((block, kinds), o.clone());
                    o
                }
            }
        };
        if raw.iter().any(|&c| self.failed.contains(&(block, kinds, c))) {
            Rc::new(raw.iter().copied().filter(|&c| !self.failed.contains(&(block, kinds, c))).collect())
        } else {
            raw
        }
    }

    fn family_options(block: Block, kinds: Kinds) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for (family, m) in block.families() {
            let (ka, kb) = family.kinds(m);
            let total = family.factor_count();
            for r in family.supported(m) {
                if let Some(c) = kinds.count_first(ka, r, kb, total - r) {
                    out.insert(c);
                }
            }
        }
        out
    }

    fn compute_options(&mut self, block: Block, kinds: Kinds, stage: Stage) -> Vec<u32> {
        match block {
            Block::Complete(n) => self.complete_options(n, kinds, stage),
            Block::Bipartite(k) => bipartite_directed_options(k, kinds.first, kinds.second),
            Block::CycleQuadrupled(_) => {
                let avail = |k: FactorKind| k == FactorKind::K2Star || k == FactorKind::Cycles(4);
                match (avail(kinds.first), avail(kinds.second)) {
                    (true, true) => vec![0, 2, 4, 6, 8],
                    (true, false) => vec![8],
                    (false, true) => vec![0],
                    (false, false) => Vec::new(),
                }
            }
            Block::CycleTemplate { .. } => {
                if stage == Stage::Direct {
                    return Vec::new();
                }
                let Some(m) = kinds.cycle_length() else { return Vec::new() };
                let c = FactorKind::Cycles(m);
                kinds.count_first(c, block.factor_count(), c, 0).into_iter().collect()
            }
            _ => Self::family_options(block, kinds).into_iter().collect(),
        }
    }

    fn class_options(&mut self, shape: &ClassShape, kinds: Kinds, stage: Stage) -> Vec<u32> {
        let mut acc: Option<BTreeSet<u32>> = None;
        for block in shape.distinct() {
            let o: BTreeSet<u32> = self.options(block, kinds, stage).iter().copied().collect();
            acc = Some(match acc {
                None => o,
                Some(a) => a.intersection(&o).copied().collect(),
            });
        }
        acc.unwrap_or_default().into_iter().collect()
    }

    fn leaf_plausible(kinds: Kinds, n: u32, count: u32) -> bool {
        match family_request(kinds, n, count) {
            Some(req) => !matches!(feasibility(&req), Verdict::ProvenImpossible(_)),
            None => count < n,
        }
    }

    fn complete_options(&mut self, n: u32, kinds: Kinds, stage: Stage) -> Vec<u32> {
        let mut set = BTreeSet::new();
        if n == 2 {
            set.extend(kinds.count_first(FactorKind::K2Star, 1, FactorKind::K2Star, 0));
            return set.into_iter().collect();
        }
        if n < 2 {
            return Vec::new();
        }
        set.extend(Self::family_options(Block::Complete(n), kinds));
        let m = kinds.cycle_length().unwrap_or(2);
        for layout in Layout::candidates(n, m, stage == Stage::Search) {
            if self.unusable.contains_key(&layout) {
                continue;
            }
            let opts: Vec<Vec<u32>> =
                layout.classes().iter().map(|s| self.class_options(s, kinds, stage)).collect();
            set.extend(sumset(&opts));
        }
        if stage == Stage::Search && n <= LEAF_MAX {
            set.extend((0..n).filter(|&c| Self::leaf_plausible(kinds, n, c)));
        }
        set.into_iter().collect()
    }

    // ---- building ------------------------------------------------------

    fn record_failure(&mut self, block: Block, kinds: Kinds, count: u32) {
        self.failed.insert((block, kinds, count));
        self.options.clear();
    }

    fn build(&mut self, block: Block, kinds: Kinds, count: u32) -> Result<Rc<Built>, ComposerError> {
        if let Some(b) = self.built.get(&(block, kinds, count)) {
            return Ok(b.clone());
        }
        if self.failed.contains(&(block, kinds, count)) {
            return Err(ComposerError::Fault(format!("{block} with {count} x {} failed before", kinds.first)));
        }
        let result = match block {
            Block::Complete(n) => self.build_complete(n, kinds, count),
            Block::Bipartite(k) => Self::build_bipartite(k, kinds, count),
            Block::CycleQuadrupled(l) => Self::build_quadrupled(l, kinds, count),
            Block::CycleTemplate { .. } => self.build_search(block, kinds, count, TEMPLATE_NODES, TEMPLATE_RESTARTS),
            _ => Self::build_from_family(block, kinds, count),
        };
        match result {
            Ok(built) => {
                let built = Rc::new(built);
                self.built.insert((block, kinds, count), built.clone());
                Ok(built)
            }
            Err(e) => {
                self.record_failure(block, kinds, count);
                Err(e)
            }
        }
    }

    fn leaf_plan(name: &str) -> Plan {
        Plan { layout: name.to_string(), classes: Vec::new() }
    }

    fn build_from_family(block: Block, kinds: Kinds, count: u32) -> Result<Built, ComposerError> {
        for (family, m) in block.families() {
            let (ka, kb) = family.kinds(m);
            let total = family.factor_count();
            for r in family.supported(m) {
                if kinds.count_first(ka, r, kb, total - r) == Some(count) {
                    let cert = construct(family, m, r)?;
                    return Ok(Built {
                        factors: cert.factors,
                        trace: cert.trace,
                        plan: Self::leaf_plan(family.id()),
                    });
                }
            }
        }
        Err(ComposerError::Fault(format!("no explicit construction of {block} with {count} x {}", kinds.first)))
    }

    fn build_bipartite(k: u32, kinds: Kinds, count: u32) -> Result<Built, ComposerError> {
        let spec = [(kinds.first, count as usize), (kinds.second, (k - count.min(k)) as usize)];
        let factors = bipartite_directed_factorization(k, &spec)?;
        Ok(Built {
            factors,
            trace: Trace::new("difference-factorization").param("k", k).param("count", count),
            plan: Self::leaf_plan("difference-factorization"),
        })
    }

    fn build_quadrupled(l: u32, kinds: Kinds, count: u32) -> Result<Built, ComposerError> {
        if count % 2 == 1 || count > 8 {
            return Err(ComposerError::Fault(format!("C{l}*[4] cannot give {count} first-kind factors")));
        }
        let mut factors = Vec::with_capacity(8);
        for (i, f) in quadrupled_cycle_c4_factors(l)?.iter().enumerate() {
            let kind = if (i as u32) < count / 2 { kinds.first } else { kinds.second };
            factors.extend(split_symmetric(&f.lift(), kind)?);
        }
        Ok(Built {
            factors,
            trace: Trace::new("quadrupled-cycle").param("l", l).param("count", count),
            plan: Self::leaf_plan("quadrupled-cycle"),
        })
    }

    fn build_search(
        &mut self,
        block: Block,
        kinds: Kinds,
        count: u32,
        nodes: u64,
        restarts: u32,
    ) -> Result<Built, ComposerError> {
        let host = block.host()?;
        let total = block.factor_count();
        let spec: Vec<(FactorKind, usize)> = [(kinds.first, count), (kinds.second, total - count)]
            .into_iter()
            .filter(|&(_, c)| c > 0)
            .map(|(k, c)| (k, c as usize))
            .collect();
        match search_factors(&host, &spec, nodes, restarts) {
            Ok(factors) => Ok(Built {
                factors,
                trace: Trace::new("search")
                    .param("block", block)
                    .param("count", count)
                    .param("nodes", nodes)
                    .param("restarts", restarts),
                plan: Self::leaf_plan("search"),
            }),
            Err(e) => {
                self.search_failures += 1;
                Err(e.into())
            }
        }
    }

    fn build_complete(&mut self, n: u32, kinds: Kinds, count: u32) -> Result<Built, ComposerError> {
        if n == 2 {
            if kinds.count_first(FactorKind::K2Star, 1, FactorKind::K2Star, 0) == Some(count) {
                return Ok(Built {
                    factors: vec![Factor::double_arcs([(0, 1)])],
                    trace: Trace::new("double-arc"),
                    plan: Self::leaf_plan("double-arc"),
                });
            }
            return Err(ComposerError::Fault(format!("K2* has no {count} x {}", kinds.first)));
        }
        if Self::family_options(Block::Complete(n), kinds).contains(&count) {
            if let Ok(built) = Self::build_from_family(Block::Complete(n), kinds, count) {
                return Ok(built);
            }
        }
        let m = kinds.cycle_length().unwrap_or(2);
        let mut retries = 0;
        for stage in [Stage::Direct, Stage::Search] {
            'retry: loop {
                retries += 1;
                if retries > MAX_RETRIES {
                    return Err(ComposerError::Fault(format!("K{n}*: retry limit reached")));
                }
                for layout in Layout::candidates(n, m, stage == Stage::Search) {
                    if self.unusable.contains_key(&layout) {
                        continue;
                    }
                    let shapes = layout.classes();
                    let opts: Vec<Vec<u32>> =
                        shapes.iter().map(|s| self.class_options(s, kinds, stage)).collect();
                    let Some(vector) = choose(&opts, count) else { continue };
                    match self.assemble(&layout, &shapes, &vector, kinds) {
                        Ok(built) => return Ok(built),
                        Err(AssembleFailure::SubBlock) => continue 'retry,
                        Err(AssembleFailure::Layout(e)) => {
                            self.unusable.insert(layout, e.to_string());
                            self.options.clear();
                            continue 'retry;
                        }
                    }
                }
                break;
            }
            if stage == Stage::Search && n <= LEAF_MAX && Self::leaf_plausible(kinds, n, count) {
                return self.build_search(Block::Complete(n), kinds, count, LEAF_NODES, LEAF_RESTARTS);
            }
        }
        Err(ComposerError::Fault(format!("no layout of K{n}* reaches {count} x {}", kinds.first)))
    }

    fn realize(&mut self, layout: &Layout) -> Result<Rc<Vec<Vec<Copy>>>, ComposerError> {
        if let Some(r) = self.realized.get(layout) {
            return Ok(r.clone());
        }
        let r = Rc::new(layout.realize()?);
        self.realized.insert(layout.clone(), r.clone());
        Ok(r)
    }

    fn assemble(
        &mut self,
        layout: &Layout,
        shapes: &[ClassShape],
        vector: &[u32],
        kinds: Kinds,
    ) -> Result<Built, AssembleFailure> {
        let classes = self.realize(layout).map_err(AssembleFailure::Layout)?;
        let mut factors = Vec::new();
        let mut children = Vec::new();
        let mut plan_classes = Vec::new();
        for (index, ((class, shape), &count)) in classes.iter().zip(shapes).zip(vector).enumerate() {
            let mut sorted: BTreeMap<Block, Vec<Factor>> = BTreeMap::new();
            let mut traces = Vec::new();
            for block in shape.distinct() {
                let built = self.build(block, kinds, count).map_err(|_| AssembleFailure::SubBlock)?;
                let mut fs = built.factors.clone();
                fs.sort_by_key(|f| f.kind != kinds.first);
                sorted.insert(block, fs);
                traces.push(built.trace.clone());
            }
            for j in 0..shape.factor_count() as usize {
                let kind = sorted[&class[0].block][j].kind;
                let mut arcs = Vec::new();
                for copy in class.iter() {
                    let f = &sorted[&copy.block][j];
                    if f.kind != kind {
                        return Err(AssembleFailure::Layout(ComposerError::Fault(format!(
                            "{layout}: class {index} mixes {} and {}",
                            kind, f.kind
                        ))));
                    }
                    arcs.extend(f.relabeled(&copy.map).arcs);
                }
                factors.push(Factor::new(kind, arcs));
            }
            let blocks = shape
                .distinct()
                .iter()
                .map(|b| format!("{} x {b}", shape.blocks.iter().filter(|x| *x == b).count()))
                .collect::<Vec<_>>()
                .join(" + ");
            children.push(
                Trace::new("class")
                    .param("index", index)
                    .param("blocks", &blocks)
                    .param("count", count)
                    .with_children(traces),
            );
            plan_classes.push(PlanClass { blocks, factors: shape.factor_count(), count });
        }
        Ok(Built {
            factors,
            trace: Trace::new(layout.step()).param("layout", layout).with_children(children),
            plan: Plan { layout: layout.to_string(), classes: plan_classes },
        })
    }
}
