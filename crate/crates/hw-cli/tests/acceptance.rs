//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p hw-cli --test acceptance`.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use hw_blocks::{
    haggkvist_double, kirkman_triple_system_cached, matching_split, one_factorization_complete,
    orient_split, symmetric_lift, walecki_even, walecki_odd, BaseShape, UFactorKind,
    UndirectedFactorization, UndirectedGraph,
};
use hw_cert::{read_document, to_json};
use hw_cli::fixture_certificate;
use hw_composer::{feasibility, survey, Composer, SurveyOutcome, Verdict};
use hw_constructions::Printed;
use hw_digraph::{
    complete_symmetric, Arc, Certificate, Factor, FactorKind, Family, ParamRequest, Vertex,
};
use hw_verify::{check_certificate, check_factor, exhaustive_factorize, SearchBudget, SearchMode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn solve_verified(composer: &mut Composer, req: &ParamRequest) -> Result<Certificate, String> {
    let cert = composer.solve(req).map_err(|e| format!("{req}: {e}"))?;
    let report = check_certificate(&cert);
    ensure(report.accepted(), || format!("{req}: rejected:\n{report}"))?;
    Ok(cert)
}

// ---------------------------------------------------------------- fixtures

fn fixtures() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    // (fixture, host arcs, first-kind count, factors)
    let expected = [
        (Printed::C4BlowupI8R0, 40, 0, 5),
        (Printed::C4BlowupI8R2, 40, 2, 5),
        (Printed::K12R2, 132, 2, 11),
        (Printed::K12R4, 132, 4, 11),
        (Printed::K43R1, 96, 1, 8),
    ];
    for (p, arcs, k2, factors) in expected {
        let path = dir.join(format!("{}.json", p.name()));
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(text == to_json(&fixture_certificate(p)), || {
            format!("{}: shipped document differs from the transcription", p.name())
        })?;
        let cert = read_document(&path).map_err(|e| e.to_string())?;
        let report = check_certificate(&cert);
        ensure(report.accepted(), || format!("{}: rejected:\n{report}", p.name()))?;
        ensure(cert.repairs.is_empty(), || format!("{}: carries repairs", p.name()))?;
        let host = cert.host.digraph().map_err(|e| e.to_string())?;
        ensure(host.arc_count() == arcs, || format!("{}: host has {} arcs", p.name(), host.arc_count()))?;
        ensure(cert.factors.len() == factors, || format!("{}: {} factors", p.name(), cert.factors.len()))?;
        ensure(cert.count_of(FactorKind::K2Star) == k2, || format!("{}: wrong K2* count", p.name()))?;
    }
    Ok(format!("{} printed factorizations accepted", expected.len()))
}

// ------------------------------------------------------------------ sweeps

fn double_arc_sweep() -> Outcome {
    let mut composer = Composer::new();
    let mut solved = 0;
    for m in [6, 8, 10, 12] {
        for row in survey(&mut composer, Family::K2Cm, m, 48) {
            let q = row.request;
            // Every odd r is covered for these lengths.
            if q.r % 2 == 1 {
                ensure(row.verdict.is_solvable(), || format!("{q} classified {}", row.verdict))?;
            }
            match row.outcome {
                SurveyOutcome::Verified => solved += 1,
                SurveyOutcome::Skipped => {}
                SurveyOutcome::Failed(e) => return Err(format!("{q}: {e}")),
            }
        }
    }
    ensure(solved >= 200, || format!("only {solved} instances"))?;
    Ok(format!("{solved} solvable instances solved and verified"))
}

fn square_requests() -> Vec<ParamRequest> {
    let mut out = Vec::new();
    for v in (4..=48).step_by(4) {
        for r in 0..v {
            let s = v - 1 - r;
            let wanted = match v % 24 {
                0 | 8 | 16 => s != 1,
                12 => r % 2 == 1 || (s != 1 && s != 3 && s != 5),
                _ => r % 2 == 1,
            };
            if wanted {
                out.push(ParamRequest::new(Family::K2Cm, v, 4, r, s));
            }
        }
    }
    out
}

fn square_sweep() -> Outcome {
    let mut composer = Composer::new();
    let requests = square_requests();
    for q in &requests {
        let verdict = feasibility(q);
        ensure(verdict.is_solvable(), || format!("{q} classified {verdict}"))?;
        solve_verified(&mut composer, q)?;
    }
    Ok(format!("{} instances solved and verified", requests.len()))
}

fn long_short_requests() -> Vec<ParamRequest> {
    let excluded = [(0, 4, 4), (0, 6, 3), (5, 6, 6), (0, 6, 6)];
    let mut out = Vec::new();
    for m in [4u32, 6, 8, 10] {
        let mut orders = vec![m];
        orders.extend((1..).map(|x| 2 * m * x).take_while(|&v| v <= 48));
        for v in orders {
            for r in 0..v {
                let s = v - 1 - r;
                if s == 1 || s == 3 || excluded.contains(&(s, v, m)) {
                    continue;
                }
                // Base cases v = m only admit all-short factorizations.
                if v == m && s != 0 {
                    continue;
                }
                out.push(ParamRequest::new(Family::CmC2m, v, m, r, s));
            }
        }
    }
    out
}

fn long_short_sweep() -> Outcome {
    let mut composer = Composer::new();
    let requests = long_short_requests();
    for q in &requests {
        let verdict = feasibility(q);
        ensure(verdict.is_solvable(), || format!("{q} classified {verdict}"))?;
        let cert = solve_verified(&mut composer, q)?;
        let short = cert.count_of(FactorKind::Cycles(q.m));
        let long = cert.count_of(FactorKind::Cycles(2 * q.m));
        ensure(short == q.r as usize && long == q.s as usize, || {
            format!("{q}: {short} short and {long} long factors")
        })?;
    }
    Ok(format!("{} instances solved with exact kind counts", requests.len()))
}

// ------------------------------------------------------------------ oracle

fn oracle() -> Outcome {
    let cases: [(u32, Vec<(FactorKind, usize)>); 4] = [
        (4, vec![(FactorKind::Cycles(4), 3)]),
        (6, vec![(FactorKind::Cycles(6), 5)]),
        (4, vec![(FactorKind::K2Star, 2), (FactorKind::Cycles(4), 1)]),
        (6, vec![(FactorKind::K2Star, 4), (FactorKind::Cycles(6), 1)]),
    ];
    let mut nodes = 0;
    for (v, spec) in &cases {
        let host = complete_symmetric(*v).map_err(|e| e.to_string())?;
        let result = exhaustive_factorize(&host, spec, SearchMode::First, SearchBudget::nodes(u64::MAX))
            .map_err(|e| e.to_string())?;
        ensure(result.is_exhausted(), || format!("K{v}* {spec:?}: {:?}", result.outcome))?;
        nodes += result.nodes;
    }
    Ok(format!("{} nonexistence claims exhausted ({nodes} nodes)", cases.len()))
}

// ------------------------------------------------------ building blocks

fn random_permutation(rng: &mut ChaCha8Rng, n: u32) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn relabeled(f: &UndirectedFactorization, map: &[Vertex]) -> UndirectedFactorization {
    UndirectedFactorization {
        host: UndirectedGraph::from_edges(
            f.host.order(),
            f.host.edges().iter().map(|&(a, b)| (map[a as usize], map[b as usize])),
        )
        .expect("relabeling is a bijection"),
        factors: f.factors.iter().map(|uf| uf.relabeled(map)).collect(),
    }
}

/// A random 2-factor of `K_n` into cycles of length `len`, as vertex lists.
fn random_cycles(rng: &mut ChaCha8Rng, len: u32, copies: u32) -> Vec<Vec<Vertex>> {
    random_permutation(rng, len * copies).chunks(len as usize).map(<[Vertex]>::to_vec).collect()
}

fn lift_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(3..=15u32);
    let base = if n % 2 == 0 {
        one_factorization_complete(n).map_err(|e| e.to_string())?
    } else {
        walecki_odd(n).map_err(|e| e.to_string())?.factorization
    };
    let f = relabeled(&base, &random_permutation(rng, n));
    let cert = symmetric_lift(&f).map_err(|e| e.to_string())?;
    ensure(check_certificate(&cert).accepted(), || format!("lift of K{n} rejected"))?;
    ensure(cert.factors.len() == f.factors.len(), || "factor count changed".into())?;
    for (uf, df) in f.factors.iter().zip(&cert.factors) {
        let back: BTreeSet<(Vertex, Vertex)> =
            df.arcs.iter().filter(|a| a.tail < a.head).map(|a| (a.tail, a.head)).collect();
        ensure(back == uf.edges && df.arcs.len() == 2 * uf.edges.len(), || {
            "lift does not round-trip to the undirected factor".into()
        })?;
        ensure(df.kind == uf.kind.lifted(), || "lifted kind differs".into())?;
    }
    Ok(())
}

fn split_partition(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let len = rng.gen_range(3..=10u32);
    let copies = rng.gen_range(1..=4u32);
    let n = len * copies;
    let host = complete_symmetric(n).map_err(|e| e.to_string())?;
    let sym = Factor::symmetric_cycles(&random_cycles(rng, len, copies));
    let [a, b] = orient_split(&sym).map_err(|e| e.to_string())?;
    ensure(b == a.reversed(), || "second orientation is not the reverse".into())?;
    ensure(a.arcs.is_disjoint(&b.arcs), || "orientations overlap".into())?;
    let union: BTreeSet<Arc> = a.arcs.union(&b.arcs).copied().collect();
    ensure(union == sym.arcs, || "orientations do not partition the factor".into())?;
    for half in [&a, &b] {
        ensure(half.kind == FactorKind::Cycles(len), || format!("orientation kind {}", half.kind))?;
        ensure(check_factor(half, &host).accepted(), || "orientation is not a cycle factor".into())?;
    }
    if len % 2 == 0 {
        let [p, q] = matching_split(&sym).map_err(|e| e.to_string())?;
        ensure(p.arcs.is_disjoint(&q.arcs), || "matchings overlap".into())?;
        let union: BTreeSet<Arc> = p.arcs.union(&q.arcs).copied().collect();
        ensure(union == sym.arcs, || "matchings do not partition the factor".into())?;
        for half in [&p, &q] {
            ensure(check_factor(half, &host).accepted(), || "matching is not a K2*-factor".into())?;
        }
    }
    Ok(())
}

/// A random list of even lengths `>= 4` summing to `total`.
fn random_even_partition(rng: &mut ChaCha8Rng, total: u32) -> Vec<u32> {
    let mut left = total;
    let mut parts = Vec::new();
    while left > 0 {
        let choices: Vec<u32> =
            (4..=left).step_by(2).filter(|&l| left - l == 0 || left - l >= 4).collect();
        let l = *choices.choose(rng).expect("total is even and at least 4");
        parts.push(l);
        left -= l;
    }
    parts
}

fn doubling_cycle_type(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let cycle = rng.gen_bool(0.5);
    let edges = rng.gen_range(if cycle { 3 } else { 2 }..=12u32);
    let vertex_count = if cycle { edges } else { edges + 1 };
    let base_order = vertex_count + rng.gen_range(0..4u32);
    let mut verts = random_permutation(rng, base_order);
    verts.truncate(vertex_count as usize);
    let h = random_even_partition(rng, 2 * edges);
    let shape = if cycle { BaseShape::Cycle(verts.clone()) } else { BaseShape::Path(verts.clone()) };
    let [g1, g2] = haggkvist_double(&shape, base_order, &h).map_err(|e| e.to_string())?;
    let mut expected = h.clone();
    expected.sort_unstable();
    for half in [&g1, &g2] {
        let mut lengths: Vec<u32> = half
            .two_regular_cycles()
            .ok_or("half is not 2-regular")?
            .iter()
            .map(|c| c.len() as u32)
            .collect();
        lengths.sort_unstable();
        ensure(lengths == expected, || format!("cycle type {lengths:?}, expected {expected:?}"))?;
    }
    ensure(g1.edges().is_disjoint(g2.edges()), || "halves share an edge".into())?;
    let mut blowup = BTreeSet::new();
    let k = verts.len();
    let steps = if cycle { k } else { k - 1 };
    for i in 0..steps {
        let (x, y) = (verts[i], verts[(i + 1) % k]);
        for cx in 0..2 {
            for cy in 0..2 {
                blowup.insert(hw_blocks::edge(cx * base_order + x, cy * base_order + y));
            }
        }
    }
    let union: BTreeSet<_> = g1.edges().union(g2.edges()).copied().collect();
    ensure(union == blowup, || "halves do not partition the doubled base".into())
}

fn walecki_cover(rng: &mut ChaCha8Rng, n: u32) -> Result<(), String> {
    let f = if n % 2 == 1 {
        walecki_odd(n).map_err(|e| e.to_string())?.factorization
    } else {
        walecki_even(n).map_err(|e| e.to_string())?.factorization()
    };
    let f = relabeled(&f, &random_permutation(rng, n));
    f.verify().map_err(|e| format!("Walecki K{n}: {e}"))?;
    ensure(f.host == UndirectedGraph::complete(n), || format!("Walecki K{n}: wrong host"))?;
    let covered: usize = f.factors.iter().map(|uf| uf.edges.len()).sum();
    ensure(covered == (n * (n - 1) / 2) as usize, || format!("Walecki K{n}: {covered} edges"))?;
    let hamilton = f.factors.iter().filter(|uf| uf.kind == UFactorKind::Cycles(n)).count();
    ensure(hamilton == ((n - 1) / 2) as usize, || format!("Walecki K{n}: {hamilton} Hamilton cycles"))
}

fn kirkman(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = *[9u32, 15].choose(rng).expect("nonempty");
    let f = kirkman_triple_system_cached(n, None).map_err(|e| e.to_string())?;
    f.verify().map_err(|e| format!("KTS({n}): {e}"))?;
    ensure(f.factors.len() == ((n - 1) / 2) as usize, || format!("KTS({n}): wrong class count"))?;
    ensure(f.factors.iter().all(|uf| uf.kind == UFactorKind::Cycles(3)), || {
        format!("KTS({n}): a class is not a triangle factor")
    })?;
    relabeled(&f, &random_permutation(rng, n)).verify().map_err(|e| format!("KTS({n}) relabeled: {e}"))
}

fn reverse_involution(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let len = rng.gen_range(2..=9u32);
    let copies = rng.gen_range(1..=4u32);
    let host = complete_symmetric(len * copies).map_err(|e| e.to_string())?;
    let f = if len == 2 {
        let pairs: Vec<(Vertex, Vertex)> =
            random_cycles(rng, 2, copies).iter().map(|c| (c[0], c[1])).collect();
        Factor::double_arcs(pairs)
    } else {
        Factor::directed_cycles(&random_cycles(rng, len, copies))
    };
    let r = f.reversed();
    ensure(r.reversed() == f, || "reversal is not an involution".into())?;
    ensure(r.kind == f.kind && r.arcs.len() == f.arcs.len(), || "reversal changed the factor".into())?;
    ensure(check_factor(&f, &host).accepted() && check_factor(&r, &host).accepted(), || {
        "reversal of a valid factor is invalid".into()
    })
}

fn building_blocks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b10c);
    for n in 3..=15 {
        walecki_cover(&mut rng, n)?;
    }
    const CASES: usize = 1000;
    for case in 0..CASES {
        let r = match case % 6 {
            0 => lift_round_trip(&mut rng),
            1 => split_partition(&mut rng),
            2 => doubling_cycle_type(&mut rng),
            3 => {
                let n = rng.gen_range(3..=15);
                walecki_cover(&mut rng, n)
            }
            4 => kirkman(&mut rng),
            _ => reverse_involution(&mut rng),
        };
        r.map_err(|e| format!("case {case}: {e}"))?;
    }
    Ok(format!("{CASES} randomized cases plus Walecki orders 3..=15"))
}

// -------------------------------------------------------------- mutation

fn mutate(rng: &mut ChaCha8Rng, cert: &Certificate) -> (Certificate, &'static str) {
    let mut m = cert.clone();
    let count = m.factors.len();
    let i = rng.gen_range(0..count);
    let pick = |rng: &mut ChaCha8Rng, f: &Factor| {
        *f.arcs.iter().nth(rng.gen_range(0..f.arcs.len())).expect("nonempty factor")
    };
    let a = pick(rng, &m.factors[i]);
    match rng.gen_range(0..3) {
        0 => {
            m.factors[i].arcs.remove(&a);
            (m, "arc deletion")
        }
        1 => {
            m.factors[i].arcs.remove(&a);
            m.factors[i].arcs.insert(a.reversed());
            (m, "direction flip")
        }
        _ => {
            let j = (i + rng.gen_range(1..count)) % count;
            let b = pick(rng, &m.factors[j]);
            m.factors[i].arcs.remove(&a);
            m.factors[j].arcs.remove(&b);
            m.factors[i].arcs.insert(b);
            m.factors[j].arcs.insert(a);
            (m, "cross-factor swap")
        }
    }
}

fn mutation() -> Outcome {
    let mut composer = Composer::new();
    let mut bases = vec![fixture_certificate(Printed::K12R2), fixture_certificate(Printed::K43R1)];
    for q in [
        ParamRequest::new(Family::K2Cm, 16, 8, 3, 12),
        ParamRequest::new(Family::K2Cm, 24, 4, 7, 16),
        ParamRequest::new(Family::CmC2m, 16, 4, 5, 10),
        ParamRequest::new(Family::CmC2m, 24, 6, 0, 23),
    ] {
        bases.push(solve_verified(&mut composer, &q)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0bad_c0de);
    const MUTANTS: usize = 100;
    for n in 0..MUTANTS {
        let base = &bases[n % bases.len()];
        let (mutant, how) = mutate(&mut rng, base);
        ensure(mutant != *base, || format!("mutant {n} ({how}) equals its base"))?;
        ensure(!check_certificate(&mutant).accepted(), || format!("mutant {n} ({how}) accepted"))?;
    }
    Ok(format!("{MUTANTS} mutants rejected"))
}

// ----------------------------------------------------------- determinism

fn determinism() -> Outcome {
    let mut pool: Vec<ParamRequest> = square_requests();
    pool.extend(long_short_requests());
    for m in [6, 8, 10, 12] {
        for v in (m..=48).step_by(m as usize) {
            pool.extend((0..v).map(|r| ParamRequest::new(Family::K2Cm, v, m, r, v - 1 - r)));
        }
    }
    pool.retain(|q| matches!(feasibility(q), Verdict::Solvable(_)));
    let mut rng = ChaCha8Rng::seed_from_u64(0xd37e_4a11);
    let sample: Vec<ParamRequest> = pool.choose_multiple(&mut rng, 20).copied().collect();
    let mut shared = Composer::new();
    for q in &sample {
        let first = to_json(&solve_verified(&mut Composer::new(), q)?);
        let second = to_json(&solve_verified(&mut Composer::new(), q)?);
        let warm = to_json(&solve_verified(&mut shared, q)?);
        ensure(first == second && first == warm, || format!("{q}: documents differ between runs"))?;
    }
    Ok(format!("{} requests, 3 runs each, byte-identical", sample.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("printed fixtures verify", fixtures, Duration::from_secs(1)),
        ("double-arc sweep m in {6,8,10,12}", double_arc_sweep, Duration::from_secs(60)),
        ("double-arc sweep m = 4", square_sweep, Duration::from_secs(60)),
        ("short/long cycle sweep", long_short_sweep, Duration::from_secs(90)),
        ("oracle nonexistence", oracle, Duration::from_secs(300)),
        ("building-block properties", building_blocks, Duration::from_secs(10)),
        ("mutation soundness", mutation, Duration::from_secs(5)),
        ("determinism", determinism, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (n, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > budget => {
                Err(format!("{detail}, but took {elapsed:.2?} (budget {budget:?})"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {}: {name} [{elapsed:.2?}] {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} [{elapsed:.2?}] {why}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
