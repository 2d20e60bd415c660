use std::collections::BTreeSet;

use hw_blocks::{
    edge, equipartite_one_factorization, haggkvist_double, kirkman_triple_system_cached,
    one_factorization_complete, orient_split, symmetric_lift, walecki_even, walecki_odd, BaseShape,
    KTS_CACHE_ENV,
};
use hw_digraph::{Arc, Factor, FactorKind, Vertex};
use hw_verify::check_certificate;
use proptest::prelude::*;

/// A permutation of `0..n`.
fn permutation(n: u32) -> impl Strategy<Value = Vec<Vertex>> {
    Just((0..n).collect::<Vec<Vertex>>()).prop_shuffle()
}

/// Random even lengths `>= 4` with the given total (the total must be even
/// and at least 4).
fn even_lengths(total: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..8, 8).prop_map(move |seeds| {
        let mut left = total;
        let mut out = Vec::new();
        for s in seeds {
            if left == 0 {
                break;
            }
            let choices: Vec<u32> =
                (4..=left).step_by(2).filter(|&l| l == left || left - l >= 4).collect();
            let l = choices[s as usize % choices.len()];
            out.push(l);
            left -= l;
        }
        if left > 0 {
            out.push(left);
        }
        out
    })
}

#[test]
fn every_walecki_order_up_to_fifteen_covers_the_complete_graph() {
    for n in (3..=15).step_by(2) {
        walecki_odd(n).unwrap().factorization.verify().unwrap();
    }
    for n in (4..=14).step_by(2) {
        walecki_even(n).unwrap().factorization().verify().unwrap();
    }
}

#[test]
fn lifted_round_robins_verify() {
    for n in (2..=16).step_by(2) {
        let cert = symmetric_lift(&one_factorization_complete(n).unwrap()).unwrap();
        assert!(check_certificate(&cert).accepted(), "K{n}");
        assert_eq!(cert.factors.len() as u32, n - 1);
    }
}

#[test]
fn kirkman_systems_are_read_from_the_cache_directory() {
    // Built-in orders never touch the cache; the variable only names it.
    assert_eq!(KTS_CACHE_ENV, "HWFACT_KTS_CACHE");
    let dir = tempfile::tempdir().unwrap();
    let f = kirkman_triple_system_cached(15, Some(dir.path())).unwrap();
    assert_eq!(f.factors.len(), 7);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lift_round_trips(n in (1u32..8).prop_map(|k| 2 * k), perm in permutation(16)) {
        let f = one_factorization_complete(n).unwrap();
        let map: Vec<Vertex> = {
            let mut m: Vec<Vertex> = perm.into_iter().filter(|&x| x < n).collect();
            m.truncate(n as usize);
            m
        };
        let relabeled = hw_blocks::UndirectedFactorization {
            host: f.host.clone(),
            factors: f.factors.iter().map(|uf| uf.relabeled(&map)).collect(),
        };
        let cert = symmetric_lift(&relabeled).unwrap();
        prop_assert!(check_certificate(&cert).accepted());
        for (uf, df) in relabeled.factors.iter().zip(&cert.factors) {
            let back: BTreeSet<(Vertex, Vertex)> =
                df.arcs.iter().filter(|a| a.tail < a.head).map(|a| (a.tail, a.head)).collect();
            prop_assert_eq!(&back, &uf.edges);
            prop_assert_eq!(df.arcs.len(), 2 * uf.edges.len());
        }
    }

    #[test]
    fn orientations_partition_symmetric_factors(
        len in 3u32..9,
        copies in 1u32..4,
        perm in permutation(32),
    ) {
        let verts: Vec<Vertex> = perm.into_iter().filter(|&x| x < len * copies).collect();
        let cycles: Vec<Vec<Vertex>> = verts.chunks(len as usize).map(<[Vertex]>::to_vec).collect();
        let sym = Factor::symmetric_cycles(&cycles);
        let [a, b] = orient_split(&sym).unwrap();
        prop_assert_eq!(&b, &a.reversed());
        prop_assert!(a.arcs.is_disjoint(&b.arcs));
        let union: BTreeSet<Arc> = a.arcs.union(&b.arcs).copied().collect();
        prop_assert_eq!(union, sym.arcs);
        prop_assert_eq!(a.kind, FactorKind::Cycles(len));
    }

    #[test]
    fn doubling_preserves_cycle_type(
        (edges, h) in (3u32..12).prop_flat_map(|n| (Just(n), even_lengths(2 * n))),
        path in any::<bool>(),
    ) {
        let verts: Vec<Vertex> = (0..if path { edges + 1 } else { edges }).collect();
        let order = verts.len() as u32;
        let shape = if path { BaseShape::Path(verts.clone()) } else { BaseShape::Cycle(verts.clone()) };
        let [g1, g2] = haggkvist_double(&shape, order, &h).unwrap();
        let mut want = h.clone();
        want.sort_unstable();
        for g in [&g1, &g2] {
            let mut got: Vec<u32> =
                g.two_regular_cycles().unwrap().iter().map(|c| c.len() as u32).collect();
            got.sort_unstable();
            prop_assert_eq!(&got, &want);
        }
        let mut blowup = BTreeSet::new();
        let steps = if path { verts.len() - 1 } else { verts.len() };
        for i in 0..steps {
            let (x, y) = (verts[i], verts[(i + 1) % verts.len()]);
            for cx in 0..2 {
                for cy in 0..2 {
                    blowup.insert(edge(cx * order + x, cy * order + y));
                }
            }
        }
        prop_assert!(g1.edges().is_disjoint(g2.edges()));
        let union: BTreeSet<_> = g1.edges().union(g2.edges()).copied().collect();
        prop_assert_eq!(union, blowup);
    }

    #[test]
    fn equipartite_factorizations_have_the_stated_size(x in 1u32..7, y in 2u32..7) {
        let result = equipartite_one_factorization(x, y);
        if (x * y) % 2 == 1 {
            prop_assert!(result.is_err());
        } else {
            let f = result.unwrap();
            prop_assert_eq!(f.factors.len() as u32, x * (y - 1));
            prop_assert!(f.verify().is_ok());
        }
    }

    #[test]
    fn reversal_is_an_involution(len in 3u32..9, perm in permutation(24)) {
        let verts: Vec<Vertex> = perm.into_iter().filter(|&x| x < 3 * len).collect();
        let cycles: Vec<Vec<Vertex>> = verts.chunks(len as usize).map(<[Vertex]>::to_vec).collect();
        let f = Factor::directed_cycles(&cycles);
        prop_assert_eq!(f.reversed().reversed(), f.clone());
        prop_assert!(f.reversed().arcs.is_disjoint(&f.arcs));
    }
}
