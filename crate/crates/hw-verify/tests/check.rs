use hw_digraph::{
    complete_symmetric, Arc, Certificate, Factor, FactorKind, HostSpec, Trace,
};
use hw_verify::{check_certificate, check_factor, Violation};
use proptest::prelude::*;

fn k4_one_factorization() -> Certificate {
    let factors = vec![
        Factor::double_arcs([(0, 1), (2, 3)]),
        Factor::double_arcs([(0, 2), (1, 3)]),
        Factor::double_arcs([(0, 3), (1, 2)]),
    ];
    Certificate::from_factors(HostSpec::CompleteSymmetric { order: 4 }, factors, Trace::new("manual"))
}

/// K5* as four directed Hamilton cycles x -> x+d (d = 1..4).
fn k5_rotational() -> Certificate {
    let factors = (1..5u32)
        .map(|d| Factor::new(FactorKind::Cycles(5), (0..5).map(|x| Arc::new(x, (x + d) % 5))))
        .collect();
    Certificate::from_factors(HostSpec::CompleteSymmetric { order: 5 }, factors, Trace::new("manual"))
}

fn has(report: &hw_verify::VerificationReport, pred: impl Fn(&Violation) -> bool) -> bool {
    report.failures.iter().any(|f| pred(&f.violation))
}

#[test]
fn valid_certificates_are_accepted() {
    assert!(check_certificate(&k4_one_factorization()).accepted());
    assert!(check_certificate(&k5_rotational()).accepted());
}

#[test]
fn missing_arc_is_reported_as_degree_and_uncovered() {
    let mut c = k4_one_factorization();
    c.factors[0].arcs.remove(&Arc::new(0, 1));
    let r = check_certificate(&c);
    assert!(!r.accepted());
    assert!(has(&r, |v| matches!(v, Violation::Uncovered { total: 1, .. })));
    assert!(has(&r, |v| matches!(v, Violation::Degree { .. })));
}

#[test]
fn duplicated_factor_overlaps() {
    let mut c = k4_one_factorization();
    c.factors[2] = c.factors[1].clone();
    let r = check_certificate(&c);
    assert!(has(&r, |v| matches!(v, Violation::Overlap { first: 1, second: 2, .. })));
}

#[test]
fn wrong_cycle_length_is_a_component_violation() {
    let f = Factor::new(FactorKind::Cycles(3), [Arc::new(0, 1), Arc::new(1, 0), Arc::new(2, 3), Arc::new(3, 2)]);
    let host = complete_symmetric(4).unwrap();
    let r = check_factor(&f, &host);
    assert!(has(&r, |v| matches!(v, Violation::Component { found_length: 2, .. })));
}

#[test]
fn k2_kind_requires_reverse_arcs() {
    let f = Factor::new(FactorKind::K2Star, [Arc::new(0, 1), Arc::new(1, 2), Arc::new(2, 3), Arc::new(3, 0)]);
    let host = complete_symmetric(4).unwrap();
    assert!(!check_factor(&f, &host).accepted());
}

#[test]
fn arcs_outside_host_are_reported() {
    let f = Factor::double_arcs([(0, 1), (2, 3)]);
    let host = hw_digraph::directed_cycle(4).unwrap();
    let r = check_factor(&f, &host);
    assert!(has(&r, |v| matches!(v, Violation::NotInHost { .. })));
}

#[test]
fn declared_counts_must_match() {
    let mut c = k5_rotational();
    c.expected = vec![(FactorKind::Cycles(5), 3)];
    let r = check_certificate(&c);
    assert!(has(&r, |v| matches!(v, Violation::Counts { .. })));
}

fn permutation(n: u32) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n).collect::<Vec<u32>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn relabeling_preserves_validity(perm in permutation(5)) {
        let mut c = k5_rotational();
        c.factors = c.factors.iter().map(|f| f.relabeled(&perm)).collect();
        prop_assert!(check_certificate(&c).accepted());
    }

    #[test]
    fn any_single_arc_swap_is_rejected(fi in 0usize..4, ai in 0usize..5, fj in 0usize..4) {
        prop_assume!(fi != fj);
        let mut c = k5_rotational();
        let a = *c.factors[fi].arcs.iter().nth(ai).unwrap();
        c.factors[fi].arcs.remove(&a);
        c.factors[fj].arcs.insert(a);
        prop_assert!(!check_certificate(&c).accepted());
    }

    #[test]
    fn reversing_all_factors_stays_valid(rev in proptest::collection::vec(any::<bool>(), 4)) {
        let mut c = k5_rotational();
        for (f, r) in c.factors.iter_mut().zip(rev) {
            if r { *f = f.reversed(); }
        }
        // x -> x+d reversed is x -> x-d, which duplicates another factor.
        let distinct: std::collections::BTreeSet<_> = c.factors.iter().map(|f| f.arcs.clone()).collect();
        prop_assert_eq!(check_certificate(&c).accepted(), distinct.len() == 4);
    }
}
