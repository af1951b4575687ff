mod common;

use ca_forge::arith::{factorize, is_prime, prime_power};
use ca_forge::dickson::{applicable_classes, construct_class_rep, outer_twin, verify_cover};
use ca_forge::group::{perm, DEFAULT_ORACLE_BOUND};
use ca_forge::linear::order_psl;
use ca_forge::{Error, GroupHandle};
use common::{field, psl};

fn prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&q| factorize(q).len() == 1).collect()
}

/// Applicable case ids read straight off the statement of Dickson's list,
/// with the `√5` condition decided inside the constructed field.
fn oracle_cases(q: u64) -> Vec<u8> {
    let (p, m) = prime_power(q).unwrap();
    let f = field(q);
    let mut out = Vec::new();
    out.push(1);
    if ![5, 7, 9, 11].contains(&q) {
        out.push(2);
    }
    if ![7, 9].contains(&q) {
        out.push(3);
    }
    let root = f.square_info(f.from_int(5)).root;
    let generates = root.is_some_and(|r| {
        (1..=m).filter(|n| m % n == 0).find(|&n| f.pow(r, p.pow(n)) == r) == Some(m)
    });
    if (q % 10 == 1 || q % 10 == 9) && generates {
        out.push(4);
    }
    if m == 1 && (q * q - 1) % 16 == 0 {
        out.push(5);
    }
    if m == 1 && [3, 5, 13, 27, 37].contains(&(q % 40)) {
        out.push(6);
    }
    if p % 2 == 1 && m % 2 == 0 {
        out.push(7);
    }
    for n in 1..m {
        if m % n == 0 && ((m / n) % 2 == 1 && is_prime((m / n) as u64) || (p == 2 && n == m / 2)) {
            out.push(8);
        }
    }
    out
}

#[test]
fn applicability_matches_statement() {
    for q in prime_powers(4, 1024) {
        let (p, m) = prime_power(q).unwrap();
        let got: Vec<u8> = applicable_classes(p, m).unwrap().iter().map(|s| s.case_id).collect();
        assert_eq!(got, oracle_cases(q), "q = {q}");
    }
}

#[test]
fn documented_examples() {
    let ids = |q: u64| {
        let (p, m) = prime_power(q).unwrap();
        applicable_classes(p, m).unwrap().iter().map(|s| (s.case_id, s.expected_order, s.multiplicity)).collect::<Vec<_>>()
    };
    assert_eq!(ids(7), vec![(1, 21, 1), (5, 24, 2)]);
    assert_eq!(ids(11), vec![(1, 55, 1), (3, 12, 1), (4, 60, 2)]);
    assert_eq!(ids(9), vec![(1, 36, 1), (4, 60, 2), (7, 24, 2)]);
    assert_eq!(applicable_classes(3, 1).unwrap_err(), Error::QTooSmall(3));
    assert_eq!(applicable_classes(4, 1).unwrap_err(), Error::NotPrime(4));
}

#[test]
fn expected_orders_divide_group_order() {
    for q in prime_powers(4, 4096) {
        let (p, m) = prime_power(q).unwrap();
        for spec in applicable_classes(p, m).unwrap() {
            assert_eq!(order_psl(q) % spec.expected_order, 0, "q = {q}, case {}", spec.case_id);
        }
    }
}

fn reps(q: u64) -> (GroupHandle, Vec<(u8, GroupHandle)>) {
    let g = psl(q);
    let (p, m) = prime_power(q).unwrap();
    let reps = applicable_classes(p, m)
        .unwrap()
        .iter()
        .map(|s| {
            let h = construct_class_rep(&g, s).unwrap();
            assert_eq!(h.order() as u64, s.expected_order, "q = {q}, case {}", s.case_id);
            (s.case_id, h)
        })
        .collect();
    (g, reps)
}

fn is_dihedral(h: &GroupHandle) -> bool {
    let n = h.order();
    let Some(&c) = h.elements().iter().find(|&&x| h.element_order(x) == n / 2) else { return false };
    let cyc = h.subgroup(&[c], "").unwrap();
    let outside = h.elements().iter().filter(|&&x| !cyc.contains(x));
    outside.clone().count() == n / 2 && outside.into_iter().all(|&x| h.element_order(x) == 2)
}

#[test]
fn constructed_reps_are_subgroups_of_the_right_type() {
    let a4 = perm::alternating(4).unwrap().fingerprint();
    let a5 = perm::alternating(5).unwrap().fingerprint();
    let s4 = perm::symmetric(4).unwrap().fingerprint();
    for q in prime_powers(4, 50) {
        let (g, reps) = reps(q);
        for (case, h) in reps {
            assert!(h.is_subgroup_of(&g));
            for &x in h.elements().iter().step_by(5) {
                for &y in h.generators() {
                    assert!(h.contains(g.mul(x, y)));
                }
            }
            match case {
                2 | 3 if q % 2 == 1 && h.order() > 4 => assert!(is_dihedral(&h), "q = {q}, case {case}"),
                4 => assert_eq!(h.fingerprint(), a5),
                5 => assert_eq!(h.fingerprint(), s4),
                6 => assert_eq!(h.fingerprint(), a4),
                _ => {}
            }
        }
    }
}

#[test]
fn specific_constructions() {
    let (_, r7) = reps(7);
    let frob = r7[0].1.frobenius_structure().unwrap().unwrap();
    assert_eq!((frob.kernel.order(), frob.complement.order()), (7, 3));
    let (_, r9) = reps(9);
    let case7 = &r9.iter().find(|(c, _)| *c == 7).unwrap().1;
    assert_eq!(case7.fingerprint(), perm::symmetric(4).unwrap().fingerprint());
    let (_, r27) = reps(27);
    let case8 = &r27.iter().find(|(c, _)| *c == 8).unwrap().1;
    assert_eq!(case8.fingerprint(), perm::alternating(4).unwrap().fingerprint());
}

#[test]
fn case8_subfield_groups_are_simple_when_large() {
    let (_, r125) = reps(125);
    let h = &r125.iter().find(|(c, _)| *c == 8).unwrap().1;
    assert_eq!(h.order(), 60);
    assert!(h.is_perfect());
    assert_eq!(h.center().order(), 1);
}

#[test]
fn constructions_are_deterministic() {
    for q in [8, 11, 25] {
        let (_, a) = reps(q);
        let (_, b) = reps(q);
        for ((_, x), (_, y)) in a.iter().zip(&b) {
            assert!(x.same_carrier(y));
        }
    }
}

#[test]
fn outer_twin_swaps_classes() {
    let g = psl(7);
    let (_, r) = reps(7);
    let s4 = &r[1].1;
    let twin = outer_twin(&g, s4).unwrap();
    assert_eq!(twin.order(), 24);
    let lattice = g.subgroup_lattice(DEFAULT_ORACLE_BOUND).unwrap();
    let a = lattice.conjugates_of(s4);
    let b = lattice.conjugates_of(&twin);
    assert_eq!(a.len(), 7);
    assert!(a.iter().all(|i| !b.contains(i)));
}

#[test]
fn covers_at_small_q() {
    for q in [4, 5, 7, 9, 11, 13] {
        let report = verify_cover(&field(q), DEFAULT_ORACLE_BOUND).unwrap();
        assert!(report.passed, "q = {q}: {report:?}");
        assert!(report.uncovered.is_empty());
    }
    let r5 = verify_cover(&field(5), DEFAULT_ORACLE_BOUND).unwrap();
    let mut cases: Vec<u8> = r5.classes.iter().flat_map(|c| c.cases.clone()).collect();
    cases.sort_unstable();
    assert_eq!(cases, vec![1, 3, 6]);
    let r7 = verify_cover(&field(7), DEFAULT_ORACLE_BOUND).unwrap();
    assert_eq!(r7.classes.iter().map(|c| c.order).collect::<Vec<_>>(), vec![21, 24, 24]);
    assert!(matches!(verify_cover(&field(16), DEFAULT_ORACLE_BOUND), Err(Error::GroupTooLarge { .. })));
}
