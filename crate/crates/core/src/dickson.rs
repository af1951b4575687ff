//! Dickson's classes of maximal subgroups of PSL(2,q).
//!
//! Each case carries its arithmetic side condition and a deterministic
//! construction of one representative inside the enumerated PSL(2,q).
//! The conditions are applied as stated; borderline cases where a listed
//! class is not actually maximal (q = 4, case 8) are left to
//! [`verify_cover`] to document.

use std::sync::Arc;

use serde::Serialize;

use crate::arith::{gcd, is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::group::{Code, GroupHandle};
use crate::linear::{borel_parts, enumerate_with_det, matrix_ops, order_psl, psl2, Mat2, MatrixOps};

/// One of Dickson's eight cases, instantiated for a specific `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalClassSpec {
    pub case_id: u8,
    pub p: u64,
    pub m: u32,
    pub q: u64,
    pub expected_order: u64,
    /// Number of conjugacy classes of this type.
    pub multiplicity: u8,
    /// Degree over GF(p) of the subfield used by cases 7 and 8.
    pub subfield_degree: Option<u32>,
    pub description: String,
}

fn legendre_is_square(a: u64, p: u64) -> bool {
    // Euler's criterion; p odd.
    let mut acc = 1u64;
    let (mut base, mut e) = (a % p, (p - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc == 1
}

/// Degree over GF(p) of the smallest field containing a square root of 5.
fn sqrt5_degree(p: u64) -> u32 {
    if p == 2 || p == 5 || legendre_is_square(5, p) {
        1
    } else {
        2
    }
}

/// Side condition of cases 1..=7 (case 8 depends on a subfield degree).
pub fn case_applies(case_id: u8, p: u64, m: u32) -> bool {
    let q = p.pow(m);
    match case_id {
        1 => true,
        2 => ![5, 7, 9, 11].contains(&q),
        3 => ![7, 9].contains(&q),
        4 => (q % 10 == 1 || q % 10 == 9) && m == sqrt5_degree(p),
        5 => m == 1 && (q * q) % 16 == 1,
        6 => m == 1 && [3, 5, 13, 27, 37].contains(&(q % 40)),
        7 => p % 2 == 1 && m % 2 == 0,
        _ => false,
    }
}

/// Subfield degrees `n` for which case 8 applies.
pub fn case8_degrees(p: u64, m: u32) -> Vec<u32> {
    (1..m)
        .filter(|n| m % n == 0)
        .filter(|&n| {
            let k = m / n;
            (k % 2 == 1 && is_prime(k as u64)) || (p == 2 && 2 * n == m)
        })
        .collect()
}

/// Applicable Dickson classes for `q = p^m > 3`, case 8 once per subfield.
pub fn applicable_classes(p: u64, m: u32) -> Result<Vec<MaximalClassSpec>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = p.checked_pow(m).ok_or(Error::FieldTooLarge { p, m, bound: u64::MAX })?;
    if q <= 3 {
        return Err(Error::QTooSmall(q));
    }
    let g = gcd(2, q - 1);
    let mut out = Vec::new();
    let mut push = |case_id: u8, expected_order: u64, multiplicity: u8, sub: Option<u32>, d: String| {
        out.push(MaximalClassSpec {
            case_id,
            p,
            m,
            q,
            expected_order,
            multiplicity,
            subfield_degree: sub,
            description: d,
        })
    };
    for case in 1..=7u8 {
        if !case_applies(case, p, m) {
            continue;
        }
        match case {
            1 => push(1, q * (q - 1) / g, 1, None, format!("C{q}:C{}", (q - 1) / g)),
            2 => push(2, 2 * (q - 1) / g, 1, None, format!("D{}", 2 * (q - 1) / g)),
            3 => push(3, 2 * (q + 1) / g, 1, None, format!("D{}", 2 * (q + 1) / g)),
            4 => push(4, 60, 2, None, "Alt(5)".into()),
            5 => push(5, 24, 2, None, "Sym(4)".into()),
            6 => push(6, 12, 1, None, "Alt(4)".into()),
            7 => {
                let q0 = p.pow(m / 2);
                push(7, q0 * (q0 * q0 - 1), 2, Some(m / 2), format!("PGL(2,{q0})"))
            }
            _ => unreachable!(),
        }
    }
    for n in case8_degrees(p, m) {
        let q0 = p.pow(n);
        push(8, order_psl(q0), 1, Some(n), format!("PSL(2,{q0})"));
    }
    Ok(out)
}

/// True when `x` has order exactly `k`.
fn has_order(g: &GroupHandle, x: Code, k: u64) -> bool {
    g.pow(x, k) == g.identity()
        && prime_divisors(k).iter().all(|&l| g.pow(x, k / l) != g.identity())
}

fn field_of(psl: &GroupHandle) -> Result<(&MatrixOps, Arc<FieldCtx>)> {
    let ops = matrix_ops(psl)
        .filter(|o| o.is_projective())
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not a PSL(2,q) handle", psl.label())))?;
    Ok((ops, ops.field_arc()))
}

fn bounded(psl: &GroupHandle, gens: &[Code], order: u64, label: &str) -> Option<GroupHandle> {
    psl.subgroup_bounded(gens, order as usize)
        .filter(|h| h.order() as u64 == order)
        .map(|h| h.with_label(label))
}

/// Builds one representative of `spec` inside `psl`, which must be the
/// enumerated PSL(2,q) for the same `q`.
pub fn construct_class_rep(psl: &GroupHandle, spec: &MaximalClassSpec) -> Result<GroupHandle> {
    let (mops, field) = field_of(psl)?;
    let f = field.as_ref();
    if f.q() as u64 != spec.q {
        return Err(Error::CaseNotApplicable { case: spec.case_id, q: f.q() as u64 });
    }
    let label = format!("case {} {}", spec.case_id, spec.description);
    let order = spec.expected_order;
    let fail = |what: &str| {
        Error::CatalogInconsistency(format!("q = {}, case {}: {what}", spec.q, spec.case_id))
    };
    let rep = match spec.case_id {
        1 => {
            let (carrier, gens) = borel_parts(mops)?;
            GroupHandle::from_parts(psl.ops().clone(), carrier, Some(gens), label)
        }
        2 => {
            let d = mops.code_of(&Mat2::diagonal(f.primitive_element(), f)?);
            let w = mops.code_of(&Mat2::new(f.zero(), f.one(), f.neg(f.one()), f.zero()));
            bounded(psl, &[d, w], order, &label).ok_or_else(|| fail("<D, w> has the wrong order"))?
        }
        3 => {
            let k = order / 2;
            let c = psl
                .elements()
                .iter()
                .copied()
                .find(|&x| has_order(psl, x, k))
                .ok_or_else(|| fail("no element of order (q+1)/(2,q-1)"))?;
            let cinv = psl.inv(c);
            let s = psl
                .elements()
                .iter()
                .copied()
                .find(|&s| has_order(psl, s, 2) && psl.conj(s, c) == cinv)
                .ok_or_else(|| fail("no involution inverts the cyclic generator"))?;
            bounded(psl, &[c, s], order, &label).ok_or_else(|| fail("<c, s> has the wrong order"))?
        }
        4..=6 => {
            let (a, b) = match spec.case_id {
                4 => (5, 3),
                5 => (3, 4),
                _ => (3, 3),
            };
            triangle_search(psl, a, b, order, &label).ok_or_else(|| fail("generator search exhausted"))?
        }
        7 => {
            let n = spec.subfield_degree.ok_or_else(|| fail("missing subfield degree"))?;
            let sub = f.subfield(n)?;
            let q0 = sub.len() as u64;
            // Smallest element that is not a square in the subfield.
            let ns = sub
                .iter()
                .copied()
                .find(|&x| !x.is_zero() && f.pow(x, (q0 - 1) / 2) != f.one())
                .ok_or_else(|| fail("subfield has no non-square"))?;
            let root = f.square_info(ns).root.ok_or_else(|| fail("non-square has no root in GF(q)"))?;
            let scale = f.inv(root)?;
            let mut carrier = Vec::new();
            enumerate_with_det(f, &sub, f.one(), |m| carrier.push(mops.code_of(&m)));
            enumerate_with_det(f, &sub, ns, |m| carrier.push(mops.code_of(&m.scale(scale, f))));
            GroupHandle::from_parts(psl.ops().clone(), carrier, None, label)
        }
        8 => {
            let n = spec.subfield_degree.ok_or_else(|| fail("missing subfield degree"))?;
            let sub = f.subfield(n)?;
            let mut carrier = Vec::new();
            enumerate_with_det(f, &sub, f.one(), |m| carrier.push(mops.code_of(&m)));
            GroupHandle::from_parts(psl.ops().clone(), carrier, None, label)
        }
        other => return Err(Error::InvalidArgument(format!("no Dickson case {other}"))),
    };
    if rep.order() as u64 != order {
        return Err(fail(&format!("constructed order {} != {order}", rep.order())));
    }
    Ok(rep)
}

/// Image of `h` under conjugation by `diag(ns, 1)` for the smallest
/// non-square `ns`, an outer automorphism of PSL(2,q), q odd. It swaps the
/// two classes of the types Dickson lists with multiplicity two.
pub fn outer_twin(psl: &GroupHandle, h: &GroupHandle) -> Result<GroupHandle> {
    let (mops, field) = field_of(psl)?;
    let f = field.as_ref();
    let ns = f
        .elements()
        .find(|&x| !x.is_zero() && !f.is_square(x))
        .ok_or_else(|| Error::InvalidArgument(format!("GF({}) has no non-square", f.q())))?;
    let ns_inv = f.inv(ns)?;
    let twist = |x: Code| {
        let m = mops.decode(x);
        mops.code_of(&Mat2::new(m.a, f.mul(ns, m.b), f.mul(ns_inv, m.c), m.d))
    };
    let carrier = h.elements().iter().map(|&x| twist(x)).collect();
    let gens = h.generators().iter().map(|&x| twist(x)).collect();
    Ok(GroupHandle::from_parts(psl.ops().clone(), carrier, Some(gens), format!("{} (twin)", h.label())))
}

/// First pair `(x, y)` in code order with `|x| = 2`, `|y| = a`,
/// `|xy| = b` whose closure has the expected order.
fn triangle_search(psl: &GroupHandle, a: u64, b: u64, order: u64, label: &str) -> Option<GroupHandle> {
    let invols: Vec<Code> =
        psl.elements().iter().copied().filter(|&x| has_order(psl, x, 2)).collect();
    let ys: Vec<Code> =
        psl.elements().iter().copied().filter(|&y| has_order(psl, y, a)).collect();
    for &x in &invols {
        for &y in &ys {
            if has_order(psl, psl.mul(x, y), b) {
                if let Some(h) = bounded(psl, &[x, y], order, label) {
                    return Some(h);
                }
            }
        }
    }
    None
}

/// One conjugacy class of maximal subgroups found by the lattice oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverClass {
    pub order: usize,
    pub class_size: usize,
    /// Dickson cases whose representative is conjugate to this class.
    pub cases: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub q: u64,
    pub maximal_subgroups: usize,
    pub classes: Vec<CoverClass>,
    /// Orders of maximal subgroups no representative accounts for.
    pub uncovered: Vec<usize>,
    /// Cases whose representative is not maximal (listed but contained in
    /// a larger proper subgroup).
    pub non_maximal_cases: Vec<u8>,
    pub passed: bool,
}

/// Checks, against the exhaustive subgroup lattice, that every maximal
/// subgroup of PSL(2,q) is conjugate to a constructed representative. For
/// types with two classes the representative's [`outer_twin`] counts too.
pub fn verify_cover(field: &Arc<FieldCtx>, oracle_bound: usize) -> Result<CoverReport> {
    let q = field.q() as u64;
    let order = order_psl(q);
    if order > oracle_bound as u64 {
        return Err(Error::GroupTooLarge { order, bound: oracle_bound as u64 });
    }
    let psl = psl2(field)?;
    let lattice = psl.subgroup_lattice(oracle_bound)?;
    let maximal = lattice.maximal_subgroups();
    let maximal_pos: Vec<usize> =
        maximal.iter().map(|m| lattice.position(m).expect("listed subgroup")).collect();

    let mut case_orbits: Vec<(u8, Vec<usize>)> = Vec::new();
    for spec in applicable_classes(field.p() as u64, field.m())? {
        let rep = construct_class_rep(&psl, &spec)?;
        let mut orbit = lattice.conjugates_of(&rep);
        if spec.multiplicity == 2 && q % 2 == 1 {
            orbit.extend(lattice.conjugates_of(&outer_twin(&psl, &rep)?));
            orbit.sort_unstable();
            orbit.dedup();
        }
        case_orbits.push((spec.case_id, orbit));
    }

    let mut classes: Vec<CoverClass> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    let mut uncovered = Vec::new();
    for (m, &pos) in maximal.iter().zip(&maximal_pos) {
        if seen.contains(&pos) {
            continue;
        }
        let orbit = lattice.conjugates_of(m);
        seen.extend(orbit.iter().copied());
        let cases: Vec<u8> = case_orbits
            .iter()
            .filter(|(_, o)| o.contains(&pos))
            .map(|(c, _)| *c)
            .collect();
        if cases.is_empty() {
            uncovered.push(m.order());
        }
        classes.push(CoverClass { order: m.order(), class_size: orbit.len(), cases });
    }
    let non_maximal_cases = case_orbits
        .iter()
        .filter(|(_, o)| !o.iter().any(|i| maximal_pos.contains(i)))
        .map(|(c, _)| *c)
        .collect();
    Ok(CoverReport {
        q,
        maximal_subgroups: maximal.len(),
        classes,
        passed: uncovered.is_empty(),
        uncovered,
        non_maximal_cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cases(p: u64, m: u32) -> Vec<(u8, u64)> {
        applicable_classes(p, m).unwrap().iter().map(|s| (s.case_id, s.expected_order)).collect()
    }

    #[test]
    fn applicability_at_small_q() {
        assert_eq!(cases(7, 1), vec![(1, 21), (5, 24)]);
        assert_eq!(cases(11, 1), vec![(1, 55), (3, 12), (4, 60)]);
        assert_eq!(cases(3, 2), vec![(1, 36), (4, 60), (7, 24)]);
        assert_eq!(cases(5, 1), vec![(1, 10), (3, 6), (6, 12)]);
        assert_eq!(cases(2, 2), vec![(1, 12), (2, 6), (3, 10), (8, 6)]);
        assert_eq!(cases(13, 1), vec![(1, 78), (2, 12), (3, 14), (6, 12)]);
        assert_eq!(cases(3, 3), vec![(1, 351), (2, 26), (3, 28), (8, 12)]);
    }

    #[test]
    fn small_q_rejected() {
        assert_eq!(applicable_classes(3, 1), Err(Error::QTooSmall(3)));
        assert_eq!(applicable_classes(2, 1), Err(Error::QTooSmall(2)));
    }

    #[test]
    fn expected_orders_divide_group_order() {
        for (p, m) in [(2u64, 2u32), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)] {
            let q = p.pow(m);
            for s in applicable_classes(p, m).unwrap() {
                assert_eq!(order_psl(q) % s.expected_order, 0, "q={q} case {}", s.case_id);
            }
        }
        for q in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
            for s in applicable_classes(q, 1).unwrap() {
                assert_eq!(order_psl(q) % s.expected_order, 0, "q={q} case {}", s.case_id);
            }
        }
    }
}
