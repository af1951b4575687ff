//! The CA property, Schmidt's classification of CA groups, and
//! minimal-non-CA verdicts for PSL(2,q).
//!
//! CA is inherited by subgroups: a non-central element `h` of `H <= G` is
//! non-central in `G`, and `C_H(h) = C_G(h) ∩ H`. It is also invariant
//! under conjugation. So a group is minimal non-CA as soon as it is not CA
//! and one representative of every class of maximal subgroups is CA.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, is_prime, prime_divisors, prime_power};
use crate::dickson::{applicable_classes, construct_class_rep};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::group::{
    perm, Code, Fingerprint, GroupHandle, Quotient, DEFAULT_GROUP_BOUND, DEFAULT_ORACLE_BOUND,
};
use crate::linear::{order_psl, pgl2_bounded, psl2, psl2_bounded, sl2};

/// A non-central element whose centralizer is not abelian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CAWitness {
    pub element: Code,
    pub centralizer_order: usize,
    /// Two elements of the centralizer that do not commute.
    pub pair: (Code, Code),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CAReport {
    pub is_ca: bool,
    pub witness: Option<CAWitness>,
    /// Non-central class representatives whose centralizer was inspected.
    pub checked_classes: usize,
}

/// Scans the conjugacy class representatives outside the center and stops
/// at the first one with a non-abelian centralizer.
pub fn is_ca(g: &GroupHandle) -> CAReport {
    if g.is_abelian() {
        return CAReport { is_ca: true, witness: None, checked_classes: 0 };
    }
    let mut checked = 0;
    for class in g.class_iter() {
        let x = class.representative;
        if class.size == 1 {
            continue;
        }
        checked += 1;
        let c = g.centralizer(x).expect("representative lies in the group");
        if let Some(pair) = c.noncommuting_pair() {
            let witness = CAWitness { element: x, centralizer_order: c.order(), pair };
            return CAReport { is_ca: false, witness: Some(witness), checked_classes: checked };
        }
    }
    CAReport { is_ca: true, witness: None, checked_classes: checked }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SchmidtCase {
    Abelian,
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
    Case7,
    #[serde(rename = "NotCA")]
    NotCa,
    Unknown,
}

impl SchmidtCase {
    /// One of the seven numbered cases.
    pub fn is_case(self) -> bool {
        matches!(
            self,
            SchmidtCase::Case1
                | SchmidtCase::Case2
                | SchmidtCase::Case3
                | SchmidtCase::Case4
                | SchmidtCase::Case5
                | SchmidtCase::Case6
                | SchmidtCase::Case7
        )
    }
}

impl fmt::Display for SchmidtCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SchmidtCase::Abelian => "Abelian",
            SchmidtCase::Case1 => "Case1",
            SchmidtCase::Case2 => "Case2",
            SchmidtCase::Case3 => "Case3",
            SchmidtCase::Case4 => "Case4",
            SchmidtCase::Case5 => "Case5",
            SchmidtCase::Case6 => "Case6",
            SchmidtCase::Case7 => "Case7",
            SchmidtCase::NotCa => "NotCA",
            SchmidtCase::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchmidtLabel {
    pub label: SchmidtCase,
    pub evidence: String,
}

impl SchmidtLabel {
    fn new(label: SchmidtCase, evidence: impl Into<String>) -> Self {
        SchmidtLabel { label, evidence: evidence.into() }
    }
}

/// Classifies `g` into the lowest-numbered case of Schmidt's theorem whose
/// conditions can be verified. Case 7 is never reported; CA groups that
/// match none of cases 1 to 6 are `Unknown`.
pub fn schmidt_case(g: &GroupHandle, bound: usize) -> Result<SchmidtLabel> {
    if g.order() > bound {
        return Err(Error::GroupTooLarge { order: g.order() as u64, bound: bound as u64 });
    }
    if g.is_abelian() {
        return Ok(SchmidtLabel::new(SchmidtCase::Abelian, "abelian"));
    }
    let report = is_ca(g);
    if let Some(w) = report.witness {
        return Ok(SchmidtLabel::new(
            SchmidtCase::NotCa,
            format!(
                "C({}) has order {} and is not abelian",
                g.describe(w.element),
                w.centralizer_order
            ),
        ));
    }
    if let Some(e) = case1(g, bound)? {
        return Ok(SchmidtLabel::new(SchmidtCase::Case1, e));
    }
    let z = g.center();
    let quot = g.quotient_map(&z)?;
    let q = &quot.group;
    if let Some(frob) = q.frobenius_structure()? {
        let k = quot.preimage(&frob.kernel);
        let l = quot.preimage(&frob.complement);
        if k.is_abelian() && l.is_abelian() {
            return Ok(SchmidtLabel::new(
                SchmidtCase::Case2,
                format!("G/Z Frobenius, abelian K of order {}, abelian L of order {}", k.order(), l.order()),
            ));
        }
        if let Some(e) = case3(g, &z, &k, &l) {
            return Ok(SchmidtLabel::new(SchmidtCase::Case3, e));
        }
    }
    let qfp = q.fingerprint();
    if let Some(e) = case4(&quot, &qfp)? {
        return Ok(SchmidtLabel::new(SchmidtCase::Case4, e));
    }
    if let Some(e) = case5(g) {
        return Ok(SchmidtLabel::new(SchmidtCase::Case5, e));
    }
    if let Some(e) = case6(g, &qfp)? {
        return Ok(SchmidtLabel::new(SchmidtCase::Case6, e));
    }
    Ok(SchmidtLabel::new(SchmidtCase::Unknown, "CA, no case among 1-6 verified"))
}

/// A normal subgroup of prime index contains `G'`, so it is the preimage of
/// a prime-index subgroup of the abelianization.
fn case1(g: &GroupHandle, bound: usize) -> Result<Option<String>> {
    let d = g.derived_subgroup();
    if d.order() == g.order() {
        return Ok(None);
    }
    let ab = g.quotient_map(&d)?;
    let n = ab.group.order();
    for h in ab.group.all_subgroups(bound)? {
        let index = n / h.order();
        if !is_prime(index as u64) {
            continue;
        }
        let pre = ab.preimage(&h);
        if pre.is_abelian() {
            return Ok(Some(format!(
                "abelian normal subgroup of order {} and index {index}",
                pre.order()
            )));
        }
    }
    Ok(None)
}

fn case3(g: &GroupHandle, z: &GroupHandle, k: &GroupHandle, l: &GroupHandle) -> Option<String> {
    for p in prime_divisors((k.order() / z.order()) as u64) {
        let sp = g.sylow(p);
        if !sp.is_normal_in(g) {
            continue;
        }
        let mut gens = sp.generators().to_vec();
        gens.extend_from_slice(z.generators());
        let pz = g.subgroup(&gens, "PZ").ok()?;
        if !pz.same_carrier(k) || !is_ca(&sp).is_ca {
            continue;
        }
        if !sp.center().same_carrier(&sp.intersection(z)) {
            continue;
        }
        // An abelian p'-subgroup H with HZ = L exists iff some p'-element
        // h of L has <h>Z = L, since L/Z is then cyclic.
        let h = l.elements().iter().copied().find(|&h| {
            g.element_order(h) as u64 % p != 0 && {
                let mut gens = vec![h];
                gens.extend_from_slice(z.generators());
                g.subgroup(&gens, "").map(|hz| hz.same_carrier(l)).unwrap_or(false)
            }
        })?;
        return Some(format!(
            "normal Sylow {p}-subgroup of order {} with K = PZ, H = <{}> of order {}",
            sp.order(),
            g.describe(h),
            g.element_order(h)
        ));
    }
    None
}

fn case4(quot: &Quotient, qfp: &Fingerprint) -> Result<Option<String>> {
    if qfp.order != 24 || *qfp != perm::symmetric(4)?.fingerprint() {
        return Ok(None);
    }
    let klein = quot.group.derived_subgroup().derived_subgroup();
    let v = quot.preimage(&klein);
    if v.is_abelian() {
        return Ok(None);
    }
    Ok(Some(format!("G/Z ~ Sym(4), V of order {} non-abelian", v.order())))
}

fn case5(g: &GroupHandle) -> Option<String> {
    let n = g.order();
    for p in prime_divisors(n as u64) {
        let sp = g.sylow(p);
        if sp.is_abelian() || !sp.is_normal_in(g) {
            continue;
        }
        let codes: Vec<Code> = g
            .elements()
            .iter()
            .copied()
            .filter(|&x| {
                g.element_order(x) as u64 % p != 0
                    && sp.generators().iter().all(|&s| g.commute(s, x))
            })
            .collect();
        if codes.len() * sp.order() != n {
            continue;
        }
        let a = g.subgroup(&codes, "A").ok()?;
        if a.order() != codes.len() || !a.is_abelian() || !is_ca(&sp).is_ca {
            continue;
        }
        return Some(format!(
            "G = P x A with P a non-abelian {p}-group of order {} and A abelian of order {}",
            sp.order(),
            a.order()
        ));
    }
    None
}

fn case6(g: &GroupHandle, qfp: &Fingerprint) -> Result<Option<String>> {
    let target = qfp.order as u64;
    let derived = g.derived_subgroup().fingerprint();
    let mut q = 4u64;
    // |PSL(2,q)| >= q(q^2-1)/2 bounds the search.
    while q * (q * q - 1) / 2 <= target {
        if let Ok((p, m)) = prime_power(q) {
            let field = Arc::new(FieldCtx::new(p, m)?);
            let mut quotient_name = None;
            if order_psl(q) == target && psl2(&field)?.fingerprint() == *qfp {
                quotient_name = Some("PSL");
            } else if gcd(2, q - 1) == 2
                && q * (q * q - 1) == target
                && pgl2_bounded(&field, target as usize)?.fingerprint() == *qfp
            {
                quotient_name = Some("PGL");
            }
            if let Some(name) = quotient_name {
                if sl2(&field)?.fingerprint() == derived {
                    return Ok(Some(format!("G/Z ~ {name}(2,{q}), G' ~ SL(2,{q})")));
                }
            }
        }
        q += 1;
    }
    Ok(None)
}

/// Arithmetic criterion on `q`, with the clause that decides it.
pub fn theorem_predicate(q: u64) -> Result<(bool, &'static str)> {
    let (p, m) = prime_power(q)?;
    if m == 1 {
        if q <= 5 {
            return Ok((false, "prime-at-most-5"));
        }
        if (q * q - 1) % 16 == 0 {
            return Ok((false, "16-divides-q2-1"));
        }
        return Ok((true, "clause-1"));
    }
    let odd_prime_exponent = m > 2 && is_prime(m as u64);
    match p {
        3 if odd_prime_exponent => Ok((true, "clause-2")),
        5 if odd_prime_exponent => Ok((true, "clause-3")),
        3 | 5 => Ok((false, "exponent-not-odd-prime")),
        _ => Ok((false, "characteristic-not-3-or-5")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    MaximalClass,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::MaximalClass => "maximal-class",
            Method::Oracle => "oracle",
        })
    }
}

/// CA check of one class of (maximal) subgroups. Oracle rows carry no
/// Dickson case. `schmidt` is left out above the classifier bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassCheck {
    pub case_id: Option<u8>,
    pub order: usize,
    pub is_ca: bool,
    pub schmidt: Option<SchmidtCase>,
}

impl ClassCheck {
    fn of(case_id: Option<u8>, h: &GroupHandle, classifier_bound: usize) -> Result<Self> {
        let ca = is_ca(h).is_ca;
        let schmidt = if h.order() <= classifier_bound {
            Some(schmidt_case(h, classifier_bound)?.label)
        } else {
            None
        };
        Ok(ClassCheck { case_id, order: h.order(), is_ca: ca, schmidt })
    }
}

/// Size limits for verdict computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest PSL(2,q) that is enumerated.
    pub group_bound: usize,
    /// Largest group handed to the subgroup-lattice oracle or the Schmidt
    /// classifier.
    pub oracle_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { group_bound: DEFAULT_GROUP_BOUND, oracle_bound: DEFAULT_ORACLE_BOUND }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    pub q: u64,
    pub predicate_answer: bool,
    pub computed_answer: bool,
    pub method: Method,
    pub per_class: Vec<ClassCheck>,
    pub reason_code: String,
}

impl MinimalityVerdict {
    pub fn agrees(&self) -> bool {
        self.predicate_answer == self.computed_answer
    }
}

fn check_q(field: &FieldCtx) -> Result<u64> {
    let q = field.q() as u64;
    if q <= 3 {
        return Err(Error::QTooSmall(q));
    }
    Ok(q)
}

/// Minimal-non-CA verdict for PSL(2,q) from one representative of each of
/// Dickson's applicable classes. Representatives are checked in parallel
/// and reported in case order.
pub fn is_minimal_non_ca_psl(field: &Arc<FieldCtx>, limits: &Limits) -> Result<MinimalityVerdict> {
    let q = check_q(field)?;
    let (predicate_answer, _) = theorem_predicate(q)?;
    let psl = psl2_bounded(field, limits.group_bound)?;
    let whole = is_ca(&psl);
    let specs = applicable_classes(field.p() as u64, field.m())?;
    let per_class = specs
        .par_iter()
        .map(|spec| {
            let rep = construct_class_rep(&psl, spec)?;
            ClassCheck::of(Some(spec.case_id), &rep, limits.oracle_bound)
        })
        .collect::<Result<Vec<_>>>()?;
    let failing = per_class.iter().find(|c| !c.is_ca);
    let (computed_answer, reason_code) = match (whole.is_ca, failing) {
        (true, _) => (false, "psl-is-ca".to_string()),
        (false, Some(c)) => (false, format!("case-{}-not-ca", c.case_id.unwrap_or(0))),
        (false, None) => (true, "all-classes-ca".to_string()),
    };
    Ok(MinimalityVerdict {
        q,
        predicate_answer,
        computed_answer,
        method: Method::MaximalClass,
        per_class,
        reason_code,
    })
}

/// Exhaustive check: `g` is not CA and every maximal subgroup in its
/// subgroup lattice is CA.
pub fn brute_force_minimal_non_ca(g: &GroupHandle, bound: usize) -> Result<bool> {
    Ok(oracle_checks(g, bound, false)?.0)
}

/// Oracle answer, reason and one row per conjugacy class of maximal
/// subgroups. A CA group is never minimal non-CA, so its lattice is not
/// built.
fn oracle_checks(g: &GroupHandle, bound: usize, classify: bool) -> Result<(bool, String, Vec<ClassCheck>)> {
    if g.order() > bound {
        return Err(Error::GroupTooLarge { order: g.order() as u64, bound: bound as u64 });
    }
    if is_ca(g).is_ca {
        return Ok((false, "group-is-ca".to_string(), vec![]));
    }
    let lattice = g.subgroup_lattice(bound)?;
    let maximal = lattice.maximal_subgroups();
    let verdicts: Vec<bool> = maximal.par_iter().map(|h| is_ca(h).is_ca).collect();
    let mut rows = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for (h, &ok) in maximal.iter().zip(&verdicts) {
        let pos = lattice.position(h).expect("listed subgroup");
        if seen.contains(&pos) {
            continue;
        }
        seen.extend(lattice.conjugates_of(h));
        let schmidt = if classify { Some(schmidt_case(h, bound)?.label) } else { None };
        rows.push(ClassCheck { case_id: None, order: h.order(), is_ca: ok, schmidt });
    }
    if !verdicts.iter().all(|&ok| ok) && rows.iter().all(|r| r.is_ca) {
        return Err(Error::Internal("CA verdict differs between conjugate subgroups".into()));
    }
    match rows.iter().find(|r| !r.is_ca) {
        Some(r) => Ok((false, format!("maximal-subgroup-of-order-{}-not-ca", r.order), rows)),
        None => Ok((true, "all-maximal-ca".to_string(), rows)),
    }
}

/// Oracle verdict for PSL(2,q).
pub fn oracle_verdict(field: &Arc<FieldCtx>, limits: &Limits) -> Result<MinimalityVerdict> {
    let q = check_q(field)?;
    let (predicate_answer, _) = theorem_predicate(q)?;
    let bound = limits.oracle_bound.min(limits.group_bound);
    let psl = psl2_bounded(field, bound)?;
    let (computed_answer, reason_code, per_class) = oracle_checks(&psl, bound, true)?;
    let reason_code = if reason_code == "group-is-ca" { "psl-is-ca".to_string() } else { reason_code };
    Ok(MinimalityVerdict {
        q,
        predicate_answer,
        computed_answer,
        method: Method::Oracle,
        per_class,
        reason_code,
    })
}
