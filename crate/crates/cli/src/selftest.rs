//! Quick property checks bundled with the binary.

use std::sync::Arc;

use ca_forge::ca::{brute_force_minimal_non_ca, is_ca, schmidt_case, theorem_predicate};
use ca_forge::dickson::verify_cover;
use ca_forge::group::perm;
use ca_forge::linear::{borel, psl2, sl2};
use ca_forge::suzuki::verify_suzuki_lemma;
use ca_forge::{Error, FieldCtx, GroupHandle, Result, SchmidtCase};

use crate::run::Config;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn field(q: u64) -> Result<Arc<FieldCtx>> {
    let (p, m) = ca_forge::arith::prime_power(q)?;
    Ok(Arc::new(FieldCtx::new(p, m)?))
}

fn field_axioms() -> Result<(bool, String)> {
    for q in [4u64, 8, 9, 25, 27] {
        let f = field(q)?;
        let els: Vec<_> = f.elements().collect();
        for &a in &els {
            if !a.is_zero() && f.mul(a, f.inv(a)?) != f.one() {
                return Ok((false, format!("inverse fails in GF({q})")));
            }
            for &b in &els {
                for &c in &els {
                    let lhs = f.mul(a, f.add(b, c));
                    if lhs != f.add(f.mul(a, b), f.mul(a, c)) {
                        return Ok((false, format!("distributivity fails in GF({q})")));
                    }
                }
            }
        }
    }
    Ok((true, "GF(4), GF(8), GF(9), GF(25), GF(27)".into()))
}

fn class_equation() -> Result<(bool, String)> {
    let groups = [psl2(&field(7)?)?, sl2(&field(5)?)?, perm::symmetric(4)?];
    for g in &groups {
        let total: usize = g.conjugacy_classes().iter().map(|c| c.size).sum();
        if total != g.order() || g.conjugacy_classes().iter().any(|c| g.order() % c.size != 0) {
            return Ok((false, g.label().to_string()));
        }
    }
    Ok((true, "PSL(2,7), SL(2,5), Sym(4)".into()))
}

fn closedness(cfg: &Config) -> Result<(bool, String)> {
    let groups = [psl2(&field(5)?)?, sl2(&field(3)?)?, perm::dihedral(6)?, borel(&field(7)?)?];
    let mut count = 0;
    for g in &groups {
        for h in g.all_subgroups(cfg.limits.oracle_bound)? {
            count += 1;
            if !is_ca(&h).is_ca {
                return Ok((false, format!("subgroup of order {} in {}", h.order(), g.label())));
            }
        }
    }
    Ok((true, format!("{count} subgroups of 4 CA groups")))
}

fn schmidt_labels(cfg: &Config) -> Result<(bool, String)> {
    let cases: [(GroupHandle, SchmidtCase); 5] = [
        (perm::dihedral(4)?, SchmidtCase::Case1),
        (perm::frobenius_20()?, SchmidtCase::Case2),
        (sl2(&field(5)?)?, SchmidtCase::Case6),
        (perm::symmetric(4)?, SchmidtCase::NotCa),
        (perm::sym3_wr_c2()?, SchmidtCase::NotCa),
    ];
    for (g, want) in &cases {
        let got = schmidt_case(g, cfg.limits.oracle_bound)?.label;
        if got != *want {
            return Ok((false, format!("{}: {got}, expected {want}", g.label())));
        }
    }
    Ok((true, "D8, F20, SL(2,5), Sym(4), Sym(3) wr C2".into()))
}

fn oracle_agreement(cfg: &Config) -> Result<(bool, String)> {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let g = psl2(&field(q)?)?;
        let oracle = brute_force_minimal_non_ca(&g, cfg.limits.oracle_bound)?;
        if oracle != theorem_predicate(q)?.0 {
            return Ok((false, format!("q = {q}")));
        }
    }
    Ok((true, "q in {4,5,7,8,9,11,13}".into()))
}

fn covers(cfg: &Config) -> Result<(bool, String)> {
    for q in [4u64, 5, 7, 9, 11, 13] {
        let report = verify_cover(&field(q)?, cfg.limits.oracle_bound)?;
        if !report.passed {
            return Ok((false, format!("q = {q}, uncovered orders {:?}", report.uncovered)));
        }
    }
    Ok((true, "q in {4,5,7,9,11,13}".into()))
}

fn suzuki() -> Result<(bool, String)> {
    let r = verify_suzuki_lemma(1)?;
    Ok((r.passed && r.order == 448, format!("|N| = {}", r.order)))
}

fn perfectness() -> Result<(bool, String)> {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        if !psl2(&field(q)?)?.is_perfect() {
            return Ok((false, format!("PSL(2,{q})")));
        }
    }
    if perm::symmetric(4)?.is_perfect() || perm::alternating(4)?.is_perfect() {
        return Ok((false, "a solvable group is perfect".into()));
    }
    Ok((true, "PSL(2,q) for q <= 13; A4, S4 not perfect".into()))
}

type CheckFn<'a> = dyn Fn() -> Result<(bool, String)> + 'a;

/// Runs every check; engine errors count as failures.
pub fn run(cfg: &Config) -> Vec<Check> {
    let checks: Vec<(&str, Box<CheckFn>)> = vec![
        ("field-axioms", Box::new(field_axioms)),
        ("class-equation", Box::new(class_equation)),
        ("subgroup-closedness", Box::new(|| closedness(cfg))),
        ("schmidt-labels", Box::new(|| schmidt_labels(cfg))),
        ("oracle-agreement", Box::new(|| oracle_agreement(cfg))),
        ("dickson-cover", Box::new(|| covers(cfg))),
        ("suzuki-lemma", Box::new(suzuki)),
        ("perfectness", Box::new(perfectness)),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = f().unwrap_or_else(|e: Error| (false, e.to_string()));
            Check { name: name.to_string(), passed, detail }
        })
        .collect()
}
