#![allow(dead_code)]

use std::sync::Arc;

use ca_forge::group::{direct_product, perm};
use ca_forge::linear::{borel, psl2, sl2};
use ca_forge::suzuki::{build_stabilizer, kernel_of};
use ca_forge::{FieldCtx, GroupHandle};

pub fn field(q: u64) -> Arc<FieldCtx> {
    let (p, m) = ca_forge::arith::prime_power(q).unwrap();
    Arc::new(FieldCtx::new(p, m).unwrap())
}

pub fn sl(q: u64) -> GroupHandle {
    sl2(&field(q)).unwrap()
}

pub fn psl(q: u64) -> GroupHandle {
    psl2(&field(q)).unwrap()
}

/// Test corpus: (name, group, expected label when pinned down).
pub fn corpus() -> Vec<(String, GroupHandle, Option<&'static str>)> {
    let mut out: Vec<(String, GroupHandle, Option<&'static str>)> = Vec::new();
    let mut push = |name: &str, g: GroupHandle, label: Option<&'static str>| {
        out.push((name.to_string(), g, label));
    };
    for n in [1, 2, 5, 6, 12] {
        push(&format!("C{n}"), perm::cyclic(n).unwrap(), Some("Abelian"));
    }
    for n in 4..=12 {
        push(&format!("D{}", 2 * n), perm::dihedral(n).unwrap(), Some("Case1"));
    }
    push("S3", perm::symmetric(3).unwrap(), Some("Case1"));
    push("Q8", perm::quaternion().unwrap(), Some("Case1"));
    push("A4", perm::alternating(4).unwrap(), Some("Case1"));
    push("S4", perm::symmetric(4).unwrap(), Some("NotCA"));
    push("A5", perm::alternating(5).unwrap(), Some("Case6"));
    push("F20", perm::frobenius_20().unwrap(), Some("Case2"));
    push("S3 wr C2", perm::sym3_wr_c2().unwrap(), Some("NotCA"));
    push("C3^2:Q8", perm::frobenius_72().unwrap(), Some("NotCA"));
    push("SL(2,3)", sl(3), Some("Case3"));
    push("SL(2,5)", sl(5), Some("Case6"));
    push("SL(2,7)", sl(7), Some("Case6"));
    push("SL(2,9)", sl(9), Some("Case6"));
    push("PSL(2,4)", psl(4), Some("Case6"));
    push("PSL(2,7)", psl(7), Some("NotCA"));
    push("PSL(2,8)", psl(8), Some("Case6"));
    for q in [4, 5, 7, 8, 9, 11] {
        let want = if q == 9 { "Case2" } else { "Case1" };
        push(&format!("Borel({q})"), borel(&field(q)).unwrap(), Some(want));
    }
    let n1 = build_stabilizer(1).unwrap();
    let k1 = kernel_of(&n1).unwrap();
    push("Suzuki N(1)", n1, Some("NotCA"));
    push("Suzuki K(1)", k1.clone(), None);
    let c3 = perm::cyclic(3).unwrap();
    push("Q8 x C3", direct_product(&perm::quaternion().unwrap(), &c3).unwrap(), Some("Case1"));
    push("S3 x C3", direct_product(&perm::symmetric(3).unwrap(), &c3).unwrap(), Some("Case1"));
    push("K(1) x C3", direct_product(&k1, &c3).unwrap(), None);
    out
}
