//! The point stabilizer `N` of the Suzuki group Sz(r), `r = 2^(2n+1)`.
//!
//! `N` is built directly from triples `(λ, a, b)` with `λ ∈ GF(r)*` and
//! `a, b ∈ GF(r)`, multiplied by
//!
//! ```text
//! (λ, a, b)(μ, c, d) = (λμ, μa + c, μ^(θ+1) b + d + (μa)^θ c)
//! ```
//!
//! where `θ: x ↦ x^(2^(n+1))`, so that `θ²` is the squaring map. The
//! triples with `λ = 1` form the Suzuki 2-group, the Frobenius kernel; the
//! triples `(λ, 0, 0)` form a cyclic complement of order `r - 1`. The law
//! is certified by the associativity and structure tests rather than by
//! comparison with a matrix model.
//!
//! Codes are `λ r² + a r + b` on field codes.

use std::sync::Arc;

use serde::Serialize;

use crate::ca::is_ca;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::group::{Code, GroupHandle, GroupOps, DEFAULT_GROUP_BOUND};

pub struct SuzukiOps {
    field: FieldCtx,
    n: u32,
    r: u64,
    theta: Vec<FieldElem>,
}

impl SuzukiOps {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("Suzuki stabilizer needs n >= 1".into()));
        }
        let field = FieldCtx::new(2, 2 * n + 1)?;
        let r = field.q() as u64;
        let e = 1u64 << (n + 1);
        let theta = field.elements().map(|x| field.pow(x, e)).collect();
        Ok(SuzukiOps { field, n, r, theta })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// The twist `x ↦ x^(2^(n+1))`.
    #[inline]
    pub fn theta(&self, x: FieldElem) -> FieldElem {
        self.theta[x.code() as usize]
    }

    #[inline]
    pub fn encode(&self, lam: FieldElem, a: FieldElem, b: FieldElem) -> Code {
        (lam.code() as Code * self.r + a.code() as Code) * self.r + b.code() as Code
    }

    #[inline]
    pub fn decode(&self, x: Code) -> (FieldElem, FieldElem, FieldElem) {
        let r = self.r;
        let e = |v: u64| FieldElem::from_raw(v as u32);
        (e(x / (r * r)), e(x / r % r), e(x % r))
    }
}

impl GroupOps for SuzukiOps {
    fn identity(&self) -> Code {
        self.encode(FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO)
    }

    #[inline]
    fn mul(&self, x: Code, y: Code) -> Code {
        let f = &self.field;
        let (lam, a, b) = self.decode(x);
        let (mu, c, d) = self.decode(y);
        let mua = f.mul(mu, a);
        let twist = f.mul(mu, self.theta(mu));
        let third = f.add(f.add(f.mul(twist, b), d), f.mul(self.theta(mua), c));
        self.encode(f.mul(lam, mu), f.add(mua, c), third)
    }

    #[inline]
    fn inv(&self, x: Code) -> Code {
        // Solve x y = 1 with y = (μ, μa, d); characteristic 2 drops signs.
        let f = &self.field;
        let (lam, a, b) = self.decode(x);
        let mu = f.inv_nonzero(lam);
        let mua = f.mul(mu, a);
        let twist = f.mul(mu, self.theta(mu));
        let d = f.add(f.mul(twist, b), f.mul(self.theta(mua), mua));
        self.encode(mu, mua, d)
    }

    fn describe(&self, x: Code) -> String {
        let (lam, a, b) = self.decode(x);
        format!("({}, {}, {})", lam.code(), a.code(), b.code())
    }
}

/// Enumerates `N` for Sz(2^(2n+1)).
pub fn build_stabilizer(n: u32) -> Result<GroupHandle> {
    build_stabilizer_bounded(n, DEFAULT_GROUP_BOUND)
}

pub fn build_stabilizer_bounded(n: u32, bound: usize) -> Result<GroupHandle> {
    if n == 0 {
        return Err(Error::InvalidArgument("Suzuki stabilizer needs n >= 1".into()));
    }
    if n > 7 {
        return Err(Error::GroupTooLarge { order: u64::MAX, bound: bound as u64 });
    }
    let r = 1u64 << (2 * n + 1);
    let order = r * r * (r - 1);
    if order > bound as u64 {
        return Err(Error::GroupTooLarge { order, bound: bound as u64 });
    }
    let ops = SuzukiOps::new(n)?;
    let f = ops.field();
    let mut carrier = Vec::with_capacity(order as usize);
    for lam in f.elements().filter(|x| !x.is_zero()) {
        for a in f.elements() {
            for b in f.elements() {
                carrier.push(ops.encode(lam, a, b));
            }
        }
    }
    let (one, zero) = (FieldElem::ONE, FieldElem::ZERO);
    let gens = vec![
        ops.encode(f.primitive_element(), zero, zero),
        ops.encode(one, one, zero),
        ops.encode(one, zero, one),
    ];
    let label = format!("N(Sz({r}))");
    Ok(GroupHandle::from_parts(Arc::new(ops), carrier, Some(gens), label))
}

/// The adapter behind a stabilizer handle.
pub fn suzuki_ops(g: &GroupHandle) -> Option<&SuzukiOps> {
    let ops: &dyn std::any::Any = g.ops().as_ref();
    ops.downcast_ref::<SuzukiOps>()
}

/// The Suzuki 2-group `{λ = 1}` inside `n`.
pub fn kernel_of(n: &GroupHandle) -> Result<GroupHandle> {
    let ops = suzuki_ops(n)
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not a Suzuki stabilizer", n.label())))?;
    let r = ops.r();
    let codes: Vec<Code> =
        n.elements().iter().copied().filter(|&x| x / (r * r) == 1).collect();
    Ok(n.subgroup_from_codes(codes, format!("K(Sz({r}))")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuzukiReport {
    pub n: u32,
    pub r: u64,
    pub order: usize,
    /// Degree of the Zassenhaus action of Sz(r).
    pub degree: u64,
    pub kernel_order: usize,
    /// Two kernel elements that do not commute.
    pub kernel_noncommuting_pair: Option<(String, String)>,
    pub complement_order: usize,
    /// An element generating the complement.
    pub complement_generator: Option<String>,
    pub is_ca: bool,
    /// Non-central element of `N` with a non-abelian centralizer.
    pub ca_witness: Option<String>,
    pub passed: bool,
}

/// Checks that `N` is a Frobenius group with a non-abelian kernel of order
/// `r²` and a cyclic complement of order `r - 1`, and that `N` is not CA.
pub fn verify_suzuki_lemma(n: u32) -> Result<SuzukiReport> {
    let group = build_stabilizer(n)?;
    let r = 1u64 << (2 * n + 1);
    let frob = group.frobenius_structure()?.ok_or_else(|| {
        Error::Internal(format!("{} has no Frobenius decomposition", group.label()))
    })?;
    let kernel = frob.kernel;
    let complement = frob.complement;
    let kernel_noncommuting_pair = kernel
        .noncommuting_pair()
        .map(|(x, y)| (kernel.describe(x), kernel.describe(y)));
    let complement_generator = complement
        .elements()
        .iter()
        .copied()
        .find(|&x| complement.element_order(x) == complement.order())
        .map(|x| complement.describe(x));
    let ca = is_ca(&group);
    let ca_witness = ca.witness.as_ref().map(|w| group.describe(w.element));
    let passed = group.order() as u64 == r * r * (r - 1)
        && kernel.order() as u64 == r * r
        && kernel_noncommuting_pair.is_some()
        && complement.order() as u64 == r - 1
        && complement_generator.is_some()
        && !ca.is_ca;
    Ok(SuzukiReport {
        n,
        r,
        order: group.order(),
        degree: r * r + 1,
        kernel_order: kernel.order(),
        kernel_noncommuting_pair,
        complement_order: complement.order(),
        complement_generator,
        is_ca: ca.is_ca,
        ca_witness,
        passed,
    })
}
