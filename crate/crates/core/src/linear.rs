//! SL(2,q), PSL(2,q) and the Borel subgroup as enumerated matrix groups.
//!
//! A matrix `[[a, b], [c, d]]` is coded by packing the four field codes,
//! `a` most significant, so code order is lexicographic order on
//! `(a, b, c, d)`. PSL elements are stored as sign-canonical matrices: for
//! odd `p`, the first nonzero entry must have a code no larger than its
//! negation's.

use std::fmt;
use std::sync::Arc;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::group::{Code, GroupHandle, GroupOps, DEFAULT_GROUP_BOUND};

/// A 2×2 matrix over a finite field, row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl Mat2 {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO, FieldElem::ONE)
    }

    pub fn det(&self, f: &FieldCtx) -> FieldElem {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    pub fn mul(&self, o: &Mat2, f: &FieldCtx) -> Mat2 {
        Mat2 {
            a: f.add(f.mul(self.a, o.a), f.mul(self.b, o.c)),
            b: f.add(f.mul(self.a, o.b), f.mul(self.b, o.d)),
            c: f.add(f.mul(self.c, o.a), f.mul(self.d, o.c)),
            d: f.add(f.mul(self.c, o.b), f.mul(self.d, o.d)),
        }
    }

    pub fn neg(&self, f: &FieldCtx) -> Mat2 {
        Mat2 { a: f.neg(self.a), b: f.neg(self.b), c: f.neg(self.c), d: f.neg(self.d) }
    }

    pub fn scale(&self, s: FieldElem, f: &FieldCtx) -> Mat2 {
        Mat2 { a: f.mul(s, self.a), b: f.mul(s, self.b), c: f.mul(s, self.c), d: f.mul(s, self.d) }
    }

    /// Inverse of a determinant-one matrix.
    pub fn adjugate(&self, f: &FieldCtx) -> Mat2 {
        Mat2 { a: self.d, b: f.neg(self.b), c: f.neg(self.c), d: self.a }
    }

    /// `d_a = diag(a, a^-1)`.
    pub fn diagonal(a: FieldElem, f: &FieldCtx) -> Result<Mat2> {
        Ok(Mat2::new(a, FieldElem::ZERO, FieldElem::ZERO, f.inv(a)?))
    }

    /// `t_b = [[1, b], [0, 1]]`.
    pub fn upper(b: FieldElem) -> Mat2 {
        Mat2::new(FieldElem::ONE, b, FieldElem::ZERO, FieldElem::ONE)
    }

    pub fn lower(c: FieldElem) -> Mat2 {
        Mat2::new(FieldElem::ONE, FieldElem::ZERO, c, FieldElem::ONE)
    }
}

/// A canonical representative of an element of PSL(2,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMat2 {
    rep: Mat2,
}

impl ProjMat2 {
    pub fn rep(&self) -> Mat2 {
        self.rep
    }
}

/// Picks the sign-canonical one of `±m`; the identity map when `p = 2`.
#[inline]
fn sign_normalize(m: Mat2, f: &FieldCtx) -> Mat2 {
    if f.p() == 2 {
        return m;
    }
    let lead = [m.a, m.b, m.c, m.d].into_iter().find(|e| !e.is_zero());
    match lead {
        Some(e) if f.neg(e) < e => m.neg(f),
        _ => m,
    }
}

/// Canonicalizes a determinant-one matrix for PSL(2,q).
pub fn canonicalize(m: Mat2, f: &FieldCtx) -> Result<ProjMat2> {
    if m.det(f) != FieldElem::ONE {
        return Err(Error::DeterminantNotOne);
    }
    Ok(ProjMat2 { rep: sign_normalize(m, f) })
}

/// Matrix multiplication on packed codes, optionally modulo `±1`.
pub struct MatrixOps {
    field: Arc<FieldCtx>,
    bits: u32,
    projective: bool,
}

impl MatrixOps {
    pub fn new(field: Arc<FieldCtx>, projective: bool) -> Self {
        let q = field.q();
        let bits = (32 - (q - 1).leading_zeros()).max(1);
        MatrixOps { field, bits, projective }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FieldCtx> {
        self.field.clone()
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    #[inline]
    pub fn encode(&self, m: &Mat2) -> Code {
        let b = self.bits;
        (m.a.code() as Code) << (3 * b)
            | (m.b.code() as Code) << (2 * b)
            | (m.c.code() as Code) << b
            | m.d.code() as Code
    }

    #[inline]
    pub fn decode(&self, x: Code) -> Mat2 {
        let b = self.bits;
        let mask = (1u64 << b) - 1;
        let e = |shift: u32| FieldElem::from_raw(((x >> shift) & mask) as u32);
        Mat2::new(e(3 * b), e(2 * b), e(b), e(0))
    }

    /// Code of a determinant-one matrix, canonicalized when projective.
    #[inline]
    pub fn code_of(&self, m: &Mat2) -> Code {
        if self.projective {
            self.encode(&sign_normalize(*m, &self.field))
        } else {
            self.encode(m)
        }
    }
}

impl GroupOps for MatrixOps {
    fn identity(&self) -> Code {
        self.encode(&Mat2::identity())
    }

    #[inline]
    fn mul(&self, x: Code, y: Code) -> Code {
        let m = self.decode(x).mul(&self.decode(y), &self.field);
        self.code_of(&m)
    }

    #[inline]
    fn inv(&self, x: Code) -> Code {
        self.code_of(&self.decode(x).adjugate(&self.field))
    }

    fn describe(&self, x: Code) -> String {
        format!("{:?}", self.decode(x))
    }
}

fn order_sl(q: u64) -> u64 {
    q * (q * q - 1)
}

/// |PSL(2,q)|.
pub fn order_psl(q: u64) -> u64 {
    order_sl(q) / gcd(2, q - 1)
}

/// Every determinant-one matrix, optionally restricted to one sign
/// representative per `±` pair.
fn enumerate_det_one(f: &FieldCtx, one_sign: bool, mut emit: impl FnMut(Mat2)) {
    let keep = |x: FieldElem| !one_sign || f.neg(x) >= x;
    for a in f.elements().filter(|a| !a.is_zero() && keep(*a)) {
        let ainv = f.inv_nonzero(a);
        for b in f.elements() {
            for c in f.elements() {
                let d = f.mul(f.add(FieldElem::ONE, f.mul(b, c)), ainv);
                emit(Mat2::new(a, b, c, d));
            }
        }
    }
    for b in f.elements().filter(|b| !b.is_zero() && keep(*b)) {
        let c = f.neg(f.inv_nonzero(b));
        for d in f.elements() {
            emit(Mat2::new(FieldElem::ZERO, b, c, d));
        }
    }
}

/// Elementary generators `t_{x^i}` and their transposes.
fn elementary_generators(ops: &MatrixOps) -> Vec<Code> {
    let f = ops.field();
    let mut gens = Vec::new();
    for i in 0..f.m() {
        let mut coeffs = vec![0; i as usize + 1];
        coeffs[i as usize] = 1;
        let e = f.from_coefficients(&coeffs).expect("basis element");
        gens.push(ops.code_of(&Mat2::upper(e)));
        gens.push(ops.code_of(&Mat2::lower(e)));
    }
    gens
}

fn check_bound(order: u64, bound: usize) -> Result<()> {
    if order > bound as u64 {
        return Err(Error::GroupTooLarge { order, bound: bound as u64 });
    }
    Ok(())
}

pub fn sl2(field: &Arc<FieldCtx>) -> Result<GroupHandle> {
    sl2_bounded(field, DEFAULT_GROUP_BOUND)
}

/// SL(2,q) by direct enumeration of determinant-one matrices.
pub fn sl2_bounded(field: &Arc<FieldCtx>, bound: usize) -> Result<GroupHandle> {
    let q = field.q() as u64;
    check_bound(order_sl(q), bound)?;
    let ops = MatrixOps::new(field.clone(), false);
    let mut carrier = Vec::with_capacity(order_sl(q) as usize);
    enumerate_det_one(field, false, |m| carrier.push(ops.encode(&m)));
    let gens = elementary_generators(&ops);
    Ok(GroupHandle::from_parts(Arc::new(ops), carrier, Some(gens), format!("SL(2,{q})")))
}

pub fn psl2(field: &Arc<FieldCtx>) -> Result<GroupHandle> {
    psl2_bounded(field, DEFAULT_GROUP_BOUND)
}

/// PSL(2,q) as canonical sign representatives.
pub fn psl2_bounded(field: &Arc<FieldCtx>, bound: usize) -> Result<GroupHandle> {
    let q = field.q() as u64;
    check_bound(order_psl(q), bound)?;
    let ops = MatrixOps::new(field.clone(), true);
    let mut carrier = Vec::with_capacity(order_psl(q) as usize);
    enumerate_det_one(field, field.p() != 2, |m| carrier.push(ops.encode(&m)));
    let gens = elementary_generators(&ops);
    Ok(GroupHandle::from_parts(Arc::new(ops), carrier, Some(gens), format!("PSL(2,{q})")))
}

/// Image in PSL(2,q) of the upper-triangular matrices `[[a, b], [0, a^-1]]`.
pub fn borel(field: &Arc<FieldCtx>) -> Result<GroupHandle> {
    let ops = MatrixOps::new(field.clone(), true);
    let (carrier, gens) = borel_parts(&ops)?;
    let label = format!("Borel(PSL(2,{}))", field.q());
    Ok(GroupHandle::from_parts(Arc::new(ops), carrier, Some(gens), label))
}

/// Carrier and generators (`d_w` for a primitive `w`, and `t_b` for a
/// basis of GF(q) over GF(p)) of the Borel subgroup, coded by `ops`.
pub fn borel_parts(ops: &MatrixOps) -> Result<(Vec<Code>, Vec<Code>)> {
    let f = ops.field();
    let mut carrier = Vec::new();
    for a in f.elements().filter(|a| !a.is_zero()) {
        let ainv = f.inv_nonzero(a);
        for b in f.elements() {
            carrier.push(ops.code_of(&Mat2::new(a, b, FieldElem::ZERO, ainv)));
        }
    }
    carrier.sort_unstable();
    carrier.dedup();
    let mut gens = vec![ops.code_of(&Mat2::diagonal(f.primitive_element(), f)?)];
    for i in 0..f.m() {
        let mut coeffs = vec![0; i as usize + 1];
        coeffs[i as usize] = 1;
        gens.push(ops.code_of(&Mat2::upper(f.from_coefficients(&coeffs)?)));
    }
    Ok((carrier, gens))
}

/// Matrices with entries in `entries` and determinant `det`.
pub fn enumerate_with_det(
    f: &FieldCtx,
    entries: &[FieldElem],
    det: FieldElem,
    mut emit: impl FnMut(Mat2),
) {
    for &a in entries.iter().filter(|a| !a.is_zero()) {
        let ainv = f.inv_nonzero(a);
        for &b in entries {
            for &c in entries {
                let d = f.mul(f.add(det, f.mul(b, c)), ainv);
                emit(Mat2::new(a, b, c, d));
            }
        }
    }
    for &b in entries.iter().filter(|b| !b.is_zero()) {
        let c = f.neg(f.mul(det, f.inv_nonzero(b)));
        for &d in entries {
            emit(Mat2::new(FieldElem::ZERO, b, c, d));
        }
    }
}

/// GL(2,q) modulo scalars. A class is coded by its representative whose
/// first nonzero entry is 1, packed as in [`MatrixOps`].
pub struct PglOps {
    inner: MatrixOps,
}

impl PglOps {
    pub fn new(field: Arc<FieldCtx>) -> Self {
        PglOps { inner: MatrixOps::new(field, false) }
    }

    pub fn field(&self) -> &FieldCtx {
        self.inner.field()
    }

    /// Code of the class of an invertible matrix.
    pub fn code_of(&self, m: &Mat2) -> Code {
        let f = self.inner.field();
        let lead = [m.a, m.b, m.c, m.d].into_iter().find(|e| !e.is_zero()).unwrap_or(FieldElem::ONE);
        self.inner.encode(&m.scale(f.inv_nonzero(lead), f))
    }

    pub fn decode(&self, x: Code) -> Mat2 {
        self.inner.decode(x)
    }
}

impl GroupOps for PglOps {
    fn identity(&self) -> Code {
        self.inner.encode(&Mat2::identity())
    }

    fn mul(&self, x: Code, y: Code) -> Code {
        let f = self.inner.field();
        self.code_of(&self.decode(x).mul(&self.decode(y), f))
    }

    fn inv(&self, x: Code) -> Code {
        self.code_of(&self.decode(x).adjugate(self.inner.field()))
    }

    fn describe(&self, x: Code) -> String {
        format!("{:?}", self.decode(x))
    }
}

/// PGL(2,q), generated by `diag(w, 1)`, the elementary transvections and
/// the antidiagonal swap.
pub fn pgl2_bounded(field: &Arc<FieldCtx>, bound: usize) -> Result<GroupHandle> {
    let q = field.q() as u64;
    check_bound(order_sl(q), bound)?;
    let ops = PglOps::new(field.clone());
    let f = ops.field();
    let mut gens = vec![
        ops.code_of(&Mat2::new(f.primitive_element(), f.zero(), f.zero(), f.one())),
        ops.code_of(&Mat2::new(f.zero(), f.one(), f.one(), f.zero())),
    ];
    for i in 0..f.m() {
        let mut coeffs = vec![0; i as usize + 1];
        coeffs[i as usize] = 1;
        gens.push(ops.code_of(&Mat2::upper(f.from_coefficients(&coeffs)?)));
    }
    GroupHandle::generated(Arc::new(ops), &gens, bound, format!("PGL(2,{q})"))
}

/// The adapter behind a matrix group handle, if it is one.
pub fn matrix_ops(g: &GroupHandle) -> Option<&MatrixOps> {
    let ops: &dyn std::any::Any = g.ops().as_ref();
    ops.downcast_ref::<MatrixOps>()
}
