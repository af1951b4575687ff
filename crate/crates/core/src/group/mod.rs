//! Enumerated finite groups.
//!
//! A [`GroupHandle`] is a sorted carrier of element codes together with the
//! [`GroupOps`] adapter that multiplies and inverts codes. Subgroups,
//! centralizers and quotients share the adapter of the group they come
//! from, so carriers of related groups can be compared code by code.

use std::any::Any;
use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

mod classes;
mod closure;
mod fingerprint;
mod frobenius;
mod lattice;
pub mod perm;
mod product;
mod quotient;
mod sylow;

pub use classes::{ClassIter, ConjugacyClass, StructureProbe};
pub use closure::{close, close_bounded};
pub use fingerprint::Fingerprint;
pub use frobenius::FrobeniusDecomposition;
pub use lattice::{SubgroupLattice, DEFAULT_ORACLE_BOUND};
pub use perm::PermOps;
pub use product::direct_product;
pub use quotient::Quotient;

/// Canonical element code. Codes are totally ordered and unique within a
/// carrier.
pub type Code = u64;

/// Default bound on the size of an enumerated group.
pub const DEFAULT_GROUP_BOUND: usize = 1 << 24;

/// Groups up to this order get a Cayley table on demand.
pub const TABLE_LIMIT: usize = 2048;

/// Multiplication and inversion on element codes.
pub trait GroupOps: Send + Sync + Any {
    fn identity(&self) -> Code;
    fn mul(&self, a: Code, b: Code) -> Code;
    fn inv(&self, a: Code) -> Code;

    /// Human-readable rendering of an element.
    fn describe(&self, a: Code) -> String {
        a.to_string()
    }
}

/// Dense multiplication table over carrier indices.
pub struct CayleyTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

impl CayleyTable {
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

struct Inner {
    ops: Arc<dyn GroupOps>,
    carrier: Vec<Code>,
    generators: OnceLock<Vec<Code>>,
    label: String,
    table: OnceLock<Option<CayleyTable>>,
}

/// An enumerated finite group. Cloning is cheap.
#[derive(Clone)]
pub struct GroupHandle(Arc<Inner>);

impl fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHandle({}, order {})", self.label(), self.order())
    }
}

impl GroupHandle {
    /// Wraps a closed carrier. The carrier is sorted and deduplicated;
    /// `generators`, when given, must generate it.
    pub fn from_parts(
        ops: Arc<dyn GroupOps>,
        mut carrier: Vec<Code>,
        generators: Option<Vec<Code>>,
        label: impl Into<String>,
    ) -> Self {
        carrier.sort_unstable();
        carrier.dedup();
        let gens = OnceLock::new();
        if let Some(g) = generators {
            let _ = gens.set(g);
        }
        GroupHandle(Arc::new(Inner {
            ops,
            carrier,
            generators: gens,
            label: label.into(),
            table: OnceLock::new(),
        }))
    }

    /// Closure of `generators` under the adapter's multiplication.
    pub fn generated(
        ops: Arc<dyn GroupOps>,
        generators: &[Code],
        bound: usize,
        label: impl Into<String>,
    ) -> Result<Self> {
        let carrier = close_bounded(ops.as_ref(), generators, bound)?;
        Ok(Self::from_parts(ops, carrier, Some(generators.to_vec()), label))
    }

    pub fn ops(&self) -> &Arc<dyn GroupOps> {
        &self.0.ops
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        let gens = self.0.generators.get().cloned();
        Self::from_parts(self.0.ops.clone(), self.0.carrier.clone(), gens, label)
    }

    pub fn order(&self) -> usize {
        self.0.carrier.len()
    }

    pub fn elements(&self) -> &[Code] {
        &self.0.carrier
    }

    pub fn identity(&self) -> Code {
        self.0.ops.identity()
    }

    #[inline]
    pub fn mul(&self, a: Code, b: Code) -> Code {
        self.0.ops.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: Code) -> Code {
        self.0.ops.inv(a)
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: Code, x: Code) -> Code {
        self.mul(self.mul(g, x), self.inv(g))
    }

    #[inline]
    pub fn commute(&self, a: Code, b: Code) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn describe(&self, a: Code) -> String {
        self.0.ops.describe(a)
    }

    #[inline]
    pub fn index_of(&self, code: Code) -> Option<usize> {
        self.0.carrier.binary_search(&code).ok()
    }

    #[inline]
    pub fn contains(&self, code: Code) -> bool {
        self.index_of(code).is_some()
    }

    pub fn element_order(&self, x: Code) -> usize {
        let id = self.identity();
        let mut y = x;
        let mut k = 1;
        while y != id {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// True when `x^k` is the identity.
    pub fn power_is_identity(&self, x: Code, k: usize) -> bool {
        self.pow(x, k as u64) == self.identity()
    }

    pub fn pow(&self, x: Code, mut e: u64) -> Code {
        let (mut base, mut acc) = (x, self.identity());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// A generating set. Computed greedily in code order when the handle
    /// was built from a bare carrier.
    pub fn generators(&self) -> &[Code] {
        self.0.generators.get_or_init(|| greedy_generators(self))
    }

    /// Cayley table, available for groups of order at most [`TABLE_LIMIT`].
    pub fn table(&self) -> Option<&CayleyTable> {
        self.0
            .table
            .get_or_init(|| (self.order() <= TABLE_LIMIT).then(|| self.build_table()))
            .as_ref()
    }

    fn build_table(&self) -> CayleyTable {
        let n = self.order();
        let carrier = self.elements();
        let mut mul = vec![0u32; n * n];
        for (i, &a) in carrier.iter().enumerate() {
            for (j, &b) in carrier.iter().enumerate() {
                let c = self.mul(a, b);
                mul[i * n + j] = self.index_of(c).expect("carrier is closed") as u32;
            }
        }
        let inv = carrier
            .iter()
            .map(|&a| self.index_of(self.inv(a)).expect("carrier is closed") as u32)
            .collect();
        let identity = self.index_of(self.identity()).expect("identity in carrier") as u32;
        CayleyTable { n, mul, inv, identity }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// A pair of non-commuting generators, if any.
    pub fn noncommuting_pair(&self) -> Option<(Code, Code)> {
        let gens = self.generators();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                if !self.commute(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    /// Subgroup of this group generated by `gens`.
    pub fn subgroup(&self, gens: &[Code], label: impl Into<String>) -> Result<GroupHandle> {
        if let Some(&x) = gens.iter().find(|&&x| !self.contains(x)) {
            return Err(Error::NotAnElement(x));
        }
        let gens = if gens.is_empty() { vec![self.identity()] } else { gens.to_vec() };
        Self::generated(self.0.ops.clone(), &gens, self.order(), label)
    }

    /// Subgroup generated by `gens`, abandoned once it outgrows `bound`.
    pub fn subgroup_bounded(&self, gens: &[Code], bound: usize) -> Option<GroupHandle> {
        let carrier = close_bounded(self.0.ops.as_ref(), gens, bound).ok()?;
        Some(Self::from_parts(self.0.ops.clone(), carrier, Some(gens.to_vec()), "subgroup"))
    }

    /// Wraps a subset of this group's carrier that is known to be closed.
    pub fn subgroup_from_codes(&self, codes: Vec<Code>, label: impl Into<String>) -> GroupHandle {
        Self::from_parts(self.0.ops.clone(), codes, None, label)
    }

    pub fn is_subgroup_of(&self, other: &GroupHandle) -> bool {
        self.elements().iter().all(|&x| other.contains(x))
    }

    /// Normal in `other` (and contained in it).
    pub fn is_normal_in(&self, other: &GroupHandle) -> bool {
        self.is_subgroup_of(other)
            && other.generators().iter().all(|&g| {
                self.generators().iter().all(|&h| self.contains(other.conj(g, h)))
            })
    }

    /// Conjugate subgroup `g H g^-1`.
    pub fn conjugate(&self, g: Code) -> GroupHandle {
        let codes = self.elements().iter().map(|&h| self.conj(g, h)).collect();
        let gens = self.generators().iter().map(|&h| self.conj(g, h)).collect();
        Self::from_parts(self.0.ops.clone(), codes, Some(gens), self.label())
    }

    pub fn intersection(&self, other: &GroupHandle) -> GroupHandle {
        let codes = self.elements().iter().copied().filter(|&x| other.contains(x)).collect();
        self.subgroup_from_codes(codes, "intersection")
    }

    pub fn same_carrier(&self, other: &GroupHandle) -> bool {
        self.elements() == other.elements()
    }
}

/// Greedy generating set: scan the carrier in code order and keep every
/// element outside the span of those kept so far.
fn greedy_generators(g: &GroupHandle) -> Vec<Code> {
    let id = g.identity();
    if g.order() == 1 {
        return vec![id];
    }
    let mut span: HashSet<Code> = HashSet::from([id]);
    let mut members = vec![id];
    let mut gens = Vec::new();
    for &x in g.elements() {
        if span.contains(&x) {
            continue;
        }
        gens.push(x);
        // Extend the span: everything already present times the new
        // generator, then close under all generators.
        let mut queue: Vec<Code> = members.clone();
        while let Some(e) = queue.pop() {
            for &s in &gens {
                let y = g.mul(e, s);
                if span.insert(y) {
                    members.push(y);
                    queue.push(y);
                }
            }
        }
        if members.len() == g.order() {
            break;
        }
    }
    gens
}
