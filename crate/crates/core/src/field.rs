//! Exact arithmetic in GF(p^m).
//!
//! Elements are encoded as integers in `[0, q)`: the coefficient vector of
//! the residue polynomial, read in base `p` with the constant term as the
//! least significant digit. Code 0 is zero and code 1 is one.
//!
//! The modulus is the smallest irreducible monic polynomial of degree `m`
//! when coefficient vectors (constant term first) are read as base-`p`
//! numbers, i.e. compared from the highest non-leading coefficient down.
//! Multiplication goes through full Cayley tables for small fields and
//! exp/log tables otherwise.

use std::fmt;

use serde::Serialize;

use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};

/// Default upper bound on `q`.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

/// Fields up to this size carry full addition and multiplication tables.
const TABLE_LIMIT: u32 = 256;

/// An element of a finite field, identified by its code.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    /// Wraps a code without range checking.
    pub(crate) fn from_raw(code: u32) -> Self {
        FieldElem(code)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Result of a square-root query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareInfo {
    pub is_square: bool,
    /// The root with the smaller code, when one exists.
    pub root: Option<FieldElem>,
}

/// A concrete finite field GF(p^m).
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: FieldElem,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldCtx {
    /// Builds GF(p^m) under the default bound.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_bound(p, m, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(p: u64, m: u32, bound: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = match p.checked_pow(m) {
            Some(q) if q <= bound && q <= u32::MAX as u64 => q,
            _ => return Err(Error::FieldTooLarge { p, m, bound }),
        };
        let (p, q) = (p as u32, q as u32);
        let modulus = smallest_irreducible(p, m);
        let poly = PolyRing { p, m, modulus: &modulus };

        let primitive = find_primitive(&poly, q);
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = poly.mul(x, primitive);
        }
        let neg = (0..q).map(|a| poly.neg(a)).collect();

        let mut ctx = FieldCtx {
            p,
            m,
            q,
            modulus,
            primitive: FieldElem(primitive),
            exp,
            log,
            neg,
            add_table: None,
            mul_table: None,
        };
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..q {
                for b in 0..q {
                    let i = a as usize * n + b as usize;
                    add[i] = ctx.add_digits(a, b);
                    mul[i] = ctx.mul_log(a, b);
                }
            }
            ctx.add_table = Some(add);
            ctx.mul_table = Some(mul);
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first; length `m + 1`, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The multiplicative generator with the smallest code.
    pub fn primitive_element(&self) -> FieldElem {
        self.primitive
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    pub fn elem(&self, code: u32) -> Result<FieldElem> {
        if code < self.q {
            Ok(FieldElem(code))
        } else {
            Err(Error::InvalidElement { code, q: self.q })
        }
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    /// The element `c` of the prime field.
    pub fn from_int(&self, c: i64) -> FieldElem {
        FieldElem(c.rem_euclid(self.p as i64) as u32)
    }

    /// Coefficient vector of `a`, constant term first.
    pub fn coefficients(&self, a: FieldElem) -> Vec<u32> {
        let mut c = a.0;
        (0..self.m)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "coefficient vector {coeffs:?} does not describe an element of GF({})",
                self.q
            )));
        }
        let code = coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c);
        Ok(FieldElem(code))
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.add_table {
            Some(t) => FieldElem(t[(a.0 * self.q + b.0) as usize]),
            None => FieldElem(self.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.mul_table {
            Some(t) => FieldElem(t[(a.0 * self.q + b.0) as usize]),
            None => FieldElem(self.mul_log(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero { q: self.q });
        }
        Ok(self.inv_nonzero(a))
    }

    /// Inverse of a nonzero element. Panics on zero.
    #[inline]
    pub fn inv_nonzero(&self, a: FieldElem) -> FieldElem {
        assert!(!a.is_zero(), "inverse of zero in GF({})", self.q);
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        FieldElem(self.exp[((order - l) % order) as usize])
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        FieldElem(self.exp[((l * (e % order)) % order) as usize])
    }

    /// Discrete logarithm to the base of [`Self::primitive_element`].
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// Uniform dispatch over the four field operations.
    pub fn arith(&self, op: FieldOp, a: FieldElem, b: Option<FieldElem>) -> Result<FieldElem> {
        for x in std::iter::once(a).chain(b) {
            self.elem(x.0)?;
        }
        let rhs = || {
            b.ok_or_else(|| Error::InvalidArgument(format!("{op:?} needs two operands")))
        };
        match op {
            FieldOp::Add => Ok(self.add(a, rhs()?)),
            FieldOp::Mul => Ok(self.mul(a, rhs()?)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }

    /// Decides whether `a` is a square and returns its smaller root.
    pub fn square_info(&self, a: FieldElem) -> SquareInfo {
        if a.is_zero() {
            return SquareInfo { is_square: true, root: Some(FieldElem::ZERO) };
        }
        let l = self.log[a.0 as usize];
        let order = self.q - 1;
        if self.p == 2 {
            // Squaring is a bijection; the root is a^(q/2).
            let root = self.pow(a, (self.q / 2) as u64);
            return SquareInfo { is_square: true, root: Some(root) };
        }
        if l % 2 == 1 {
            return SquareInfo { is_square: false, root: None };
        }
        let r = FieldElem(self.exp[((l / 2) % order) as usize]);
        let root = r.min(self.neg(r));
        SquareInfo { is_square: true, root: Some(root) }
    }

    pub fn is_square(&self, a: FieldElem) -> bool {
        self.square_info(a).is_square
    }

    /// The subfield GF(p^n): fixed points of `x -> x^(p^n)`, in code order.
    pub fn subfield(&self, n: u32) -> Result<Vec<FieldElem>> {
        if n == 0 || self.m % n != 0 {
            return Err(Error::NotADivisor { n, m: self.m });
        }
        let frob = (self.p as u64).pow(n);
        Ok(self.elements().filter(|&x| self.pow(x, frob) == x).collect())
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FieldElem) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / crate::arith::gcd(l as u64, n as u64) as u32)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul_log(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order as u64;
        self.exp[s as usize]
    }
}

/// Polynomial arithmetic over GF(p) on element codes, used only while
/// building the tables.
struct PolyRing<'a> {
    p: u32,
    m: u32,
    modulus: &'a [u32],
}

impl PolyRing<'_> {
    fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self.digits(a).iter().map(|&c| (self.p - c) % self.p).collect();
        self.encode(&d)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (p, m) = (self.p as u64, self.m as usize);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce with the monic modulus from the top degree down.
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for k in 0..m {
                let sub = c * self.modulus[k] as u64 % p;
                prod[deg - m + k] = (prod[deg - m + k] + p - sub) % p;
            }
        }
        let out: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.encode(&out)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn find_primitive(poly: &PolyRing<'_>, q: u32) -> u32 {
    let order = (q - 1) as u64;
    let primes = prime_divisors(order);
    (1..q)
        .find(|&g| primes.iter().all(|&l| poly.pow(g, order / l) != 1))
        .expect("the multiplicative group of a finite field is cyclic")
}

/// Remainder of `num` modulo the monic `den` over GF(p); both constant first.
fn poly_rem(p: u32, num: &[u32], den: &[u32]) -> Vec<u32> {
    let mut r: Vec<u32> = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (k, &c) in den.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomials of degree `d` over GF(p), constant term first.
fn monic_polys(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = p.pow(d);
    (0..count).map(move |mut t| {
        let mut v: Vec<u32> = (0..d)
            .map(|_| {
                let c = t % p;
                t /= p;
                c
            })
            .collect();
        v.push(1);
        v
    })
}

/// Irreducibility by trial division against every monic polynomial of
/// degree at most `deg / 2`.
pub(crate) fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = (f.len() - 1) as u32;
    (1..=deg / 2).all(|d| {
        monic_polys(p, d).all(|g| poly_rem(p, f, &g).iter().any(|&c| c != 0))
    })
}

/// The smallest irreducible monic polynomial of degree `m`, ordering
/// candidates by the base-`p` value of their coefficient vector (constant
/// term least significant).
fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    monic_polys(p, m)
        .find(|f| f[0] != 0 && is_irreducible(p, f))
        .expect("irreducible polynomials exist in every degree")
}
