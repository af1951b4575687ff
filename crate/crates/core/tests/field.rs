use ca_forge::field::FieldOp;
use ca_forge::{Error, FieldCtx, FieldElem};
use proptest::prelude::*;

const SMALL: [(u64, u32); 12] =
    [(2, 1), (3, 1), (7, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6), (3, 4)];

// Naive polynomial arithmetic over GF(p), constant term first.

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    let lead_inv = (1..p).find(|x| x * f[df] % p == 1).unwrap();
    while r.len() > df {
        let top = *r.last().unwrap();
        if top != 0 {
            let k = top * lead_inv % p;
            let shift = r.len() - 1 - df;
            for (i, &c) in f.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - k * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn digits(code: u64, p: u64, m: u32) -> Vec<u64> {
    let mut c = code;
    (0..m)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Irreducible iff no monic divisor of degree 1..=deg/2.
fn irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// First irreducible monic polynomial of degree m, scanning the
/// non-leading coefficients as a base-p counter.
fn first_irreducible(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    (0..p.pow(m))
        .map(|low| {
            let mut f = digits(low, p, m);
            f.push(1);
            f
        })
        .find(|f| f[0] != 0 && irreducible(f, p))
        .unwrap()
}

fn ctx(p: u64, m: u32) -> FieldCtx {
    FieldCtx::new(p, m).unwrap()
}

#[test]
fn modulus_examples() {
    assert_eq!(ctx(7, 1).modulus(), &[0, 1]);
    assert_eq!(ctx(3, 2).modulus(), &[1, 0, 1]);
    assert_eq!(ctx(2, 3).modulus(), &[1, 1, 0, 1]);
}

#[test]
fn modulus_matches_scan_oracle() {
    for (p, m) in SMALL {
        let want: Vec<u32> = first_irreducible(p, m).iter().map(|&c| c as u32).collect();
        assert_eq!(ctx(p, m).modulus(), want.as_slice(), "GF({p}^{m})");
    }
}

#[test]
fn multiplication_matches_polynomial_oracle() {
    for (p, m) in SMALL {
        let f = ctx(p, m);
        let modulus: Vec<u64> = f.modulus().iter().map(|&c| c as u64).collect();
        let q = f.q() as u64;
        for a in 0..q {
            for b in 0..q {
                let prod = poly_rem(&poly_mul(&digits(a, p, m), &digits(b, p, m), p), &modulus, p);
                let mut prod = prod;
                prod.resize(m as usize, 0);
                let got = f.mul(f.elem(a as u32).unwrap(), f.elem(b as u32).unwrap());
                assert_eq!(got.code() as u64, undigits(&prod, p), "GF({q}): {a} * {b}");
                let sum: Vec<u64> =
                    digits(a, p, m).iter().zip(digits(b, p, m)).map(|(x, y)| (x + y) % p).collect();
                let got = f.add(f.elem(a as u32).unwrap(), f.elem(b as u32).unwrap());
                assert_eq!(got.code() as u64, undigits(&sum, p));
            }
        }
    }
}

#[test]
fn arithmetic_examples() {
    let f7 = ctx(7, 1);
    let e = |f: &FieldCtx, c| f.elem(c).unwrap();
    assert_eq!(f7.mul(e(&f7, 3), e(&f7, 5)), FieldElem::ONE);
    let f9 = ctx(3, 2);
    assert_eq!(f9.mul(e(&f9, 3), e(&f9, 3)).code(), 2);
    for a in f9.elements() {
        assert_eq!(f9.mul(a, FieldElem::ONE), a);
    }
    assert_eq!(f7.arith(FieldOp::Inv, FieldElem::ZERO, None), Err(Error::DivisionByZero { q: 7 }));
    assert_eq!(f7.arith(FieldOp::Neg, e(&f7, 3), None).unwrap().code(), 4);
    assert!(f7.arith(FieldOp::Add, e(&f7, 3), None).is_err());
    assert!(f7.elem(7).is_err());
}

#[test]
fn field_axioms_exhaustive() {
    for (p, m) in [(2, 3), (3, 2), (5, 1), (2, 4)] {
        let f = ctx(p, m);
        let els: Vec<FieldElem> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
            }
            // (GF(q), +) has exponent p.
            let mut s = FieldElem::ZERO;
            for _ in 0..p {
                s = f.add(s, a);
            }
            assert_eq!(s, FieldElem::ZERO);
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                }
            }
        }
    }
}

#[test]
fn frobenius_is_an_automorphism() {
    for (p, m) in [(2, 5), (3, 4), (5, 3), (7, 2), (2, 7), (13, 1)] {
        let f = ctx(p, m);
        let frob = |x| f.pow(x, p);
        let mut image: Vec<u32> = f.elements().map(|x| frob(x).code()).collect();
        image.sort_unstable();
        assert!(image.iter().enumerate().all(|(i, &c)| i as u32 == c));
        for a in f.elements() {
            for b in f.elements().step_by(3) {
                assert_eq!(frob(f.add(a, b)), f.add(frob(a), frob(b)));
                assert_eq!(frob(f.mul(a, b)), f.mul(frob(a), frob(b)));
            }
        }
    }
}

#[test]
fn frobenius_exhaustive_on_large_table_free_field() {
    // q = 2^14 uses exp/log multiplication and digit-wise addition.
    let f = ctx(2, 14);
    let sq = |x| f.mul(x, x);
    let mut seen = vec![false; f.q() as usize];
    for a in f.elements() {
        let s = sq(a);
        assert!(!seen[s.code() as usize]);
        seen[s.code() as usize] = true;
        let b = f.elem(a.code().wrapping_mul(2654435761) % f.q()).unwrap();
        assert_eq!(sq(f.add(a, b)), f.add(s, sq(b)));
        assert_eq!(sq(f.mul(a, b)), f.mul(s, sq(b)));
    }
}

#[test]
fn square_counts_and_roots() {
    for (p, m) in SMALL {
        let f = ctx(p, m);
        let squares = f.elements().filter(|&x| !x.is_zero() && f.is_square(x)).count() as u32;
        let want = if p == 2 { f.q() - 1 } else { (f.q() - 1) / 2 };
        assert_eq!(squares, want);
        for a in f.elements() {
            let info = f.square_info(a);
            if let Some(r) = info.root {
                assert_eq!(f.mul(r, r), a);
                let smallest = f.elements().find(|&y| f.mul(y, y) == a).unwrap();
                assert_eq!(r, smallest);
            } else {
                assert!(f.elements().all(|y| f.mul(y, y) != a));
            }
        }
    }
    let f11 = ctx(11, 1);
    let info = f11.square_info(f11.elem(5).unwrap());
    assert_eq!((info.is_square, info.root.map(|r| r.code())), (true, Some(4)));
    let f7 = ctx(7, 1);
    assert!(!f7.square_info(f7.elem(3).unwrap()).is_square);
    assert_eq!(f7.square_info(FieldElem::ZERO).root, Some(FieldElem::ZERO));
}

#[test]
fn subfields() {
    let codes = |v: Vec<FieldElem>| v.iter().map(|x| x.code()).collect::<Vec<_>>();
    assert_eq!(codes(ctx(3, 2).subfield(1).unwrap()), vec![0, 1, 2]);
    assert_eq!(codes(ctx(2, 3).subfield(1).unwrap()), vec![0, 1]);
    assert_eq!(ctx(2, 4).subfield(2).unwrap().len(), 4);
    assert_eq!(ctx(3, 3).subfield(3).unwrap().len(), 27);
    assert_eq!(ctx(2, 4).subfield(3), Err(Error::NotADivisor { n: 3, m: 4 }));
    // A subfield is closed under both operations.
    let f = ctx(2, 6);
    let sub = f.subfield(3).unwrap();
    for &a in &sub {
        for &b in &sub {
            assert!(sub.contains(&f.add(a, b)) && sub.contains(&f.mul(a, b)));
        }
    }
}

#[test]
fn construction_errors() {
    assert_eq!(FieldCtx::new(6, 1).unwrap_err(), Error::NotPrime(6));
    assert_eq!(FieldCtx::new(3, 0).unwrap_err(), Error::ZeroDegree);
    assert!(matches!(FieldCtx::new(2, 21), Err(Error::FieldTooLarge { .. })));
    assert!(FieldCtx::new(2, 21).unwrap_err().is_resource_bound());
    assert!(FieldCtx::with_bound(2, 21, 1 << 21).is_ok());
}

#[test]
fn construction_is_deterministic() {
    for (p, m) in SMALL {
        let (a, b) = (ctx(p, m), ctx(p, m));
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.primitive_element(), b.primitive_element());
    }
}

#[test]
fn primitive_element_generates() {
    for (p, m) in SMALL {
        let f = ctx(p, m);
        let g = f.primitive_element();
        assert_eq!(f.mult_order(g), Some(f.q() - 1));
        // Smallest such code.
        let first = f.elements().find(|&x| f.mult_order(x) == Some(f.q() - 1)).unwrap();
        assert_eq!(g, first);
    }
}

proptest! {
    #[test]
    fn inverse_and_division(a in 1u32..729, b in 1u32..729) {
        let f = ctx(3, 6);
        let (a, b) = (f.elem(a).unwrap(), f.elem(b).unwrap());
        let d = f.div(a, b).unwrap();
        prop_assert_eq!(f.mul(d, b), a);
        prop_assert_eq!(f.inv(f.inv(a).unwrap()).unwrap(), a);
    }

    #[test]
    fn pow_adds_exponents(a in 0u32..1024, e1 in 0u64..5000, e2 in 0u64..5000) {
        let f = ctx(2, 10);
        let a = f.elem(a).unwrap();
        prop_assert_eq!(f.mul(f.pow(a, e1), f.pow(a, e2)), f.pow(a, e1 + e2));
    }

    #[test]
    fn coefficient_round_trip(code in 0u32..3125) {
        let f = ctx(5, 5);
        let x = f.elem(code).unwrap();
        prop_assert_eq!(f.from_coefficients(&f.coefficients(x)).unwrap(), x);
    }
}
