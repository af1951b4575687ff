//! Permutation groups on at most 16 points.
//!
//! A permutation is coded by packing the image of point `i` into bits
//! `4i..4i+4`. Points are 0-based internally; [`PermOps::from_cycles`]
//! takes the usual 1-based cycle notation. Products compose left to right:
//! `(a * b)(x) = b(a(x))`.

use std::sync::Arc;

use super::{Code, GroupHandle, GroupOps};
use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 16;

#[derive(Debug, Clone, Copy)]
pub struct PermOps {
    degree: usize,
}

impl PermOps {
    pub fn new(degree: usize) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidArgument(format!(
                "permutation degree {degree} outside 1..={MAX_DEGREE}"
            )));
        }
        Ok(PermOps { degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn encode(&self, images: &[usize]) -> Code {
        images.iter().enumerate().fold(0, |acc, (i, &v)| acc | (v as Code) << (4 * i))
    }

    pub fn decode(&self, code: Code) -> Vec<usize> {
        (0..self.degree).map(|i| ((code >> (4 * i)) & 0xf) as usize).collect()
    }

    #[inline]
    fn image(code: Code, i: usize) -> usize {
        ((code >> (4 * i)) & 0xf) as usize
    }

    /// Parses 1-based cycles, e.g. `[[1, 2], [3, 4, 5]]`.
    pub fn from_cycles(&self, cycles: &[&[usize]]) -> Result<Code> {
        let mut images: Vec<usize> = (0..self.degree).collect();
        let mut used = vec![false; self.degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > self.degree || used[pt - 1] {
                    return Err(Error::InvalidArgument(format!("bad cycle {cycle:?}")));
                }
                used[pt - 1] = true;
                images[pt - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(self.encode(&images))
    }

    pub fn from_images(&self, images: &[usize]) -> Result<Code> {
        let mut sorted = images.to_vec();
        sorted.sort_unstable();
        if images.len() != self.degree || sorted.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
        }
        Ok(self.encode(images))
    }

    pub fn group(self, gens: &[Code], label: impl Into<String>) -> Result<GroupHandle> {
        GroupHandle::generated(Arc::new(self), gens, usize::MAX, label)
    }
}

impl GroupOps for PermOps {
    fn identity(&self) -> Code {
        let id: Vec<usize> = (0..self.degree).collect();
        self.encode(&id)
    }

    fn mul(&self, a: Code, b: Code) -> Code {
        (0..self.degree).fold(0, |acc, i| {
            acc | (Self::image(b, Self::image(a, i)) as Code) << (4 * i)
        })
    }

    fn inv(&self, a: Code) -> Code {
        (0..self.degree).fold(0, |acc, i| acc | (i as Code) << (4 * Self::image(a, i)))
    }

    fn describe(&self, a: Code) -> String {
        let images = self.decode(a);
        let mut seen = vec![false; self.degree];
        let mut out = String::new();
        for start in 0..self.degree {
            if seen[start] || images[start] == start {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut x = images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x + 1);
                x = images[x];
            }
            let parts: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("({})", parts.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

fn perm_group(degree: usize, cycles: &[&[&[usize]]], label: &str) -> Result<GroupHandle> {
    let ops = PermOps::new(degree)?;
    let gens = cycles.iter().map(|c| ops.from_cycles(c)).collect::<Result<Vec<_>>>()?;
    ops.group(&gens, label)
}

pub fn cyclic(n: usize) -> Result<GroupHandle> {
    if n == 1 {
        return perm_group(1, &[&[]], "C1");
    }
    let cycle: Vec<usize> = (1..=n).collect();
    perm_group(n, &[&[&cycle]], &format!("C{n}"))
}

/// Dihedral group of order `2n` acting on an `n`-gon (`n >= 3`).
pub fn dihedral(n: usize) -> Result<GroupHandle> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("dihedral needs n >= 3, got {n}")));
    }
    let rot: Vec<usize> = (1..=n).collect();
    let pairs: Vec<Vec<usize>> = (2..=n).map(|i| vec![i, n + 2 - i]).filter(|p| p[0] < p[1]).collect();
    let refl: Vec<&[usize]> = pairs.iter().map(|p| p.as_slice()).collect();
    perm_group(n, &[&[&rot], &refl], &format!("D{}", 2 * n))
}

pub fn symmetric(n: usize) -> Result<GroupHandle> {
    if n == 1 {
        return cyclic(1).map(|g| g.with_label("Sym(1)"));
    }
    let cycle: Vec<usize> = (1..=n).collect();
    perm_group(n, &[&[&[1, 2]], &[&cycle]], &format!("Sym({n})"))
}

pub fn alternating(n: usize) -> Result<GroupHandle> {
    if n < 3 {
        return cyclic(1).map(|g| g.with_label(format!("Alt({n})")));
    }
    let gens: Vec<Vec<usize>> = (3..=n).map(|k| vec![1, 2, k]).collect();
    let cycles: Vec<[&[usize]; 1]> = gens.iter().map(|c| [c.as_slice()]).collect();
    let refs: Vec<&[&[usize]]> = cycles.iter().map(|c| c.as_slice()).collect();
    perm_group(n, &refs, &format!("Alt({n})"))
}

/// Quaternion group in its regular representation.
pub fn quaternion() -> Result<GroupHandle> {
    perm_group(
        8,
        &[&[&[1, 2, 3, 4], &[5, 6, 7, 8]], &[&[1, 5, 3, 7], &[2, 8, 4, 6]]],
        "Q8",
    )
}

/// `C5 ⋊ C4`, the affine group of GF(5).
pub fn frobenius_20() -> Result<GroupHandle> {
    perm_group(5, &[&[&[1, 2, 3, 4, 5]], &[&[2, 3, 5, 4]]], "F20")
}

/// `Sym(3) wr C2` inside Sym(6).
pub fn sym3_wr_c2() -> Result<GroupHandle> {
    perm_group(6, &[&[&[1, 2]], &[&[1, 2, 3]], &[&[1, 4], &[2, 5], &[3, 6]]], "S3 wr C2")
}

/// The affine Frobenius group `C3^2 ⋊ Q8` on the nine points of GF(3)^2.
pub fn frobenius_72() -> Result<GroupHandle> {
    let ops = PermOps::new(9)?;
    let point = |x: i64, y: i64| (x.rem_euclid(3) * 3 + y.rem_euclid(3)) as usize;
    let affine = |m: [[i64; 2]; 2], t: [i64; 2]| -> Result<Code> {
        let images: Vec<usize> = (0..9)
            .map(|pt| {
                let (x, y) = ((pt / 3) as i64, (pt % 3) as i64);
                point(m[0][0] * x + m[0][1] * y + t[0], m[1][0] * x + m[1][1] * y + t[1])
            })
            .collect();
        ops.from_images(&images)
    };
    let gens = vec![
        affine([[1, 0], [0, 1]], [1, 0])?,
        affine([[0, 1], [-1, 0]], [0, 0])?,
        affine([[1, 1], [1, -1]], [0, 0])?,
    ];
    ops.group(&gens, "C3^2:Q8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        let ops = PermOps::new(4).unwrap();
        let a = ops.from_cycles(&[&[1, 2]]).unwrap();
        let b = ops.from_cycles(&[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(ops.describe(a), "(1 2)");
        assert_eq!(ops.describe(ops.mul(a, ops.inv(a))), "()");
        // (1 2) then (1 2 3 4): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 4, 4 -> 1.
        assert_eq!(ops.describe(ops.mul(a, b)), "(1 3 4)");
        assert!(ops.from_cycles(&[&[1, 5]]).is_err());
        assert!(ops.from_cycles(&[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn named_orders() {
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(quaternion().unwrap().order(), 8);
        assert_eq!(frobenius_20().unwrap().order(), 20);
        assert_eq!(sym3_wr_c2().unwrap().order(), 72);
        assert_eq!(frobenius_72().unwrap().order(), 72);
        assert_eq!(cyclic(1).unwrap().order(), 1);
    }
}
