use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{Code, GroupHandle};
use crate::error::{Error, Result};

/// Carriers above this size are scanned in parallel.
const PAR_THRESHOLD: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Smallest element code in the class.
    pub representative: Code,
    pub size: usize,
}

/// Lazily enumerates conjugacy classes in order of their representatives.
///
/// The first unvisited carrier element is always the smallest code of its
/// class, since the carrier is sorted.
pub struct ClassIter<'a> {
    group: &'a GroupHandle,
    visited: Vec<bool>,
    next: usize,
}

impl<'a> ClassIter<'a> {
    fn new(group: &'a GroupHandle) -> Self {
        ClassIter { group, visited: vec![false; group.order()], next: 0 }
    }
}

impl Iterator for ClassIter<'_> {
    type Item = ConjugacyClass;

    fn next(&mut self) -> Option<ConjugacyClass> {
        while self.next < self.visited.len() && self.visited[self.next] {
            self.next += 1;
        }
        if self.next >= self.visited.len() {
            return None;
        }
        let g = self.group;
        let start = self.next;
        let rep = g.elements()[start];
        let gens = g.generators();
        self.visited[start] = true;
        let mut stack = vec![rep];
        let mut size = 1;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = g.conj(s, x);
                let i = g.index_of(y).expect("carrier is closed under conjugation");
                if !self.visited[i] {
                    self.visited[i] = true;
                    size += 1;
                    stack.push(y);
                }
            }
        }
        Some(ConjugacyClass { representative: rep, size })
    }
}

/// Summary invariants of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureProbe {
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub is_abelian: bool,
    pub is_perfect: bool,
    /// Element order -> number of elements of that order.
    pub element_orders: BTreeMap<usize, usize>,
    /// Class size -> number of classes of that size.
    pub class_sizes: BTreeMap<usize, usize>,
}

impl GroupHandle {
    pub fn class_iter(&self) -> ClassIter<'_> {
        ClassIter::new(self)
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        self.class_iter().collect()
    }

    /// Elements commuting with `x`, in code order.
    pub fn centralizer(&self, x: Code) -> Result<GroupHandle> {
        if !self.contains(x) {
            return Err(Error::NotAnElement(x));
        }
        let keep = |&&g: &&Code| self.commute(g, x);
        let codes: Vec<Code> = if self.order() >= PAR_THRESHOLD {
            self.elements().par_iter().filter(keep).copied().collect()
        } else {
            self.elements().iter().filter(keep).copied().collect()
        };
        Ok(self.subgroup_from_codes(codes, format!("C({})", self.describe(x))))
    }

    /// True when `x` commutes with every generator.
    pub fn is_central(&self, x: Code) -> bool {
        self.generators().iter().all(|&g| self.commute(g, x))
    }

    pub fn center(&self) -> GroupHandle {
        let gens = self.generators();
        let keep = |&&x: &&Code| gens.iter().all(|&g| self.commute(g, x));
        let codes: Vec<Code> = if self.order() >= PAR_THRESHOLD {
            self.elements().par_iter().filter(keep).copied().collect()
        } else {
            self.elements().iter().filter(keep).copied().collect()
        };
        self.subgroup_from_codes(codes, format!("Z({})", self.label()))
    }

    /// Commutator `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: Code, b: Code) -> Code {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// Derived subgroup: the normal closure of the commutators of the
    /// generators.
    pub fn derived_subgroup(&self) -> GroupHandle {
        let gens = self.generators();
        let comms: Vec<Code> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.normal_closure(&comms)
            .expect("commutators lie in the group")
            .with_label(format!("{}'", self.label()))
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    pub fn structure_probe(&self) -> StructureProbe {
        let order = self.order();
        let center_order = self.center().order();
        let derived_order = self.derived_subgroup().order();
        let mut element_orders = BTreeMap::new();
        for &x in self.elements() {
            *element_orders.entry(self.element_order(x)).or_insert(0) += 1;
        }
        let mut class_sizes = BTreeMap::new();
        for c in self.class_iter() {
            *class_sizes.entry(c.size).or_insert(0) += 1;
        }
        StructureProbe {
            order,
            center_order,
            derived_order,
            is_abelian: center_order == order,
            is_perfect: derived_order == order,
            element_orders,
            class_sizes,
        }
    }
}
