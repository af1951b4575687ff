//! Exhaustive subgroup enumeration for small groups.
//!
//! Every subgroup is obtained from a smaller one by joining a cyclic
//! subgroup, so iterating "join with every cyclic subgroup" from the
//! trivial group reaches a fixed point containing all subgroups. Only one
//! representative per conjugacy class is expanded; its conjugates are
//! added directly. If `K = <H, C>` with `H = R^g` for an expanded
//! representative `R`, then `K^(g^-1) = <R, C^(g^-1)>` was produced while
//! expanding `R`, so nothing is missed.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{CayleyTable, Code, GroupHandle};
use crate::error::{Error, Result};

/// Default bound on the order of groups handed to the lattice oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 1200;

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}

#[inline]
fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn set_bit(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn members(b: &Bits) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |k| word >> k & 1 == 1).map(move |k| w * 64 + k)
    })
}

fn is_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Closure of `gens` starting from the already closed `base`.
fn close_indices(t: &CayleyTable, base: &Bits, gens: &[usize]) -> Bits {
    let mut set = base.clone();
    let mut queue: Vec<usize> = members(base).collect();
    if queue.is_empty() {
        set_bit(&mut set, t.identity());
        queue.push(t.identity());
    }
    while let Some(e) = queue.pop() {
        for &g in gens {
            let y = t.mul(e, g);
            if !bit(&set, y) {
                set_bit(&mut set, y);
                queue.push(y);
            }
        }
    }
    set
}

fn conjugate_bits(t: &CayleyTable, b: &Bits, g: usize) -> Bits {
    let mut out = bits_new(t.len());
    for x in members(b) {
        set_bit(&mut out, t.conj(g, x));
    }
    out
}

struct Entry {
    bits: Bits,
    gens: Vec<usize>,
    order: usize,
}

/// All subgroups of a group, sorted by order and then by carrier.
pub struct SubgroupLattice {
    group: GroupHandle,
    entries: Vec<Entry>,
}

impl GroupHandle {
    /// Every subgroup of this group; fails above `bound`.
    pub fn all_subgroups(&self, bound: usize) -> Result<Vec<GroupHandle>> {
        Ok(self.subgroup_lattice(bound)?.subgroups())
    }

    pub fn subgroup_lattice(&self, bound: usize) -> Result<SubgroupLattice> {
        let n = self.order();
        if n > bound {
            return Err(Error::GroupTooLarge { order: n as u64, bound: bound as u64 });
        }
        let t = self.table().ok_or(Error::GroupTooLarge {
            order: n as u64,
            bound: super::TABLE_LIMIT as u64,
        })?;
        let group_gens: Vec<usize> =
            self.generators().iter().map(|&g| self.index_of(g).expect("generator")).collect();

        // One generator per cyclic subgroup.
        let mut cyclic: Vec<usize> = Vec::new();
        let mut seen_cyclic: HashSet<Bits> = HashSet::new();
        let empty = bits_new(n);
        for x in 0..n {
            let c = close_indices(t, &empty, &[x]);
            if seen_cyclic.insert(c) {
                cyclic.push(x);
            }
        }

        let mut index: HashMap<Bits, usize> = HashMap::new();
        let mut entries: Vec<Entry> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();

        let add_class = |bits: Bits,
                             gens: Vec<usize>,
                             index: &mut HashMap<Bits, usize>,
                             entries: &mut Vec<Entry>|
         -> Option<usize> {
            if index.contains_key(&bits) {
                return None;
            }
            let order = members(&bits).count();
            // Orbit of the new subgroup under conjugation by the generators.
            let rep = entries.len();
            let mut stack = vec![(bits.clone(), gens.clone())];
            index.insert(bits.clone(), rep);
            entries.push(Entry { bits, gens, order });
            while let Some((b, gs)) = stack.pop() {
                for &g in &group_gens {
                    let cb = conjugate_bits(t, &b, g);
                    if index.contains_key(&cb) {
                        continue;
                    }
                    let cg: Vec<usize> = gs.iter().map(|&h| t.conj(g, h)).collect();
                    index.insert(cb.clone(), entries.len());
                    entries.push(Entry { bits: cb.clone(), gens: cg.clone(), order });
                    stack.push((cb, cg));
                }
            }
            Some(rep)
        };

        let mut trivial = bits_new(n);
        set_bit(&mut trivial, t.identity());
        if let Some(r) = add_class(trivial, vec![], &mut index, &mut entries) {
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            let (base, base_gens) = (entries[r].bits.clone(), entries[r].gens.clone());
            for &c in &cyclic {
                if bit(&base, c) {
                    continue;
                }
                let mut gens = base_gens.clone();
                gens.push(c);
                let joined = close_indices(t, &base, &gens);
                if let Some(new_rep) = add_class(joined, gens, &mut index, &mut entries) {
                    queue.push_back(new_rep);
                }
            }
        }

        let carrier = self.elements();
        entries.sort_by(|a, b| {
            a.order.cmp(&b.order).then_with(|| {
                members(&a.bits).map(|i| carrier[i]).cmp(members(&b.bits).map(|i| carrier[i]))
            })
        });
        Ok(SubgroupLattice { group: self.clone(), entries })
    }
}

impl SubgroupLattice {
    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn handle(&self, e: &Entry) -> GroupHandle {
        let carrier = self.group.elements();
        let codes: Vec<Code> = members(&e.bits).map(|i| carrier[i]).collect();
        let mut gens: Vec<Code> = e.gens.iter().map(|&i| carrier[i]).collect();
        if gens.is_empty() {
            gens.push(self.group.identity());
        }
        GroupHandle::from_parts(
            self.group.ops().clone(),
            codes,
            Some(gens),
            format!("subgroup of order {}", e.order),
        )
    }

    pub fn subgroups(&self) -> Vec<GroupHandle> {
        self.entries.iter().map(|e| self.handle(e)).collect()
    }

    /// Proper subgroups contained in no other proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<GroupHandle> {
        let n = self.group.order();
        let proper: Vec<&Entry> = self.entries.iter().filter(|e| e.order < n).collect();
        proper
            .iter()
            .filter(|e| {
                !proper.iter().any(|f| {
                    f.order > e.order && f.order % e.order == 0 && is_subset(&e.bits, &f.bits)
                })
            })
            .map(|e| self.handle(e))
            .collect()
    }

    /// Position of `h` in the lattice, if it is one of the listed subgroups.
    pub fn position(&self, h: &GroupHandle) -> Option<usize> {
        let mut b = bits_new(self.group.order());
        for &x in h.elements() {
            set_bit(&mut b, self.group.index_of(x)?);
        }
        self.entries.iter().position(|e| e.bits == b)
    }

    /// Indices of the subgroups conjugate to `h` within the group.
    pub fn conjugates_of(&self, h: &GroupHandle) -> Vec<usize> {
        let Some(t) = self.group.table() else { return vec![] };
        let mut b = bits_new(self.group.order());
        for &x in h.elements() {
            match self.group.index_of(x) {
                Some(i) => set_bit(&mut b, i),
                None => return vec![],
            }
        }
        let mut found: HashSet<Bits> = HashSet::from([b.clone()]);
        let mut stack = vec![b];
        let group_gens: Vec<usize> = self
            .group
            .generators()
            .iter()
            .map(|&g| self.group.index_of(g).expect("generator"))
            .collect();
        while let Some(cur) = stack.pop() {
            for &g in &group_gens {
                let c = conjugate_bits(t, &cur, g);
                if found.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| found.contains(&e.bits))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.entries[i].order
    }

    pub fn subgroup(&self, i: usize) -> GroupHandle {
        self.handle(&self.entries[i])
    }
}
