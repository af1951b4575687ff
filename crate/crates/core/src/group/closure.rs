use std::collections::HashSet;

use super::{Code, GroupHandle, GroupOps, DEFAULT_GROUP_BOUND};
use crate::error::{Error, Result};

/// Breadth-first closure of `generators` under the default group bound.
/// The returned carrier is sorted by code.
pub fn close(ops: &dyn GroupOps, generators: &[Code]) -> Result<Vec<Code>> {
    close_bounded(ops, generators, DEFAULT_GROUP_BOUND)
}

/// Closure that fails with [`Error::GroupTooLarge`] as soon as more than
/// `bound` elements have been produced.
pub fn close_bounded(ops: &dyn GroupOps, generators: &[Code], bound: usize) -> Result<Vec<Code>> {
    let id = ops.identity();
    let mut seen: HashSet<Code> = HashSet::from([id]);
    let mut order = vec![id];
    let mut head = 0;
    while head < order.len() {
        let e = order[head];
        head += 1;
        for &g in generators {
            let y = ops.mul(e, g);
            if seen.insert(y) {
                order.push(y);
                if order.len() > bound {
                    return Err(Error::GroupTooLarge {
                        order: order.len() as u64,
                        bound: bound as u64,
                    });
                }
            }
        }
    }
    order.sort_unstable();
    Ok(order)
}

impl GroupHandle {
    /// Smallest normal subgroup of this group containing `xs`.
    pub fn normal_closure(&self, xs: &[Code]) -> Result<GroupHandle> {
        if let Some(&x) = xs.iter().find(|&&x| !self.contains(x)) {
            return Err(Error::NotAnElement(x));
        }
        let outer = self.generators().to_vec();
        let id = self.identity();
        let mut gens: Vec<Code> = xs.iter().copied().filter(|&x| x != id).collect();
        let mut seen: HashSet<Code> = HashSet::from([id]);
        let mut members = vec![id];
        loop {
            // Right-multiplication closure; each round at least doubles the
            // span, so the rescans stay cheap.
            let mut i = 0;
            while i < members.len() {
                let e = members[i];
                for &s in &gens {
                    let y = self.mul(e, s);
                    if seen.insert(y) {
                        members.push(y);
                    }
                }
                i += 1;
            }
            let escaped = gens
                .iter()
                .flat_map(|&h| outer.iter().map(move |&g| (g, h)))
                .map(|(g, h)| self.conj(g, h))
                .find(|c| !seen.contains(c));
            match escaped {
                Some(c) => gens.push(c),
                None => break,
            }
        }
        if gens.is_empty() {
            gens.push(id);
        }
        Ok(GroupHandle::from_parts(self.ops().clone(), members, Some(gens), "normal closure"))
    }
}
