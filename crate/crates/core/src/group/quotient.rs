use std::sync::Arc;

use super::{Code, GroupHandle, GroupOps};
use crate::error::{Error, Result};

/// Coset multiplication: a coset is named by its smallest member code.
struct CosetOps {
    parent: Arc<dyn GroupOps>,
    parent_codes: Vec<Code>,
    rep_of: Vec<Code>,
    identity: Code,
}

impl CosetOps {
    #[inline]
    fn project(&self, x: Code) -> Code {
        let i = self.parent_codes.binary_search(&x).expect("element of the parent group");
        self.rep_of[i]
    }
}

impl GroupOps for CosetOps {
    fn identity(&self) -> Code {
        self.identity
    }

    fn mul(&self, a: Code, b: Code) -> Code {
        self.project(self.parent.mul(a, b))
    }

    fn inv(&self, a: Code) -> Code {
        self.project(self.parent.inv(a))
    }

    fn describe(&self, a: Code) -> String {
        format!("[{}]", self.parent.describe(a))
    }
}

/// A quotient group `G/N` together with its projection from `G`.
#[derive(Clone)]
pub struct Quotient {
    pub group: GroupHandle,
    parent: GroupHandle,
    ops: Arc<CosetOps>,
}

impl Quotient {
    /// Image of an element of the parent group.
    pub fn project(&self, x: Code) -> Code {
        self.ops.project(x)
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, sub: &GroupHandle) -> GroupHandle {
        let codes = self
            .parent
            .elements()
            .iter()
            .copied()
            .filter(|&x| sub.contains(self.project(x)))
            .collect();
        self.parent.subgroup_from_codes(codes, format!("preimage of {}", sub.label()))
    }

    pub fn parent(&self) -> &GroupHandle {
        &self.parent
    }
}

impl GroupHandle {
    /// The coset group `self / normal`.
    pub fn quotient(&self, normal: &GroupHandle) -> Result<GroupHandle> {
        Ok(self.quotient_map(normal)?.group)
    }

    pub fn quotient_map(&self, normal: &GroupHandle) -> Result<Quotient> {
        if !normal.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        if !normal.is_normal_in(self) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut rep_of: Vec<Option<Code>> = vec![None; n];
        let mut reps = Vec::with_capacity(n / normal.order());
        for (i, &g) in self.elements().iter().enumerate() {
            if rep_of[i].is_some() {
                continue;
            }
            reps.push(g);
            for &h in normal.elements() {
                let j = self.index_of(self.mul(g, h)).expect("carrier is closed");
                rep_of[j] = Some(g);
            }
        }
        let rep_of: Vec<Code> = rep_of.into_iter().map(|r| r.expect("cosets cover")).collect();
        let identity = rep_of[self.index_of(self.identity()).expect("identity")];
        let ops = Arc::new(CosetOps {
            parent: self.ops().clone(),
            parent_codes: self.elements().to_vec(),
            rep_of,
            identity,
        });
        let mut gens: Vec<Code> = self.generators().iter().map(|&g| ops.project(g)).collect();
        gens.sort_unstable();
        gens.dedup();
        let label = format!("{}/{}", self.label(), normal.label());
        let group = GroupHandle::from_parts(ops.clone(), reps, Some(gens), label);
        Ok(Quotient { group, parent: self.clone(), ops })
    }
}
