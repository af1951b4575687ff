use std::sync::Arc;

use super::{Code, GroupHandle, GroupOps};
use crate::error::{Error, Result};

/// Pairs `(a, b)` coded as `a * stride + b`.
struct ProductOps {
    left: Arc<dyn GroupOps>,
    right: Arc<dyn GroupOps>,
    stride: Code,
}

impl ProductOps {
    fn split(&self, x: Code) -> (Code, Code) {
        (x / self.stride, x % self.stride)
    }

    fn join(&self, a: Code, b: Code) -> Code {
        a * self.stride + b
    }
}

impl GroupOps for ProductOps {
    fn identity(&self) -> Code {
        self.join(self.left.identity(), self.right.identity())
    }

    fn mul(&self, x: Code, y: Code) -> Code {
        let ((a, b), (c, d)) = (self.split(x), self.split(y));
        self.join(self.left.mul(a, c), self.right.mul(b, d))
    }

    fn inv(&self, x: Code) -> Code {
        let (a, b) = self.split(x);
        self.join(self.left.inv(a), self.right.inv(b))
    }

    fn describe(&self, x: Code) -> String {
        let (a, b) = self.split(x);
        format!("({}, {})", self.left.describe(a), self.right.describe(b))
    }
}

/// External direct product `G × H`.
pub fn direct_product(g: &GroupHandle, h: &GroupHandle) -> Result<GroupHandle> {
    let stride = h.elements().last().copied().unwrap_or(0) + 1;
    let top = g.elements().last().copied().unwrap_or(0);
    if top.checked_mul(stride).and_then(|v| v.checked_add(stride)).is_none() {
        return Err(Error::InvalidArgument("direct product codes overflow".into()));
    }
    let ops = Arc::new(ProductOps { left: g.ops().clone(), right: h.ops().clone(), stride });
    let carrier: Vec<Code> = g
        .elements()
        .iter()
        .flat_map(|&a| h.elements().iter().map(move |&b| a * stride + b))
        .collect();
    let gens: Vec<Code> = g
        .generators()
        .iter()
        .map(|&a| a * stride + h.identity())
        .chain(h.generators().iter().map(|&b| g.identity() * stride + b))
        .collect();
    let label = format!("{} x {}", g.label(), h.label());
    Ok(GroupHandle::from_parts(ops, carrier, Some(gens), label))
}
