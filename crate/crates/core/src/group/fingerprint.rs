use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{GroupHandle, StructureProbe};

/// Isomorphism-invariant summary of a group.
///
/// Equal fingerprints mean "same type by fingerprint" only; they are never
/// reported as a proven isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub element_orders: Vec<(usize, usize)>,
    pub class_sizes: Vec<(usize, usize)>,
    pub center_order: usize,
    pub derived_order: usize,
}

impl From<&StructureProbe> for Fingerprint {
    fn from(p: &StructureProbe) -> Self {
        let flat = |m: &BTreeMap<usize, usize>| m.iter().map(|(&k, &v)| (k, v)).collect();
        Fingerprint {
            order: p.order,
            element_orders: flat(&p.element_orders),
            class_sizes: flat(&p.class_sizes),
            center_order: p.center_order,
            derived_order: p.derived_order,
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> =
            self.element_orders.iter().map(|(o, c)| format!("{o}^{c}")).collect();
        write!(
            f,
            "|G|={} |Z|={} |G'|={} orders[{}] classes={}",
            self.order,
            self.center_order,
            self.derived_order,
            orders.join(" "),
            self.class_sizes.iter().map(|(_, c)| c).sum::<usize>()
        )
    }
}

impl GroupHandle {
    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint::from(&self.structure_probe())
    }
}
