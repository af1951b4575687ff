use super::{Code, GroupHandle};
use crate::error::{Error, Result};

/// Kernel and complement of a Frobenius group.
#[derive(Debug, Clone)]
pub struct FrobeniusDecomposition {
    pub kernel: GroupHandle,
    pub complement: GroupHandle,
}

impl GroupHandle {
    /// Searches for a Frobenius kernel among the normal closures of the
    /// conjugacy class representatives, then for a complement generated by
    /// at most two elements outside the kernel, scanned in code order.
    ///
    /// Returns `Ok(None)` when the group is not a Frobenius group. Failing
    /// to find a complement for a verified kernel is an internal error.
    pub fn frobenius_structure(&self) -> Result<Option<FrobeniusDecomposition>> {
        let n = self.order();
        if n < 2 {
            return Ok(None);
        }
        let classes = self.conjugacy_classes();
        let id = self.identity();
        let mut tried: Vec<GroupHandle> = Vec::new();
        for class in &classes {
            if class.representative == id {
                continue;
            }
            let candidate = self.normal_closure(&[class.representative])?;
            let size = candidate.order();
            if size == n || tried.iter().any(|t| t.same_carrier(&candidate)) {
                continue;
            }
            tried.push(candidate.clone());
            if n % size != 0 || (size - 1) % (n / size) != 0 {
                continue;
            }
            // Centralizers are conjugation-invariant, so one element per
            // G-class inside the candidate suffices.
            let is_kernel = classes
                .iter()
                .filter(|c| c.representative != id && candidate.contains(c.representative))
                .all(|c| {
                    self.elements()
                        .iter()
                        .all(|&g| !self.commute(g, c.representative) || candidate.contains(g))
                });
            if is_kernel {
                let complement = self.find_complement(&candidate)?;
                return Ok(Some(FrobeniusDecomposition {
                    kernel: candidate.with_label("Frobenius kernel"),
                    complement: complement.with_label("Frobenius complement"),
                }));
            }
        }
        Ok(None)
    }

    fn find_complement(&self, kernel: &GroupHandle) -> Result<GroupHandle> {
        let want = self.order() / kernel.order();
        let outside: Vec<Code> =
            self.elements().iter().copied().filter(|&x| !kernel.contains(x)).collect();
        let meets_trivially =
            |h: &GroupHandle| h.elements().iter().filter(|&&x| kernel.contains(x)).count() == 1;
        for (i, &t) in outside.iter().enumerate() {
            let Some(cyc) = self.subgroup_bounded(&[t], want) else { continue };
            if want % cyc.order() != 0 || !meets_trivially(&cyc) {
                continue;
            }
            if cyc.order() == want {
                return Ok(cyc);
            }
            for &u in &outside[i + 1..] {
                if cyc.contains(u) {
                    continue;
                }
                if let Some(h) = self.subgroup_bounded(&[t, u], want) {
                    if h.order() == want && meets_trivially(&h) {
                        return Ok(h);
                    }
                }
            }
        }
        Err(Error::Internal(format!(
            "Frobenius kernel of order {} in {} has no complement of order {want}",
            kernel.order(),
            self.label()
        )))
    }
}
