use super::{Code, GroupHandle};
use crate::arith::r_part;

fn is_power_of(mut n: usize, r: usize) -> bool {
    while n % r == 0 {
        n /= r;
    }
    n == 1
}

impl GroupHandle {
    /// A Sylow `r`-subgroup, grown from an element of maximal `r`-power
    /// order by adjoining normalizing `r`-elements.
    pub fn sylow(&self, r: u64) -> GroupHandle {
        let r = r as usize;
        let target = r_part(self.order() as u64, r as u64) as usize;
        let id = self.identity();
        let label = format!("Sylow {r}-subgroup of {}", self.label());
        if target == 1 {
            return self.subgroup_from_codes(vec![id], label);
        }
        let r_elements: Vec<(Code, usize)> = self
            .elements()
            .iter()
            .map(|&x| (x, self.element_order(x)))
            .filter(|&(_, o)| is_power_of(o, r))
            .collect();
        let start = r_elements
            .iter()
            .max_by_key(|&&(x, o)| (o, std::cmp::Reverse(x)))
            .map(|&(x, _)| x)
            .unwrap_or(id);
        let mut gens = vec![start];
        let mut p = self.subgroup(&gens, "").expect("element of the group");
        while p.order() < target {
            let next = r_elements.iter().map(|&(x, _)| x).find(|&x| {
                !p.contains(x) && p.generators().iter().all(|&h| p.contains(self.conj(x, h)))
            });
            let Some(x) = next else { break };
            gens.push(x);
            p = self.subgroup(&gens, "").expect("element of the group");
        }
        debug_assert!(is_power_of(p.order(), r));
        p.with_label(label)
    }
}
