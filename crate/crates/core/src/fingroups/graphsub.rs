use std::collections::BTreeSet;
use std::rc::Rc;

use super::{FinGroup, GSetAction, GroupError, Permutation};

/// Hard cap on `|G x Sigma_n|` for subgroup enumeration.
pub const SUBGROUP_ENUMERATION_BOUND: usize = 100;

/// A subgroup of `G x Sigma_n` that intersects `Sigma_n` trivially,
/// equivalently the graph of a homomorphism from a subgroup of `G` into
/// `Sigma_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GraphSubgroup {
    pub n: usize,
    /// Sorted `(g, sigma)` pairs, closed under multiplication.
    pub elements: Vec<(usize, Permutation)>,
}

impl GraphSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The permutation paired with `g`, if `g` lies in the projected subgroup.
    pub fn sigma_for(&self, g: usize) -> Option<&Permutation> {
        self.elements.iter().find(|(h, _)| *h == g).map(|(_, s)| s)
    }

    /// Graph subgroups project injectively to `G`.
    pub fn is_graph_of_homomorphism(&self) -> bool {
        let firsts: BTreeSet<usize> = self.elements.iter().map(|(g, _)| *g).collect();
        firsts.len() == self.elements.len()
    }
}

/// All subgroups of `group`, each as a sorted element list.  Breadth-first
/// closure over generators; fine at desk scale.
pub fn subgroups(group: &FinGroup) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
    while let Some(h) = frontier.pop() {
        for g in group.elements() {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(g);
            let closed = close_under_mult(group, &gens);
            if found.insert(closed.clone()) {
                frontier.push(closed);
            }
        }
    }
    found.into_iter().collect()
}

fn close_under_mult(group: &FinGroup, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(0);
    loop {
        let mut added = false;
        let cur: Vec<usize> = set.iter().copied().collect();
        for &a in &cur {
            for &b in &cur {
                if set.insert(group.mul(a, b)) {
                    added = true;
                }
            }
        }
        if !added {
            return set.into_iter().collect();
        }
    }
}

/// All subgroups of `G x Sigma_n` whose intersection with `{e} x Sigma_n` is
/// trivial, sorted canonically.
pub fn graph_subgroups(group: &Rc<FinGroup>, n: usize) -> Result<Vec<GraphSubgroup>, GroupError> {
    let perms = Permutation::all(n);
    let total = group.order() * perms.len();
    if total > SUBGROUP_ENUMERATION_BOUND {
        return Err(GroupError::SubgroupBound(total, SUBGROUP_ENUMERATION_BOUND));
    }
    let sym = FinGroup::symmetric(n);
    let product = FinGroup::product(group, &sym);
    let decode = |x: usize| (x / sym.order(), x % sym.order());
    let mut out = Vec::new();
    for sub in subgroups(&product) {
        let trivial_intersection =
            sub.iter().all(|&x| { let (g, s) = decode(x); g != 0 || s == 0 });
        if trivial_intersection {
            let elements = sub
                .iter()
                .map(|&x| { let (g, s) = decode(x); (g, perms[s].clone()) })
                .collect();
            out.push(GraphSubgroup { n, elements });
        }
    }
    out.sort();
    Ok(out)
}

/// Graph subgroups induced by the subgroups of `G` itself through an action
/// `alpha`, i.e. the graphs `{(h, alpha(h))}`.
pub fn graph_of_action(action: &GSetAction, subgroup: &[usize]) -> GraphSubgroup {
    let elements = subgroup.iter().map(|&h| (h, action.perm(h).clone())).collect();
    GraphSubgroup { n: action.size(), elements }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroups_of_klein_four() {
        let k4 = FinGroup::product(&FinGroup::cyclic(2), &FinGroup::cyclic(2));
        assert_eq!(subgroups(&k4).len(), 5);
    }

    #[test]
    fn subgroups_of_s3() {
        // 1, three C2, one C3, S3 itself
        assert_eq!(subgroups(&FinGroup::symmetric(3)).len(), 6);
    }

    #[test]
    fn trivial_group_has_only_trivial_graph_subgroups() {
        let e = FinGroup::trivial();
        let subs = graph_subgroups(&e, 2).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].order(), 1);
    }

    #[test]
    fn c2_n1_graph_subgroups() {
        let c2 = FinGroup::cyclic(2);
        let subs = graph_subgroups(&c2, 1).unwrap();
        assert_eq!(subs.len(), 2);
    }

    #[test]
    fn c2_n2_graph_subgroups_match_brute_force() {
        let c2 = FinGroup::cyclic(2);
        let subs = graph_subgroups(&c2, 2).unwrap();
        // Klein four group has 5 subgroups; two meet Sigma_2 nontrivially.
        assert_eq!(subs.len(), 3);
        for s in &subs {
            assert!(s.is_graph_of_homomorphism());
        }
    }

    #[test]
    fn bound_is_enforced() {
        let c2 = FinGroup::cyclic(2);
        assert!(matches!(graph_subgroups(&c2, 5), Err(GroupError::SubgroupBound(_, _))));
    }
}
