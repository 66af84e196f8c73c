use std::cell::RefCell;
use std::collections::HashMap;

use super::basedmap::compose_based;
use super::{BasedMap, GSetAction, GroupError};

/// The four shapes of hom-set between based finite sets: all based maps,
/// maps injective away from the basepoint, permutations, and identities only.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CatTag {
    /// All based maps.
    F,
    /// Preimages of nonzero points are singletons or empty.
    Pi,
    /// The maximal subgroupoid: permutations.
    Sigma,
    /// Objects only.
    Nat,
}

impl CatTag {
    pub fn admits(&self, map: &BasedMap) -> bool {
        match self {
            CatTag::F => true,
            CatTag::Pi => map.is_injective_away_from_basepoint(),
            CatTag::Sigma => map.is_permutation(),
            CatTag::Nat => map.is_identity(),
        }
    }
}

/// Complete, duplicate-free, lexicographically ordered enumeration of the
/// hom-set of the given shape.
pub fn enumerate_homs(tag: CatTag, m: usize, n: usize) -> Vec<BasedMap> {
    let mut out = Vec::new();
    match tag {
        CatTag::Nat => {
            if m == n {
                out.push(BasedMap::identity(n));
            }
        }
        CatTag::Sigma => {
            if m == n {
                for p in super::Permutation::all(n) {
                    out.push(BasedMap::from_permutation(&p));
                }
                out.sort();
            }
        }
        _ => {
            let mut image = vec![0usize; m];
            loop {
                let map = BasedMap::new(m, n, image.clone()).expect("in range");
                if tag.admits(&map) {
                    out.push(map);
                }
                // odometer over {0..n}^m, most significant first
                let mut i = m;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if image[i] < n {
                        image[i] += 1;
                        for v in image[i + 1..].iter_mut() {
                            *v = 0;
                        }
                        break;
                    }
                }
            }
        }
    }
    out
}

/// Memoized hom-set provider, keyed by `(tag, m, n)`.
#[derive(Default)]
pub struct HomCache {
    cache: RefCell<HashMap<(CatTag, usize, usize), std::rc::Rc<Vec<BasedMap>>>>,
}

impl HomCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn homs(&self, tag: CatTag, m: usize, n: usize) -> std::rc::Rc<Vec<BasedMap>> {
        self.cache
            .borrow_mut()
            .entry((tag, m, n))
            .or_insert_with(|| std::rc::Rc::new(enumerate_homs(tag, m, n)))
            .clone()
    }
}

/// Conjugation of `phi` by `g` through actions on its source and target:
/// `g . phi = beta(g) . phi . alpha(g)^{-1}`.
pub fn conjugation_action(
    g: usize,
    phi: &BasedMap,
    alpha: &GSetAction,
    beta: &GSetAction,
) -> Result<BasedMap, GroupError> {
    if alpha.size() != phi.source() || beta.size() != phi.target() {
        return Err(GroupError::ArityMismatch { expected: phi.source(), got: alpha.size() });
    }
    let ginv = alpha.group.inverse(g);
    let pre = BasedMap::from_permutation(alpha.perm(ginv));
    let post = BasedMap::from_permutation(beta.perm(g));
    compose_based(&post, &compose_based(phi, &pre)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroups::FinGroup;

    #[test]
    fn hom_counts() {
        assert_eq!(enumerate_homs(CatTag::F, 2, 1).len(), 4);
        assert_eq!(enumerate_homs(CatTag::Pi, 2, 2).len(), 7);
        assert_eq!(enumerate_homs(CatTag::Sigma, 3, 3).len(), 6);
        assert_eq!(enumerate_homs(CatTag::Sigma, 2, 3).len(), 0);
        assert_eq!(enumerate_homs(CatTag::Nat, 2, 2).len(), 1);
        assert_eq!(enumerate_homs(CatTag::Nat, 1, 2).len(), 0);
        assert_eq!(enumerate_homs(CatTag::F, 0, 5).len(), 1);
    }

    #[test]
    fn hom_inclusions() {
        for m in 0..=3usize {
            for n in 0..=3usize {
                let f = enumerate_homs(CatTag::F, m, n);
                let pi = enumerate_homs(CatTag::Pi, m, n);
                let sig = enumerate_homs(CatTag::Sigma, m, n);
                let nat = enumerate_homs(CatTag::Nat, m, n);
                assert!(pi.iter().all(|x| f.contains(x)));
                assert!(sig.iter().all(|x| pi.contains(x)));
                assert!(nat.iter().all(|x| sig.contains(x)));
            }
        }
    }

    #[test]
    fn conjugation_fixed_by_identity_and_trivial_actions() {
        let c2 = FinGroup::cyclic(2);
        let alpha = GSetAction::trivial(c2.clone(), 2);
        let beta = GSetAction::trivial(c2.clone(), 2);
        for phi in enumerate_homs(CatTag::F, 2, 2) {
            assert_eq!(conjugation_action(0, &phi, &alpha, &beta).unwrap(), phi);
            assert_eq!(conjugation_action(1, &phi, &alpha, &beta).unwrap(), phi);
        }
    }

    #[test]
    fn conjugation_regular_on_delta() {
        // G = C2, regular action on the source 2, phi = delta_1: 2 -> 1;
        // g . delta_1 = delta_2 = (1 -> 0, 2 -> 1).
        let c2 = FinGroup::cyclic(2);
        let reg = GSetAction::regular(c2.clone());
        let triv1 = GSetAction::trivial(c2, 1);
        let delta1 = BasedMap::projection(1, 2);
        let got = conjugation_action(1, &delta1, &reg, &triv1).unwrap();
        assert_eq!(got, BasedMap::new(2, 1, vec![0, 1]).unwrap());
    }

    #[test]
    fn conjugation_is_a_group_action() {
        let c2 = FinGroup::cyclic(2);
        let reg = GSetAction::regular(c2.clone());
        for phi in enumerate_homs(CatTag::F, 2, 2) {
            for g in 0..2 {
                for h in 0..2 {
                    let gh = c2.mul(g, h);
                    let one = conjugation_action(gh, &phi, &reg, &reg).unwrap();
                    let two = conjugation_action(
                        g,
                        &conjugation_action(h, &phi, &reg, &reg).unwrap(),
                        &reg,
                        &reg,
                    )
                    .unwrap();
                    assert_eq!(one, two);
                }
            }
        }
    }
}
