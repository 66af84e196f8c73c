use std::rc::Rc;

use super::{GroupError, Permutation};

/// A finite group given by its multiplication table.  Elements are
/// `0..order` with `0` the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl std::fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinGroup(order={})", self.order)
    }
}

impl FinGroup {
    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = mult.len();
        if order == 0 || mult.iter().any(|row| row.len() != order) {
            return Err(GroupError::BadTableShape(order));
        }
        if mult.iter().flatten().any(|&v| v >= order) {
            return Err(GroupError::EntryOutOfRange);
        }
        for g in 0..order {
            if mult[0][g] != g || mult[g][0] != g {
                return Err(GroupError::NoIdentity);
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; order];
        for g in 0..order {
            match (0..order).find(|&h| mult[g][h] == 0 && mult[h][g] == 0) {
                Some(h) => inv[g] = h,
                None => return Err(GroupError::NoInverse(g)),
            }
        }
        Ok(FinGroup { order, mult, inv })
    }

    pub fn trivial() -> Rc<Self> {
        Rc::new(FinGroup { order: 1, mult: vec![vec![0]], inv: vec![0] })
    }

    pub fn cyclic(n: usize) -> Rc<Self> {
        assert!(n >= 1);
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Rc::new(FinGroup::from_table(mult).expect("cyclic table is a group"))
    }

    /// The symmetric group on `n` letters, elements ordered as
    /// `Permutation::all(n)`.
    pub fn symmetric(n: usize) -> Rc<Self> {
        let perms = Permutation::all(n);
        let index = |p: &Permutation| perms.binary_search(p).expect("closed under composition");
        let mult = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&a.compose(b))).collect())
            .collect();
        Rc::new(FinGroup::from_table(mult).expect("symmetric table is a group"))
    }

    /// Direct product; the pair `(x, y)` is encoded as `x * b.order + y`.
    pub fn product(a: &FinGroup, b: &FinGroup) -> Rc<Self> {
        let n = a.order * b.order;
        let mut mult = vec![vec![0; n]; n];
        for x0 in 0..a.order {
            for x1 in 0..b.order {
                for y0 in 0..a.order {
                    for y1 in 0..b.order {
                        mult[x0 * b.order + x1][y0 * b.order + y1] =
                            a.mult[x0][y0] * b.order + b.mult[x1][y1];
                    }
                }
            }
        }
        Rc::new(FinGroup::from_table(mult).expect("product table is a group"))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// An action of a finite group on the based set `{0, .., n}` fixing `0`,
/// i.e. a homomorphism into the symmetric group on `n` letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GSetAction {
    pub group: Rc<FinGroup>,
    n: usize,
    perms: Vec<Permutation>,
}

impl GSetAction {
    pub fn new(group: Rc<FinGroup>, perms: Vec<Permutation>) -> Result<Self, GroupError> {
        if perms.len() != group.order() {
            return Err(GroupError::ArityMismatch { expected: group.order(), got: perms.len() });
        }
        let n = perms[0].arity();
        if perms.iter().any(|p| p.arity() != n) {
            return Err(GroupError::ArityMismatch { expected: n, got: 0 });
        }
        if !perms[0].is_identity() {
            return Err(GroupError::NotAHomomorphism(0, 0));
        }
        for g in group.elements() {
            for h in group.elements() {
                if perms[group.mul(g, h)] != perms[g].compose(&perms[h]) {
                    return Err(GroupError::NotAHomomorphism(g, h));
                }
            }
        }
        Ok(GSetAction { group, n, perms })
    }

    /// The trivial action on `n` points.
    pub fn trivial(group: Rc<FinGroup>, n: usize) -> Self {
        let perms = group.elements().map(|_| Permutation::identity(n)).collect();
        GSetAction { n, group, perms }
    }

    /// The (left) regular action of `G` on its own underlying set.
    pub fn regular(group: Rc<FinGroup>) -> Self {
        let n = group.order();
        let perms = group
            .elements()
            .map(|g| {
                Permutation::from_images((0..n).map(|h| group.mul(g, h)).collect())
                    .expect("translation is a bijection")
            })
            .collect();
        GSetAction { n, group, perms }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn perm(&self, g: usize) -> &Permutation {
        &self.perms[g]
    }

    pub fn is_trivial_action(&self) -> bool {
        self.perms.iter().all(|p| p.is_identity())
    }

    /// Block sum: `self` acting on the first `self.size()` points and `other`
    /// on the rest, through the shared group.
    pub fn direct_sum(&self, other: &GSetAction) -> GSetAction {
        assert!(Rc::ptr_eq(&self.group, &other.group) || self.group == other.group);
        let n = self.n + other.n;
        let perms = self
            .group
            .elements()
            .map(|g| {
                let mut image = Vec::with_capacity(n);
                image.extend((0..self.n).map(|i| self.perms[g].apply0(i)));
                image.extend((0..other.n).map(|i| self.n + other.perms[g].apply0(i)));
                Permutation::from_images(image).expect("block sum of bijections")
            })
            .collect();
        GSetAction { n, group: self.group.clone(), perms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_are_groups() {
        let c4 = FinGroup::cyclic(4);
        assert_eq!(c4.mul(3, 2), 1);
        assert_eq!(c4.inverse(3), 1);
    }

    #[test]
    fn symmetric_group_order() {
        assert_eq!(FinGroup::symmetric(3).order(), 6);
        assert_eq!(FinGroup::symmetric(1).order(), 1);
    }

    #[test]
    fn product_order_and_identity() {
        let k4 = FinGroup::product(&FinGroup::cyclic(2), &FinGroup::cyclic(2));
        assert_eq!(k4.order(), 4);
        for g in k4.elements() {
            assert_eq!(k4.mul(g, g), 0);
        }
    }

    #[test]
    fn bad_tables_rejected() {
        // swap breaks associativity/identity
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(FinGroup::from_table(t).is_err());
    }

    #[test]
    fn regular_action_is_homomorphism() {
        let c2 = FinGroup::cyclic(2);
        let reg = GSetAction::regular(c2.clone());
        assert_eq!(reg.size(), 2);
        assert!(!reg.is_trivial_action());
        assert!(GSetAction::new(c2, vec![Permutation::identity(2), Permutation::transposition(2, 1, 2)]).is_ok());
    }

    #[test]
    fn direct_sum_blocks() {
        let c2 = FinGroup::cyclic(2);
        let reg = GSetAction::regular(c2.clone());
        let triv = GSetAction::trivial(c2, 1);
        let sum = reg.direct_sum(&triv);
        assert_eq!(sum.size(), 3);
        assert_eq!(sum.perm(1).apply(1), 2);
        assert_eq!(sum.perm(1).apply(3), 3);
    }
}
