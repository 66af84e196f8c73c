use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::fingroups::{
    compose_based, conjugation_action, enumerate_homs, BasedMap, CatTag, FinGroup, GSetAction,
};

/// An object of a truncated index category: a based finite G-set.  For the
/// non-equivariant tags every object carries the trivial action.
#[derive(Clone, Debug)]
pub struct GObj {
    pub action: GSetAction,
    /// Display name, unique within the category.
    pub name: String,
}

impl GObj {
    pub fn size(&self) -> usize {
        self.action.size()
    }
}

/// A truncated index category: one of the four hom shapes, either over
/// plain based sets or over based G-sets, with objects of size at most the
/// truncation bound.
pub struct IndexCat {
    pub tag: CatTag,
    pub equivariant: bool,
    pub group: Rc<FinGroup>,
    pub trunc: usize,
    pub objects: Vec<GObj>,
    homs: RefCell<HashMap<(usize, usize), Rc<Vec<BasedMap>>>>,
}

impl std::fmt::Debug for IndexCat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "IndexCat({:?}{}, trunc={}, {} objects)",
            self.tag,
            if self.equivariant { "_G" } else { "" },
            self.trunc,
            self.objects.len()
        )
    }
}

impl IndexCat {
    /// The plain category with objects `0..=trunc` and trivial actions; the
    /// ambient group still acts on diagram values.
    pub fn plain(tag: CatTag, group: Rc<FinGroup>, trunc: usize) -> Rc<IndexCat> {
        let objects = (0..=trunc)
            .map(|n| GObj { action: GSetAction::trivial(group.clone(), n), name: format!("{n}") })
            .collect();
        Rc::new(IndexCat { tag, equivariant: false, group, trunc, objects, homs: RefCell::default() })
    }

    /// The equivariant category with, per size `n <= trunc`, the trivial
    /// action plus any explicitly supplied actions.
    pub fn equivariant(
        tag: CatTag,
        group: Rc<FinGroup>,
        trunc: usize,
        extra: Vec<(GSetAction, String)>,
    ) -> Rc<IndexCat> {
        let mut objects: Vec<GObj> = (0..=trunc)
            .map(|n| GObj { action: GSetAction::trivial(group.clone(), n), name: format!("{n}") })
            .collect();
        for (action, name) in extra {
            assert!(action.size() <= trunc, "object size exceeds truncation");
            assert!(!objects.iter().any(|o| o.name == name), "duplicate object name");
            objects.push(GObj { action, name });
        }
        Rc::new(IndexCat { tag, equivariant: true, group, trunc, objects, homs: RefCell::default() })
    }

    /// Default equivariant object list: trivial actions everywhere plus the
    /// regular action when `|G| <= trunc`.
    pub fn equivariant_default(tag: CatTag, group: Rc<FinGroup>, trunc: usize) -> Rc<IndexCat> {
        let extra = if group.order() >= 2 && group.order() <= trunc {
            vec![(GSetAction::regular(group.clone()), "reg".to_string())]
        } else {
            Vec::new()
        };
        IndexCat::equivariant(tag, group, trunc, extra)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object(&self, id: usize) -> &GObj {
        &self.objects[id]
    }

    pub fn object_named(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.name == name)
    }

    /// The object of the given size with trivial action.
    pub fn trivial_object_of_size(&self, n: usize) -> usize {
        self.objects
            .iter()
            .position(|o| o.size() == n && o.action.is_trivial_action())
            .expect("trivial object present for every size")
    }

    /// Morphisms from object `a` to object `b`, cached.
    pub fn homs(&self, a: usize, b: usize) -> Rc<Vec<BasedMap>> {
        if self.tag == CatTag::Nat && a != b {
            return Rc::new(Vec::new());
        }
        let key = (self.object(a).size(), self.object(b).size());
        self.homs
            .borrow_mut()
            .entry(key)
            .or_insert_with(|| Rc::new(enumerate_homs(self.tag, key.0, key.1)))
            .clone()
    }

    /// Conjugation action of a group element on a morphism `a -> b`.
    pub fn act_on_hom(&self, g: usize, a: usize, b: usize, phi: &BasedMap) -> BasedMap {
        conjugation_action(g, phi, &self.object(a).action, &self.object(b).action)
            .expect("hom arities match objects")
    }

    pub fn compose(&self, psi: &BasedMap, phi: &BasedMap) -> BasedMap {
        compose_based(psi, phi).expect("composable homs")
    }

    /// All objects of a given size.
    pub fn objects_of_size(&self, n: usize) -> Vec<usize> {
        (0..self.objects.len()).filter(|&i| self.object(i).size() == n).collect()
    }

    /// Checks hom-sets are closed under composition and conjugation, and
    /// contain identities where the tag requires them.
    pub fn check_closed(&self) -> bool {
        let nobj = self.object_count();
        for a in 0..nobj {
            let id_ok = self.homs(a, a).iter().any(|m| m.is_identity());
            if !id_ok {
                return false;
            }
            for b in 0..nobj {
                let hab = self.homs(a, b);
                for g in self.group.elements() {
                    for phi in hab.iter() {
                        if !self.tag.admits(&self.act_on_hom(g, a, b, phi)) {
                            return false;
                        }
                    }
                }
                for c in 0..nobj {
                    let hbc = self.homs(b, c);
                    for phi in hab.iter() {
                        for psi in hbc.iter() {
                            let comp = self.compose(psi, phi);
                            if !self.homs(a, c).contains(&comp) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}
