use std::collections::HashMap;
use std::rc::Rc;

use crate::fingroups::{BasedMap, FinGroup, GSetAction};
use crate::simplicial::{discrete_with_action, point, Key, SMap, SSet};

use super::cat::IndexCat;
use super::DiagramError;

/// A finite commutative monoid with zero, with an ambient-group action by
/// monoid automorphisms.  The additive data backing `R`-style diagrams.
#[derive(Clone, Debug)]
pub struct CommMonoid {
    pub size: usize,
    /// `add[a][b]`, with element `0` the zero.
    pub add: Vec<Vec<usize>>,
    /// `action[g][a]` for the ambient group.
    pub action: Vec<Vec<usize>>,
    pub group: Rc<FinGroup>,
}

impl CommMonoid {
    pub fn validate(&self) -> Result<(), DiagramError> {
        let n = self.size;
        for a in 0..n {
            if self.add[0][a] != a || self.add[a][0] != a {
                return Err(DiagramError::MonoidNotUnital);
            }
            for b in 0..n {
                if self.add[a][b] != self.add[b][a] {
                    return Err(DiagramError::MonoidNotCommutative);
                }
                for c in 0..n {
                    if self.add[self.add[a][b]][c] != self.add[a][self.add[b][c]] {
                        return Err(DiagramError::MonoidNotAssociative);
                    }
                }
            }
        }
        for g in self.group.elements() {
            if self.action[g][0] != 0 {
                return Err(DiagramError::MonoidActionNotAutomorphic);
            }
            for a in 0..n {
                for b in 0..n {
                    if self.action[g][self.add[a][b]] != self.add[self.action[g][a]][self.action[g][b]]
                    {
                        return Err(DiagramError::MonoidActionNotAutomorphic);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(0, |acc, x| self.add[acc][x])
    }

    /// The integers mod `n` with trivial ambient action.
    pub fn cyclic(n: usize, group: Rc<FinGroup>) -> CommMonoid {
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let action = group.elements().map(|_| (0..n).collect()).collect();
        CommMonoid { size: n, add, action, group }
    }
}

/// An enriched functor from a truncated index category to based
/// G-simplicial sets, with every morphism action materialized.
pub struct Diagram {
    pub cat: Rc<IndexCat>,
    pub values: Vec<SSet>,
    /// `action[&(a, b)][i]` is the simplicial map for the `i`-th hom.
    pub action: HashMap<(usize, usize), Vec<SMap>>,
}

impl Diagram {
    /// Materializes a diagram from per-object values and a key-level
    /// morphism action.
    pub fn build(
        cat: Rc<IndexCat>,
        values: Vec<SSet>,
        act: impl Fn(usize, usize, &BasedMap, usize, &Key) -> Key,
    ) -> Diagram {
        assert_eq!(values.len(), cat.object_count());
        let mut action = HashMap::new();
        for a in 0..cat.object_count() {
            for b in 0..cat.object_count() {
                let homs = cat.homs(a, b);
                let maps = homs
                    .iter()
                    .map(|phi| SMap::from_fn(&values[a], &values[b], |q, k| act(a, b, phi, q, k)))
                    .collect();
                action.insert((a, b), maps);
            }
        }
        Diagram { cat, values, action }
    }

    pub fn value(&self, obj: usize) -> &SSet {
        &self.values[obj]
    }

    pub fn hom_index(&self, a: usize, b: usize, phi: &BasedMap) -> usize {
        self.cat
            .homs(a, b)
            .iter()
            .position(|m| m == phi)
            .unwrap_or_else(|| panic!("morphism not in category: {phi:?}"))
    }

    pub fn map_for(&self, a: usize, b: usize, phi: &BasedMap) -> &SMap {
        &self.action[&(a, b)][self.hom_index(a, b, phi)]
    }

    /// Applies the action of `phi: a -> b` to a key of `value(a)`.
    pub fn apply(&self, a: usize, b: usize, phi: &BasedMap, q: usize, k: &Key) -> Key {
        self.map_for(a, b, phi).apply_key(self.value(a), self.value(b), q, k)
    }

    /// Equivariance, functoriality (identities and all composable pairs),
    /// well-formedness of each action map, and reducedness at size-0
    /// objects.
    pub fn check_functorial(&self) -> Result<(), DiagramError> {
        let cat = &self.cat;
        for a in 0..cat.object_count() {
            if cat.object(a).size() == 0 && self.values[a].level(0).len() != 1 {
                return Err(DiagramError::NotReduced);
            }
            for b in 0..cat.object_count() {
                let homs = cat.homs(a, b);
                for (i, phi) in homs.iter().enumerate() {
                    let smap = &self.action[&(a, b)][i];
                    smap.validate(&self.values[a], &self.values[b])
                        .map_err(DiagramError::BadActionMap)?;
                    if a == b && phi.is_identity() {
                        let idm = SMap::identity(&self.values[a]);
                        if smap != &idm {
                            return Err(DiagramError::IdentityNotIdentity { object: a });
                        }
                    }
                    // equivariance of evaluation: g.(phi.x) = (g.phi).(g.x)
                    for g in cat.group.elements() {
                        let gphi = cat.act_on_hom(g, a, b, phi);
                        let gmap = self.map_for(a, b, &gphi);
                        for q in 0..=self.values[a].dmax.min(self.values[b].dmax) {
                            for s in 0..self.values[a].level(q).len() {
                                let lhs = self.values[b].act(g, q, smap.apply(q, s));
                                let rhs = gmap.apply(q, self.values[a].act(g, q, s));
                                if lhs != rhs {
                                    return Err(DiagramError::NotEquivariant { a, b });
                                }
                            }
                        }
                    }
                }
                for c in 0..cat.object_count() {
                    for phi in cat.homs(a, b).iter() {
                        for psi in cat.homs(b, c).iter() {
                            let comp = cat.compose(psi, phi);
                            let lhs = self.map_for(a, c, &comp);
                            let rhs = self.map_for(b, c, psi).compose(self.map_for(a, b, phi));
                            if lhs != &rhs {
                                return Err(DiagramError::NotFunctorial { a, b, c });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// All diagram values are discrete simplicial sets.
    pub fn is_discrete(&self) -> bool {
        self.values.iter().all(SSet::is_discrete)
    }
}

/// A map of diagrams: one simplicial map per object.
pub struct DiagramMap {
    pub maps: Vec<SMap>,
}

impl DiagramMap {
    pub fn from_fn(src: &Diagram, dst: &Diagram, f: impl Fn(usize, usize, &Key) -> Key) -> Self {
        let maps = (0..src.cat.object_count())
            .map(|obj| SMap::from_fn(src.value(obj), dst.value(obj), |q, k| f(obj, q, k)))
            .collect();
        DiagramMap { maps }
    }

    pub fn identity(x: &Diagram) -> Self {
        DiagramMap { maps: x.values.iter().map(SMap::identity).collect() }
    }

    pub fn compose(&self, first: &DiagramMap) -> DiagramMap {
        DiagramMap {
            maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.compose(f)).collect(),
        }
    }

    pub fn is_bijective(&self, src: &Diagram, dst: &Diagram) -> bool {
        (0..self.maps.len()).all(|o| self.maps[o].is_bijective(src.value(o), dst.value(o)))
    }

    pub fn is_surjective(&self, dst: &Diagram) -> bool {
        (0..self.maps.len()).all(|o| self.maps[o].is_surjective(dst.value(o)))
    }

    pub fn equals(&self, other: &DiagramMap) -> bool {
        self.maps.len() == other.maps.len()
            && self.maps.iter().zip(&other.maps).all(|(a, b)| a == b)
    }

    /// Naturality against every morphism, plus per-object validity.
    pub fn validate(&self, src: &Diagram, dst: &Diagram) -> Result<(), DiagramError> {
        assert!(Rc::ptr_eq(&src.cat, &dst.cat), "diagram maps need a shared index category");
        for (o, m) in self.maps.iter().enumerate() {
            m.validate(src.value(o), dst.value(o)).map_err(DiagramError::BadActionMap)?;
        }
        for a in 0..src.cat.object_count() {
            for b in 0..src.cat.object_count() {
                for phi in src.cat.homs(a, b).iter() {
                    let lhs = dst.map_for(a, b, phi).compose(&self.maps[a]);
                    let rhs = self.maps[b].compose(src.map_for(a, b, phi));
                    if lhs != rhs {
                        return Err(DiagramError::MapNotNatural { a, b });
                    }
                }
            }
        }
        Ok(())
    }
}

/// The constant basepoint diagram.
pub fn basepoint_diagram(cat: Rc<IndexCat>, dmax: usize) -> Diagram {
    let values = (0..cat.object_count()).map(|_| point(cat.group.clone(), dmax)).collect();
    Diagram::build(cat, values, |_, _, _, _, _| Key::Base)
}

/// The unit diagram: the inclusion of based sets, valued `n` at an object of
/// size `n` with the object's own G-action.
pub fn unit_diagram(cat: Rc<IndexCat>, dmax: usize) -> Diagram {
    let values: Vec<SSet> = (0..cat.object_count())
        .map(|o| discrete_with_action(&cat.object(o).action, dmax))
        .collect();
    Diagram::build(cat, values, |_, _, phi, _, k| {
        if k.is_base() {
            return Key::Base;
        }
        let v = phi.apply(k.as_int() as usize);
        if v == 0 {
            Key::Base
        } else {
            Key::int(v as i64)
        }
    })
}

/// The free diagram on a based G-space: object `n` carries the `n`-fold
/// wedge, with morphisms rerouting wedge summands.
pub fn free_diagram(cat: Rc<IndexCat>, a: &SSet) -> Diagram {
    assert!(!cat.equivariant, "free diagrams are indexed on the plain category");
    let encode = |j: usize, k: &Key| Key::tag(j as u32, k.clone());
    let values: Vec<SSet> = (0..cat.object_count())
        .map(|o| {
            let n = cat.object(o).size();
            let levels = (0..=a.dmax)
                .map(|q| {
                    let mut keys = vec![Key::Base];
                    for j in 1..=n {
                        for k in &a.level(q).simplices {
                            if k != a.base_key(q) {
                                keys.push(encode(j, k));
                            }
                        }
                    }
                    keys
                })
                .collect();
            let on = |k: &Key, f: &dyn Fn(&Key) -> Key, qt: usize| -> Key {
                if k.is_base() {
                    return Key::Base;
                }
                let (j, inner) = k.as_tag();
                let out = f(inner);
                if &out == a.base_key(qt) {
                    Key::Base
                } else {
                    Key::tag(j, out)
                }
            };
            SSet::build(
                cat.group.clone(),
                a.dmax,
                levels,
                |_| Key::Base,
                |q, i, k| on(k, &|x| a.face_key(q, i, x), q - 1),
                |q, i, k| on(k, &|x| a.degen_key(q, i, x), q + 1),
                |g, q, k| on(k, &|x| a.act_key(g, q, x), q),
            )
        })
        .collect();
    Diagram::build(cat, values, |_, _, phi, _, k| {
        if k.is_base() {
            return Key::Base;
        }
        let (j, inner) = k.as_tag();
        let v = phi.apply(j as usize);
        if v == 0 {
            Key::Base
        } else {
            Key::tag(v as u32, inner.clone())
        }
    })
}

fn tuple_key(items: &[usize]) -> Key {
    Key::list(items.iter().map(|&x| Key::int(x as i64)).collect())
}

fn tuple_of_key(k: &Key) -> Vec<usize> {
    k.as_list().iter().map(|x| x.as_int() as usize).collect()
}

/// The diagram of powers of a commutative monoid, `(R A)(alpha) = A^alpha`:
/// tuples with coordinatewise sums along morphisms, the ambient action on
/// entries, and the object action permuting coordinates.
pub fn r_diagram(cat: Rc<IndexCat>, a: &CommMonoid, dmax: usize) -> Result<Diagram, DiagramError> {
    a.validate()?;
    let all_tuples = |n: usize| -> Vec<Key> {
        let mut keys = Vec::new();
        let mut t = vec![0usize; n];
        loop {
            keys.push(tuple_key(&t));
            let mut i = n;
            loop {
                if i == 0 {
                    return keys;
                }
                i -= 1;
                if t[i] + 1 < a.size {
                    t[i] += 1;
                    for v in t[i + 1..].iter_mut() {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    };
    let values: Vec<SSet> = (0..cat.object_count())
        .map(|o| {
            let alpha = cat.object(o).action.clone();
            let n = alpha.size();
            let am = a.clone();
            SSet::build(
                cat.group.clone(),
                dmax,
                (0..=dmax).map(|_| all_tuples(n)).collect(),
                |_| tuple_key(&vec![0; n]),
                |_, _, k| k.clone(),
                |_, _, k| k.clone(),
                move |g, _, k| {
                    let t = tuple_of_key(k);
                    let ginv = alpha.group.inverse(g);
                    tuple_key(
                        &(0..n)
                            .map(|i| am.action[g][t[alpha.perm(ginv).apply0(i)]])
                            .collect::<Vec<_>>(),
                    )
                },
            )
        })
        .collect();
    let am = a.clone();
    Ok(Diagram::build(cat, values, move |_, _, phi, _, k| {
        let t = tuple_of_key(k);
        let out: Vec<usize> = (1..=phi.target())
            .map(|j| am.sum((1..=phi.source()).filter(|&i| phi.apply(i) == j).map(|i| t[i - 1])))
            .collect();
        tuple_key(&out)
    }))
}

/// Restriction to `dmax` of the values of an existing diagram (values must
/// be stored at least that deep).
pub fn truncate_values(x: &Diagram, dmax: usize) -> Diagram {
    let values: Vec<SSet> = x
        .values
        .iter()
        .map(|v| {
            assert!(v.dmax >= dmax);
            let mut levels = v.levels[..=dmax].to_vec();
            let top = levels.len() - 1;
            levels[top].degens = Vec::new();
            SSet { group: v.group.clone(), dmax, levels }
        })
        .collect();
    Diagram {
        cat: x.cat.clone(),
        values,
        action: x
            .action
            .iter()
            .map(|(k, v)| {
                (*k, v.iter().map(|m| SMap { maps: m.maps[..=dmax].to_vec() }).collect())
            })
            .collect(),
    }
}
