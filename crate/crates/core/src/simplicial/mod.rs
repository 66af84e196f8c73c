//! Finite based G-simplicial sets and the constructions performed on them:
//! smash and wedge, powers, orbit quotients, fixed points, spheres for
//! permutation representations, half-smash tensors, bisimplicial diagonals,
//! and combinatorial homotopy verification.

mod bisim;
mod homotopy;
mod key;
mod ops;
mod smap;
mod sset;

pub use bisim::{Bisim, BisimCell};
pub use homotopy::{is_homotopy, SHomotopy};
pub use key::Key;
pub use ops::{
    circle, discrete, discrete_with_action, fixed_points, half_smash, orbit_quotient, point,
    power, smash, sphere, sphere0, twisted_power, wedge, AuxAction, PlainSSet,
};
pub use smap::SMap;
pub use sset::{Level, SSet};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("objects live over different groups")]
    GroupMismatch,
    #[error("basepoint not preserved at degree {degree}")]
    BasepointNotPreserved { degree: usize },
    #[error("level action is not a group action at degree {degree}")]
    NotAnAction { degree: usize },
    #[error("simplicial identity {which} fails at degree {degree}, simplex {index}")]
    IdentityViolated { which: &'static str, degree: usize, index: usize },
    #[error("structure maps not equivariant at degree {degree}")]
    NotEquivariant { degree: usize },
    #[error("map does not preserve the basepoint at degree {degree}")]
    MapNotBased { degree: usize },
    #[error("map not equivariant at degree {degree}, simplex {index}")]
    MapNotEquivariant { degree: usize, index: usize },
    #[error("map does not commute with structure maps at degree {degree}, simplex {index}")]
    MapNotSimplicial { degree: usize, index: usize },
    #[error("homotopy identity {which} fails at degree {degree}, simplex {index}")]
    HomotopyViolated { which: &'static str, degree: usize, index: usize },
    #[error("auxiliary action does not commute with the structure maps")]
    ActionDoesNotCommute,
    #[error("bisimplicial identity {which} fails at ({p}, {q})")]
    BisimIdentity { which: &'static str, p: usize, q: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroups::{FinGroup, GSetAction};
    use std::rc::Rc;

    fn c2() -> Rc<FinGroup> {
        FinGroup::cyclic(2)
    }

    #[test]
    fn circle_counts_and_identities() {
        let s1 = circle(FinGroup::trivial(), 4);
        s1.validate().unwrap();
        // levels: 1 + q nonbase... total q+1 simplices
        for q in 0..=4 {
            assert_eq!(s1.level(q).len(), q + 1);
        }
        assert_eq!(s1.nondegenerate_counts(), vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn smash_with_s0_is_canonically_isomorphic() {
        let e = FinGroup::trivial();
        let s1 = circle(e.clone(), 3);
        let s0 = sphere0(e, 3);
        let sm = smash(&s1, &s0).unwrap();
        sm.validate().unwrap();
        // x -> (x, pt) is the canonical iso
        let iso = SMap::from_fn(&s1, &sm, |_, k| {
            if k.is_base() {
                Key::Base
            } else {
                Key::pair(k.clone(), Key::int(1))
            }
        });
        iso.validate(&s1, &sm).unwrap();
        assert!(iso.is_bijective(&s1, &sm));
    }

    #[test]
    fn torus_quotient_model_of_s2() {
        // S^1 smash S^1: one nondegenerate simplex in degrees 1 and 2
        let e = FinGroup::trivial();
        let s1 = circle(e.clone(), 3);
        let s2 = smash(&s1, &s1).unwrap();
        s2.validate().unwrap();
        // two nondegenerate 2-simplices: the two shuffle triangles of the
        // square, neither collapsed in the smash
        let counts = s2.nondegenerate_counts();
        assert_eq!(counts, vec![1, 1, 2, 0]);
    }

    #[test]
    fn smash_with_point_collapses() {
        let e = FinGroup::trivial();
        let s1 = circle(e.clone(), 2);
        let pt = point(e, 2);
        let sm = smash(&s1, &pt).unwrap();
        assert!(sm.levels.iter().all(|l| l.len() == 1));
    }

    #[test]
    fn sphere_of_empty_and_trivial_representations() {
        let e = FinGroup::trivial();
        let s0 = sphere(&GSetAction::trivial(e.clone(), 0), 3);
        s0.validate().unwrap();
        assert!(s0.levels.iter().all(|l| l.len() == 2));
        let s1 = sphere(&GSetAction::trivial(e, 1), 3);
        s1.validate().unwrap();
        assert_eq!(s1.nondegenerate_counts(), vec![1, 1, 0, 0]);
    }

    #[test]
    fn regular_c2_sphere_fixed_points_are_a_circle() {
        let reg = GSetAction::regular(c2());
        let sv = sphere(&reg, 3);
        sv.validate().unwrap();
        let fixed = fixed_points(&sv, &[0, 1]);
        fixed.validate().unwrap();
        // diagonal simplices form a circle: counts match S^1
        let s1 = circle(FinGroup::trivial(), 3);
        for q in 0..=3 {
            assert_eq!(fixed.level(q).len(), s1.level(q).len());
        }
        assert_eq!(fixed.nondegenerate_counts(), s1.nondegenerate_counts());
    }

    #[test]
    fn fixed_points_monotone_in_subgroup() {
        let reg = GSetAction::regular(c2());
        let sv = sphere(&reg, 2);
        let all = fixed_points(&sv, &[0, 1]);
        let triv = fixed_points(&sv, &[0]);
        for q in 0..=2 {
            for k in &all.level(q).simplices {
                assert!(triv.level(q).index.contains_key(k));
            }
        }
    }

    #[test]
    fn trivial_action_fixed_points_are_everything() {
        let x = circle(c2(), 2);
        let fixed = fixed_points(&x, &[0, 1]);
        for q in 0..=2 {
            assert_eq!(fixed.level(q).len(), x.level(q).len());
        }
    }

    #[test]
    fn orbit_quotient_of_swapped_wedge_is_one_circle() {
        let e = FinGroup::trivial();
        let s1 = circle(e.clone(), 3);
        let w = wedge(&[&s1, &s1]);
        w.validate().unwrap();
        // auxiliary C2 swapping the two summands
        let c2g = c2();
        let tables: Vec<Vec<Vec<usize>>> = (0..2)
            .map(|g| {
                (0..=3)
                    .map(|q| {
                        (0..w.level(q).len())
                            .map(|s| {
                                if g == 0 {
                                    s
                                } else {
                                    let k = w.level(q).key(s);
                                    if k.is_base() {
                                        s
                                    } else {
                                        let (t, inner) = k.as_tag();
                                        w.level(q).lookup(&Key::tag(1 - t, inner.clone()))
                                    }
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let aux = AuxAction { group: c2g, tables };
        let (q, proj) = orbit_quotient(&w, &aux).unwrap();
        q.validate().unwrap();
        proj.validate(&w, &q).unwrap();
        let s1c = circle(e, 3);
        for d in 0..=3 {
            assert_eq!(q.level(d).len(), s1c.level(d).len());
        }
    }

    #[test]
    fn orbit_quotient_trivial_action_is_identity() {
        let x = circle(FinGroup::trivial(), 2);
        let aux = AuxAction {
            group: FinGroup::trivial(),
            tables: vec![(0..=2).map(|q| (0..x.level(q).len()).collect()).collect()],
        };
        let (q, proj) = orbit_quotient(&x, &aux).unwrap();
        assert!(proj.is_bijective(&x, &q));
    }

    #[test]
    fn free_c2_orbit_on_discrete_set() {
        // {*, a, b} with tau(a) = b quotients to a 2-element based set
        let x = discrete(FinGroup::trivial(), 2, 1);
        let swap: Vec<Vec<usize>> = (0..=1)
            .map(|q| {
                (0..x.level(q).len())
                    .map(|s| {
                        let k = x.level(q).key(s);
                        if k.is_base() {
                            s
                        } else {
                            x.level(q).lookup(&Key::int(3 - k.as_int()))
                        }
                    })
                    .collect()
            })
            .collect();
        let aux = AuxAction {
            group: c2(),
            tables: vec![(0..=1).map(|q| (0..x.level(q).len()).collect()).collect(), swap],
        };
        let (q, _) = orbit_quotient(&x, &aux).unwrap();
        assert_eq!(q.level(0).len(), 2);
    }

    #[test]
    fn half_smash_with_point_is_isomorphic() {
        let x = circle(FinGroup::trivial(), 2);
        let hs = half_smash(&x, &PlainSSet::point(2));
        hs.validate().unwrap();
        for q in 0..=2 {
            assert_eq!(hs.level(q).len(), x.level(q).len());
        }
    }

    #[test]
    fn sphere_addition_is_smash_of_spheres() {
        // sphere(V + W) iso sphere(V) smash sphere(W) by splitting tuples
        let g = c2();
        let v = GSetAction::regular(g.clone());
        let w = GSetAction::trivial(g.clone(), 1);
        let lhs = sphere(&v.direct_sum(&w), 3);
        let sv = sphere(&v, 3);
        let sw = sphere(&w, 3);
        let rhs = smash(&sv, &sw).unwrap();
        let iso = SMap::from_fn(&lhs, &rhs, |_, k| {
            if k.is_base() {
                return Key::Base;
            }
            let parts = k.as_list();
            Key::pair(Key::list(parts[..2].to_vec()), Key::list(parts[2..].to_vec()))
        });
        iso.validate(&lhs, &rhs).unwrap();
        assert!(iso.is_bijective(&lhs, &rhs));
    }

    #[test]
    fn smash_symmetry_canonical_iso() {
        let e = FinGroup::trivial();
        let x = circle(e.clone(), 2);
        let y = sphere0(e, 2);
        let xy = smash(&x, &y).unwrap();
        let yx = smash(&y, &x).unwrap();
        let tw = SMap::from_fn(&xy, &yx, |_, k| {
            if k.is_base() {
                Key::Base
            } else {
                let (a, b) = k.as_pair();
                Key::pair(b.clone(), a.clone())
            }
        });
        tw.validate(&xy, &yx).unwrap();
        assert!(tw.is_bijective(&xy, &yx));
    }

    #[test]
    fn constant_homotopy_verifies() {
        let x = circle(FinGroup::trivial(), 3);
        let id = SMap::identity(&x);
        let h = SHomotopy::constant(&x, &x, &id, 3);
        is_homotopy(&x, &x, &id, &id, &h).unwrap();
    }

    #[test]
    fn power_and_twisted_power_validate() {
        let g = c2();
        let x = circle(g.clone(), 2);
        power(&x, 2).validate().unwrap();
        twisted_power(&x, &GSetAction::regular(g)).validate().unwrap();
    }
}
