use crate::fingroups::{graph_subgroups, subgroups, BasedMap, GraphSubgroup};
use crate::simplicial::{twisted_power, Key, SMap, SSet};

use super::diagram::Diagram;
use super::DiagramError;

/// The target of the Segal map at an object: the power of the value at `1`
/// twisted by the object's action.
pub fn segal_target(x: &Diagram, obj: usize) -> SSet {
    let one = x.cat.trivial_object_of_size(1);
    twisted_power(x.value(one), &x.cat.object(obj).action)
}

/// The Segal map at an object: coordinates induced by the projections.
pub fn segal_map(x: &Diagram, obj: usize) -> (SSet, SMap) {
    let one = x.cat.trivial_object_of_size(1);
    let n = x.cat.object(obj).size();
    let target = segal_target(x, obj);
    let coords: Vec<&SMap> =
        (1..=n).map(|i| x.map_for(obj, one, &BasedMap::projection(i, n))).collect();
    let map = SMap::from_fn(x.value(obj), &target, |q, k| {
        let s = x.value(obj).level(q).lookup(k);
        Key::list(
            coords
                .iter()
                .map(|c| x.value(one).level(q).key(c.apply(q, s)).clone())
                .collect(),
        )
    });
    (target, map)
}

/// Fixed points of a finite `G x Sigma_n`-set presented as a level of a
/// diagram value: `(g, sigma)` acts by the value action of `g` composed
/// with the functorial action of `sigma`.
fn lambda_fixed(x: &Diagram, obj: usize, lam: &GraphSubgroup) -> Vec<usize> {
    let v = x.value(obj);
    (0..v.level(0).len())
        .filter(|&s| {
            lam.elements.iter().all(|(g, sigma)| {
                let sig = x.map_for(obj, obj, &BasedMap::from_permutation(sigma));
                v.act(*g, 0, sig.apply(0, s)) == s
            })
        })
        .collect()
}

fn lambda_fixed_target(x: &Diagram, obj: usize, target: &SSet, lam: &GraphSubgroup) -> Vec<usize> {
    // on the power, (g, sigma) permutes coordinates by sigma and acts by g
    let one = x.cat.trivial_object_of_size(1);
    let xv = x.value(one);
    let n = x.cat.object(obj).size();
    (0..target.level(0).len())
        .filter(|&s| {
            let k = target.level(0).key(s);
            let parts = k.as_list();
            lam.elements.iter().all(|(g, sigma)| {
                let moved: Vec<Key> = (0..n)
                    .map(|i| xv.act_key(*g, 0, &parts[sigma.inverse().apply0(i)]))
                    .collect();
                Key::list(moved) == *k
            })
        })
        .collect()
}

/// Specialness for discrete diagrams over the plain category: for every
/// size `n` and every graph subgroup of `G x Sigma_n`, the fixed-point
/// restriction of the Segal map is a bijection.
pub fn is_special_discrete(x: &Diagram) -> Result<bool, DiagramError> {
    if !x.is_discrete() {
        return Err(DiagramError::NotDiscrete);
    }
    for obj in 0..x.cat.object_count() {
        if !x.cat.object(obj).action.is_trivial_action() {
            continue;
        }
        let n = x.cat.object(obj).size();
        let lams = graph_subgroups(&x.cat.group, n).map_err(DiagramError::Group)?;
        let (target, delta) = segal_map(x, obj);
        for lam in &lams {
            let src_fixed = lambda_fixed(x, obj, lam);
            let dst_fixed = lambda_fixed_target(x, obj, &target, lam);
            // delta restricted to fixed points must be a bijection
            let image: Vec<usize> = src_fixed.iter().map(|&s| delta.apply(0, s)).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != src_fixed.len() || sorted != dst_fixed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The equivariant counterpart for discrete diagrams over the equivariant
/// category: for every object and every subgroup `H` of `G`, the H-fixed
/// restriction of the Segal map is a bijection.
pub fn is_special_discrete_equivariant(y: &Diagram) -> Result<bool, DiagramError> {
    if !y.is_discrete() {
        return Err(DiagramError::NotDiscrete);
    }
    let subs = subgroups(&y.cat.group);
    for obj in 0..y.cat.object_count() {
        let (target, delta) = segal_map(y, obj);
        let v = y.value(obj);
        for h in &subs {
            let src_fixed: Vec<usize> = (0..v.level(0).len())
                .filter(|&s| h.iter().all(|&g| v.act(g, 0, s) == s))
                .collect();
            let dst_fixed: Vec<usize> = (0..target.level(0).len())
                .filter(|&s| h.iter().all(|&g| target.act(g, 0, s) == s))
                .collect();
            let image: Vec<usize> = src_fixed.iter().map(|&s| delta.apply(0, s)).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != src_fixed.len() || sorted != dst_fixed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
