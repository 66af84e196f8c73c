use std::collections::BTreeMap;
use std::rc::Rc;

use crate::fingroups::{FinGroup, GSetAction};
use crate::util::UnionFind;

use super::key::Key;
use super::smap::SMap;
use super::sset::SSet;
use super::SimplicialError;

/// The one-point object: basepoint only in every degree.
pub fn point(group: Rc<FinGroup>, dmax: usize) -> SSet {
    SSet::build(
        group,
        dmax,
        (0..=dmax).map(|_| vec![Key::Base]).collect(),
        |_| Key::Base,
        |_, _, _| Key::Base,
        |_, _, _| Key::Base,
        |_, _, _| Key::Base,
    )
}

/// A discrete based set `{*, 1, .., n}` with trivial action, constant in
/// every degree.
pub fn discrete(group: Rc<FinGroup>, n: usize, dmax: usize) -> SSet {
    discrete_with_action(&GSetAction::trivial(group, n), dmax)
}

/// A discrete based G-set given by an action on `{1, .., n}`.
pub fn discrete_with_action(alpha: &GSetAction, dmax: usize) -> SSet {
    let keys: Vec<Key> =
        std::iter::once(Key::Base).chain((1..=alpha.size()).map(|i| Key::int(i as i64))).collect();
    SSet::build(
        alpha.group.clone(),
        dmax,
        (0..=dmax).map(|_| keys.clone()).collect(),
        |_| Key::Base,
        |_, _, k| k.clone(),
        |_, _, k| k.clone(),
        |g, _, k| {
            if k.is_base() {
                Key::Base
            } else {
                Key::int(alpha.perm(g).apply(k.as_int() as usize) as i64)
            }
        },
    )
}

/// `S^0`: two points, trivial action.
pub fn sphere0(group: Rc<FinGroup>, dmax: usize) -> SSet {
    discrete(group, 1, dmax)
}

// The simplicial circle: the interval with its two endpoints identified to
// the basepoint.  A degree-q simplex of the interval is a monotone 0/1
// string of length q+1, recorded by its number of leading zeros; the two
// constant strings become the basepoint.
fn circle_encode(q: usize, zeros: usize) -> Key {
    if zeros == 0 || zeros == q + 1 {
        Key::Base
    } else {
        Key::int(zeros as i64)
    }
}

pub fn circle(group: Rc<FinGroup>, dmax: usize) -> SSet {
    SSet::build(
        group,
        dmax,
        (0..=dmax)
            .map(|q| (0..=q + 1).map(|z| circle_encode(q, z)).collect())
            .collect(),
        |_| Key::Base,
        |q, i, k| {
            if k.is_base() {
                return Key::Base;
            }
            let z = k.as_int() as usize;
            // dropping position i removes a zero exactly when i < z
            circle_encode(q - 1, if i < z { z - 1 } else { z })
        },
        |q, i, k| {
            if k.is_base() {
                return Key::Base;
            }
            let z = k.as_int() as usize;
            circle_encode(q + 1, if i < z { z + 1 } else { z })
        },
        |_, _, k| k.clone(),
    )
}

/// Smash product with the diagonal action; simplices are pairs with either
/// coordinate basepoint collapsed.
pub fn smash(x: &SSet, y: &SSet) -> Result<SSet, SimplicialError> {
    if x.group != y.group {
        return Err(SimplicialError::GroupMismatch);
    }
    let dmax = x.dmax.min(y.dmax);
    let pair = |xb: &Key, xk: &Key, yb: &Key, yk: &Key| -> Key {
        if xk == xb || yk == yb {
            Key::Base
        } else {
            Key::pair(xk.clone(), yk.clone())
        }
    };
    let levels = (0..=dmax)
        .map(|q| {
            let (bx, by) = (x.base_key(q), y.base_key(q));
            let mut keys = vec![Key::Base];
            for xk in &x.level(q).simplices {
                for yk in &y.level(q).simplices {
                    let k = pair(bx, xk, by, yk);
                    if !k.is_base() {
                        keys.push(k);
                    }
                }
            }
            keys
        })
        .collect();
    let on_parts = |q: usize, k: &Key, fx: &dyn Fn(&Key) -> Key, fy: &dyn Fn(&Key) -> Key, qt: usize| -> Key {
        let _ = q;
        if k.is_base() {
            return Key::Base;
        }
        let (a, b) = k.as_pair();
        pair(x.base_key(qt), &fx(a), y.base_key(qt), &fy(b))
    };
    Ok(SSet::build(
        x.group.clone(),
        dmax,
        levels,
        |_| Key::Base,
        |q, i, k| on_parts(q, k, &|a| x.face_key(q, i, a), &|b| y.face_key(q, i, b), q - 1),
        |q, i, k| on_parts(q, k, &|a| x.degen_key(q, i, a), &|b| y.degen_key(q, i, b), q + 1),
        |g, q, k| on_parts(q, k, &|a| x.act_key(g, q, a), &|b| y.act_key(g, q, b), q),
    ))
}

/// Wedge of finitely many objects over the same group; summand `i` is tagged
/// with `i`.
pub fn wedge(parts: &[&SSet]) -> SSet {
    assert!(!parts.is_empty());
    let group = parts[0].group.clone();
    let dmax = parts.iter().map(|p| p.dmax).min().unwrap();
    let levels = (0..=dmax)
        .map(|q| {
            let mut keys = vec![Key::Base];
            for (t, p) in parts.iter().enumerate() {
                for k in &p.level(q).simplices {
                    if k != p.base_key(q) {
                        keys.push(Key::tag(t as u32, k.clone()));
                    }
                }
            }
            keys
        })
        .collect();
    let on = |k: &Key, f: &dyn Fn(usize, &Key) -> Key, qt: usize| -> Key {
        if k.is_base() {
            return Key::Base;
        }
        let (t, inner) = k.as_tag();
        let out = f(t as usize, inner);
        if &out == parts[t as usize].base_key(qt) {
            Key::Base
        } else {
            Key::tag(t, out)
        }
    };
    SSet::build(
        group,
        dmax,
        levels,
        |_| Key::Base,
        |q, i, k| on(k, &|t, a| parts[t].face_key(q, i, a), q - 1),
        |q, i, k| on(k, &|t, a| parts[t].degen_key(q, i, a), q + 1),
        |g, q, k| on(k, &|t, a| parts[t].act_key(g, q, a), q),
    )
}

/// Cartesian power `X^n` (levelwise tuples) with the diagonal G-action and,
/// optionally, coordinates permuted through `alpha` so that
/// `(g . t)_i = g . t_{alpha(g)^{-1}(i)}`.
pub fn twisted_power(x: &SSet, alpha: &GSetAction) -> SSet {
    let n = alpha.size();
    let dmax = x.dmax;
    let levels = (0..=dmax)
        .map(|q| {
            let mut keys = Vec::new();
            let mut tuple = vec![0usize; n];
            loop {
                keys.push(Key::list(tuple.iter().map(|&s| x.level(q).simplices[s].clone()).collect()));
                let mut i = n;
                loop {
                    if i == 0 {
                        return keys;
                    }
                    i -= 1;
                    if tuple[i] + 1 < x.level(q).len() {
                        tuple[i] += 1;
                        for v in tuple[i + 1..].iter_mut() {
                            *v = 0;
                        }
                        break;
                    }
                }
            }
        })
        .collect::<Vec<_>>();
    let componentwise = |k: &Key, f: &dyn Fn(&Key) -> Key| -> Key {
        Key::list(k.as_list().iter().map(f).collect())
    };
    SSet::build(
        x.group.clone(),
        dmax,
        levels,
        |q| Key::list(vec![x.base_key(q).clone(); n]),
        |q, i, k| componentwise(k, &|a| x.face_key(q, i, a)),
        |q, i, k| componentwise(k, &|a| x.degen_key(q, i, a)),
        |g, q, k| {
            let parts = k.as_list();
            let ginv = alpha.group.inverse(g);
            Key::list(
                (0..n)
                    .map(|i| x.act_key(g, q, &parts[alpha.perm(ginv).apply0(i)]))
                    .collect(),
            )
        },
    )
}

pub fn power(x: &SSet, n: usize) -> SSet {
    twisted_power(x, &GSetAction::trivial(x.group.clone(), n))
}

/// The permutation-representation sphere `S^V`: the `|V|`-fold smash power
/// of the circle with `G` permuting the factors through `V`.  Simplices are
/// all-nondegenerate-coordinate tuples... rather: tuples with no basepoint
/// coordinate, plus the collapsed point.
pub fn sphere(v: &GSetAction, dmax: usize) -> SSet {
    let n = v.size();
    let circ = circle(v.group.clone(), dmax);
    let levels: Vec<Vec<Key>> = (0..=dmax)
        .map(|q| {
            let nonbase: Vec<&Key> =
                circ.level(q).simplices.iter().filter(|k| !k.is_base()).collect();
            let mut keys = vec![Key::Base];
            let mut tuple = vec![0usize; n];
            if n == 0 {
                keys.push(Key::list(vec![]));
                return keys;
            }
            if nonbase.is_empty() {
                return keys;
            }
            'outer: loop {
                keys.push(Key::list(tuple.iter().map(|&s| nonbase[s].clone()).collect()));
                let mut i = n;
                loop {
                    if i == 0 {
                        break 'outer;
                    }
                    i -= 1;
                    if tuple[i] + 1 < nonbase.len() {
                        tuple[i] += 1;
                        for xi in tuple[i + 1..].iter_mut() {
                            *xi = 0;
                        }
                        break;
                    }
                }
            }
            keys
        })
        .collect();
    let componentwise = |k: &Key, f: &dyn Fn(&Key) -> Key| -> Key {
        if k.is_base() {
            return Key::Base;
        }
        let parts: Vec<Key> = k.as_list().iter().map(f).collect();
        if parts.iter().any(Key::is_base) {
            Key::Base
        } else {
            Key::list(parts)
        }
    };
    SSet::build(
        v.group.clone(),
        dmax,
        levels,
        |_| Key::Base,
        |q, i, k| componentwise(k, &|a| circ.face_key(q, i, a)),
        |q, i, k| componentwise(k, &|a| circ.degen_key(q, i, a)),
        |g, q, k| {
            if k.is_base() {
                return Key::Base;
            }
            let parts = k.as_list();
            let ginv = v.group.inverse(g);
            let moved: Vec<Key> = (0..n)
                .map(|i| circ.act_key(g, q, &parts[v.perm(ginv).apply0(i)]))
                .collect();
            if moved.iter().any(Key::is_base) {
                Key::Base
            } else {
                Key::list(moved)
            }
        },
    )
}

/// Levelwise H-fixed simplices; the result is a plain based simplicial set
/// (trivial group).
pub fn fixed_points(x: &SSet, subgroup: &[usize]) -> SSet {
    let levels = (0..=x.dmax)
        .map(|q| {
            x.level(q)
                .simplices
                .iter()
                .enumerate()
                .filter(|(s, _)| subgroup.iter().all(|&h| x.act(h, q, *s) == *s))
                .map(|(_, k)| k.clone())
                .collect()
        })
        .collect();
    SSet::build(
        FinGroup::trivial(),
        x.dmax,
        levels,
        |q| x.base_key(q).clone(),
        |q, i, k| x.face_key(q, i, k),
        |q, i, k| x.degen_key(q, i, k),
        |_, _, k| k.clone(),
    )
}

/// An auxiliary action on the levels of an `SSet`, used for orbit passage.
pub struct AuxAction {
    pub group: Rc<FinGroup>,
    /// `tables[g][q][s]`
    pub tables: Vec<Vec<Vec<usize>>>,
}

impl AuxAction {
    /// Checks the auxiliary action commutes with faces, degeneracies and the
    /// intrinsic G-action.
    pub fn commutes_with(&self, x: &SSet) -> bool {
        self.tables.iter().all(|per_g| {
            (0..=x.dmax).all(|q| {
                (0..x.level(q).len()).all(|s| {
                    let t = per_g[q][s];
                    (q == 0
                        || (0..=q).all(|i| per_g[q - 1][x.face(q, i, s)] == x.face(q, i, t)))
                        && (q == x.dmax
                            || (0..=q).all(|i| per_g[q + 1][x.degen(q, i, s)] == x.degen(q, i, t)))
                        && x.group.elements().all(|g| per_g[q][x.act(g, q, s)] == x.act(g, q, t))
                })
            })
        })
    }
}

/// Orbit quotient by a commuting auxiliary action, with lexicographically
/// minimal representatives.  Also returns the projection.
pub fn orbit_quotient(x: &SSet, aux: &AuxAction) -> Result<(SSet, SMap), SimplicialError> {
    if !aux.commutes_with(x) {
        return Err(SimplicialError::ActionDoesNotCommute);
    }
    // per level: canonical representative key of each orbit
    let mut rep_key: Vec<Vec<Key>> = Vec::new();
    for q in 0..=x.dmax {
        let mut uf = UnionFind::new(x.level(q).len());
        for per_g in &aux.tables {
            for (s, &t) in per_g[q].iter().enumerate() {
                uf.union(s, t);
            }
        }
        let mut min_per_class: BTreeMap<usize, Key> = BTreeMap::new();
        for s in 0..x.level(q).len() {
            let root = uf.find(s);
            let k = x.level(q).key(s);
            let entry = min_per_class.entry(root).or_insert_with(|| k.clone());
            if k < entry {
                *entry = k.clone();
            }
        }
        let mut reps = vec![Key::Base; x.level(q).len()];
        for s in 0..x.level(q).len() {
            reps[s] = min_per_class[&uf.find(s)].clone();
        }
        rep_key.push(reps);
    }
    let rep_of = |q: usize, k: &Key| -> Key { rep_key[q][x.level(q).lookup(k)].clone() };
    let levels: Vec<Vec<Key>> =
        (0..=x.dmax).map(|q| rep_key[q].iter().cloned().collect::<Vec<_>>()).collect();
    let quotient = SSet::build(
        x.group.clone(),
        x.dmax,
        levels,
        |q| rep_of(q, x.base_key(q)),
        |q, i, k| rep_of(q - 1, &x.face_key(q, i, k)),
        |q, i, k| rep_of(q + 1, &x.degen_key(q, i, k)),
        |g, q, k| rep_of(q, &x.act_key(g, q, k)),
    );
    let proj = SMap::from_fn(x, &quotient, |q, k| rep_of(q, k));
    Ok((quotient, proj))
}

/// An unbased finite simplicial set (no group, no basepoint), used for
/// half-smash tensors.
#[derive(Clone, Debug)]
pub struct PlainSSet {
    pub dmax: usize,
    pub levels: Vec<Vec<Key>>,
    /// `faces[q][i][s]`, `degens[q][i][s]`
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degens: Vec<Vec<Vec<usize>>>,
}

impl PlainSSet {
    pub fn point(dmax: usize) -> PlainSSet {
        PlainSSet {
            dmax,
            levels: (0..=dmax).map(|_| vec![Key::int(0)]).collect(),
            faces: (0..=dmax).map(|q| vec![vec![0]; if q == 0 { 0 } else { q + 1 }]).collect(),
            degens: (0..=dmax).map(|q| if q == dmax { vec![] } else { vec![vec![0]; q + 1] }).collect(),
        }
    }

    /// Two points, discrete.
    pub fn two_points(dmax: usize) -> PlainSSet {
        PlainSSet {
            dmax,
            levels: (0..=dmax).map(|_| vec![Key::int(0), Key::int(1)]).collect(),
            faces: (0..=dmax)
                .map(|q| vec![vec![0, 1]; if q == 0 { 0 } else { q + 1 }])
                .collect(),
            degens: (0..=dmax)
                .map(|q| if q == dmax { vec![] } else { vec![vec![0, 1]; q + 1] })
                .collect(),
        }
    }

    /// The 1-simplex: monotone 0/1 strings, keyed by leading-zero count.
    pub fn interval(dmax: usize) -> PlainSSet {
        let levels: Vec<Vec<Key>> =
            (0..=dmax).map(|q| (0..=q + 1).map(|z| Key::int(z as i64)).collect()).collect();
        let faces = (0..=dmax)
            .map(|q| {
                if q == 0 {
                    vec![]
                } else {
                    (0..=q)
                        .map(|i| {
                            (0..=q + 1)
                                .map(|z| if i < z { z - 1 } else { z })
                                .collect()
                        })
                        .collect()
                }
            })
            .collect();
        let degens = (0..=dmax)
            .map(|q| {
                if q == dmax {
                    vec![]
                } else {
                    (0..=q)
                        .map(|i| {
                            (0..=q + 1)
                                .map(|z| if i < z { z + 1 } else { z })
                                .collect()
                        })
                        .collect()
                }
            })
            .collect();
        PlainSSet { dmax, levels, faces, degens }
    }

    pub fn lookup(&self, q: usize, k: &Key) -> usize {
        self.levels[q].iter().position(|x| x == k).expect("plain simplex present")
    }
}

/// Half-smash `X /\ A_+`.
pub fn half_smash(x: &SSet, a: &PlainSSet) -> SSet {
    let dmax = x.dmax.min(a.dmax);
    let levels = (0..=dmax)
        .map(|q| {
            let mut keys = vec![Key::Base];
            for xk in &x.level(q).simplices {
                if xk == x.base_key(q) {
                    continue;
                }
                for ak in &a.levels[q] {
                    keys.push(Key::pair(xk.clone(), ak.clone()));
                }
            }
            keys
        })
        .collect();
    let on = |q: usize,
              k: &Key,
              fx: &dyn Fn(&Key) -> Key,
              fa: &dyn Fn(usize) -> usize,
              qt: usize|
     -> Key {
        if k.is_base() {
            return Key::Base;
        }
        let (xk, ak) = k.as_pair();
        let nx = fx(xk);
        if &nx == x.base_key(qt) {
            Key::Base
        } else {
            Key::pair(nx, a.levels[qt][fa(a.lookup(q, ak))].clone())
        }
    };
    SSet::build(
        x.group.clone(),
        dmax,
        levels,
        |_| Key::Base,
        |q, i, k| on(q, k, &|xk| x.face_key(q, i, xk), &|s| a.faces[q][i][s], q - 1),
        |q, i, k| on(q, k, &|xk| x.degen_key(q, i, xk), &|s| a.degens[q][i][s], q + 1),
        |g, q, k| on(q, k, &|xk| x.act_key(g, q, xk), &|s| s, q),
    )
}
