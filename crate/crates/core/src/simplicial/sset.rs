use std::collections::HashMap;
use std::rc::Rc;

use crate::fingroups::FinGroup;

use super::key::Key;
use super::SimplicialError;

/// One level of a based G-simplicial set: a sorted finite set of simplices
/// with its basepoint, face/degeneracy tables into the neighbouring levels,
/// and the action of every group element.
#[derive(Clone, Debug)]
pub struct Level {
    pub simplices: Vec<Key>,
    pub index: HashMap<Key, usize>,
    pub base: usize,
    /// `faces[i][s]`: index in the level below; present for degrees >= 1,
    /// one table per `0 <= i <= q`.
    pub faces: Vec<Vec<usize>>,
    /// `degens[i][s]`: index in the level above; present below the degree
    /// bound, one table per `0 <= i <= q`.
    pub degens: Vec<Vec<usize>>,
    /// `action[g][s]`: index in this level.
    pub action: Vec<Vec<usize>>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn key(&self, s: usize) -> &Key {
        &self.simplices[s]
    }

    pub fn lookup(&self, key: &Key) -> usize {
        *self
            .index
            .get(key)
            .unwrap_or_else(|| panic!("simplex not present in level: {key:?}"))
    }
}

/// A finite based G-simplicial set materialized up to a degree bound.
#[derive(Clone, Debug)]
pub struct SSet {
    pub group: Rc<FinGroup>,
    pub dmax: usize,
    pub levels: Vec<Level>,
}

impl SSet {
    /// Materializes a based G-simplicial set from per-level key sets and
    /// structure maps given as key functions.  The basepoint key must be a
    /// member of each level.
    pub fn build(
        group: Rc<FinGroup>,
        dmax: usize,
        level_keys: Vec<Vec<Key>>,
        base_key: impl Fn(usize) -> Key,
        face: impl Fn(usize, usize, &Key) -> Key,
        degen: impl Fn(usize, usize, &Key) -> Key,
        act: impl Fn(usize, usize, &Key) -> Key,
    ) -> SSet {
        assert_eq!(level_keys.len(), dmax + 1, "need keys for every level");
        let mut shells: Vec<(Vec<Key>, HashMap<Key, usize>, usize)> = level_keys
            .into_iter()
            .enumerate()
            .map(|(q, mut keys)| {
                keys.sort();
                keys.dedup();
                let index: HashMap<Key, usize> =
                    keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
                let base = *index
                    .get(&base_key(q))
                    .unwrap_or_else(|| panic!("basepoint missing at level {q}"));
                (keys, index, base)
            })
            .collect();

        let mut levels: Vec<Level> = Vec::with_capacity(dmax + 1);
        for q in 0..=dmax {
            let (keys, index, base) = std::mem::take(&mut shells[q]);
            let table = |target: usize, f: &dyn Fn(&Key) -> Key| -> Vec<usize> {
                let (tkeys, tindex): (&Vec<Key>, &HashMap<Key, usize>) = if target == q {
                    (&keys, &index)
                } else if target < q {
                    (&levels[target].simplices, &levels[target].index)
                } else {
                    (&shells[target].0, &shells[target].1)
                };
                let _ = tkeys;
                keys.iter()
                    .map(|k| {
                        let out = f(k);
                        *tindex
                            .get(&out)
                            .unwrap_or_else(|| panic!("image simplex missing at level {target}: {out:?}"))
                    })
                    .collect()
            };
            let faces = if q == 0 {
                Vec::new()
            } else {
                (0..=q).map(|i| table(q - 1, &|k| face(q, i, k))).collect()
            };
            let degens = if q == dmax {
                Vec::new()
            } else {
                (0..=q).map(|i| table(q + 1, &|k| degen(q, i, k))).collect()
            };
            let action = group
                .elements()
                .map(|g| table(q, &|k| act(g, q, k)))
                .collect();
            levels.push(Level { simplices: keys, index, base, faces, degens, action });
        }
        SSet { group, dmax, levels }
    }

    pub fn level(&self, q: usize) -> &Level {
        &self.levels[q]
    }

    pub fn base_key(&self, q: usize) -> &Key {
        let lv = &self.levels[q];
        &lv.simplices[lv.base]
    }

    pub fn face(&self, q: usize, i: usize, s: usize) -> usize {
        self.levels[q].faces[i][s]
    }

    pub fn degen(&self, q: usize, i: usize, s: usize) -> usize {
        self.levels[q].degens[i][s]
    }

    pub fn act(&self, g: usize, q: usize, s: usize) -> usize {
        self.levels[q].action[g][s]
    }

    /// Key-level structure maps, convenient when building derived objects.
    pub fn face_key(&self, q: usize, i: usize, k: &Key) -> Key {
        let s = self.levels[q].lookup(k);
        self.levels[q - 1].simplices[self.face(q, i, s)].clone()
    }

    pub fn degen_key(&self, q: usize, i: usize, k: &Key) -> Key {
        let s = self.levels[q].lookup(k);
        self.levels[q + 1].simplices[self.degen(q, i, s)].clone()
    }

    pub fn act_key(&self, g: usize, q: usize, k: &Key) -> Key {
        let s = self.levels[q].lookup(k);
        self.levels[q].simplices[self.act(g, q, s)].clone()
    }

    /// Flags marking the simplices of level `q` that are degeneracies of the
    /// level below (all false in degree zero).
    pub fn degenerate_flags(&self, q: usize) -> Vec<bool> {
        let mut flags = vec![false; self.levels[q].len()];
        if q > 0 {
            for table in &self.levels[q - 1].degens {
                for &t in table {
                    flags[t] = true;
                }
            }
        }
        flags
    }

    /// A discrete object: every positive-degree simplex is degenerate.
    pub fn is_discrete(&self) -> bool {
        (1..=self.dmax).all(|q| self.degenerate_flags(q).into_iter().all(|f| f))
    }

    /// Exhaustive check of the simplicial identities, basepoint conditions,
    /// and equivariance of the structure maps on all stored degrees.
    pub fn validate(&self) -> Result<(), SimplicialError> {
        let order = self.group.order();
        for q in 0..=self.dmax {
            let lv = &self.levels[q];
            // basepoint is preserved and is the degeneracy of the one below
            for i in 0..lv.faces.len() {
                if lv.faces[i][lv.base] != self.levels[q - 1].base {
                    return Err(SimplicialError::BasepointNotPreserved { degree: q });
                }
            }
            for i in 0..lv.degens.len() {
                if lv.degens[i][lv.base] != self.levels[q + 1].base {
                    return Err(SimplicialError::BasepointNotPreserved { degree: q });
                }
            }
            for g in 0..order {
                if lv.action[g][lv.base] != lv.base {
                    return Err(SimplicialError::BasepointNotPreserved { degree: q });
                }
            }
            // group action is an action
            for s in 0..lv.len() {
                if lv.action[0][s] != s {
                    return Err(SimplicialError::NotAnAction { degree: q });
                }
            }
            for g in 0..order {
                for h in 0..order {
                    let gh = self.group.mul(g, h);
                    for s in 0..lv.len() {
                        if lv.action[gh][s] != lv.action[g][lv.action[h][s]] {
                            return Err(SimplicialError::NotAnAction { degree: q });
                        }
                    }
                }
            }
        }
        // simplicial identities
        for q in 0..=self.dmax {
            for s in 0..self.levels[q].len() {
                // d_i d_j = d_{j-1} d_i for i < j
                if q >= 2 {
                    for j in 1..=q {
                        for i in 0..j {
                            let a = self.face(q - 1, i, self.face(q, j, s));
                            let b = self.face(q - 1, j - 1, self.face(q, i, s));
                            if a != b {
                                return Err(SimplicialError::IdentityViolated {
                                    which: "d_i d_j = d_{j-1} d_i",
                                    degree: q,
                                    index: s,
                                });
                            }
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i for i <= j
                if q + 2 <= self.dmax {
                    for j in 0..=q {
                        for i in 0..=j {
                            let a = self.degen(q + 1, i, self.degen(q, j, s));
                            let b = self.degen(q + 1, j + 1, self.degen(q, i, s));
                            if a != b {
                                return Err(SimplicialError::IdentityViolated {
                                    which: "s_i s_j = s_{j+1} s_i",
                                    degree: q,
                                    index: s,
                                });
                            }
                        }
                    }
                }
                // d_i s_j relations
                if q + 1 <= self.dmax {
                    for j in 0..=q {
                        for i in 0..=q + 1 {
                            let a = self.face(q + 1, i, self.degen(q, j, s));
                            let expect = if i < j {
                                // d_i s_j = s_{j-1} d_i
                                self.degen(q - 1, j - 1, self.face(q, i, s))
                            } else if i == j || i == j + 1 {
                                s
                            } else {
                                // d_i s_j = s_j d_{i-1}
                                self.degen(q - 1, j, self.face(q, i - 1, s))
                            };
                            if a != expect {
                                return Err(SimplicialError::IdentityViolated {
                                    which: "d_i s_j",
                                    degree: q,
                                    index: s,
                                });
                            }
                        }
                    }
                }
                // equivariance of faces and degeneracies
                for g in 0..order {
                    let gs = self.act(g, q, s);
                    for i in 0..self.levels[q].faces.len() {
                        if self.act(g, q - 1, self.face(q, i, s)) != self.face(q, i, gs) {
                            return Err(SimplicialError::NotEquivariant { degree: q });
                        }
                    }
                    for i in 0..self.levels[q].degens.len() {
                        if self.act(g, q + 1, self.degen(q, i, s)) != self.degen(q, i, gs) {
                            return Err(SimplicialError::NotEquivariant { degree: q });
                        }
                    }
                }
            }
        }
        // degree-q basepoint is the q-fold degeneracy of the degree-0 one
        let mut b = self.levels[0].base;
        for q in 0..self.dmax {
            b = self.degen(q, 0, b);
            if b != self.levels[q + 1].base {
                return Err(SimplicialError::BasepointNotPreserved { degree: q + 1 });
            }
        }
        Ok(())
    }

    /// Total number of simplices across stored levels.
    pub fn total_size(&self) -> usize {
        self.levels.iter().map(Level::len).sum()
    }

    /// Per-level counts of nondegenerate simplices (the degree-0 basepoint
    /// is nondegenerate).
    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        (0..=self.dmax)
            .map(|q| {
                let flags = self.degenerate_flags(q);
                flags.into_iter().filter(|f| !f).count()
            })
            .collect()
    }
}
