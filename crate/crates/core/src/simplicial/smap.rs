use super::key::Key;
use super::sset::SSet;
use super::SimplicialError;

/// A based G-map of simplicial sets, as per-degree index tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMap {
    pub maps: Vec<Vec<usize>>,
}

impl SMap {
    pub fn from_fn(src: &SSet, dst: &SSet, f: impl Fn(usize, &Key) -> Key) -> SMap {
        let maps = (0..=src.dmax.min(dst.dmax))
            .map(|q| {
                src.level(q)
                    .simplices
                    .iter()
                    .map(|k| dst.level(q).lookup(&f(q, k)))
                    .collect()
            })
            .collect();
        SMap { maps }
    }

    pub fn identity(x: &SSet) -> SMap {
        SMap { maps: (0..=x.dmax).map(|q| (0..x.level(q).len()).collect()).collect() }
    }

    pub fn constant_base(src: &SSet, dst: &SSet) -> SMap {
        SMap {
            maps: (0..=src.dmax.min(dst.dmax))
                .map(|q| vec![dst.level(q).base; src.level(q).len()])
                .collect(),
        }
    }

    pub fn degrees(&self) -> usize {
        self.maps.len()
    }

    pub fn apply(&self, q: usize, s: usize) -> usize {
        self.maps[q][s]
    }

    pub fn apply_key(&self, src: &SSet, dst: &SSet, q: usize, k: &Key) -> Key {
        dst.level(q).simplices[self.maps[q][src.level(q).lookup(k)]].clone()
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &SMap) -> SMap {
        let maps = first
            .maps
            .iter()
            .zip(&self.maps)
            .map(|(f, g)| f.iter().map(|&s| g[s]).collect())
            .collect();
        SMap { maps }
    }

    pub fn is_bijective(&self, src: &SSet, dst: &SSet) -> bool {
        self.maps.iter().enumerate().all(|(q, table)| {
            if table.len() != dst.level(q).len() {
                return false;
            }
            let mut seen = vec![false; table.len()];
            table.iter().all(|&t| {
                if seen[t] {
                    false
                } else {
                    seen[t] = true;
                    true
                }
            })
        }) && src.dmax == dst.dmax
    }

    pub fn is_surjective(&self, dst: &SSet) -> bool {
        self.maps.iter().enumerate().all(|(q, table)| {
            let mut seen = vec![false; dst.level(q).len()];
            for &t in table {
                seen[t] = true;
            }
            seen.into_iter().all(|b| b)
        })
    }

    /// Checks based-ness, equivariance, and commutation with faces and
    /// degeneracies on all degrees the map is stored for.
    pub fn validate(&self, src: &SSet, dst: &SSet) -> Result<(), SimplicialError> {
        let dmax = self.maps.len() - 1;
        for q in 0..=dmax {
            if self.maps[q][src.level(q).base] != dst.level(q).base {
                return Err(SimplicialError::MapNotBased { degree: q });
            }
            for s in 0..src.level(q).len() {
                let fs = self.maps[q][s];
                for g in src.group.elements() {
                    if self.maps[q][src.act(g, q, s)] != dst.act(g, q, fs) {
                        return Err(SimplicialError::MapNotEquivariant { degree: q, index: s });
                    }
                }
                if q >= 1 {
                    for i in 0..=q {
                        if self.maps[q - 1][src.face(q, i, s)] != dst.face(q, i, fs) {
                            return Err(SimplicialError::MapNotSimplicial { degree: q, index: s });
                        }
                    }
                }
                if q < dmax {
                    for i in 0..=q {
                        if self.maps[q + 1][src.degen(q, i, s)] != dst.degen(q, i, fs) {
                            return Err(SimplicialError::MapNotSimplicial { degree: q, index: s });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
