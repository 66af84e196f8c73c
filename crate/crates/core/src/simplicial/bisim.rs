use std::collections::HashMap;
use std::rc::Rc;

use crate::fingroups::FinGroup;

use super::key::Key;
use super::sset::SSet;
use super::SimplicialError;

/// One cell of a bisimplicial based G-set.
#[derive(Clone, Debug)]
pub struct BisimCell {
    pub simplices: Vec<Key>,
    pub index: HashMap<Key, usize>,
    pub base: usize,
    /// Horizontal (first-direction) structure: `hfaces[i]` maps to `(p-1, q)`.
    pub hfaces: Vec<Vec<usize>>,
    pub hdegens: Vec<Vec<usize>>,
    /// Vertical structure: `vfaces[i]` maps to `(p, q-1)`.
    pub vfaces: Vec<Vec<usize>>,
    pub vdegens: Vec<Vec<usize>>,
    pub action: Vec<Vec<usize>>,
}

/// A bisimplicial based G-set stored on the rectangle `p <= pmax`,
/// `q <= qmax`.
#[derive(Clone, Debug)]
pub struct Bisim {
    pub group: Rc<FinGroup>,
    pub pmax: usize,
    pub qmax: usize,
    /// `cells[p][q]`
    pub cells: Vec<Vec<BisimCell>>,
}

impl Bisim {
    pub fn cell(&self, p: usize, q: usize) -> &BisimCell {
        &self.cells[p][q]
    }

    /// Checks simplicial identities in both directions and that the two
    /// directions commute, plus equivariance and basepoint conditions.
    pub fn validate(&self) -> Result<(), SimplicialError> {
        let bad = |which: &'static str, p: usize, q: usize| {
            Err(SimplicialError::BisimIdentity { which, p, q })
        };
        for p in 0..=self.pmax {
            for q in 0..=self.qmax {
                let c = self.cell(p, q);
                for s in 0..c.simplices.len() {
                    // horizontal-vertical commutation on faces
                    if p >= 1 && q >= 1 {
                        for i in 0..=p {
                            for j in 0..=q {
                                let a = self.cell(p - 1, q).vfaces[j][c.hfaces[i][s]];
                                let b = self.cell(p, q - 1).hfaces[i][c.vfaces[j][s]];
                                if a != b {
                                    return bad("hv face commutation", p, q);
                                }
                            }
                        }
                    }
                    if p < self.pmax && q < self.qmax {
                        for i in 0..=p {
                            for j in 0..=q {
                                let a = self.cell(p + 1, q).vdegens[j][c.hdegens[i][s]];
                                let b = self.cell(p, q + 1).hdegens[i][c.vdegens[j][s]];
                                if a != b {
                                    return bad("hv degeneracy commutation", p, q);
                                }
                            }
                        }
                    }
                    if p >= 1 && q < self.qmax {
                        for i in 0..=p {
                            for j in 0..=q {
                                let a = self.cell(p - 1, q).vdegens[j][c.hfaces[i][s]];
                                let b = self.cell(p, q + 1).hfaces[i][c.vdegens[j][s]];
                                if a != b {
                                    return bad("hv mixed commutation", p, q);
                                }
                            }
                        }
                    }
                }
                // identities within each direction, via single-direction views
                self.row_identities(p, q)?;
            }
        }
        Ok(())
    }

    fn row_identities(&self, p: usize, q: usize) -> Result<(), SimplicialError> {
        let c = self.cell(p, q);
        let bad = |which: &'static str| Err(SimplicialError::BisimIdentity { which, p, q });
        for s in 0..c.simplices.len() {
            if p >= 2 {
                for j in 1..=p {
                    for i in 0..j {
                        let a = self.cell(p - 1, q).hfaces[i][c.hfaces[j][s]];
                        let b = self.cell(p - 1, q).hfaces[j - 1][c.hfaces[i][s]];
                        if a != b {
                            return bad("horizontal d_i d_j");
                        }
                    }
                }
            }
            if q >= 2 {
                for j in 1..=q {
                    for i in 0..j {
                        let a = self.cell(p, q - 1).vfaces[i][c.vfaces[j][s]];
                        let b = self.cell(p, q - 1).vfaces[j - 1][c.vfaces[i][s]];
                        if a != b {
                            return bad("vertical d_i d_j");
                        }
                    }
                }
            }
            if p < self.pmax {
                for j in 0..=p {
                    for i in 0..=p + 1 {
                        let up = c.hdegens[j][s];
                        let a = self.cell(p + 1, q).hfaces[i][up];
                        let expect = if i < j {
                            self.cell(p - 1, q).hdegens[j - 1][c.hfaces[i][s]]
                        } else if i == j || i == j + 1 {
                            s
                        } else {
                            self.cell(p - 1, q).hdegens[j][c.hfaces[i - 1][s]]
                        };
                        if a != expect {
                            return bad("horizontal d_i s_j");
                        }
                    }
                }
            }
            if q < self.qmax {
                for j in 0..=q {
                    for i in 0..=q + 1 {
                        let up = c.vdegens[j][s];
                        let a = self.cell(p, q + 1).vfaces[i][up];
                        let expect = if i < j {
                            self.cell(p, q - 1).vdegens[j - 1][c.vfaces[i][s]]
                        } else if i == j || i == j + 1 {
                            s
                        } else {
                            self.cell(p, q - 1).vdegens[j][c.vfaces[i - 1][s]]
                        };
                        if a != expect {
                            return bad("vertical d_i s_j");
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The diagonal simplicial set: level `n` is the `(n, n)` cell, with
    /// `d_i = d_i^h d_i^v` and `s_i = s_i^h s_i^v`.
    pub fn diagonal(&self) -> SSet {
        let dmax = self.pmax.min(self.qmax);
        let levels: Vec<Vec<Key>> =
            (0..=dmax).map(|n| self.cell(n, n).simplices.clone()).collect();
        SSet::build(
            self.group.clone(),
            dmax,
            levels,
            |n| {
                let c = self.cell(n, n);
                c.simplices[c.base].clone()
            },
            |n, i, k| {
                let c = self.cell(n, n);
                let s = c.index[k];
                let hv = self.cell(n - 1, n).vfaces[i][c.hfaces[i][s]];
                self.cell(n - 1, n - 1).simplices[hv].clone()
            },
            |n, i, k| {
                let c = self.cell(n, n);
                let s = c.index[k];
                let hv = self.cell(n + 1, n).vdegens[i][c.hdegens[i][s]];
                self.cell(n + 1, n + 1).simplices[hv].clone()
            },
            |g, n, k| {
                let c = self.cell(n, n);
                c.simplices[c.action[g][c.index[k]]].clone()
            },
        )
    }
}
