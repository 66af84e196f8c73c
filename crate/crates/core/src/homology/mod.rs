//! Integer homology of based G-simplicial sets via normalized reduced chains
//! and Smith normal form, with the nerve-of-a-group oracle and a truncation
//! stability runner.

mod snf;

pub use snf::{smith_invariants, SmithInvariants, SparseInt};

use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::One;

use crate::fingroups::FinGroup;
use crate::simplicial::{fixed_points, Key, SSet};

/// Normalized reduced chain complex: per degree, the free basis given by the
/// nondegenerate non-basepoint simplices and the boundary matrix to the
/// degree below.
pub struct ChainComplex {
    /// `basis[q]` lists the level indices forming the degree-q basis.
    pub basis: Vec<Vec<usize>>,
    /// `boundary[q]`, for `q >= 1`: rows indexed by `basis[q-1]`, columns by
    /// `basis[q]`.
    pub boundary: Vec<SparseInt>,
}

impl ChainComplex {
    /// Builds the complex of `x` through degree `top` (faces from level
    /// `top` need level `top - 1` only, so `top <= x.dmax`).
    pub fn of(x: &SSet, top: usize) -> ChainComplex {
        assert!(top <= x.dmax, "chain complex degree exceeds stored levels");
        let mut basis: Vec<Vec<usize>> = Vec::new();
        let mut pos: Vec<Vec<Option<usize>>> = Vec::new();
        for q in 0..=top {
            let flags = x.degenerate_flags(q);
            let lv = x.level(q);
            let mut b = Vec::new();
            let mut p = vec![None; lv.len()];
            for s in 0..lv.len() {
                if s != lv.base && !flags[s] {
                    p[s] = Some(b.len());
                    b.push(s);
                }
            }
            basis.push(b);
            pos.push(p);
        }
        let mut boundary = Vec::new();
        for q in 1..=top {
            let mut m = SparseInt::new(basis[q - 1].len(), basis[q].len());
            for (col, &s) in basis[q].iter().enumerate() {
                for i in 0..=q {
                    if let Some(row) = pos[q - 1][x.face(q, i, s)] {
                        m.add(row, col, if i % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
            boundary.push(m);
        }
        ChainComplex { basis, boundary }
    }

    /// Checks the composite of consecutive boundaries vanishes.
    pub fn boundary_squares_to_zero(&self, x: &SSet) -> bool {
        // recompute symbolically: d(d(s)) with signs over the basis
        let top = self.basis.len() - 1;
        for q in 2..=top {
            for &s in &self.basis[q] {
                let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
                for i in 0..=q {
                    let t = x.face(q, i, s);
                    let si = if i % 2 == 0 { 1i64 } else { -1 };
                    for j in 0..q {
                        let u = x.face(q - 1, j, t);
                        let sj = if j % 2 == 0 { 1i64 } else { -1 };
                        // project to the normalized basis
                        if self.basis[q - 2].contains(&u) {
                            *acc.entry(u).or_insert(0) += si * sj;
                        }
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced homology groups per degree: free rank plus ascending torsion
/// coefficients, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        HomologyGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(t: u64) -> Self {
        HomologyGroup { free_rank: 0, torsion: vec![BigInt::from(t)] }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl std::fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (q, g) in self.groups.iter().enumerate() {
            writeln!(f, "H_{q} = {g}")?;
        }
        Ok(())
    }
}

/// Reduced integer homology of `x` in degrees `0..=dmax`; `x` must be stored
/// through degree `dmax + 1` so the top boundary matrix exists.
pub fn reduced_homology(x: &SSet, dmax: usize) -> HomologyResult {
    assert!(x.dmax >= dmax + 1, "need one level above the top reported degree");
    let cc = ChainComplex::of(x, dmax + 1);
    let dims: Vec<usize> = cc.basis.iter().map(Vec::len).collect();
    let invs: Vec<SmithInvariants> = cc.boundary.into_iter().map(smith_invariants).collect();
    // invs[q-1] is the boundary from degree q
    let groups = (0..=dmax)
        .map(|q| {
            let rank_out = if q == 0 { 0 } else { invs[q - 1].rank() };
            let inv_in = &invs[q];
            HomologyGroup {
                free_rank: dims[q] - rank_out - inv_in.rank(),
                torsion: inv_in.factors.iter().filter(|t| **t > BigInt::one()).cloned().collect(),
            }
        })
        .collect();
    HomologyResult { groups }
}

/// Homology of the H-fixed subobject.
pub fn fixed_homology(x: &SSet, subgroup: &[usize], dmax: usize) -> HomologyResult {
    reduced_homology(&fixed_points(x, subgroup), dmax)
}

/// The nerve of a finite group: a reduced model of its classifying space.
/// Degree-q simplices are q-tuples of group elements; the all-identity tuple
/// is the basepoint.
pub fn nerve_of_group(a: &Rc<FinGroup>, dmax: usize) -> SSet {
    let encode = |tuple: &[usize]| -> Key {
        if tuple.iter().all(|&g| g == 0) {
            Key::Base
        } else {
            Key::list(tuple.iter().map(|&g| Key::int(g as i64)).collect())
        }
    };
    let decode = |q: usize, k: &Key| -> Vec<usize> {
        if k.is_base() {
            vec![0; q]
        } else {
            k.as_list().iter().map(|x| x.as_int() as usize).collect()
        }
    };
    let levels = (0..=dmax)
        .map(|q| {
            let mut keys = Vec::new();
            let mut tuple = vec![0usize; q];
            loop {
                keys.push(encode(&tuple));
                let mut i = q;
                loop {
                    if i == 0 {
                        return keys;
                    }
                    i -= 1;
                    if tuple[i] + 1 < a.order() {
                        tuple[i] += 1;
                        for v in tuple[i + 1..].iter_mut() {
                            *v = 0;
                        }
                        break;
                    }
                }
            }
        })
        .collect();
    let grp = a.clone();
    SSet::build(
        FinGroup::trivial(),
        dmax,
        levels,
        |_| Key::Base,
        move |q, i, k| {
            let t = decode(q, k);
            let mut out = Vec::with_capacity(q - 1);
            if i == 0 {
                out.extend_from_slice(&t[1..]);
            } else if i == q {
                out.extend_from_slice(&t[..q - 1]);
            } else {
                out.extend_from_slice(&t[..i - 1]);
                out.push(grp.mul(t[i - 1], t[i]));
                out.extend_from_slice(&t[i + 1..]);
            }
            encode(&out)
        },
        move |q, i, k| {
            let t = decode(q, k);
            let mut out = Vec::with_capacity(q + 1);
            out.extend_from_slice(&t[..i]);
            out.push(0);
            out.extend_from_slice(&t[i..]);
            encode(&out)
        },
        |_, _, k| k.clone(),
    )
}

/// Agreement report from re-running a bounded computation at several
/// truncation levels.
#[derive(Debug)]
pub struct StabilityReport {
    pub levels: Vec<(usize, HomologyResult)>,
    /// `agree[i]` compares levels `i` and `i + 1` degreewise.
    pub agree: Vec<Vec<bool>>,
}

impl StabilityReport {
    pub fn all_consecutive_agree(&self) -> bool {
        self.agree.iter().all(|v| v.iter().all(|&b| b))
    }
}

/// Reruns `compute` for each truncation in `ns` and tabulates degreewise
/// agreement between consecutive levels.  Evidence only: agreement at stored
/// truncations proves nothing about the untruncated value.
pub fn stability_run(
    ns: impl IntoIterator<Item = usize>,
    compute: impl Fn(usize) -> HomologyResult,
) -> StabilityReport {
    let levels: Vec<(usize, HomologyResult)> = ns.into_iter().map(|n| (n, compute(n))).collect();
    let agree = levels
        .windows(2)
        .map(|w| {
            let (a, b) = (&w[0].1, &w[1].1);
            (0..a.groups.len().min(b.groups.len()))
                .map(|q| a.groups[q] == b.groups[q])
                .collect()
        })
        .collect();
    StabilityReport { levels, agree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{circle, smash, sphere0, SMap};

    #[test]
    fn circle_homology() {
        let s1 = circle(FinGroup::trivial(), 3);
        let h = reduced_homology(&s1, 2);
        assert_eq!(h.groups[0], HomologyGroup::zero());
        assert_eq!(h.groups[1], HomologyGroup::free(1));
        assert_eq!(h.groups[2], HomologyGroup::zero());
    }

    #[test]
    fn two_sphere_homology() {
        let s1 = circle(FinGroup::trivial(), 4);
        let s2 = smash(&s1, &s1).unwrap();
        let h = reduced_homology(&s2, 3);
        assert_eq!(h.groups[1], HomologyGroup::zero());
        assert_eq!(h.groups[2], HomologyGroup::free(1));
        assert_eq!(h.groups[3], HomologyGroup::zero());
    }

    #[test]
    fn nerve_of_z2_homology() {
        let n = nerve_of_group(&FinGroup::cyclic(2), 4);
        n.validate().unwrap();
        assert_eq!(n.level(3).len(), 8);
        let h = reduced_homology(&n, 3);
        assert_eq!(h.groups[0], HomologyGroup::zero());
        assert_eq!(h.groups[1], HomologyGroup::cyclic(2));
        assert_eq!(h.groups[2], HomologyGroup::zero());
        assert_eq!(h.groups[3], HomologyGroup::cyclic(2));
    }

    #[test]
    fn nerve_of_z3_first_homology() {
        let n = nerve_of_group(&FinGroup::cyclic(3), 2);
        let h = reduced_homology(&n, 1);
        assert_eq!(h.groups[1], HomologyGroup::cyclic(3));
    }

    #[test]
    fn nerve_of_trivial_group_is_a_point() {
        let n = nerve_of_group(&FinGroup::trivial(), 3);
        assert!(n.levels.iter().all(|l| l.len() == 1));
    }

    #[test]
    fn boundary_squared_vanishes() {
        let s1 = circle(FinGroup::trivial(), 4);
        let s2 = smash(&s1, &s1).unwrap();
        let cc = ChainComplex::of(&s2, 4);
        assert!(cc.boundary_squares_to_zero(&s2));
        let n = nerve_of_group(&FinGroup::cyclic(2), 4);
        assert!(ChainComplex::of(&n, 4).boundary_squares_to_zero(&n));
    }

    #[test]
    fn homology_is_isomorphism_invariant() {
        // the x /\ S^0 copy of the circle has the same homology
        let e = FinGroup::trivial();
        let s1 = circle(e.clone(), 3);
        let copy = smash(&s1, &sphere0(e, 3)).unwrap();
        let iso = SMap::from_fn(&s1, &copy, |_, k| {
            if k.is_base() {
                Key::Base
            } else {
                Key::pair(k.clone(), Key::int(1))
            }
        });
        assert!(iso.is_bijective(&s1, &copy));
        assert_eq!(reduced_homology(&s1, 2), reduced_homology(&copy, 2));
    }

    #[test]
    fn stability_runner_tabulates_agreement() {
        let report = stability_run([2, 3, 4], |n| {
            let s1 = circle(FinGroup::trivial(), n.max(2));
            reduced_homology(&s1, 1)
        });
        assert!(report.all_consecutive_agree());
    }
}
