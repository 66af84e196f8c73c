use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Rank and invariant factors of an integer matrix, as computed by Smith
/// normal form.  `factors` is the full ascending divisibility chain (so its
/// length is the rank); torsion coefficients are the entries `>= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithInvariants {
    pub factors: Vec<BigInt>,
}

impl SmithInvariants {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| **f > BigInt::one()).cloned().collect()
    }
}

/// Sparse integer matrix by rows.
pub struct SparseInt {
    pub nrows: usize,
    pub ncols: usize,
    rows: Vec<BTreeMap<usize, i64>>,
}

impl SparseInt {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseInt { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        if v == 0 {
            return;
        }
        let e = self.rows[r].entry(c).or_insert(0);
        *e += v;
        if *e == 0 {
            self.rows[r].remove(&c);
        }
    }
}

/// Smith invariants via unit-pivot sparse elimination followed by a dense
/// big-integer pass on whatever remains.
pub fn smith_invariants(mut m: SparseInt) -> SmithInvariants {
    let mut unit_pivots = 0usize;
    // column -> rows containing it
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols];
    for (r, row) in m.rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut live_rows: BTreeSet<usize> = (0..m.nrows).filter(|&r| !m.rows[r].is_empty()).collect();
    let mut overflow = false;

    'outer: loop {
        // pick a +-1 pivot with small fill (Markowitz-style score)
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &live_rows {
            for (&c, &v) in &m.rows[r] {
                if v == 1 || v == -1 {
                    let score = (m.rows[r].len() - 1) * (col_rows[c].len() - 1);
                    if best.map_or(true, |(_, _, s)| score < s) {
                        best = Some((r, c, score));
                        if score == 0 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pr, pc, _)) = best else {
            break 'outer;
        };
        let pval = m.rows[pr][&pc];
        // eliminate column pc from all other rows using row pr
        let targets: Vec<usize> = col_rows[pc].iter().copied().filter(|&r| r != pr).collect();
        let pivot_row: Vec<(usize, i64)> = m.rows[pr].iter().map(|(&c, &v)| (c, v)).collect();
        for r in targets {
            let factor = m.rows[r][&pc] * pval; // pval is a unit
            // compute the updated row transactionally so an overflow never
            // leaves the matrix half-edited
            let mut updated = m.rows[r].clone();
            let mut ok = true;
            for &(c, v) in &pivot_row {
                let delta = match factor.checked_mul(v) {
                    Some(d) => d,
                    None => {
                        ok = false;
                        break;
                    }
                };
                let e = updated.entry(c).or_insert(0);
                *e = match e.checked_sub(delta) {
                    Some(x) => x,
                    None => {
                        ok = false;
                        break;
                    }
                };
                if *e == 0 {
                    updated.remove(&c);
                }
            }
            if !ok {
                overflow = true;
                break 'outer;
            }
            for &c in m.rows[r].keys() {
                col_rows[c].remove(&r);
            }
            for &c in updated.keys() {
                col_rows[c].insert(r);
            }
            m.rows[r] = updated;
            if m.rows[r].is_empty() {
                live_rows.remove(&r);
            }
        }
        // retire the pivot row and column
        for (c, _) in pivot_row {
            col_rows[c].remove(&pr);
        }
        m.rows[pr].clear();
        live_rows.remove(&pr);
        unit_pivots += 1;
    }

    // densify the remainder
    let rows: Vec<usize> = live_rows.iter().copied().collect();
    let mut cols: BTreeSet<usize> = BTreeSet::new();
    for &r in &rows {
        cols.extend(m.rows[r].keys().copied());
    }
    let cols: Vec<usize> = cols.into_iter().collect();
    let cindex: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (i, &r) in rows.iter().enumerate() {
        for (&c, &v) in &m.rows[r] {
            dense[i][cindex[&c]] = BigInt::from(v);
        }
    }
    let _ = overflow; // overflow only aborts the sparse phase early
    let mut factors = vec![BigInt::one(); unit_pivots];
    factors.extend(dense_smith(dense));
    factors.sort();
    // the unit pivots divide everything, and the dense pass returns a chain,
    // so sorting yields a divisibility chain
    SmithInvariants { factors }
}

/// Textbook Smith normal form over BigInt; returns the nonzero diagonal.
fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0usize;
    while t < nrows.min(ncols) {
        // find nonzero entry of minimal absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..nrows {
            for c in t..ncols {
                if !a[r][c].is_zero()
                    && pivot.map_or(true, |(pr, pc)| a[r][c].abs() < a[pr][pc].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        // reduce row and column until clean
        loop {
            let mut dirty = false;
            for r in t + 1..nrows {
                if !a[r][t].is_zero() {
                    let q = div_nearest(&a[r][t], &a[t][t]);
                    if !q.is_zero() {
                        for c in t..ncols {
                            let sub = &q * &a[t][c];
                            a[r][c] -= sub;
                        }
                    }
                    if !a[r][t].is_zero() {
                        a.swap(t, r);
                        dirty = true;
                    }
                }
            }
            for c in t + 1..ncols {
                if !a[t][c].is_zero() {
                    let q = div_nearest(&a[t][c], &a[t][t]);
                    if !q.is_zero() {
                        for row in a.iter_mut().skip(t) {
                            let sub = &q * &row[t];
                            row[c] -= sub;
                        }
                    }
                    if !a[t][c].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, c);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        // enforce divisibility into the trailing block
        let mut redo = false;
        'scan: for r in t + 1..nrows {
            for c in t + 1..ncols {
                if !(&a[r][c] % &a[t][t]).is_zero() {
                    // fold row r into row t and restart this pivot
                    for cc in t..ncols {
                        let add = a[r][cc].clone();
                        a[t][cc] += add;
                    }
                    redo = true;
                    break 'scan;
                }
            }
        }
        if redo {
            continue;
        }
        if a[t][t].is_negative() {
            for c in t..ncols {
                a[t][c] = -a[t][c].clone();
            }
        }
        out.push(a[t][t].clone());
        t += 1;
    }
    out
}

/// Quotient rounded to the nearest integer, keeping remainders small
/// during the euclidean sweeps.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r): (BigInt, BigInt) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(rows: Vec<Vec<i64>>) -> SparseInt {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseInt::new(nrows, ncols);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                m.add(r, c, v);
            }
        }
        m
    }

    #[test]
    fn classic_smith_example() {
        let m = from_dense(vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let inv = smith_invariants(m);
        let f: Vec<i64> = inv.factors.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(f, vec![1, 3, 21]);
    }

    #[test]
    fn diagonal_torsion() {
        let m = from_dense(vec![vec![2, 0], vec![0, 4]]);
        let inv = smith_invariants(m);
        let f: Vec<i64> = inv.factors.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(f, vec![2, 4]);
    }

    #[test]
    fn divisibility_repair() {
        let m = from_dense(vec![vec![2, 0], vec![0, 3]]);
        let inv = smith_invariants(m);
        let f: Vec<i64> = inv.factors.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(f, vec![1, 6]);
    }

    #[test]
    fn zero_matrix() {
        let inv = smith_invariants(from_dense(vec![vec![0, 0], vec![0, 0]]));
        assert_eq!(inv.rank(), 0);
    }

    #[test]
    fn unit_chain_reduces_sparsely() {
        // boundary-like matrix with many +-1 entries
        let mut m = SparseInt::new(100, 99);
        for c in 0..99 {
            m.add(c, c, 1);
            m.add(c + 1, c, -1);
        }
        let inv = smith_invariants(m);
        assert_eq!(inv.rank(), 99);
        assert!(inv.torsion().is_empty());
    }
}
