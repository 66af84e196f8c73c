use super::smap::SMap;
use super::sset::SSet;
use super::SimplicialError;

/// Combinatorial homotopy data between two simplicial maps `f, g: X -> Y`:
/// for each degree `q` with `q + 1` stored in both objects, maps
/// `h_i: X_q -> Y_{q+1}` for `0 <= i <= q`.
#[derive(Clone, Debug)]
pub struct SHomotopy {
    /// `h[q][i][s]`
    pub h: Vec<Vec<Vec<usize>>>,
}

impl SHomotopy {
    pub fn from_fn(
        src: &SSet,
        dst: &SSet,
        degrees: usize,
        h: impl Fn(usize, usize, &super::key::Key) -> super::key::Key,
    ) -> SHomotopy {
        let h = (0..degrees)
            .map(|q| {
                (0..=q)
                    .map(|i| {
                        src.level(q)
                            .simplices
                            .iter()
                            .map(|k| dst.level(q + 1).lookup(&h(q, i, k)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SHomotopy { h }
    }

    /// The constant homotopy from `f` to itself, `h_i = s_i . f`.
    pub fn constant(src: &SSet, dst: &SSet, f: &SMap, degrees: usize) -> SHomotopy {
        let h = (0..degrees)
            .map(|q| {
                (0..=q)
                    .map(|i| {
                        (0..src.level(q).len())
                            .map(|s| dst.degen(q, i, f.apply(q, s)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SHomotopy { h }
    }
}

/// Verifies every combinatorial homotopy identity relating `h` to the faces,
/// degeneracies, endpoints `f` (on the `d_0` side) and `g` (on the `d_{q+1}`
/// side), plus equivariance and based-ness of each `h_i`, in all degrees for
/// which the composites are stored.  Returns the offending degree and index
/// on failure.
pub fn is_homotopy(
    src: &SSet,
    dst: &SSet,
    f: &SMap,
    g: &SMap,
    htpy: &SHomotopy,
) -> Result<(), SimplicialError> {
    let hmax = htpy.h.len();
    let fail = |which: &'static str, degree: usize, index: usize| {
        Err(SimplicialError::HomotopyViolated { which, degree, index })
    };
    for q in 0..hmax {
        let h = &htpy.h[q];
        for s in 0..src.level(q).len() {
            // based and equivariant
            for (i, hi) in h.iter().enumerate() {
                if s == src.level(q).base && hi[s] != dst.level(q + 1).base {
                    return fail("h based", q, i);
                }
                for gp in src.group.elements() {
                    if hi[src.act(gp, q, s)] != dst.act(gp, q + 1, hi[s]) {
                        return fail("h equivariant", q, s);
                    }
                }
            }
            // d_0 h_0 = f
            if dst.face(q + 1, 0, h[0][s]) != f.apply(q, s) {
                return fail("d_0 h_0 = f", q, s);
            }
            // d_{q+1} h_q = g
            if dst.face(q + 1, q + 1, h[q][s]) != g.apply(q, s) {
                return fail("d_{q+1} h_q = g", q, s);
            }
            for j in 0..=q {
                for i in 0..=q + 1 {
                    if i < j && q >= 1 {
                        // d_i h_j = h_{j-1} d_i
                        if dst.face(q + 1, i, h[j][s]) != htpy.h[q - 1][j - 1][src.face(q, i, s)] {
                            return fail("d_i h_j = h_{j-1} d_i", q, s);
                        }
                    } else if i == j + 1 && j < q {
                        // d_{j+1} h_{j+1} = d_{j+1} h_j
                        if dst.face(q + 1, j + 1, h[j + 1][s]) != dst.face(q + 1, j + 1, h[j][s]) {
                            return fail("d_{j+1} h_{j+1} = d_{j+1} h_j", q, s);
                        }
                    } else if i > j + 1 && q >= 1 {
                        // d_i h_j = h_j d_{i-1}
                        if dst.face(q + 1, i, h[j][s]) != htpy.h[q - 1][j][src.face(q, i - 1, s)] {
                            return fail("d_i h_j = h_j d_{i-1}", q, s);
                        }
                    }
                }
                // degeneracy identities, when the next level of h is stored
                if q + 1 < hmax {
                    // s_i h_j = h_{j+1} s_i for i <= j
                    for i in 0..=j {
                        if dst.degen(q + 1, i, h[j][s])
                            != htpy.h[q + 1][j + 1][src.degen(q, i, s)]
                        {
                            return fail("s_i h_j = h_{j+1} s_i", q, s);
                        }
                    }
                    // s_i h_j = h_j s_{i-1} for i > j
                    for i in (j + 1)..=(q + 1) {
                        if dst.degen(q + 1, i, h[j][s])
                            != htpy.h[q + 1][j][src.degen(q, i - 1, s)]
                        {
                            return fail("s_i h_j = h_j s_{i-1}", q, s);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
