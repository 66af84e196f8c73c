use super::{GroupError, Permutation};

/// A based map `{0, .., m} -> {0, .., n}` with `0 -> 0` implicit.
/// `image[i]` is the value at the 1-based point `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasedMap {
    m: usize,
    n: usize,
    image: Vec<usize>,
}

impl std::fmt::Debug for BasedMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}->{}{:?}", self.m, self.n, self.image)
    }
}

impl BasedMap {
    pub fn new(m: usize, n: usize, image: Vec<usize>) -> Result<Self, GroupError> {
        if image.len() != m {
            return Err(GroupError::ArityMismatch { expected: m, got: image.len() });
        }
        if let Some(&v) = image.iter().find(|&&v| v > n) {
            return Err(GroupError::ImageOutOfRange(v, n));
        }
        Ok(BasedMap { m, n, image })
    }

    pub fn identity(n: usize) -> Self {
        BasedMap { m: n, n, image: (1..=n).collect() }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        BasedMap { m, n, image: vec![0; m] }
    }

    /// The j-th based inclusion `{0,1} -> {0,..,n}`, `1 -> j`.
    pub fn inclusion(j: usize, n: usize) -> Self {
        assert!(1 <= j && j <= n);
        BasedMap { m: 1, n, image: vec![j] }
    }

    /// The i-th projection `{0,..,n} -> {0,1}` sending `i` to 1 and the rest
    /// to the basepoint.
    pub fn projection(i: usize, n: usize) -> Self {
        assert!(1 <= i && i <= n);
        BasedMap { m: n, n: 1, image: (1..=n).map(|j| usize::from(j == i)).collect() }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.arity();
        BasedMap { m: n, n, image: (1..=n).map(|i| p.apply(i)).collect() }
    }

    pub fn source(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> usize {
        self.n
    }

    /// Value at a point of `{0, .., m}`.
    pub fn apply(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.image[i - 1]
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_zero(&self) -> bool {
        self.image.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.m == self.n && self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// True when every non-basepoint target has at most one preimage.
    pub fn is_injective_away_from_basepoint(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        for &v in &self.image {
            if v != 0 {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    pub fn is_permutation(&self) -> bool {
        self.m == self.n && self.image.iter().all(|&v| v != 0) && self.is_injective_away_from_basepoint()
    }

    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_permutation() {
            return None;
        }
        Permutation::from_images(self.image.iter().map(|&v| v - 1).collect()).ok()
    }
}

/// Composition `psi . phi` of based maps, applying `phi` first.
pub fn compose_based(psi: &BasedMap, phi: &BasedMap) -> Result<BasedMap, GroupError> {
    if phi.target() != psi.source() {
        return Err(GroupError::ArityMismatch { expected: psi.source(), got: phi.target() });
    }
    BasedMap::new(phi.source(), psi.target(), (1..=phi.source()).map(|i| psi.apply(phi.apply(i))).collect())
}

/// Smash product of based maps under the lexicographic identification of
/// `{1..m} x {1..n}` with `{1..mn}`, `(i, j) -> (i-1)n + j`.
pub fn smash_based(phi: &BasedMap, psi: &BasedMap) -> BasedMap {
    let (m, n) = (phi.source(), psi.source());
    let (p, q) = (phi.target(), psi.target());
    let mut image = Vec::with_capacity(m * n);
    for i in 1..=m {
        for j in 1..=n {
            let (a, b) = (phi.apply(i), psi.apply(j));
            image.push(if a == 0 || b == 0 { 0 } else { (a - 1) * q + b });
        }
    }
    BasedMap::new(m * n, p * q, image).expect("smash image in range")
}

/// The transpose permutation `{1..mn} -> {1..nm}` sending the lexicographic
/// index of `(i, j)` to the lexicographic index of `(j, i)`.
pub fn transpose_map(m: usize, n: usize) -> BasedMap {
    let mut image = Vec::with_capacity(m * n);
    for i in 1..=m {
        for j in 1..=n {
            image.push((j - 1) * m + i);
        }
    }
    BasedMap::new(m * n, n * m, image).expect("transpose in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_identity_and_zero() {
        let id2 = BasedMap::identity(2);
        assert_eq!(compose_based(&id2, &id2).unwrap(), id2);
        let z = BasedMap::zero(2, 3);
        let any = BasedMap::new(3, 2, vec![1, 2, 0]).unwrap();
        assert_eq!(compose_based(&any, &z).unwrap(), BasedMap::zero(2, 2));
    }

    #[test]
    fn compose_delta_after_swap() {
        // delta_1: 2 -> 1 sends 1 -> 1, 2 -> 0; swap: 2 -> 2.
        let delta1 = BasedMap::projection(1, 2);
        let swap = BasedMap::new(2, 2, vec![2, 1]).unwrap();
        let got = compose_based(&delta1, &swap).unwrap();
        assert_eq!(got, BasedMap::new(2, 1, vec![0, 1]).unwrap());
    }

    #[test]
    fn smash_identities_and_lex_order() {
        let id2 = BasedMap::identity(2);
        assert_eq!(smash_based(&id2, &id2), BasedMap::identity(4));
        // 2 smash 2 indexing: (1,1) -> 1, (1,2) -> 2, (2,1) -> 3, (2,2) -> 4.
        let pt = |i: usize, j: usize| (i - 1) * 2 + j;
        assert_eq!(pt(1, 1), 1);
        assert_eq!(pt(1, 2), 2);
        assert_eq!(pt(2, 1), 3);
        assert_eq!(pt(2, 2), 4);
    }

    #[test]
    fn smash_projection_with_identity() {
        let delta1 = BasedMap::projection(1, 2);
        let id1 = BasedMap::identity(1);
        // brute-force expectation over all pairs
        assert_eq!(smash_based(&delta1, &id1), BasedMap::new(2, 1, vec![1, 0]).unwrap());
    }

    #[test]
    fn transpose_is_inverse_pair() {
        let t = transpose_map(2, 3);
        let back = transpose_map(3, 2);
        assert_eq!(compose_based(&back, &t).unwrap(), BasedMap::identity(6));
    }
}
