use super::GroupError;

/// A permutation of `{1, .., n}`, stored 0-indexed: `image[i]` is the image
/// of point `i + 1`, minus one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "perm{:?}", self.image.iter().map(|i| i + 1).collect::<Vec<_>>())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Builds from a 0-indexed image vector, checking bijectivity.
    pub fn from_images(image: Vec<usize>) -> Result<Self, GroupError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(GroupError::NotBijective);
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// The transposition swapping 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a - 1, b - 1);
        Permutation { image }
    }

    pub fn arity(&self) -> usize {
        self.image.len()
    }

    /// Image of the 0-indexed point `i`.
    pub fn apply0(&self, i: usize) -> usize {
        self.image[i]
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` after `other`: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.arity(), other.arity(), "permutation arity mismatch");
        Permutation { image: other.image.iter().map(|&i| self.image[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }

    /// All permutations of arity `n` in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { image: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let t = Permutation::transposition(3, 1, 2);
        let c = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(t.compose(&t), Permutation::identity(3));
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(3));
        // (t*c)(1) = t(c(1)) = t(2) = 1
        assert_eq!(t.compose(&c).apply(1), 1);
    }

    #[test]
    fn enumeration_is_complete() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Permutation::from_images(vec![0, 0]), Err(GroupError::NotBijective));
    }
}
