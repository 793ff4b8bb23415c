//! Permutations of `{0, .., degree-1}` stored as image arrays.
//!
//! Products use the left-to-right action convention fixed once for the whole
//! workspace: `(p * q)` applied to `x` is `q` applied to `p(x)`, i.e. points
//! travel through the factors in reading order. Every other crate inherits
//! this convention.

use std::fmt;

use crate::PermError;

/// A permutation of `{0, .., degree()-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            let y = y as usize;
            if y >= n || seen[y] {
                return Err(PermError::NotBijective { degree: n });
            }
            seen[y] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for w in cycle.windows(2) {
                let (a, b) = (w[0] as usize, w[1]);
                if a >= degree || b as usize >= degree {
                    return Err(PermError::PointOutOfRange { degree });
                }
                images[a] = b;
            }
            if cycle.len() > 1 {
                images[*cycle.last().unwrap() as usize] = cycle[0];
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// Product under the left-to-right convention: `self` acts first.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        let images = self
            .images
            .iter()
            .map(|&y| other.images[y as usize])
            .collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y as usize] = i as u32;
        }
        Perm { images }
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i8 {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Multiplicative order of the permutation.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    /// Applies the permutation to a set of points, returning the sorted image.
    pub fn apply_set(&self, set: &[u32]) -> Vec<u32> {
        let mut image: Vec<u32> = set.iter().map(|&x| self.apply(x)).collect();
        image.sort_unstable();
        image
    }

    /// Conjugate `self^other = other^{-1} * self * other` (left-to-right).
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        // image[other(x)] = other(self(x)) avoids materializing other^{-1}
        let mut out = vec![0u32; self.degree()];
        for x in 0..self.degree() as u32 {
            out[other.apply(x) as usize] = other.apply(self.apply(x));
        }
        Perm { images: out }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // cycle notation, fixed points omitted
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn compose_hand_table() {
        // Convention fixed by hand table: in p * q the factor p acts first.
        let p = cyc(3, &[&[0, 1, 2]]);
        let q = cyc(3, &[&[0, 1]]);
        // x=0: p 0->1, q 1->0;  x=1: p 1->2, q 2->2;  x=2: p 2->0, q 0->1
        assert_eq!(p.compose(&q).unwrap().images(), &[0, 2, 1]);
        // The other order realizes the mapping 0->2, 1->1, 2->0.
        assert_eq!(q.compose(&p).unwrap().images(), &[2, 1, 0]);
    }

    #[test]
    fn identity_and_inverse() {
        let p = cyc(5, &[&[0, 3, 1], &[2, 4]]);
        let id = Perm::identity(5);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let p = Perm::identity(4);
        let q = Perm::identity(5);
        assert!(matches!(
            p.compose(&q),
            Err(PermError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn bad_images_rejected() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn sign_and_order() {
        assert_eq!(cyc(5, &[&[0, 1]]).sign(), -1);
        assert_eq!(cyc(5, &[&[0, 1, 2]]).sign(), 1);
        assert_eq!(cyc(6, &[&[0, 1], &[2, 3, 4]]).order(), 6);
        assert_eq!(cyc(6, &[&[0, 1], &[2, 3, 4]]).cycle_type(), vec![1, 2, 3]);
    }

    #[test]
    fn conjugation_matches_composition() {
        let p = cyc(6, &[&[0, 1, 2], &[3, 4]]);
        let g = cyc(6, &[&[1, 5, 2]]);
        let direct = g
            .inverse()
            .compose(&p)
            .unwrap()
            .compose(&g)
            .unwrap();
        assert_eq!(p.conjugate_by(&g), direct);
    }
}
