//! Enumerated, canonically indexed point sets the classification acts on.
//!
//! Every space assigns dense indices `0..size` to its canonical objects via
//! rank/unrank maps. Spaces whose objects are built from the letters of an
//! underlying action (s-subsets, half-partitions) can induce a permutation
//! of the space from a permutation of the letters.

use perm_core::Perm;

use crate::binom::{binom_u64, rank_combination, unrank_combination};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    /// The letters `0..n` themselves.
    Natural { n: usize },
    /// Sorted s-subsets of `0..n`, lexicographic rank.
    Subsets { n: usize, s: usize },
    /// Unordered partitions `{A, complement}` with `|A| = n/2`, keyed by the
    /// side containing letter 0.
    HalfPartitions { n: usize },
    /// Projective line over a field with `q` elements: codes `0..q`, then
    /// the point at infinity as index `q`.
    ProjectiveLine { q: usize },
    /// Frobenius classes `{a, a^9}` of the 72 elements of F81 outside F9.
    ConjugatePairs,
    /// Nonzero vectors of F2^dim, index = bit pattern minus one.
    NonzeroVectors { dim: usize },
    /// Cosets of a subgroup, identified by canonical representatives.
    Cosets { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSpace {
    pub kind: SpaceKind,
    size: usize,
}

impl ActionSpace {
    pub fn natural(n: usize) -> Self {
        ActionSpace {
            kind: SpaceKind::Natural { n },
            size: n,
        }
    }

    pub fn subsets(n: usize, s: usize) -> Self {
        assert!(s >= 1 && s < n);
        let size = binom_u64(n as u64, s as u64).expect("space size fits u64") as usize;
        ActionSpace {
            kind: SpaceKind::Subsets { n, s },
            size,
        }
    }

    pub fn half_partitions(n: usize) -> Self {
        assert!(n >= 4 && n % 2 == 0);
        let size = binom_u64((n - 1) as u64, (n / 2 - 1) as u64).expect("size fits") as usize;
        ActionSpace {
            kind: SpaceKind::HalfPartitions { n },
            size,
        }
    }

    pub fn projective_line(q: usize) -> Self {
        ActionSpace {
            kind: SpaceKind::ProjectiveLine { q },
            size: q + 1,
        }
    }

    pub fn conjugate_pairs() -> Self {
        ActionSpace {
            kind: SpaceKind::ConjugatePairs,
            size: 36,
        }
    }

    pub fn nonzero_vectors(dim: usize) -> Self {
        ActionSpace {
            kind: SpaceKind::NonzeroVectors { dim },
            size: (1usize << dim) - 1,
        }
    }

    pub fn cosets(index: usize) -> Self {
        ActionSpace {
            kind: SpaceKind::Cosets { index },
            size: index,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The canonical object behind an index, for subset-like kinds.
    pub fn unrank(&self, idx: u32) -> Vec<u32> {
        assert!((idx as usize) < self.size, "index out of range");
        match self.kind {
            SpaceKind::Natural { .. } => vec![idx],
            SpaceKind::Subsets { n, s } => unrank_combination(n, s, idx as u64),
            SpaceKind::HalfPartitions { n } => {
                let m = n / 2;
                let rest = unrank_combination(n - 1, m - 1, idx as u64);
                let mut side = vec![0u32];
                side.extend(rest.iter().map(|&x| x + 1));
                side
            }
            _ => vec![idx],
        }
    }

    /// Dense index of a canonical object, for subset-like kinds.
    pub fn rank(&self, object: &[u32]) -> u32 {
        match self.kind {
            SpaceKind::Natural { .. } => object[0],
            SpaceKind::Subsets { n, .. } => rank_combination(n, object) as u32,
            SpaceKind::HalfPartitions { n } => {
                let side: Vec<u32>;
                let canon: &[u32] = if object.contains(&0) {
                    object
                } else {
                    side = (0..n as u32).filter(|x| !object.contains(x)).collect();
                    &side
                };
                let rest: Vec<u32> = canon.iter().filter(|&&x| x != 0).map(|&x| x - 1).collect();
                rank_combination(n - 1, &rest) as u32
            }
            _ => object[0],
        }
    }

    /// Whether permutations of underlying letters induce permutations here.
    pub fn supports_induction(&self) -> bool {
        matches!(
            self.kind,
            SpaceKind::Natural { .. } | SpaceKind::Subsets { .. } | SpaceKind::HalfPartitions { .. }
        )
    }

    /// Permutation of the space induced by a permutation of the letters.
    pub fn induce(&self, g: &Perm) -> Perm {
        match self.kind {
            SpaceKind::Natural { .. } => g.clone(),
            SpaceKind::Subsets { .. } => {
                let mut images = vec![0u32; self.size];
                for idx in 0..self.size as u32 {
                    let obj = self.unrank(idx);
                    images[idx as usize] = self.rank(&g.apply_set(&obj));
                }
                Perm::from_images(images).expect("induced map is a bijection")
            }
            SpaceKind::HalfPartitions { .. } => {
                let mut images = vec![0u32; self.size];
                for idx in 0..self.size as u32 {
                    let obj = self.unrank(idx);
                    images[idx as usize] = self.rank(&g.apply_set(&obj));
                }
                Perm::from_images(images).expect("induced map is a bijection")
            }
            _ => panic!("space kind does not induce from letter permutations"),
        }
    }

    /// Human-readable form of a point, for witnesses.
    pub fn describe(&self, idx: u32) -> String {
        match self.kind {
            SpaceKind::Natural { .. } => format!("{idx}"),
            SpaceKind::Subsets { .. } => format!("{:?}", self.unrank(idx)),
            SpaceKind::HalfPartitions { n } => {
                let side = self.unrank(idx);
                let other: Vec<u32> = (0..n as u32).filter(|x| !side.contains(x)).collect();
                format!("{side:?}|{other:?}")
            }
            SpaceKind::ProjectiveLine { q } => {
                if idx as usize == q {
                    "inf".into()
                } else {
                    format!("{idx}")
                }
            }
            _ => format!("{idx}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_space_sizes() {
        assert_eq!(ActionSpace::subsets(5, 2).size(), 10);
        assert_eq!(ActionSpace::subsets(13, 3).size(), 286);
        assert_eq!(ActionSpace::subsets(32, 3).size(), 4960);
        assert_eq!(ActionSpace::half_partitions(10).size(), 126);
        assert_eq!(ActionSpace::half_partitions(4).size(), 3);
    }

    #[test]
    fn half_partition_rank_handles_both_sides() {
        let sp = ActionSpace::half_partitions(6);
        for idx in 0..sp.size() as u32 {
            let side = sp.unrank(idx);
            let other: Vec<u32> = (0..6).filter(|x| !side.contains(x)).collect();
            assert_eq!(sp.rank(&side), idx);
            assert_eq!(sp.rank(&other), idx);
        }
    }

    #[test]
    fn induced_subset_perm_is_action() {
        let sp = ActionSpace::subsets(5, 2);
        let g = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let ig = sp.induce(&g);
        for idx in 0..sp.size() as u32 {
            let obj = sp.unrank(idx);
            assert_eq!(ig.apply(idx), sp.rank(&g.apply_set(&obj)));
        }
        // composition carries over
        let h = Perm::from_cycles(5, &[&[0, 1]]).unwrap();
        let gh = g.compose(&h).unwrap();
        assert_eq!(sp.induce(&gh), ig.compose(&sp.induce(&h)).unwrap());
    }
}
