//! Transitivity and primitivity testing via minimal block systems.

use std::collections::VecDeque;

use crate::orbit::{orbit, orbit_lengths};
use crate::perm::Perm;

/// A non-trivial partition into equal-size classes permuted by the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<u32>>,
    pub class_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitivity {
    Intransitive { orbit_lengths: Vec<usize> },
    Imprimitive { witness: BlockSystem },
    Primitive,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut x = x;
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = self.parent[x as usize];
        }
        x
    }
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }
}

/// Finest G-invariant partition in which `a` and `b` share a class.
pub fn minimal_block_partition(gens: &[Perm], degree: usize, a: u32, b: u32) -> Vec<Vec<u32>> {
    let mut uf = UnionFind::new(degree);
    let mut queue = VecDeque::new();
    queue.push_back((a, b));
    while let Some((x, y)) = queue.pop_front() {
        if !uf.union(x, y) {
            continue;
        }
        for g in gens {
            queue.push_back((g.apply(x), g.apply(y)));
        }
    }
    let mut classes: Vec<Vec<u32>> = Vec::new();
    let mut class_of = vec![usize::MAX; degree];
    for x in 0..degree as u32 {
        let r = uf.find(x) as usize;
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_of[r]].push(x);
    }
    classes
}

/// Transitivity first; if transitive, a minimal-block sweep over all pairs
/// containing point 0, returning the first proper block system as witness.
pub fn is_primitive(gens: &[Perm], degree: usize) -> Primitivity {
    if degree <= 1 {
        return Primitivity::Primitive;
    }
    if orbit(gens, 0).len() != degree {
        return Primitivity::Intransitive {
            orbit_lengths: orbit_lengths(gens, degree),
        };
    }
    for b in 1..degree as u32 {
        let classes = minimal_block_partition(gens, degree, 0, b);
        let size = classes[0].len();
        if size > 1 && size < degree {
            return Primitivity::Imprimitive {
                witness: BlockSystem {
                    blocks: classes,
                    class_size: size,
                },
            };
        }
    }
    Primitivity::Primitive
}

/// Checks that every generator permutes the given partition classes.
pub fn preserves_partition(gens: &[Perm], blocks: &[Vec<u32>]) -> bool {
    use std::collections::HashSet;
    let classes: HashSet<Vec<u32>> = blocks.iter().cloned().collect();
    gens.iter().all(|g| {
        blocks.iter().all(|b| {
            let image = g.apply_set(b);
            classes.contains(&image)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn klein_four_natural_is_imprimitive() {
        let gens = vec![
            cyc(4, &[&[0, 1], &[2, 3]]),
            cyc(4, &[&[0, 2], &[1, 3]]),
        ];
        match is_primitive(&gens, 4) {
            Primitivity::Imprimitive { witness } => {
                assert_eq!(witness.class_size, 2);
                assert!(preserves_partition(&gens, &witness.blocks));
            }
            other => panic!("expected imprimitive, got {other:?}"),
        }
    }

    #[test]
    fn single_double_transposition_is_intransitive() {
        let gens = vec![cyc(4, &[&[0, 1], &[2, 3]])];
        assert!(matches!(
            is_primitive(&gens, 4),
            Primitivity::Intransitive { .. }
        ));
    }

    #[test]
    fn cyclic_prime_is_primitive() {
        let gens = vec![cyc(5, &[&[0, 1, 2, 3, 4]])];
        assert_eq!(is_primitive(&gens, 5), Primitivity::Primitive);
    }

    #[test]
    fn cyclic_six_has_blocks() {
        let gens = vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])];
        assert!(matches!(
            is_primitive(&gens, 6),
            Primitivity::Imprimitive { .. }
        ));
    }
}
