//! Design isomorphism by backtracking point-map search with block-multiset
//! consistency pruning.

use std::collections::BTreeMap;

use perm_core::Perm;

use crate::design::Design;

fn pair_degree_table(d: &Design) -> Vec<Vec<u32>> {
    let v = d.v;
    let mut t = vec![vec![0u32; v]; v];
    for block in &d.blocks {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                t[i as usize][j as usize] += 1;
                t[j as usize][i as usize] += 1;
            }
        }
    }
    t
}

/// Invariant signature of a point: replication number plus the sorted
/// multiset of pair degrees at the point.
fn signatures(d: &Design) -> Vec<(u64, Vec<u32>)> {
    let reps = d.replication_counts();
    let table = pair_degree_table(d);
    (0..d.v)
        .map(|i| {
            let mut row = table[i].clone();
            row.sort_unstable();
            (reps[i], row)
        })
        .collect()
}

struct Search<'a> {
    d1: &'a Design,
    d2: &'a Design,
    t1: Vec<Vec<u32>>,
    t2: Vec<Vec<u32>>,
    sig1: Vec<(u64, Vec<u32>)>,
    sig2: Vec<(u64, Vec<u32>)>,
    order: Vec<usize>,
    map: Vec<Option<u32>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn backtrack(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.blocks_match();
        }
        let i = self.order[depth];
        for j in 0..self.d2.v {
            if self.used[j] || self.sig1[i] != self.sig2[j] {
                continue;
            }
            // pair-degree consistency against everything already mapped
            let consistent = self.order[..depth].iter().all(|&prev| {
                let pj = self.map[prev].unwrap() as usize;
                self.t1[i][prev] == self.t2[j][pj]
            });
            if !consistent {
                continue;
            }
            self.map[i] = Some(j as u32);
            self.used[j] = true;
            if self.backtrack(depth + 1) {
                return true;
            }
            self.map[i] = None;
            self.used[j] = false;
        }
        false
    }

    fn blocks_match(&self) -> bool {
        let perm = self.as_perm();
        let mapped = self.d1.relabel(&perm);
        mapped.blocks == self.d2.blocks
    }

    fn as_perm(&self) -> Perm {
        let images: Vec<u32> = self.map.iter().map(|m| m.unwrap()).collect();
        Perm::from_images(images).expect("a completed map is a bijection")
    }
}

/// An explicit point bijection carrying blocks onto blocks, or proof that
/// none exists. Fast path: parameter mismatch.
pub fn design_isomorphic(d1: &Design, d2: &Design) -> Option<Perm> {
    if d1.v != d2.v || d1.blocks.len() != d2.blocks.len() || d1.k() != d2.k() {
        return None;
    }
    let sig1 = signatures(d1);
    let sig2 = signatures(d2);
    let mut m1: BTreeMap<&(u64, Vec<u32>), usize> = BTreeMap::new();
    let mut m2: BTreeMap<&(u64, Vec<u32>), usize> = BTreeMap::new();
    for s in &sig1 {
        *m1.entry(s).or_insert(0) += 1;
    }
    for s in &sig2 {
        *m2.entry(s).or_insert(0) += 1;
    }
    if m1 != m2 {
        return None;
    }
    // most-constrained first: rare signatures early
    let mut order: Vec<usize> = (0..d1.v).collect();
    order.sort_by_key(|&i| (m1[&sig1[i]], i));
    let mut search = Search {
        d1,
        d2,
        t1: pair_degree_table(d1),
        t2: pair_degree_table(d2),
        sig1,
        sig2,
        order,
        map: vec![None; d1.v],
        used: vec![false; d2.v],
    };
    if search.backtrack(0) {
        Some(search.as_perm())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_pairs(v: usize) -> Design {
        Design::new(
            v,
            (0..v as u32)
                .flat_map(|i| ((i + 1)..v as u32).map(move |j| vec![i, j]))
                .collect(),
        )
    }

    #[test]
    fn relabeling_is_isomorphic() {
        let d = Design::new(6, vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
        ]);
        let g = Perm::from_cycles(6, &[&[0, 4, 2], &[1, 5]]).unwrap();
        let relabeled = d.relabel(&g);
        let iso = design_isomorphic(&d, &relabeled).expect("relabeling found");
        assert_eq!(d.relabel(&iso).blocks, relabeled.blocks);
    }

    #[test]
    fn altered_block_breaks_isomorphism() {
        let d1 = complete_pairs(5);
        let mut blocks = d1.blocks.clone();
        blocks[0] = vec![0, 1]; // duplicate an existing block
        blocks[1] = vec![0, 1];
        let d2 = Design::new(5, blocks);
        assert!(design_isomorphic(&d1, &d2).is_none());
    }

    #[test]
    fn parameter_mismatch_is_fast_none() {
        let d1 = complete_pairs(5);
        let d2 = complete_pairs(6);
        assert!(design_isomorphic(&d1, &d2).is_none());
    }
}
