//! Block designs as point-index lists, their counting identities, and
//! construction from a base block's group orbit.

use perm_core::{set_orbit_capped, Perm, SetOrbit};
use serde::{Deserialize, Serialize};

/// A design on points `0..v`: blocks are sorted index lists and the block
/// set itself is kept sorted for canonical comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Design {
    pub v: usize,
    pub blocks: Vec<Vec<u32>>,
}

impl Design {
    pub fn new(v: usize, mut blocks: Vec<Vec<u32>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        Design { v, blocks }
    }

    pub fn b(&self) -> u64 {
        self.blocks.len() as u64
    }

    /// Common block size; `None` when blocks are ragged.
    pub fn k(&self) -> Option<u64> {
        let k = self.blocks.first()?.len();
        self.blocks
            .iter()
            .all(|b| b.len() == k)
            .then_some(k as u64)
    }

    /// Replication numbers per point.
    pub fn replication_counts(&self) -> Vec<u64> {
        let mut r = vec![0u64; self.v];
        for block in &self.blocks {
            for &x in block {
                r[x as usize] += 1;
            }
        }
        r
    }

    /// The constant replication number, when it is constant.
    pub fn r(&self) -> Option<u64> {
        let counts = self.replication_counts();
        let first = *counts.first()?;
        counts.iter().all(|&c| c == first).then_some(first)
    }

    /// 1 < k < v.
    pub fn is_nontrivial(&self) -> bool {
        match self.k() {
            Some(k) => k > 1 && (k as usize) < self.v,
            None => false,
        }
    }

    /// vr = bk and λ(v-1) = r(k-1) for the given λ.
    pub fn counting_identities_hold(&self, lambda: u64) -> bool {
        match (self.k(), self.r()) {
            (Some(k), Some(r)) => {
                (self.v as u64) * r == self.b() * k
                    && lambda * (self.v as u64 - 1) == r * (k - 1)
            }
            _ => false,
        }
    }

    /// Relabels points by a permutation of `0..v`.
    pub fn relabel(&self, g: &Perm) -> Design {
        assert_eq!(g.degree(), self.v);
        Design::new(
            self.v,
            self.blocks.iter().map(|b| g.apply_set(b)).collect(),
        )
    }
}

/// Outcome of constructing a design from a base block orbit.
#[derive(Debug, Clone)]
pub enum BaseBlockOutcome {
    Design(Design),
    /// The orbit exceeded the cap: its length is at least `cap`.
    OrbitTooLarge { cap: usize },
}

/// Blocks = the orbit of `base` under the space-level generators.
pub fn design_from_base_block(
    space_gens: &[Perm],
    v: usize,
    base: &[u32],
    cap: usize,
) -> BaseBlockOutcome {
    match set_orbit_capped(space_gens, base, cap) {
        SetOrbit::Complete { sets, .. } => BaseBlockOutcome::Design(Design::new(v, sets)),
        SetOrbit::CapExceeded { cap } => BaseBlockOutcome::OrbitTooLarge { cap },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas::{half_partition_action, NaturalKind};

    #[test]
    fn counting_identities_on_fano_complement_style_design() {
        // the 2-(6,3,2) design appears later; here a hand design: all pairs
        let blocks: Vec<Vec<u32>> = (0..4u32)
            .flat_map(|i| ((i + 1)..4).map(move |j| vec![i, j]))
            .collect();
        let d = Design::new(4, blocks);
        assert_eq!(d.b(), 6);
        assert_eq!(d.k(), Some(2));
        assert_eq!(d.r(), Some(3));
        assert!(d.counting_identities_hold(1));
    }

    #[test]
    fn orbit_cap_reports_excess() {
        let act = half_partition_action(NaturalKind::Alt, 6);
        let gens = act.group.gens();
        match design_from_base_block(gens, 10, &[0, 1, 2], 3) {
            BaseBlockOutcome::OrbitTooLarge { cap } => assert_eq!(cap, 3),
            other => panic!("expected cap, got {other:?}"),
        }
    }
}
