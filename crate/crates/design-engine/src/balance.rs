//! Exact pair-coverage counting.

use serde::{Deserialize, Serialize};

use crate::design::Design;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BalanceReport {
    Uniform { lambda: u64 },
    Counterexample { pair: (u32, u32), count: u64 },
}

#[inline]
fn pair_index(v: usize, i: u32, j: u32) -> usize {
    debug_assert!(i < j);
    let (v, i, j) = (v as u64, i as u64, j as u64);
    (i * (2 * v - i - 1) / 2 + (j - i - 1)) as usize
}

/// Counts how many blocks contain every unordered point pair. When the
/// count is not uniform, reports the least pair attaining the minimum
/// count (an under-covered pair always exists then).
pub fn pairwise_lambda(design: &Design) -> BalanceReport {
    let v = design.v;
    if v < 2 {
        return BalanceReport::Uniform { lambda: 0 };
    }
    let mut counts = vec![0u32; v * (v - 1) / 2];
    for block in &design.blocks {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                counts[pair_index(v, i, j)] += 1;
            }
        }
    }
    let min = *counts.iter().min().unwrap();
    let max = *counts.iter().max().unwrap();
    if min == max {
        return BalanceReport::Uniform { lambda: min as u64 };
    }
    for i in 0..v as u32 {
        for j in (i + 1)..v as u32 {
            if counts[pair_index(v, i, j)] == min {
                return BalanceReport::Counterexample {
                    pair: (i, j),
                    count: min as u64,
                };
            }
        }
    }
    unreachable!("a minimum-count pair exists")
}

/// Independent recount of one pair, for witness rechecking.
pub fn count_pair(design: &Design, pair: (u32, u32)) -> u64 {
    design
        .blocks
        .iter()
        .filter(|b| b.contains(&pair.0) && b.contains(&pair.1))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_block_is_not_uniform() {
        let d = Design::new(3, vec![vec![0, 1], vec![0, 1]]);
        match pairwise_lambda(&d) {
            BalanceReport::Counterexample { pair, count } => {
                assert_eq!(count_pair(&d, pair), count);
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn all_pairs_design_is_uniform() {
        let blocks: Vec<Vec<u32>> = (0..5u32)
            .flat_map(|i| ((i + 1)..5).map(move |j| vec![i, j]))
            .collect();
        let d = Design::new(5, blocks);
        assert_eq!(pairwise_lambda(&d), BalanceReport::Uniform { lambda: 1 });
    }
}
