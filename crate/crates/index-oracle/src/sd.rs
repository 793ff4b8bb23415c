//! Subgroup classes of the symmetric groups on up to six letters, computed
//! once by exhaustive seeded-closure enumeration and cached. These are the
//! quotient choices parameterizing the intermediate tower subgroups.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use atlas::{natural_generators, NaturalKind};
use perm_core::{subgroups_of_order_with, Escalation, PermGroup, SubgroupClass, SubgroupSearch};

const MAX_D: usize = 6;

/// One conjugacy class of subgroups of S_d.
#[derive(Debug, Clone)]
pub struct SdClass {
    pub d: usize,
    pub order: u64,
    pub index: u64,
    pub gens: Vec<perm_core::Perm>,
    pub elements: Vec<perm_core::Perm>,
}

fn factorial(d: usize) -> u64 {
    (1..=d as u64).product()
}

fn compute_classes(d: usize) -> Vec<SdClass> {
    if d == 0 {
        return vec![];
    }
    let group = if d == 1 {
        PermGroup::trivial(1)
    } else {
        PermGroup::new(d, natural_generators(NaturalKind::Sym, d)).unwrap()
    };
    let df = factorial(d);
    let mut out = Vec::new();
    for order in 1..=df {
        if df % order != 0 {
            continue;
        }
        match subgroups_of_order_with(&group, order, 1000, Escalation::Always) {
            SubgroupSearch::Classes(classes, _) => {
                for c in classes {
                    out.push(SdClass {
                        d,
                        order,
                        index: df / order,
                        gens: c.gens,
                        elements: c.elements,
                    });
                }
            }
            SubgroupSearch::Unresolved(r) => unreachable!("S_{d} fits every budget: {r}"),
        }
    }
    out
}

/// Cached subgroup classes of S_d, 1 <= d <= 6.
pub fn sd_subgroup_classes(d: usize) -> &'static [SdClass] {
    static CACHE: OnceLock<[OnceLock<Vec<SdClass>>; MAX_D + 1]> = OnceLock::new();
    assert!(d >= 1 && d <= MAX_D, "quotient tables cover d <= 6");
    let cache = CACHE.get_or_init(Default::default);
    cache[d].get_or_init(|| compute_classes(d))
}

/// The complete set of subgroup indices of S_d.
pub fn sd_subgroup_indices(d: usize) -> BTreeSet<u64> {
    sd_subgroup_classes(d).iter().map(|c| c.index).collect()
}

/// Index-2 subgroups of a quotient class, as subgroup classes of the same
/// degree (each index-2 subgroup is normal, so classes are singletons).
pub fn index_two_subgroups(class: &SdClass) -> Vec<SubgroupClass> {
    if class.order % 2 != 0 {
        return vec![];
    }
    let group = PermGroup::new(class.d, class.gens.clone()).unwrap();
    match subgroups_of_order_with(&group, class.order / 2, 1000, Escalation::Always) {
        SubgroupSearch::Classes(classes, _) => classes,
        SubgroupSearch::Unresolved(r) => unreachable!("tiny group: {r}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_index_sets() {
        assert_eq!(sd_subgroup_indices(1).into_iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(
            sd_subgroup_indices(2).into_iter().collect::<Vec<_>>(),
            vec![1, 2]
        );
        assert_eq!(
            sd_subgroup_indices(3).into_iter().collect::<Vec<_>>(),
            vec![1, 2, 3, 6]
        );
        assert_eq!(
            sd_subgroup_indices(4).into_iter().collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 6, 8, 12, 24]
        );
    }

    #[test]
    fn s5_indices() {
        // orders 1,2,3,4,5,6,8,10,12,20,24,60,120
        let idx: Vec<u64> = sd_subgroup_indices(5).into_iter().collect();
        assert_eq!(idx, vec![1, 2, 5, 6, 10, 12, 15, 20, 24, 30, 40, 60, 120]);
    }

    #[test]
    fn index_two_of_s3() {
        let s3 = sd_subgroup_classes(3)
            .iter()
            .find(|c| c.index == 1)
            .unwrap();
        let subs = index_two_subgroups(s3);
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].order(), 3);
    }

    #[test]
    fn class_counts_for_s4() {
        // 1, C2 (two classes), C3, C4, V4 (two classes), S3, C6? no, D4, A4, S4
        let by_order = |o: u64| {
            sd_subgroup_classes(4)
                .iter()
                .filter(|c| c.order == o)
                .count()
        };
        assert_eq!(by_order(1), 1);
        assert_eq!(by_order(2), 2);
        assert_eq!(by_order(3), 1);
        assert_eq!(by_order(4), 3); // C4, V4 normal, V4 non-normal
        assert_eq!(by_order(6), 1);
        assert_eq!(by_order(8), 1);
        assert_eq!(by_order(12), 1);
        assert_eq!(by_order(24), 1);
    }
}
