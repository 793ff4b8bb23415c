//! The analytic index oracle: existence of subgroups of a given index in
//! Alt(n)/Sym(n) below the small-index classification threshold.
//!
//! Alternating side: towers over a d-set (d below the threshold parameter),
//! the half-partition stabilizer for even n, and six exceptional cases.
//! Symmetric side, derived from the alternating classification applied to
//! H ∩ Alt(n): plain towers, sign-linked diagonal towers, the half wreath,
//! alternating-side subgroups with doubled index, Alt(n) itself, and odd
//! extensions of the exceptional cases found by explicit normalizer scans.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use atlas::{binom_big, binom_u64, natural_generators, NaturalKind};
use num_bigint::BigUint;
use perm_core::{closure_bounded, element_set, normalizing_elements, Perm, PermGroup};

use crate::descriptor::{tower_descriptors, Descriptor, ExceptionalCase, GroupKind};
use crate::sd::{index_two_subgroups, sd_subgroup_classes};

/// Answer of the index oracle.
#[derive(Debug, Clone)]
pub enum IndexAnswer {
    /// Every conjugacy class of subgroups of the queried index.
    Yes(Vec<Descriptor>),
    /// No subgroup of that index exists; only returned when the
    /// classification threshold covered the query.
    No,
    /// The query lies outside the classification range; the oracle never
    /// guesses there.
    OutOfRange,
}

impl IndexAnswer {
    pub fn is_no(&self) -> bool {
        matches!(self, IndexAnswer::No)
    }
}

/// Smallest usable classification parameter: the least `s <= cap` with
/// `below <= C(n, s)`.
fn smallest_valid_s(n: usize, below: u64, s_cap: Option<usize>) -> Option<usize> {
    let max_s = s_cap.unwrap_or(n / 2).min(n / 2);
    let target = BigUint::from(below);
    (1..=max_s).find(|&s| target <= binom_big(n as u64, s as u64))
}

fn push(map: &mut BTreeMap<u64, Vec<Descriptor>>, idx: u64, d: Descriptor) {
    map.entry(idx).or_default().push(d);
}

fn alt_achievable_with_smin(
    n: usize,
    below: u64,
    s_min: usize,
) -> BTreeMap<u64, Vec<Descriptor>> {
    let mut map = BTreeMap::new();
    for (idx, d) in tower_descriptors(n, s_min, below, GroupKind::Alt) {
        push(&mut map, idx, d);
    }
    if n % 2 == 0 {
        if let Some(c) = binom_u64(n as u64, n as u64 / 2) {
            let idx = c / 2;
            if idx < below {
                push(&mut map, idx, Descriptor::HalfPartition);
            }
        }
    }
    for case in ExceptionalCase::ALL {
        if case.n() == n && case.index() < below {
            push(&mut map, case.index(), Descriptor::Exceptional(case));
        }
    }
    map
}

/// Conjugacy-distinct (quotient, index-2 kernel) pairs for the diagonal
/// shapes: kernels are deduplicated under the normalizer of the quotient
/// inside the small symmetric group.
fn diagonal_pairs(d: usize) -> Vec<(crate::sd::SdClass, crate::sd::SdClass)> {
    let df: u64 = (1..=d as u64).product();
    let sd_elements = if d == 1 {
        vec![Perm::identity(1)]
    } else {
        closure_bounded(d, &natural_generators(NaturalKind::Sym, d), df as usize).unwrap()
    };
    let mut out = Vec::new();
    for qp in sd_subgroup_classes(d) {
        let kernels = index_two_subgroups(qp);
        if kernels.is_empty() {
            continue;
        }
        let qp_set = element_set(&qp.elements);
        let normalizer = normalizing_elements(sd_elements.iter(), &qp.gens, &qp_set);
        let mut kept: Vec<perm_core::SubgroupClass> = Vec::new();
        'next: for k in kernels {
            let kset = element_set(&k.elements);
            for prev in &kept {
                let fused = normalizer.iter().any(|g| {
                    prev.gens
                        .iter()
                        .all(|s| kset.contains(&s.conjugate_by(g).images().to_vec()))
                });
                if fused {
                    continue 'next;
                }
            }
            kept.push(k);
        }
        for k in kept {
            out.push((
                qp.clone(),
                crate::sd::SdClass {
                    d,
                    order: k.order() as u64,
                    index: df / k.order() as u64,
                    gens: k.gens.clone(),
                    elements: k.elements,
                },
            ));
        }
    }
    out
}

fn sym_achievable_with_smin(
    n: usize,
    below: u64,
    s_min: usize,
) -> BTreeMap<u64, Vec<Descriptor>> {
    let mut map = BTreeMap::new();
    if below > 2 {
        push(&mut map, 2, Descriptor::AltItself);
    }
    for (idx, d) in tower_descriptors(n, s_min, below, GroupKind::Sym) {
        push(&mut map, idx, d);
    }
    if n % 2 == 0 {
        if let Some(c) = binom_u64(n as u64, n as u64 / 2) {
            let idx = c / 2;
            if idx < below {
                push(&mut map, idx, Descriptor::HalfPartition);
            }
        }
    }
    // alternating-side subgroups, index doubled
    let below_alt = below.div_ceil(2);
    for (idx, descs) in alt_achievable_with_smin(n, below_alt, s_min) {
        for d in descs {
            push(&mut map, 2 * idx, Descriptor::AltInSym(Box::new(d)));
        }
    }
    // sign-linked diagonal towers
    for d in 1..s_min {
        let cnd = match binom_u64(n as u64, d as u64) {
            Some(c) => c,
            None => continue,
        };
        for (quotient, kernel) in diagonal_pairs(d) {
            let idx = 2 * cnd * quotient.index;
            if idx < below {
                push(
                    &mut map,
                    idx,
                    Descriptor::SymDiagonal {
                        d,
                        quotient,
                        kernel,
                    },
                );
            }
        }
    }
    // odd extensions of the exceptional cases
    for case in ExceptionalCase::ALL {
        if case.n() == n && case.index() < below && !exceptional_extensions(case).is_empty() {
            push(
                &mut map,
                case.index(),
                Descriptor::ExceptionalExtension(case),
            );
        }
    }
    map
}

/// All achievable subgroup indices strictly below `below`, mapped to their
/// descriptor classes. `Err(())` signals the out-of-range verdict.
pub fn achievable_indices(
    n: usize,
    kind: GroupKind,
    below: u64,
    s_cap: Option<usize>,
) -> Result<BTreeMap<u64, Vec<Descriptor>>, ()> {
    assert!(n >= 5, "the classification applies from degree 5 on");
    let s_min = smallest_valid_s(n, below, s_cap).ok_or(())?;
    assert!(
        s_min <= 7,
        "set sizes above 6 are outside the supported quotient tables"
    );
    Ok(match kind {
        GroupKind::Alt => alt_achievable_with_smin(n, below, s_min),
        GroupKind::Sym => sym_achievable_with_smin(n, below, s_min),
    })
}

/// Does Alt(n)/Sym(n) have a subgroup of index exactly `b`? `s_cap` limits
/// the classification parameter (the arithmetic sieve queries with `s <= 3`
/// to match its in-proof applicability bound).
pub fn has_subgroup_of_index(
    n: usize,
    kind: GroupKind,
    b: u64,
    s_cap: Option<usize>,
) -> IndexAnswer {
    if b == 1 {
        return IndexAnswer::Yes(vec![]);
    }
    match achievable_indices(n, kind, b + 1, s_cap) {
        Err(()) => IndexAnswer::OutOfRange,
        Ok(map) => match map.get(&b) {
            Some(descs) => IndexAnswer::Yes(descs.clone()),
            None => IndexAnswer::No,
        },
    }
}

/// Index-2 extensions of an exceptional subgroup inside the symmetric
/// group, found by scanning for odd normalizing elements. Result cached;
/// at most one conjugacy class occurs for these six cases.
pub fn exceptional_extensions(case: ExceptionalCase) -> &'static Vec<PermGroup> {
    static CACHE: OnceLock<[OnceLock<Vec<PermGroup>>; 6]> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let slot = match case {
        ExceptionalCase::A5Frobenius => 0,
        ExceptionalCase::A6Psl25 => 1,
        ExceptionalCase::A6PairBlocks => 2,
        ExceptionalCase::A7Psl32 => 3,
        ExceptionalCase::A8Agl32 => 4,
        ExceptionalCase::A9PGammaL28 => 5,
    };
    cache[slot].get_or_init(|| {
        let n = case.n();
        let k = case.realize();
        let k_elems = closure_bounded(n, k.gens(), 1 << 20).unwrap();
        let k_set = element_set(&k_elems);
        let sym = PermGroup::new(n, natural_generators(NaturalKind::Sym, n)).unwrap();
        let all = closure_bounded(n, sym.gens(), 400_000).unwrap();
        let mut extensions: Vec<PermGroup> = Vec::new();
        let mut seen_cosets: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
        for g in normalizing_elements(all.iter(), k.gens(), &k_set) {
            if g.is_even() {
                continue;
            }
            let g2 = g.compose(&g).unwrap();
            if !k_set.contains(&g2.images().to_vec()) {
                continue;
            }
            // identify the coset K·g by its minimal member
            let min_member = k_elems
                .iter()
                .map(|e| e.compose(&g).unwrap().images().to_vec())
                .min()
                .unwrap();
            if !seen_cosets.insert(min_member) {
                continue;
            }
            let mut gens = k.gens().to_vec();
            gens.push(g.clone());
            let h = PermGroup::new(n, gens).unwrap();
            debug_assert_eq!(h.order(), k.order() * BigUint::from(2u32));
            extensions.push(h);
        }
        // distinct index-2 overgroups of these exceptionals are conjugate;
        // one representative suffices and more would need ordinal descriptors
        if extensions.len() > 1 {
            let first_set = element_set(&closure_bounded(n, extensions[0].gens(), 1 << 20).unwrap());
            let all_conjugate = extensions[1..].iter().all(|h| {
                all.iter().any(|g| {
                    h.gens()
                        .iter()
                        .all(|s| first_set.contains(&s.conjugate_by(g).images().to_vec()))
                })
            });
            assert!(all_conjugate, "unexpected second extension class");
            extensions.truncate(1);
        }
        extensions
    })
}

/// The first extension class, for descriptor realization.
pub fn exceptional_extension(case: ExceptionalCase) -> Option<PermGroup> {
    exceptional_extensions(case).first().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(map: &BTreeMap<u64, Vec<Descriptor>>) -> Vec<u64> {
        map.keys().copied().collect()
    }

    #[test]
    fn alt13_below_715() {
        let map = achievable_indices(13, GroupKind::Alt, 715, None).unwrap();
        assert_eq!(keys(&map), vec![13, 78, 156, 286, 572]);
    }

    #[test]
    fn alt9_below_126() {
        let map = achievable_indices(9, GroupKind::Alt, 126, None).unwrap();
        assert_eq!(keys(&map), vec![9, 36, 72, 84, 120]);
        assert!(matches!(
            map[&120][0],
            Descriptor::Exceptional(ExceptionalCase::A9PGammaL28)
        ));
    }

    #[test]
    fn alt32_contains_14880() {
        let map = achievable_indices(32, GroupKind::Alt, 35960, None).unwrap();
        let descs = &map[&14880];
        assert_eq!(descs.len(), 1);
        match &descs[0] {
            Descriptor::AltTower { d: 3, quotient } => assert_eq!(quotient.index, 3),
            other => panic!("unexpected descriptor {other}"),
        }
    }

    #[test]
    fn oracle_no_answers() {
        for (n, b) in [(15, 1092), (23, 3036), (13, 429), (35, 7854), (22, 6270), (50, 39480)] {
            assert!(
                has_subgroup_of_index(n, GroupKind::Alt, b, None).is_no(),
                "Alt({n}) index {b}"
            );
            assert!(
                has_subgroup_of_index(n, GroupKind::Sym, b, None).is_no(),
                "Sym({n}) index {b}"
            );
        }
    }

    #[test]
    fn oracle_yes_for_case_17() {
        match has_subgroup_of_index(19, GroupKind::Alt, 1938, None) {
            IndexAnswer::Yes(descs) => {
                assert_eq!(descs.len(), 1);
                match &descs[0] {
                    Descriptor::AltTower { d: 3, quotient } => assert_eq!(quotient.index, 2),
                    other => panic!("unexpected {other}"),
                }
            }
            other => panic!("expected yes, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_when_threshold_fails() {
        assert!(matches!(
            has_subgroup_of_index(10, GroupKind::Alt, 1050, None),
            IndexAnswer::OutOfRange
        ));
        assert!(matches!(
            has_subgroup_of_index(11, GroupKind::Alt, 495, None),
            IndexAnswer::OutOfRange
        ));
    }

    #[test]
    fn sieve_cap_changes_range() {
        // with the in-proof cap s <= 3 the case-15 index is out of range,
        // with the full threshold it is a definite no
        assert!(matches!(
            has_subgroup_of_index(15, GroupKind::Alt, 1092, Some(3)),
            IndexAnswer::OutOfRange
        ));
        assert!(has_subgroup_of_index(15, GroupKind::Alt, 1092, None).is_no());
    }

    #[test]
    fn sym_side_case_20_has_four_classes() {
        match has_subgroup_of_index(14, GroupKind::Sym, 2002, None) {
            IndexAnswer::Yes(descs) => assert_eq!(descs.len(), 4),
            other => panic!("expected yes, got {other:?}"),
        }
        match has_subgroup_of_index(14, GroupKind::Alt, 2002, None) {
            IndexAnswer::Yes(descs) => assert_eq!(descs.len(), 2),
            other => panic!("expected yes, got {other:?}"),
        }
    }

    #[test]
    fn sym9_84_is_the_full_tower() {
        match has_subgroup_of_index(9, GroupKind::Sym, 84, None) {
            IndexAnswer::Yes(descs) => {
                assert_eq!(descs.len(), 1);
                assert!(matches!(descs[0], Descriptor::SymTower { d: 3, .. }));
            }
            other => panic!("expected yes, got {other:?}"),
        }
    }

    #[test]
    fn sym_extensions_of_exceptionals() {
        assert_eq!(exceptional_extensions(ExceptionalCase::A6PairBlocks).len(), 1);
        assert_eq!(
            exceptional_extensions(ExceptionalCase::A6PairBlocks)[0].order_u64(),
            Some(48)
        );
        assert_eq!(exceptional_extensions(ExceptionalCase::A6Psl25).len(), 1);
        assert!(exceptional_extensions(ExceptionalCase::A7Psl32).is_empty());
        assert!(exceptional_extensions(ExceptionalCase::A8Agl32).is_empty());
    }

    #[test]
    fn sym_side_six_15_has_two_classes() {
        match has_subgroup_of_index(6, GroupKind::Sym, 15, None) {
            IndexAnswer::Yes(descs) => {
                assert_eq!(descs.len(), 2, "S2xS4 and the pair-block wreath");
            }
            other => panic!("expected yes, got {other:?}"),
        }
    }
}
