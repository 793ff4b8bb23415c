//! Orbit profiling of realized subgroups on action spaces, and the
//! exhaustive-search cross-check for the formula-based index sets.

use std::collections::BTreeMap;

use atlas::GroupAction;
use perm_core::{orbit_partition, Perm, PermGroup, SearchAudit};

/// Generators of `k` acting on the space of `action`: induced from letters
/// when the space supports it, used directly otherwise.
pub fn gens_on_space(k: &PermGroup, action: &GroupAction) -> Vec<Perm> {
    if action.space.supports_induction() {
        k.gens().iter().map(|g| action.space.induce(g)).collect()
    } else {
        assert_eq!(k.degree(), action.space.size(), "group must act on the space");
        k.gens().to_vec()
    }
}

/// Sorted multiset of orbit lengths of `k` on the space.
pub fn orbit_profile(k: &PermGroup, action: &GroupAction) -> Vec<usize> {
    let gens = gens_on_space(k, action);
    let mut lens: Vec<usize> = orbit_partition(&gens, action.space.size())
        .iter()
        .map(|o| o.len())
        .collect();
    lens.sort_unstable();
    lens
}

/// The orbits themselves, each sorted, ordered by (length, least point).
pub fn orbits_on_space(k: &PermGroup, action: &GroupAction) -> Vec<Vec<u32>> {
    let gens = gens_on_space(k, action);
    let mut orbits = orbit_partition(&gens, action.space.size());
    for o in orbits.iter_mut() {
        o.sort_unstable();
    }
    orbits.sort_by_key(|o| (o.len(), o[0]));
    orbits
}

/// Search-based achievable indices below the bound: seeded-closure search
/// over every divisor order, sharing one pair-closure order table across
/// all target orders, with the three-generator escalation run for every
/// order the pair pass leaves empty. Index 1 is omitted. This is the
/// independent cross-check of the formula-based oracle.
pub fn searched_achievable_indices(
    group: &PermGroup,
    below: u64,
    element_bound: usize,
) -> Result<(BTreeMap<u64, usize>, Vec<SearchAudit>), String> {
    use perm_core::{closure_bounded, element_class_reps, element_set, Perm};
    use rayon::prelude::*;

    let order = group
        .order_u64()
        .ok_or_else(|| "group too large for exhaustive search".to_string())?;
    if order as usize > element_bound {
        return Err(format!(
            "group order {order} exceeds the element budget {element_bound}"
        ));
    }
    let degree = group.degree();
    let elements = closure_bounded(degree, group.gens(), element_bound)
        .map_err(|e| e.to_string())?;
    let reps: Vec<Perm> = element_class_reps(&elements, group.gens())
        .into_iter()
        .filter(|r| r.order() > 1)
        .collect();

    // pair-closure orders, computed once: anything past half the group
    // order is the whole group
    let half_bound = (order / 2) as usize + 1;
    let table: Vec<Vec<u64>> = reps
        .par_iter()
        .map(|r| {
            elements
                .iter()
                .map(|x| {
                    if x.is_identity() {
                        return 1;
                    }
                    match perm_core::closure_order_bounded(
                        degree,
                        &[r.clone(), x.clone()],
                        half_bound,
                    ) {
                        Some(o) => o as u64,
                        None => order,
                    }
                })
                .collect()
        })
        .collect();

    let conjugate_classes = |cands: Vec<(Vec<Perm>, Vec<Perm>)>| -> usize {
        // dedupe identical element sets, then conjugacy classes
        let mut distinct: Vec<(Vec<Vec<u32>>, Vec<Perm>, Vec<Perm>)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (gens, elems) in cands {
            let mut key: Vec<Vec<u32>> = elems.iter().map(|p| p.images().to_vec()).collect();
            key.sort_unstable();
            if seen.insert(key.clone()) {
                distinct.push((key, gens, elems));
            }
        }
        distinct.sort_by(|a, b| a.0.cmp(&b.0));
        let mut class_reps: Vec<(Vec<Perm>, std::collections::HashSet<Vec<u32>>)> = Vec::new();
        'outer: for (_, gens, elems) in distinct {
            for (_, rset) in &class_reps {
                let conj = elements
                    .par_iter()
                    .any(|g| gens.iter().all(|s| rset.contains(s.conjugate_by(g).images())));
                if conj {
                    continue 'outer;
                }
            }
            class_reps.push((gens, element_set(&elems)));
        }
        class_reps.len()
    };

    let mut out = BTreeMap::new();
    let mut audits = Vec::new();
    for index in 2..below {
        if order % index != 0 {
            continue;
        }
        let m = order / index;
        let bound = m as usize;
        let mut candidates: Vec<(Vec<Perm>, Vec<Perm>)> = Vec::new();
        let mut two_gen = 0u64;
        let mut three_gen = 0u64;
        let usable: Vec<usize> = (0..reps.len())
            .filter(|&ri| m % reps[ri].order() == 0)
            .collect();
        for &ri in &usable {
            two_gen += elements.len() as u64;
            for (xi, &o) in table[ri].iter().enumerate() {
                if o == m {
                    let gens = vec![reps[ri].clone(), elements[xi].clone()];
                    let elems = closure_bounded(degree, &gens, bound)
                        .expect("closure order known from the table");
                    candidates.push((gens, elems));
                }
            }
        }
        if candidates.is_empty() {
            // three-generator escalation from the table's partner sets
            for &ri in &usable {
                let r = &reps[ri];
                let partners: Vec<usize> = table[ri]
                    .iter()
                    .enumerate()
                    .filter(|&(_, &o)| o > 1 && o < m && m % o == 0)
                    .map(|(xi, _)| xi)
                    .collect();
                let mut seen_mid = std::collections::HashSet::new();
                let mut mids: Vec<(usize, Vec<Perm>)> = Vec::new();
                for &xi in &partners {
                    let elems =
                        closure_bounded(degree, &[r.clone(), elements[xi].clone()], bound)
                            .expect("order divides m");
                    let mut key: Vec<Vec<u32>> =
                        elems.iter().map(|p| p.images().to_vec()).collect();
                    key.sort_unstable();
                    if seen_mid.insert(key) {
                        mids.push((xi, elems));
                    }
                }
                for (xi, mid_elems) in &mids {
                    let mid_set = element_set(mid_elems);
                    let mut seen_cosets = std::collections::HashSet::new();
                    let mut coset_reps = Vec::new();
                    for &yi in &partners {
                        let y = &elements[yi];
                        if mid_set.contains(&y.images().to_vec()) {
                            continue;
                        }
                        let coset_key = mid_elems
                            .iter()
                            .map(|s| s.compose(y).unwrap().images().to_vec())
                            .min()
                            .unwrap();
                        if seen_cosets.insert(coset_key) {
                            coset_reps.push(yi);
                        }
                    }
                    three_gen += coset_reps.len() as u64;
                    let hits: Vec<(Vec<Perm>, Vec<Perm>)> = coset_reps
                        .par_iter()
                        .filter_map(|&yi| {
                            let gens = vec![
                                r.clone(),
                                elements[*xi].clone(),
                                elements[yi].clone(),
                            ];
                            match perm_core::closure_order_bounded(degree, &gens, bound) {
                                Some(o) if o as u64 == m => {
                                    let e = closure_bounded(degree, &gens, bound)
                                        .expect("order just computed");
                                    Some((gens, e))
                                }
                                _ => None,
                            }
                        })
                        .collect();
                    candidates.extend(hits);
                }
            }
        }
        let escalated = three_gen > 0 || candidates.is_empty();
        let class_count = conjugate_classes(candidates);
        audits.push(SearchAudit {
            target_order: m,
            elements_enumerated: elements.len(),
            seed_reps: usable.len(),
            two_gen_pairs: two_gen,
            three_gen_triples: three_gen,
            generator_bound: if escalated { 3 } else { 2 },
        });
        if class_count > 0 {
            out.insert(index, class_count);
        }
    }
    Ok((out, audits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::{Descriptor, GroupKind};
    use crate::sd::sd_subgroup_classes;
    use atlas::{subsets_action, NaturalKind};

    #[test]
    fn alt9_tower_profile_on_pairs() {
        let q = sd_subgroup_classes(3).iter().find(|c| c.index == 1).unwrap();
        let k = Descriptor::AltTower {
            d: 3,
            quotient: q.clone(),
        }
        .realize(9, GroupKind::Alt);
        let action = subsets_action(NaturalKind::Alt, 9, 2);
        // split-type counting: C(3,2)=3, 3*6=18, C(6,2)=15
        assert_eq!(orbit_profile(&k, &action), vec![3, 15, 18]);
    }

    #[test]
    fn alt14_tower_profile_on_triples() {
        let q = sd_subgroup_classes(5).iter().find(|c| c.index == 1).unwrap();
        let k = Descriptor::AltTower {
            d: 5,
            quotient: q.clone(),
        }
        .realize(14, GroupKind::Alt);
        let action = subsets_action(NaturalKind::Alt, 14, 3);
        // split types: C(5,3)=10, C(5,2)*9=90, 5*C(9,2)=180, C(9,3)=84
        assert_eq!(orbit_profile(&k, &action), vec![10, 84, 90, 180]);
    }
}
