//! Binary linear and affine groups as permutation groups: GL(4,2) on the 15
//! nonzero vectors of F2^4, GL(3,2) on 7 points, AGL(3,2) on 8 points, and
//! the deterministic location of index-8 alternating subgroups inside the
//! degree-15 group.

use perm_core::{
    closure_bounded, element_set, orbit, Perm, PermGroup, SubgroupClass,
};

use crate::natural::GroupAction;
use crate::space::ActionSpace;

/// A binary matrix acting on bit-vector codes; row i is the image of e_i.
fn apply_matrix(rows: &[u16], v: u16) -> u16 {
    let mut out = 0u16;
    for (i, &row) in rows.iter().enumerate() {
        if v & (1 << i) != 0 {
            out ^= row;
        }
    }
    out
}

fn matrix_perm_on_nonzero(rows: &[u16]) -> Perm {
    let dim = rows.len();
    let size = (1usize << dim) - 1;
    let mut images = vec![0u32; size];
    for v in 1..=size as u16 {
        let w = apply_matrix(rows, v);
        assert!(w != 0, "matrix must be invertible");
        images[(v - 1) as usize] = (w - 1) as u32;
    }
    Perm::from_images(images).expect("invertible matrix permutes nonzero vectors")
}

fn matrix_perm_on_all(rows: &[u16]) -> Perm {
    let dim = rows.len();
    let size = 1usize << dim;
    let mut images = vec![0u32; size];
    for v in 0..size as u16 {
        images[v as usize] = apply_matrix(rows, v) as u32;
    }
    Perm::from_images(images).expect("invertible matrix is a bijection")
}

/// GL(4,2) of order 20160 on the 15 nonzero vectors: companion matrix of the
/// primitive polynomial x^4 + x + 1 plus one transvection.
pub fn linear_group_action() -> GroupAction {
    // companion: e1->e2->e3->e4, e4 -> e1 + e2   (x^4 = x + 1)
    let companion: [u16; 4] = [0b0010, 0b0100, 0b1000, 0b0011];
    // transvection: e2 -> e1 + e2
    let transvection: [u16; 4] = [0b0001, 0b0011, 0b0100, 0b1000];
    let gens = vec![
        matrix_perm_on_nonzero(&companion),
        matrix_perm_on_nonzero(&transvection),
    ];
    let group = PermGroup::new(15, gens).unwrap();
    assert_eq!(group.order_u64(), Some(20160), "GL(4,2) order");
    GroupAction {
        group,
        space: ActionSpace::nonzero_vectors(4),
        letter_gens: None,
        name: "GL(4,2)@15".into(),
    }
}

/// GL(3,2) = PSL(3,2) of order 168 on the 7 nonzero vectors.
pub fn gl3_2_on_7() -> PermGroup {
    // companion of x^3 + x + 1; transvection e2 -> e1 + e2
    let companion: [u16; 3] = [0b010, 0b100, 0b011];
    let transvection: [u16; 3] = [0b001, 0b011, 0b100];
    let gens = vec![
        matrix_perm_on_nonzero(&companion),
        matrix_perm_on_nonzero(&transvection),
    ];
    let group = PermGroup::new(7, gens).unwrap();
    assert_eq!(group.order_u64(), Some(168), "GL(3,2) order");
    group
}

/// AGL(3,2) of order 1344 on the 8 vectors of F2^3.
pub fn agl3_2_on_8() -> PermGroup {
    let companion: [u16; 3] = [0b010, 0b100, 0b011];
    let transvection: [u16; 3] = [0b001, 0b011, 0b100];
    let translation = {
        let mut images = vec![0u32; 8];
        for v in 0..8u16 {
            images[v as usize] = (v ^ 1) as u32;
        }
        Perm::from_images(images).unwrap()
    };
    let gens = vec![
        matrix_perm_on_all(&companion),
        matrix_perm_on_all(&transvection),
        translation,
    ];
    let group = PermGroup::new(8, gens).unwrap();
    assert_eq!(group.order_u64(), Some(1344), "AGL(3,2) order");
    group
}

/// Deterministic scan for index-8 alternating subgroups of the degree-15
/// linear group: the seed is the first order-7 element in enumeration
/// order, partners sweep all elements, and closures of order 2520 that act
/// transitively are kept, deduplicated up to conjugacy.
pub fn locate_a7(action: &GroupAction) -> Vec<SubgroupClass> {
    use rayon::prelude::*;
    let degree = action.space.size();
    let elements =
        closure_bounded(degree, action.group.gens(), 20160).expect("group fits the bound");
    let seed = elements
        .iter()
        .find(|e| e.order() == 7)
        .expect("GL(4,2) has elements of order 7")
        .clone();
    let candidates: Vec<SubgroupClass> = elements
        .par_iter()
        .filter_map(|x| {
            let elems = closure_bounded(degree, &[seed.clone(), x.clone()], 2520).ok()?;
            if elems.len() != 2520 {
                return None;
            }
            let gens = vec![seed.clone(), x.clone()];
            if orbit(&gens, 0).len() != degree {
                return None;
            }
            Some(SubgroupClass {
                gens,
                elements: elems,
            })
        })
        .collect();
    // dedupe identical element sets, then conjugacy classes
    let mut by_key: Vec<(Vec<Vec<u32>>, SubgroupClass)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for c in candidates {
        let mut key: Vec<Vec<u32>> = c.elements.iter().map(|p| p.images().to_vec()).collect();
        key.sort_unstable();
        if seen.insert(key.clone()) {
            by_key.push((key, c));
        }
    }
    by_key.sort_by(|a, b| a.0.cmp(&b.0));
    let mut reps: Vec<SubgroupClass> = Vec::new();
    'outer: for (_, c) in by_key {
        for r in &reps {
            let rset = element_set(&r.elements);
            let conj = elements
                .iter()
                .any(|g| c.gens.iter().all(|s| rset.contains(s.conjugate_by(g).images())));
            if conj {
                continue 'outer;
            }
        }
        reps.push(c);
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use perm_core::{is_primitive, Primitivity};

    #[test]
    fn linear_group_is_transitive_of_order_20160() {
        let act = linear_group_action();
        assert_eq!(act.space.size(), 15);
        assert_eq!(orbit(act.group.gens(), 0).len(), 15);
        assert_eq!(act.group.order_u64(), Some(20160));
    }

    #[test]
    fn degree_15_two_transitivity() {
        let act = linear_group_action();
        let stab = act.group.point_stabilizer(0);
        let lens = perm_core::orbit_lengths(stab.gens(), 15);
        assert_eq!(lens, vec![1, 14]);
    }

    #[test]
    fn locate_a7_finds_transitive_primitive_copies() {
        let act = linear_group_action();
        let reps = locate_a7(&act);
        assert!(!reps.is_empty());
        for r in &reps {
            assert_eq!(r.order(), 2520);
            let g = r.group(15);
            assert_eq!(orbit(g.gens(), 0).len(), 15);
            assert_eq!(is_primitive(g.gens(), 15), Primitivity::Primitive);
        }
    }

    #[test]
    fn small_linear_groups() {
        assert_eq!(gl3_2_on_7().order_u64(), Some(168));
        assert_eq!(agl3_2_on_8().order_u64(), Some(1344));
    }
}
