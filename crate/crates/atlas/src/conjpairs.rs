//! The degree-36 actions of the F9 projective family on conjugate-pair
//! classes {a, a^9} of F81 outside F9, plus the degree-45 companion induced
//! as 2-subsets of the degree-10 projective line.

use perm_core::{Perm, PermGroup};

use crate::gf::{gf9, Gf81};
use crate::natural::GroupAction;
use crate::projective::{projective_family_action, ProjectiveVariant};
use crate::space::ActionSpace;

/// Canonical indexing of the 36 classes: class key is the pair member with
/// the smaller code; classes sorted by key.
struct PairIndex {
    f: Gf81,
    class_of: Vec<u32>,
    rep_of: Vec<u8>,
}

impl PairIndex {
    fn new() -> Self {
        let f = Gf81::new();
        let mut keys: Vec<u8> = Vec::new();
        for u in 0..81u8 {
            if Gf81::parts(u).1 == 0 {
                continue; // inside F9
            }
            let c = f.conj(u);
            if u <= c {
                keys.push(u);
            }
        }
        keys.sort_unstable();
        assert_eq!(keys.len(), 36, "(81 - 9) / 2 Frobenius pairs");
        let mut class_of = vec![u32::MAX; 81];
        for (i, &k) in keys.iter().enumerate() {
            class_of[k as usize] = i as u32;
            class_of[f.conj(k) as usize] = i as u32;
        }
        PairIndex {
            f,
            class_of,
            rep_of: keys,
        }
    }

    fn perm_from_map(&self, map: impl Fn(&Gf81, u8) -> u8) -> Perm {
        let mut images = vec![0u32; 36];
        for (i, &rep) in self.rep_of.iter().enumerate() {
            let image = map(&self.f, rep);
            images[i] = self.class_of[image as usize];
        }
        Perm::from_images(images).expect("class maps are bijections")
    }
}

/// Degree-36 conjugate-pair action for a projective-family variant.
pub fn conjugate_pair_action(variant: ProjectiveVariant) -> GroupAction {
    let idx = PairIndex::new();
    let f9 = gf9();
    let g9 = f9.primitive_element();
    let c9 = f9.mul(g9, g9);
    let emb = |a: u8| Gf81::code(a, 0);

    // z -> z + 1
    let t = idx.perm_from_map(|f, z| f.add(z, emb(1)));
    // z -> c z with c the generating square of F9
    let m = idx.perm_from_map(|f, z| f.mul(z, emb(c9)));
    // z -> -1/z   (z is outside F9, never zero)
    let s = idx.perm_from_map(|f, z| f.neg(f.inv(z)));
    // z -> g z with g the fixed nonsquare
    let n = idx.perm_from_map(|f, z| f.mul(z, emb(g9)));
    // z -> z^3
    let fr = idx.perm_from_map(|f, z| f.cube(z));
    // z -> g z^3
    let w = idx.perm_from_map(|f, z| f.mul(f.cube(z), emb(g9)));

    let mut gens = vec![t, m, s];
    match variant {
        ProjectiveVariant::Psl => {}
        ProjectiveVariant::Pgl => gens.push(n),
        ProjectiveVariant::PGammaL => {
            gens.push(n);
            gens.push(fr);
        }
        ProjectiveVariant::M10 => gens.push(w),
    }
    let group = PermGroup::new(36, gens).unwrap();
    let expected: u64 = match variant {
        ProjectiveVariant::Psl => 360,
        ProjectiveVariant::Pgl => 720,
        ProjectiveVariant::M10 => 720,
        ProjectiveVariant::PGammaL => 1440,
    };
    assert_eq!(
        group.order_u64(),
        Some(expected),
        "degree-36 action is faithful"
    );
    GroupAction {
        group,
        space: ActionSpace::conjugate_pairs(),
        letter_gens: None,
        name: format!("{}@deg36", variant.label(9)),
    }
}

/// Degree-45 companion: the 2-subsets of the degree-10 projective line.
pub fn pairs_of_line_action(variant: ProjectiveVariant) -> GroupAction {
    let base = projective_family_action(9, variant);
    let space = ActionSpace::subsets(10, 2);
    let gens: Vec<Perm> = base.group.gens().iter().map(|g| space.induce(g)).collect();
    let group = PermGroup::new(45, gens).unwrap();
    GroupAction {
        group,
        space,
        letter_gens: Some(base.group.gens().to_vec()),
        name: format!("{}@deg45", variant.label(9)),
    }
}
