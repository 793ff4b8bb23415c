//! Projective-line actions built from Möbius maps over small fields: the
//! PSL/PGL/M10/PGammaL family over F9 on 10 points, PSL2(5) on 6 points,
//! and PGammaL2(8) on 9 points.
//!
//! Point indexing: field codes `0..q`, then infinity as index `q`.

use perm_core::{Perm, PermGroup};

use crate::gf::{gf5, gf8, gf9, SmallField};
use crate::natural::GroupAction;
use crate::space::ActionSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectiveVariant {
    Psl,
    Pgl,
    M10,
    PGammaL,
}

impl ProjectiveVariant {
    pub fn label(&self, q: usize) -> String {
        match self {
            ProjectiveVariant::Psl => format!("PSL(2,{q})"),
            ProjectiveVariant::Pgl => format!("PGL(2,{q})"),
            ProjectiveVariant::M10 => "M10".to_string(),
            ProjectiveVariant::PGammaL => format!("PGammaL(2,{q})"),
        }
    }
}

/// z -> (a z + b) / (c z + d) on the projective line, infinity included.
pub fn mobius_perm(f: &SmallField, a: u8, b: u8, c: u8, d: u8) -> Perm {
    let q = f.q;
    let inf = q as u32;
    let det_zero = f.sub(f.mul(a, d), f.mul(b, c)) == 0;
    assert!(!det_zero, "Möbius map needs an invertible matrix");
    let mut images = vec![0u32; q + 1];
    for z in 0..q as u8 {
        let num = f.add(f.mul(a, z), b);
        let den = f.add(f.mul(c, z), d);
        images[z as usize] = if den == 0 {
            inf
        } else {
            f.mul(num, f.inv(den)) as u32
        };
    }
    images[q] = if c == 0 {
        inf
    } else {
        f.mul(a, f.inv(c)) as u32
    };
    Perm::from_images(images).expect("Möbius maps are bijections")
}

/// The field automorphism z -> z^p extended to the projective line.
pub fn frobenius_perm(f: &SmallField) -> Perm {
    let q = f.q;
    let mut images: Vec<u32> = (0..q as u8).map(|z| f.frob(z) as u32).collect();
    images.push(q as u32);
    Perm::from_images(images).unwrap()
}

fn psl_generators(f: &SmallField) -> Vec<Perm> {
    let g = f.primitive_element();
    let c = f.mul(g, g); // generating square
    vec![
        mobius_perm(f, 1, 1, 0, 1),          // z -> z + 1
        mobius_perm(f, c, 0, 0, 1),          // z -> c z
        mobius_perm(f, 0, f.neg(1), 1, 0),   // z -> -1/z
    ]
}

/// Degree q+1 actions of the projective family. M10 and PGammaL require
/// q = 9; PGL is available for odd q.
pub fn projective_family_action(q: usize, variant: ProjectiveVariant) -> GroupAction {
    let f = match q {
        5 => gf5(),
        9 => gf9(),
        _ => panic!("projective family supports q in {{5, 9}}"),
    };
    if q != 9 {
        assert!(
            matches!(variant, ProjectiveVariant::Psl | ProjectiveVariant::Pgl),
            "M10 and PGammaL exist only over F9"
        );
    }
    let g = f.primitive_element();
    let mut gens = psl_generators(&f);
    match variant {
        ProjectiveVariant::Psl => {}
        ProjectiveVariant::Pgl => gens.push(mobius_perm(&f, g, 0, 0, 1)),
        ProjectiveVariant::PGammaL => {
            gens.push(mobius_perm(&f, g, 0, 0, 1));
            gens.push(frobenius_perm(&f));
        }
        ProjectiveVariant::M10 => {
            // scalar-by-nonsquare composed with the Frobenius
            let scale = mobius_perm(&f, g, 0, 0, 1);
            let w = frobenius_perm(&f).compose(&scale).unwrap();
            gens.push(w);
        }
    }
    let group = PermGroup::new(q + 1, gens).unwrap();
    let expected: u64 = match (q, variant) {
        (5, ProjectiveVariant::Psl) => 60,
        (5, ProjectiveVariant::Pgl) => 120,
        (9, ProjectiveVariant::Psl) => 360,
        (9, ProjectiveVariant::Pgl) => 720,
        (9, ProjectiveVariant::M10) => 720,
        (9, ProjectiveVariant::PGammaL) => 1440,
        _ => unreachable!(),
    };
    assert_eq!(group.order_u64(), Some(expected), "projective order check");
    GroupAction {
        group,
        space: ActionSpace::projective_line(q),
        letter_gens: None,
        name: variant.label(q),
    }
}

/// PGammaL(2,8) of degree 9 and order 1512; the Lemma on small-index
/// subgroups lists it as the exceptional subgroup of A9 of index 120.
pub fn pgammal2_8_on_9() -> PermGroup {
    let f = gf8();
    let g = f.primitive_element();
    let mut gens = vec![
        mobius_perm(&f, 1, 1, 0, 1),
        mobius_perm(&f, g, 0, 0, 1),
        mobius_perm(&f, 0, 1, 1, 0), // z -> 1/z (char 2)
        frobenius_perm(&f),
    ];
    gens.retain(|p| !p.is_identity());
    let group = PermGroup::new(9, gens).unwrap();
    assert_eq!(group.order_u64(), Some(1512));
    group
}
