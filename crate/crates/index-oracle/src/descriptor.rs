//! Classified shapes of small-index subgroups of Alt(n)/Sym(n) and their
//! realization as explicit permutation groups.
//!
//! Tower shapes follow the sandwich between the pointwise and setwise
//! stabilizers of a small set: on the alternating side the intermediate
//! subgroups correspond to quotient subgroups Q of the symmetric group on
//! the set, with index C(n,d)·[S_d : Q]; the symmetric side additionally
//! carries the index-2 extensions linked by the sign character.

use std::fmt;

use atlas::{
    agl3_2_on_8, binom_u64, gl3_2_on_7, natural_generators, pgammal2_8_on_9,
    projective_family_action, NaturalKind, ProjectiveVariant,
};
use perm_core::{even_subgroup_generators, Perm, PermGroup};

use crate::sd::{sd_subgroup_classes, SdClass};

/// The six exceptional small-index subgroups of alternating groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalCase {
    /// (5, 2, 6): the Frobenius group 5:2 inside A5.
    A5Frobenius,
    /// (6, 2, 6): PSL(2,5) acting on 6 points.
    A6Psl25,
    /// (6, 3, 15): the imprimitive pair-block stabilizer inside A6.
    A6PairBlocks,
    /// (7, 2, 15): PSL(3,2) on 7 points.
    A7Psl32,
    /// (8, 2, 15): AGL(3,2) on 8 points.
    A8Agl32,
    /// (9, 4, 120): PGammaL(2,8) on 9 points.
    A9PGammaL28,
}

impl ExceptionalCase {
    pub const ALL: [ExceptionalCase; 6] = [
        ExceptionalCase::A5Frobenius,
        ExceptionalCase::A6Psl25,
        ExceptionalCase::A6PairBlocks,
        ExceptionalCase::A7Psl32,
        ExceptionalCase::A8Agl32,
        ExceptionalCase::A9PGammaL28,
    ];

    pub fn n(&self) -> usize {
        match self {
            ExceptionalCase::A5Frobenius => 5,
            ExceptionalCase::A6Psl25 | ExceptionalCase::A6PairBlocks => 6,
            ExceptionalCase::A7Psl32 => 7,
            ExceptionalCase::A8Agl32 => 8,
            ExceptionalCase::A9PGammaL28 => 9,
        }
    }

    pub fn index(&self) -> u64 {
        match self {
            ExceptionalCase::A5Frobenius | ExceptionalCase::A6Psl25 => 6,
            ExceptionalCase::A6PairBlocks => 15,
            ExceptionalCase::A7Psl32 | ExceptionalCase::A8Agl32 => 15,
            ExceptionalCase::A9PGammaL28 => 120,
        }
    }

    pub fn realize(&self) -> PermGroup {
        match self {
            ExceptionalCase::A5Frobenius => PermGroup::new(
                5,
                vec![
                    Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
                    Perm::from_cycles(5, &[&[1, 4], &[2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
            ExceptionalCase::A6Psl25 => {
                projective_family_action(5, ProjectiveVariant::Psl).group
            }
            ExceptionalCase::A6PairBlocks => {
                // blocks {0,1}, {2,3}, {4,5}
                let wreath = vec![
                    Perm::from_cycles(6, &[&[0, 1]]).unwrap(),
                    Perm::from_cycles(6, &[&[0, 2], &[1, 3]]).unwrap(),
                    Perm::from_cycles(6, &[&[0, 2, 4], &[1, 3, 5]]).unwrap(),
                ];
                PermGroup::new(6, even_subgroup_generators(6, &wreath)).unwrap()
            }
            ExceptionalCase::A7Psl32 => gl3_2_on_7(),
            ExceptionalCase::A8Agl32 => agl3_2_on_8(),
            ExceptionalCase::A9PGammaL28 => pgammal2_8_on_9(),
        }
    }
}

/// A classified small-index subgroup, realizable as explicit generators.
#[derive(Debug, Clone)]
pub enum Descriptor {
    /// Alt side: σ preserves a d-set, restricts into Q on it, and is even.
    AltTower { d: usize, quotient: SdClass },
    /// Sym side: σ preserves a d-set and restricts into Q; parity free.
    SymTower { d: usize, quotient: SdClass },
    /// Sym side: restriction lies in `quotient` and the complement parity is
    /// linked through the sign character with kernel `kernel`.
    SymDiagonal {
        d: usize,
        quotient: SdClass,
        kernel: SdClass,
    },
    /// n = 2m: stabilizer of a partition into two halves.
    HalfPartition,
    /// An alternating-side subgroup viewed inside Sym(n) (index doubles).
    AltInSym(Box<Descriptor>),
    /// Alt(n) inside Sym(n).
    AltItself,
    /// An exceptional case of the small-index lemma.
    Exceptional(ExceptionalCase),
    /// Index-2 extension of an exceptional case by an odd normalizer.
    ExceptionalExtension(ExceptionalCase),
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::AltTower { d, quotient } => {
                write!(f, "alt-tower(d={d}, quotient-index={})", quotient.index)
            }
            Descriptor::SymTower { d, quotient } => {
                write!(f, "sym-tower(d={d}, quotient-index={})", quotient.index)
            }
            Descriptor::SymDiagonal { d, quotient, .. } => {
                write!(f, "sym-diagonal(d={d}, quotient-index={})", quotient.index)
            }
            Descriptor::HalfPartition => write!(f, "half-partition"),
            Descriptor::AltInSym(inner) => write!(f, "alt-in-sym({inner})"),
            Descriptor::AltItself => write!(f, "alternating-subgroup"),
            Descriptor::Exceptional(c) => write!(f, "exceptional({c:?})"),
            Descriptor::ExceptionalExtension(c) => write!(f, "exceptional-ext({c:?})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Alt,
    Sym,
}

impl GroupKind {
    pub fn natural(&self) -> NaturalKind {
        match self {
            GroupKind::Alt => NaturalKind::Alt,
            GroupKind::Sym => NaturalKind::Sym,
        }
    }
    pub fn label(&self, n: usize) -> String {
        self.natural().label(n)
    }
}

fn extend_to_degree(p: &Perm, n: usize) -> Perm {
    let mut images: Vec<u32> = (0..n as u32).collect();
    for (i, &y) in p.images().iter().enumerate() {
        images[i] = y;
    }
    Perm::from_images(images).unwrap()
}

fn alt_gens_on_complement(n: usize, d: usize) -> Vec<Perm> {
    // Alt on letters d..n-1, embedded in degree n
    let m = n - d;
    assert!(m >= 3);
    natural_generators(NaturalKind::Alt, m)
        .into_iter()
        .map(|g| {
            let mut images: Vec<u32> = (0..n as u32).collect();
            for (i, &y) in g.images().iter().enumerate() {
                images[d + i] = d as u32 + y;
            }
            Perm::from_images(images).unwrap()
        })
        .collect()
}

fn sym_gens_on_complement(n: usize, d: usize) -> Vec<Perm> {
    let m = n - d;
    assert!(m >= 2);
    natural_generators(NaturalKind::Sym, m)
        .into_iter()
        .map(|g| {
            let mut images: Vec<u32> = (0..n as u32).collect();
            for (i, &y) in g.images().iter().enumerate() {
                images[d + i] = d as u32 + y;
            }
            Perm::from_images(images).unwrap()
        })
        .collect()
}

fn half_partition_stabilizer(n: usize, kind: GroupKind) -> PermGroup {
    let m = n / 2;
    let mut gens = natural_generators(NaturalKind::Sym, m)
        .into_iter()
        .map(|g| extend_to_degree(&g, n))
        .collect::<Vec<_>>();
    let swap: Vec<u32> = (0..n as u32)
        .map(|x| if x < m as u32 { x + m as u32 } else { x - m as u32 })
        .collect();
    gens.push(Perm::from_images(swap).unwrap());
    match kind {
        GroupKind::Sym => PermGroup::new(n, gens).unwrap(),
        GroupKind::Alt => PermGroup::new(n, even_subgroup_generators(n, &gens)).unwrap(),
    }
}

impl Descriptor {
    /// Explicit generators for the descriptor inside Alt(n) or Sym(n).
    /// The returned group's order times the descriptor's index equals the
    /// ambient group order; callers assert this.
    pub fn realize(&self, n: usize, kind: GroupKind) -> PermGroup {
        match self {
            Descriptor::AltTower { d, quotient } => {
                assert_eq!(kind, GroupKind::Alt);
                let mut gens = alt_gens_on_complement(n, *d);
                let fix = Perm::from_cycles(n, &[&[*d as u32, *d as u32 + 1]]).unwrap();
                for q in &quotient.gens {
                    let ext = extend_to_degree(q, n);
                    if ext.is_even() {
                        gens.push(ext);
                    } else {
                        gens.push(ext.compose(&fix).unwrap());
                    }
                }
                PermGroup::new(n, gens).unwrap()
            }
            Descriptor::SymTower { d, quotient } => {
                assert_eq!(kind, GroupKind::Sym);
                let mut gens = sym_gens_on_complement(n, *d);
                for q in &quotient.gens {
                    gens.push(extend_to_degree(q, n));
                }
                PermGroup::new(n, gens).unwrap()
            }
            Descriptor::SymDiagonal {
                d,
                quotient,
                kernel,
            } => {
                assert_eq!(kind, GroupKind::Sym);
                let fix = Perm::from_cycles(n, &[&[*d as u32, *d as u32 + 1]]).unwrap();
                let mut gens = alt_gens_on_complement(n, *d);
                for q in &kernel.gens {
                    let ext = extend_to_degree(q, n);
                    if ext.is_even() {
                        gens.push(ext);
                    } else {
                        gens.push(ext.compose(&fix).unwrap());
                    }
                }
                // one coset representative outside the kernel, with the
                // complement parity flipped against its sign
                let kernel_set = perm_core::element_set(&kernel.elements);
                let coset_rep = quotient
                    .elements
                    .iter()
                    .find(|e| !kernel_set.contains(&e.images().to_vec()))
                    .expect("quotient strictly contains kernel");
                let ext = extend_to_degree(coset_rep, n);
                if ext.is_even() {
                    gens.push(ext.compose(&fix).unwrap());
                } else {
                    gens.push(ext);
                }
                PermGroup::new(n, gens).unwrap()
            }
            Descriptor::HalfPartition => half_partition_stabilizer(n, kind),
            Descriptor::AltInSym(inner) => inner.realize(n, GroupKind::Alt),
            Descriptor::AltItself => {
                PermGroup::new(n, natural_generators(NaturalKind::Alt, n)).unwrap()
            }
            Descriptor::Exceptional(c) => {
                assert_eq!(c.n(), n);
                c.realize()
            }
            Descriptor::ExceptionalExtension(c) => {
                assert_eq!(c.n(), n);
                crate::achievable::exceptional_extension(*c)
                    .expect("extension existence checked before realization")
            }
        }
    }

    /// Index of the described subgroup in the ambient group of the kind it
    /// belongs to.
    pub fn index(&self, n: usize) -> u64 {
        match self {
            Descriptor::AltTower { d, quotient } | Descriptor::SymTower { d, quotient } => {
                binom_u64(n as u64, *d as u64).unwrap() * quotient.index
            }
            Descriptor::SymDiagonal { d, quotient, .. } => {
                2 * binom_u64(n as u64, *d as u64).unwrap() * quotient.index
            }
            Descriptor::HalfPartition => binom_u64(n as u64, n as u64 / 2).unwrap() / 2,
            Descriptor::AltInSym(inner) => 2 * inner.index(n),
            Descriptor::AltItself => 2,
            Descriptor::Exceptional(c) | Descriptor::ExceptionalExtension(c) => c.index(),
        }
    }
}

/// All tower descriptors of the given kind with index below the bound,
/// for set sizes `1 <= d < s_min`.
pub fn tower_descriptors(n: usize, s_min: usize, below: u64, kind: GroupKind) -> Vec<(u64, Descriptor)> {
    let mut out = Vec::new();
    for d in 1..s_min {
        assert!(d <= 6, "quotient tables cover d <= 6");
        let cnd = match binom_u64(n as u64, d as u64) {
            Some(c) if c < below => c,
            _ => continue,
        };
        for class in sd_subgroup_classes(d) {
            let idx = cnd * class.index;
            if idx >= below {
                continue;
            }
            let desc = match kind {
                GroupKind::Alt => Descriptor::AltTower {
                    d,
                    quotient: class.clone(),
                },
                GroupKind::Sym => Descriptor::SymTower {
                    d,
                    quotient: class.clone(),
                },
            };
            out.push((idx, desc));
        }
    }
    out
}
