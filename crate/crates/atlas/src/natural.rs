//! Natural alternating/symmetric actions and the subset and half-partition
//! actions induced from them. Every construction verifies its order.

use num_bigint::BigUint;
use perm_core::{orbit, Perm, PermGroup};

use crate::binom::factorial_big;
use crate::space::ActionSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NaturalKind {
    Alt,
    Sym,
}

impl NaturalKind {
    pub fn order(&self, n: usize) -> BigUint {
        let f = factorial_big(n as u64);
        match self {
            NaturalKind::Sym => f,
            NaturalKind::Alt => f / BigUint::from(2u32),
        }
    }

    pub fn label(&self, n: usize) -> String {
        match self {
            NaturalKind::Alt => format!("A{n}"),
            NaturalKind::Sym => format!("S{n}"),
        }
    }
}

/// A group together with the space it acts on and, when the space is built
/// from letters, the letter-level generators behind the action generators.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub group: PermGroup,
    pub space: ActionSpace,
    /// Letter-level preimages of `group.gens()`, when meaningful.
    pub letter_gens: Option<Vec<Perm>>,
    pub name: String,
}

impl GroupAction {
    /// Induces a letter permutation onto this action's space.
    pub fn induce(&self, letter_perm: &Perm) -> Perm {
        self.space.induce(letter_perm)
    }

    /// Induces a whole letter-level group onto the space.
    pub fn induce_group(&self, letter_group: &PermGroup) -> PermGroup {
        let gens = letter_group
            .gens()
            .iter()
            .map(|g| self.space.induce(g))
            .collect();
        PermGroup::new(self.space.size(), gens).expect("induced gens share degree")
    }
}

/// Standard generators of Alt(n) or Sym(n) on `0..n`.
pub fn natural_generators(kind: NaturalKind, n: usize) -> Vec<Perm> {
    match kind {
        NaturalKind::Sym => {
            assert!(n >= 2);
            let long: Vec<u32> = (0..n as u32).collect();
            let mut gens = vec![Perm::from_cycles(n, &[&[0, 1]]).unwrap()];
            if n > 2 {
                gens.push(Perm::from_cycles(n, &[&long]).unwrap());
            }
            gens
        }
        NaturalKind::Alt => {
            assert!(n >= 3);
            let three = Perm::from_cycles(n, &[&[0, 1, 2]]).unwrap();
            if n == 3 {
                return vec![three];
            }
            let rest: Vec<u32> = if n % 2 == 1 {
                (0..n as u32).collect()
            } else {
                (1..n as u32).collect()
            };
            vec![three, Perm::from_cycles(n, &[&rest]).unwrap()]
        }
    }
}

/// Natural action with the order check `n!` or `n!/2` enforced.
pub fn natural_action(kind: NaturalKind, n: usize) -> GroupAction {
    let gens = natural_generators(kind, n);
    let group = PermGroup::new(n, gens.clone()).unwrap();
    assert_eq!(group.order(), kind.order(n), "natural action order check");
    GroupAction {
        group,
        space: ActionSpace::natural(n),
        letter_gens: Some(gens),
        name: kind.label(n),
    }
}

/// Action on s-subsets of `0..n` induced from the natural action.
pub fn subsets_action(kind: NaturalKind, n: usize, s: usize) -> GroupAction {
    assert!(s >= 1 && s < n);
    let letter_gens = natural_generators(kind, n);
    let space = ActionSpace::subsets(n, s);
    let gens: Vec<Perm> = letter_gens.iter().map(|g| space.induce(g)).collect();
    let group = PermGroup::new(space.size(), gens).unwrap();
    debug_assert_eq!(orbit(group.gens(), 0).len(), space.size());
    GroupAction {
        group,
        space,
        letter_gens: Some(letter_gens),
        name: format!("{}/subsets:{}", kind.label(n), s),
    }
}

/// Action on unordered half-partitions of `0..n` (n even).
pub fn half_partition_action(kind: NaturalKind, n: usize) -> GroupAction {
    assert!(n >= 4 && n % 2 == 0, "half partitions need even n >= 4");
    let letter_gens = natural_generators(kind, n);
    let space = ActionSpace::half_partitions(n);
    let gens: Vec<Perm> = letter_gens.iter().map(|g| space.induce(g)).collect();
    let group = PermGroup::new(space.size(), gens).unwrap();
    debug_assert_eq!(orbit(group.gens(), 0).len(), space.size());
    GroupAction {
        group,
        space,
        letter_gens: Some(letter_gens),
        name: format!("{}/halves", kind.label(n)),
    }
}
