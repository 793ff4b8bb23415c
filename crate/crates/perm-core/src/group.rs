//! Permutation groups with cached base-and-strong-generating-set data.
//!
//! The Schreier–Sims construction here is the deterministic textbook version:
//! base points are chosen as the first moved point of each offending residue,
//! generators are processed in list order, and orbits are breadth-first. The
//! group order is the product of the fundamental orbit lengths, kept as an
//! unbounded integer.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Perm;
use crate::PermError;

#[derive(Debug, Clone)]
struct Level {
    point: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    transversal: HashMap<u32, Perm>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut transversal = HashMap::new();
        transversal.insert(point, Perm::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.orbit = vec![self.point];
        self.transversal.clear();
        self.transversal.insert(self.point, Perm::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            let ux = self.transversal[&x].clone();
            for g in &self.gens {
                let y = g.apply(x);
                if !self.transversal.contains_key(&y) {
                    self.transversal.insert(y, ux.compose_unchecked(g));
                    self.orbit.push(y);
                }
            }
            head += 1;
        }
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
    order: BigUint,
}

impl Bsgs {
    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn fundamental_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// All strong generators, one copy each, level by level.
    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for l in &self.levels {
            for g in &l.gens {
                if seen.insert(g.clone()) {
                    out.push(g.clone());
                }
            }
        }
        if out.is_empty() {
            out.push(Perm::identity(self.degree));
        }
        out
    }

    /// Strips `g` through the chain; returns the residue and the level at
    /// which stripping stopped. Membership holds iff the residue is the
    /// identity after the full chain.
    pub fn strip(&self, g: &Perm, from: usize) -> (usize, Perm) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let y = h.apply(self.levels[i].point);
            match self.levels[i].transversal.get(&y) {
                None => return (i, h),
                Some(u) => h = h.compose_unchecked(&u.inverse()),
            }
        }
        (self.levels.len(), h)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (_, h) = self.strip(g, 0);
        h.is_identity()
    }
}

fn first_moved_point(g: &Perm) -> Option<u32> {
    (0..g.degree() as u32).find(|&x| g.apply(x) != x)
}

struct Builder {
    degree: usize,
    levels: Vec<Level>,
}

impl Builder {
    fn strip(&self, g: &Perm, from: usize) -> (usize, Perm) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let y = h.apply(self.levels[i].point);
            match self.levels[i].transversal.get(&y) {
                None => return (i, h),
                Some(u) => h = h.compose_unchecked(&u.inverse()),
            }
        }
        (self.levels.len(), h)
    }

    /// Adds `g` (known to fix the base prefix below `level`) as a strong
    /// generator and restores the chain invariant.
    fn add_generator(&mut self, g: Perm, level: usize) {
        let (stop, h) = self.strip(&g, level);
        if h.is_identity() {
            return;
        }
        if stop == self.levels.len() {
            let pt = first_moved_point(&h).expect("non-identity residue moves a point");
            self.levels.push(Level::new(pt, self.degree));
        }
        for l in level..=stop {
            self.levels[l].gens.push(h.clone());
            self.levels[l].recompute_orbit(self.degree);
        }
        let mut l = stop;
        loop {
            self.verify_level(l);
            if l == level {
                break;
            }
            l -= 1;
        }
    }

    /// Re-establishes that every Schreier generator of level `i` strips to
    /// the identity through the deeper levels. Additions at deeper levels fix
    /// this level's base point, so the level-`i` orbit is stable here.
    fn verify_level(&mut self, i: usize) {
        let mut idx = 0usize;
        while idx < self.levels[i].orbit.len() {
            let x = self.levels[i].orbit[idx];
            let ux = self.levels[i].transversal[&x].clone();
            let gens = self.levels[i].gens.clone();
            for g in &gens {
                let y = g.apply(x);
                let uy = self.levels[i].transversal[&y].clone();
                let s = ux.compose_unchecked(g).compose_unchecked(&uy.inverse());
                if s.is_identity() {
                    continue;
                }
                let (stop, h) = self.strip(&s, i + 1);
                if h.is_identity() {
                    continue;
                }
                if stop == self.levels.len() {
                    let pt = first_moved_point(&h).expect("residue moves a point");
                    self.levels.push(Level::new(pt, self.degree));
                }
                for l in (i + 1)..=stop {
                    self.levels[l].gens.push(h.clone());
                    self.levels[l].recompute_orbit(self.degree);
                }
                let mut l = stop;
                while l > i {
                    self.verify_level(l);
                    l -= 1;
                }
            }
            idx += 1;
        }
    }
}

/// Deterministic Schreier–Sims; accepts an empty generator list (trivial group).
pub fn schreier_sims(degree: usize, gens: &[Perm]) -> Bsgs {
    let mut b = Builder {
        degree,
        levels: Vec::new(),
    };
    for g in gens {
        b.add_generator(g.clone(), 0);
    }
    let mut order = BigUint::one();
    for l in &b.levels {
        order *= BigUint::from(l.orbit.len());
    }
    Bsgs {
        degree,
        levels: b.levels,
        order,
    }
}

/// A permutation group given by generators, with lazily computed BSGS.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let g = PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            bsgs: OnceLock::new(),
        };
        if let Some(b) = self.bsgs.get() {
            let _ = g.bsgs.set(b.clone());
        }
        g
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, PermError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            gens,
            bsgs: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            gens: Vec::new(),
            bsgs: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| schreier_sims(self.degree, &self.gens))
    }

    pub fn order(&self) -> BigUint {
        self.bsgs().order().clone()
    }

    /// Group order when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.bsgs().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Point stabilizer via Schreier generators, with the generating set
    /// reduced to the strong generators of its own chain.
    pub fn point_stabilizer(&self, point: u32) -> PermGroup {
        use crate::orbit;
        match orbit::orbit_capped(&self.gens, point, usize::MAX) {
            orbit::OrbitResult::Complete { points, via } => {
                let sgens = orbit::schreier_generators(&self.gens, &points, &via, self.degree);
                let bsgs = schreier_sims(self.degree, &sgens);
                let reduced = bsgs.strong_generators();
                let g = PermGroup {
                    degree: self.degree,
                    gens: reduced.into_iter().filter(|p| !p.is_identity()).collect(),
                    bsgs: OnceLock::new(),
                };
                let _ = g.bsgs.set(bsgs);
                g
            }
            orbit::OrbitResult::CapExceeded { .. } => unreachable!(),
        }
    }

    /// Setwise stabilizer of a point set, via the orbit of the set. `cap`
    /// bounds the set orbit; `None` means the orbit grew past the cap.
    pub fn set_stabilizer(&self, set: &[u32], cap: usize) -> Option<PermGroup> {
        let sgens = crate::orbit::set_stabilizer_generators(&self.gens, set, cap)?;
        let bsgs = schreier_sims(self.degree, &sgens);
        let reduced: Vec<Perm> = bsgs
            .strong_generators()
            .into_iter()
            .filter(|p| !p.is_identity())
            .collect();
        let g = PermGroup {
            degree: self.degree,
            gens: reduced,
            bsgs: OnceLock::new(),
        };
        let _ = g.bsgs.set(bsgs);
        Some(g)
    }
}

/// Generators for the even-permutation subgroup of `⟨gens⟩` (index 1 or 2),
/// by Reidemeister–Schreier over the transversal `{e, t}` with `t` the first
/// odd generator.
pub fn even_subgroup_generators(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let odd = gens.iter().find(|g| !g.is_even());
    let t = match odd {
        None => return gens.to_vec(),
        Some(t) => t.clone(),
    };
    let t_inv = t.inverse();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |p: Perm, out: &mut Vec<Perm>| {
        if !p.is_identity() && seen.insert(p.clone()) {
            out.push(p);
        }
    };
    for g in gens {
        if g.is_even() {
            push(g.clone(), &mut out);
            push(
                t.compose_unchecked(g).compose_unchecked(&t_inv),
                &mut out,
            );
        } else {
            push(g.compose_unchecked(&t_inv), &mut out);
            push(t.compose_unchecked(g), &mut out);
        }
    }
    let _ = degree;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let mut gens = vec![cyc(n, &[&[0, 1]])];
        let long: Vec<u32> = (0..n as u32).collect();
        gens.push(cyc(n, &[&long]));
        PermGroup::new(n, gens).unwrap()
    }

    fn alt(n: usize) -> PermGroup {
        let three = cyc(n, &[&[0, 1, 2]]);
        let rest: Vec<u32> = if n % 2 == 1 {
            (0..n as u32).collect()
        } else {
            (1..n as u32).collect()
        };
        PermGroup::new(n, vec![three, cyc(n, &[&rest])]).unwrap()
    }

    #[test]
    fn orders_of_small_natural_groups() {
        assert_eq!(alt(5).order_u64(), Some(60));
        assert_eq!(sym(8).order_u64(), Some(40320));
        assert_eq!(alt(9).order_u64(), Some(181440));
        assert_eq!(PermGroup::trivial(4).order_u64(), Some(1));
    }

    #[test]
    fn membership_separates_alt_from_sym() {
        let a6 = alt(6);
        assert!(a6.contains(&cyc(6, &[&[0, 1], &[2, 3]])));
        assert!(!a6.contains(&cyc(6, &[&[0, 1]])));
        assert!(sym(6).contains(&cyc(6, &[&[0, 1]])));
    }

    #[test]
    fn point_stabilizer_order() {
        let a5 = alt(5);
        let stab = a5.point_stabilizer(0);
        assert_eq!(stab.order_u64(), Some(12));
        assert!(stab.gens().iter().all(|g| g.apply(0) == 0));
    }

    #[test]
    fn set_stabilizer_of_pair_in_sym4() {
        let s4 = sym(4);
        let stab = s4.set_stabilizer(&[0, 1], 10).unwrap();
        assert_eq!(stab.order_u64(), Some(4));
    }

    #[test]
    fn even_subgroup_of_sym() {
        let s5 = sym(5);
        let egens = even_subgroup_generators(5, s5.gens());
        let g = PermGroup::new(5, egens).unwrap();
        assert_eq!(g.order_u64(), Some(60));
        assert!(g.gens().iter().all(|p| p.is_even()));
    }
}
