//! Orbit computations: capped breadth-first orbits of points and of point
//! sets, Schreier transversals, and Schreier generators for stabilizers.
//!
//! All traversals are breadth-first with generators applied in list order, so
//! results are deterministic for fixed inputs.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::perm::Perm;

/// Orbit of a single point, or proof that it is larger than the cap.
#[derive(Debug, Clone)]
pub enum OrbitResult {
    /// Points in BFS order plus, for each orbit point, a transversal witness
    /// index: `via[i] = (j, g)` means orbit point `i` was first reached from
    /// orbit point `j` by generator `g`.
    Complete {
        points: Vec<u32>,
        via: Vec<(usize, usize)>,
    },
    CapExceeded { cap: usize },
}

impl OrbitResult {
    pub fn len(&self) -> Option<usize> {
        match self {
            OrbitResult::Complete { points, .. } => Some(points.len()),
            OrbitResult::CapExceeded { .. } => None,
        }
    }
}

/// BFS orbit of `start` under `gens`, stopping as soon as more than `cap`
/// points have been discovered (the cap check runs before enqueueing, so the
/// verdict is exact at `cap + 1` discoveries).
pub fn orbit_capped(gens: &[Perm], start: u32, cap: usize) -> OrbitResult {
    let mut points = vec![start];
    let mut via = vec![(usize::MAX, usize::MAX)];
    let mut index: HashMap<u32, usize> = HashMap::new();
    index.insert(start, 0);
    let mut head = 0usize;
    while head < points.len() {
        let x = points[head];
        for (gi, g) in gens.iter().enumerate() {
            let y = g.apply(x);
            if let Entry::Vacant(e) = index.entry(y) {
                if points.len() + 1 > cap {
                    return OrbitResult::CapExceeded { cap };
                }
                e.insert(points.len());
                points.push(y);
                via.push((head, gi));
            }
        }
        head += 1;
    }
    OrbitResult::Complete { points, via }
}

/// Uncapped orbit of a point.
pub fn orbit(gens: &[Perm], start: u32) -> Vec<u32> {
    match orbit_capped(gens, start, usize::MAX) {
        OrbitResult::Complete { points, .. } => points,
        OrbitResult::CapExceeded { .. } => unreachable!(),
    }
}

/// Orbit partition of `0..degree` into BFS orbits, seeds in increasing order.
pub fn orbit_partition(gens: &[Perm], degree: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for s in 0..degree as u32 {
        if seen[s as usize] {
            continue;
        }
        let orb = orbit(gens, s);
        for &x in &orb {
            seen[x as usize] = true;
        }
        orbits.push(orb);
    }
    orbits
}

/// Sorted multiset of orbit lengths on `0..degree`.
pub fn orbit_lengths(gens: &[Perm], degree: usize) -> Vec<usize> {
    let mut lens: Vec<usize> = orbit_partition(gens, degree).iter().map(|o| o.len()).collect();
    lens.sort_unstable();
    lens
}

/// Transversal for a completed orbit: `transversal[i]` maps `start` to the
/// i-th orbit point.
pub fn transversal(gens: &[Perm], points: &[u32], via: &[(usize, usize)], degree: usize) -> Vec<Perm> {
    let mut reps: Vec<Perm> = Vec::with_capacity(points.len());
    for i in 0..points.len() {
        if i == 0 {
            reps.push(Perm::identity(degree));
        } else {
            let (from, gi) = via[i];
            reps.push(reps[from].compose_unchecked(&gens[gi]));
        }
    }
    reps
}

/// Schreier generators for the stabilizer of the orbit's start point,
/// deduplicated, identity dropped, in deterministic order.
pub fn schreier_generators(gens: &[Perm], points: &[u32], via: &[(usize, usize)], degree: usize) -> Vec<Perm> {
    let reps = transversal(gens, points, via, degree);
    let mut index: HashMap<u32, usize> = HashMap::new();
    for (i, &p) in points.iter().enumerate() {
        index.insert(p, i);
    }
    let mut out: Vec<Perm> = Vec::new();
    let mut seen: std::collections::HashSet<Perm> = std::collections::HashSet::new();
    for (i, _) in points.iter().enumerate() {
        for g in gens {
            let y = g.apply(points[i]);
            let j = index[&y];
            // u_i g u_j^{-1} fixes the start point
            let s = reps[i]
                .compose_unchecked(g)
                .compose_unchecked(&reps[j].inverse());
            if !s.is_identity() && seen.insert(s.clone()) {
                out.push(s);
            }
        }
    }
    out
}

/// BFS orbit of a point set under `gens`, as sorted sets; capped like
/// [`orbit_capped`]. Returns the orbit in BFS order together with transversal
/// witnesses, or the cap verdict.
pub enum SetOrbit {
    Complete {
        sets: Vec<Vec<u32>>,
        via: Vec<(usize, usize)>,
    },
    CapExceeded { cap: usize },
}

pub fn set_orbit_capped(gens: &[Perm], start: &[u32], cap: usize) -> SetOrbit {
    let mut start = start.to_vec();
    start.sort_unstable();
    let mut sets = vec![start.clone()];
    let mut via = vec![(usize::MAX, usize::MAX)];
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    index.insert(start, 0);
    let mut head = 0usize;
    while head < sets.len() {
        for (gi, g) in gens.iter().enumerate() {
            let image = g.apply_set(&sets[head]);
            if let Entry::Vacant(e) = index.entry(image) {
                if sets.len() + 1 > cap {
                    return SetOrbit::CapExceeded { cap };
                }
                let image = e.key().clone();
                e.insert(sets.len());
                sets.push(image);
                via.push((head, gi));
            }
        }
        head += 1;
    }
    SetOrbit::Complete { sets, via }
}

/// Schreier generators for the setwise stabilizer of `start`, provided its
/// set orbit completed.
pub fn set_stabilizer_generators(gens: &[Perm], start: &[u32], cap: usize) -> Option<Vec<Perm>> {
    let degree = gens.first().map(|g| g.degree())?;
    match set_orbit_capped(gens, start, cap) {
        SetOrbit::CapExceeded { .. } => None,
        SetOrbit::Complete { sets, via } => {
            let mut reps: Vec<Perm> = Vec::with_capacity(sets.len());
            for i in 0..sets.len() {
                if i == 0 {
                    reps.push(Perm::identity(degree));
                } else {
                    let (from, gi) = via[i];
                    reps.push(reps[from].compose_unchecked(&gens[gi]));
                }
            }
            let mut index: HashMap<&[u32], usize> = HashMap::new();
            for (i, s) in sets.iter().enumerate() {
                index.insert(s.as_slice(), i);
            }
            let mut out = Vec::new();
            let mut seen: std::collections::HashSet<Perm> = std::collections::HashSet::new();
            for i in 0..sets.len() {
                for g in gens {
                    let image = g.apply_set(&sets[i]);
                    let j = index[image.as_slice()];
                    let s = reps[i]
                        .compose_unchecked(g)
                        .compose_unchecked(&reps[j].inverse());
                    if !s.is_identity() && seen.insert(s.clone()) {
                        out.push(s);
                    }
                }
            }
            Some(out)
        }
    }
}
