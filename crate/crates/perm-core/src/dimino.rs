//! Bounded element enumeration (Dimino's algorithm) and subgroup closure.
//!
//! The enumeration order is deterministic: the cyclic group of the first
//! generator first, then Dimino's coset sweep over the remaining generators
//! in list order. Degrees up to 8 and 16 use packed integer keys to keep the
//! closure inner loop cheap; anything larger falls back to hashing the image
//! array.

use std::collections::HashSet;
use std::hash::Hash;

use crate::perm::Perm;
use crate::PermError;

/// Byte-packed permutation codes for small degrees; the discovery loop of
/// the closure runs allocation-free on these.
pub(crate) trait Packed: Copy + Eq + Hash {
    fn pack(p: &Perm) -> Self;
    fn unpack(self, degree: usize) -> Perm;
    fn compose(self, other: Self, degree: usize) -> Self;
    fn identity(degree: usize) -> Self;
}

impl Packed for u64 {
    fn pack(p: &Perm) -> u64 {
        let mut k = 0u64;
        for (i, &y) in p.images().iter().enumerate() {
            k |= (y as u64) << (8 * i);
        }
        k
    }
    fn unpack(self, degree: usize) -> Perm {
        let images: Vec<u32> = (0..degree)
            .map(|i| ((self >> (8 * i)) & 0xFF) as u32)
            .collect();
        Perm::from_images(images).expect("packed codes are bijections")
    }
    #[inline]
    fn compose(self, other: u64, degree: usize) -> u64 {
        let mut out = 0u64;
        for i in 0..degree {
            let y = (self >> (8 * i)) & 0xFF;
            let z = (other >> (8 * y)) & 0xFF;
            out |= z << (8 * i);
        }
        out
    }
    fn identity(degree: usize) -> u64 {
        let mut k = 0u64;
        for i in 0..degree as u64 {
            k |= i << (8 * i);
        }
        k
    }
}

impl Packed for u128 {
    fn pack(p: &Perm) -> u128 {
        let mut k = 0u128;
        for (i, &y) in p.images().iter().enumerate() {
            k |= (y as u128) << (8 * i);
        }
        k
    }
    fn unpack(self, degree: usize) -> Perm {
        let images: Vec<u32> = (0..degree)
            .map(|i| ((self >> (8 * i)) & 0xFF) as u32)
            .collect();
        Perm::from_images(images).expect("packed codes are bijections")
    }
    #[inline]
    fn compose(self, other: u128, degree: usize) -> u128 {
        let mut out = 0u128;
        for i in 0..degree {
            let y = (self >> (8 * i)) & 0xFF;
            let z = (other >> (8 * (y as usize))) & 0xFF;
            out |= z << (8 * i);
        }
        out
    }
    fn identity(degree: usize) -> u128 {
        let mut k = 0u128;
        for i in 0..degree as u128 {
            k |= i << (8 * i);
        }
        k
    }
}

fn dimino_packed<P: Packed>(
    degree: usize,
    gens: &[Perm],
    bound: usize,
) -> Result<Vec<P>, PermError> {
    let id = P::identity(degree);
    let mut elements: Vec<P> = vec![id];
    let mut seen: HashSet<P> = HashSet::new();
    seen.insert(id);
    let gens: Vec<P> = gens
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| P::pack(g))
        .collect();
    if gens.is_empty() {
        return Ok(elements);
    }
    let mut g = gens[0];
    while g != id {
        if elements.len() + 1 > bound {
            return Err(PermError::BoundExceeded {
                bound,
                partial: elements.len(),
            });
        }
        seen.insert(g);
        elements.push(g);
        g = g.compose(gens[0], degree);
    }
    for i in 1..gens.len() {
        if seen.contains(&gens[i]) {
            continue;
        }
        let prev_order = elements.len();
        let push_coset = |rep: P,
                              elements: &mut Vec<P>,
                              seen: &mut HashSet<P>|
         -> Result<(), PermError> {
            for j in 0..prev_order {
                let e = elements[j].compose(rep, degree);
                if elements.len() + 1 > bound {
                    return Err(PermError::BoundExceeded {
                        bound,
                        partial: elements.len(),
                    });
                }
                seen.insert(e);
                elements.push(e);
            }
            Ok(())
        };
        push_coset(gens[i], &mut elements, &mut seen)?;
        let mut rep_pos = prev_order;
        while rep_pos < elements.len() {
            let rep = elements[rep_pos];
            for s in gens.iter().take(i + 1) {
                let elt = rep.compose(*s, degree);
                if !seen.contains(&elt) {
                    push_coset(elt, &mut elements, &mut seen)?;
                }
            }
            rep_pos += prev_order;
        }
    }
    Ok(elements)
}

fn dimino_keyed<K: Eq + Hash>(
    degree: usize,
    gens: &[Perm],
    bound: usize,
    key: impl Fn(&Perm) -> K,
) -> Result<Vec<Perm>, PermError> {
    let id = Perm::identity(degree);
    let mut elements: Vec<Perm> = vec![id.clone()];
    let mut seen: HashSet<K> = HashSet::new();
    seen.insert(key(&id));

    let gens: Vec<&Perm> = gens.iter().filter(|g| !g.is_identity()).collect();
    if gens.is_empty() {
        return Ok(elements);
    }

    // cyclic group of the first generator
    let mut g = gens[0].clone();
    while !g.is_identity() {
        if elements.len() + 1 > bound {
            return Err(PermError::BoundExceeded {
                bound,
                partial: elements.len(),
            });
        }
        seen.insert(key(&g));
        elements.push(g.clone());
        g = g.compose_unchecked(gens[0]);
    }

    for i in 1..gens.len() {
        if seen.contains(&key(gens[i])) {
            continue;
        }
        let prev_order = elements.len();
        // first new coset
        let push_coset = |rep: &Perm,
                              elements: &mut Vec<Perm>,
                              seen: &mut HashSet<K>|
         -> Result<(), PermError> {
            for j in 0..prev_order {
                let e = elements[j].compose_unchecked(rep);
                if elements.len() + 1 > bound {
                    return Err(PermError::BoundExceeded {
                        bound,
                        partial: elements.len(),
                    });
                }
                seen.insert(key(&e));
                elements.push(e);
            }
            Ok(())
        };
        let rep0 = gens[i].clone();
        push_coset(&rep0, &mut elements, &mut seen)?;
        let mut rep_pos = prev_order;
        while rep_pos < elements.len() {
            let rep = elements[rep_pos].clone();
            for s in gens.iter().take(i + 1) {
                let elt = rep.compose_unchecked(s);
                if !seen.contains(&key(&elt)) {
                    push_coset(&elt, &mut elements, &mut seen)?;
                }
            }
            rep_pos += prev_order;
        }
    }
    Ok(elements)
}

/// All elements of `⟨gens⟩` in deterministic order, provided the group order
/// does not exceed `bound`.
pub fn closure_bounded(degree: usize, gens: &[Perm], bound: usize) -> Result<Vec<Perm>, PermError> {
    if degree <= 8 {
        Ok(dimino_packed::<u64>(degree, gens, bound)?
            .into_iter()
            .map(|p| p.unpack(degree))
            .collect())
    } else if degree <= 16 {
        Ok(dimino_packed::<u128>(degree, gens, bound)?
            .into_iter()
            .map(|p| p.unpack(degree))
            .collect())
    } else {
        dimino_keyed(degree, gens, bound, |p: &Perm| p.images().to_vec())
    }
}

/// Order of `⟨gens⟩` if it does not exceed `bound`; the small-degree paths
/// never materialize image arrays.
pub fn closure_order_bounded(degree: usize, gens: &[Perm], bound: usize) -> Option<usize> {
    if degree <= 8 {
        dimino_packed::<u64>(degree, gens, bound).ok().map(|e| e.len())
    } else if degree <= 16 {
        dimino_packed::<u128>(degree, gens, bound).ok().map(|e| e.len())
    } else {
        closure_bounded(degree, gens, bound).ok().map(|e| e.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn alt4_has_12_elements() {
        let gens = vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])];
        let elems = closure_bounded(4, &gens, 100).unwrap();
        assert_eq!(elems.len(), 12);
        assert!(elems.iter().all(|p| p.is_even()));
    }

    #[test]
    fn single_double_transposition() {
        let gens = vec![cyc(4, &[&[0, 1], &[2, 3]])];
        assert_eq!(closure_bounded(4, &gens, 10).unwrap().len(), 2);
    }

    #[test]
    fn two_cycles_generate_alt5() {
        let gens = vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])];
        assert_eq!(closure_order_bounded(5, &gens, 100), Some(60));
    }

    #[test]
    fn bound_exceeded_reports_partial() {
        let gens = vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])];
        match closure_bounded(5, &gens, 30) {
            Err(PermError::BoundExceeded { bound: 30, partial }) => assert!(partial <= 30),
            other => panic!("expected bound exceeded, got {other:?}"),
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let gens = vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[2, 3, 4]])];
        let elems = closure_bounded(5, &gens, 100).unwrap();
        let again = closure_bounded(5, &elems, elems.len()).unwrap();
        assert_eq!(elems.len(), again.len());
        let a: std::collections::HashSet<_> = elems.into_iter().collect();
        let b: std::collections::HashSet<_> = again.into_iter().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn deterministic_order() {
        let gens = vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]]), cyc(6, &[&[0, 1]])];
        let a = closure_bounded(6, &gens, 1000).unwrap();
        let b = closure_bounded(6, &gens, 1000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 720);
    }
}
