//! Direct verification of the degree-4960 base-block orbit length under
//! the full symmetric group, with a cap well above the disputed value.

use atlas::{subsets_action, NaturalKind};
use perm_core::{Perm, PermGroup, SetOrbit};

#[test]
fn sym32_fifty_eight_block_orbit_is_exactly_14880() {
    let act = subsets_action(NaturalKind::Sym, 32, 3);
    // K = S_2 x S_29 fixing letter 2
    let mut gens = vec![Perm::from_cycles(32, &[&[0, 1]]).unwrap()];
    gens.push(Perm::from_cycles(32, &[&[3, 4]]).unwrap());
    let rot: Vec<u32> = (0..32u32)
        .map(|i| if i < 3 { i } else if i == 31 { 3 } else { i + 1 })
        .collect();
    gens.push(Perm::from_images(rot).unwrap());
    let k = PermGroup::new(32, gens).unwrap();
    let orbits = index_oracle::orbits_on_space(&k, &act);
    let fifty_eight: Vec<_> = orbits.into_iter().filter(|o| o.len() == 58).collect();
    assert_eq!(fifty_eight.len(), 1);
    match perm_core::set_orbit_capped(act.group.gens(), &fifty_eight[0], 60_000) {
        SetOrbit::Complete { sets, .. } => assert_eq!(sets.len(), 14880),
        SetOrbit::CapExceeded { cap } => panic!("orbit exceeded {cap}"),
    }
}
