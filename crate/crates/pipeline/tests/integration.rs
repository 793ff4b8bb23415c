//! Cross-checks tying the concrete constructions to the documented
//! behaviors: the M10 block-stabilizer orbit profile, the degree-15 coset
//! action of S6, the anchored-scan orbit-stabilizer identity, and the
//! shipped design files.

use atlas::{conjugate_pair_action, natural_action, NaturalKind, ProjectiveVariant};
use design_engine::SearchBudget;
use perm_core::{coset_action, subgroups_of_order, SubgroupSearch};
use pipeline::verify_design_text;

#[test]
fn m10_block_stabilizer_profile_is_4_8_8_16() {
    let act = conjugate_pair_action(ProjectiveVariant::M10);
    let classes = match subgroups_of_order(&act.group, 16, 1000) {
        SubgroupSearch::Classes(c, _) => c,
        other => panic!("{other:?}"),
    };
    assert_eq!(classes.len(), 1, "order-16 subgroups are the Sylow class");
    let k = classes[0].group(36);
    let profile = index_oracle::orbit_profile(&k, &act);
    assert_eq!(profile, vec![4, 8, 8, 16]);
}

#[test]
fn pgammal_block_stabilizer_has_no_length_8_orbit() {
    let act = conjugate_pair_action(ProjectiveVariant::PGammaL);
    let classes = match subgroups_of_order(&act.group, 32, 2000) {
        SubgroupSearch::Classes(c, _) => c,
        other => panic!("{other:?}"),
    };
    assert_eq!(classes.len(), 1);
    let profile = index_oracle::orbit_profile(&classes[0].group(36), &act);
    assert!(!profile.contains(&8), "profile {profile:?}");
}

#[test]
fn sym6_order_48_coset_action_has_degree_15() {
    let s6 = natural_action(NaturalKind::Sym, 6).group;
    let classes = match subgroups_of_order(&s6, 48, 1000) {
        SubgroupSearch::Classes(c, _) => c,
        other => panic!("{other:?}"),
    };
    assert_eq!(classes.len(), 2, "two classes of order 48 in S6");
    for class in &classes {
        let act = coset_action(&s6, &class.elements, 1000).unwrap();
        assert_eq!(act.group.degree(), 15);
        assert_eq!(perm_core::orbit(act.group.gens(), 0).len(), 15);
    }
}

#[test]
fn anchor_stabilizer_satisfies_orbit_stabilizer() {
    // on the degree-10 action of Sym(5) on pairs: the stabilizer of the
    // anchor pair of space points times that pair's orbit length is |G|
    let act = atlas::subsets_action(NaturalKind::Sym, 5, 2);
    let gamma = act.group.set_stabilizer(&[0, 1], 100).unwrap();
    match perm_core::set_orbit_capped(act.group.gens(), &[0, 1], 100) {
        perm_core::SetOrbit::Complete { sets, .. } => {
            assert_eq!(
                gamma.order() * num_bigint::BigUint::from(sets.len() as u64),
                act.group.order()
            );
        }
        _ => panic!(),
    }
}

#[test]
fn shipped_design_files_verify() {
    let ten = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../designs/2-10-4-2.txt"
    ))
    .expect("shipped file");
    let rep = verify_design_text(&ten, Some("alt:6/halves")).unwrap();
    assert!(rep.all_pass());
    let rep = verify_design_text(&ten, Some("sym:6/halves")).unwrap();
    assert!(rep.all_pass());
    let rep = verify_design_text(&ten, Some("pgl2:9")).unwrap();
    assert!(
        !rep.group.as_ref().unwrap().automorphisms,
        "the degree-10 PGL(2,9) does not preserve the block set"
    );

    let six = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../designs/2-6-3-2.txt"
    ))
    .expect("shipped file");
    let rep = verify_design_text(&six, Some("psl2:5")).unwrap();
    assert!(rep.all_pass());
    assert_eq!(rep.r, Some(5), "odd replication number");
    let rep = verify_design_text(&six, Some("sym:4/subsets:2")).unwrap();
    assert!(!rep.group.as_ref().unwrap().automorphisms);
}

#[test]
fn eliminate_case_19_uses_the_index_oracle() {
    let rows = sieve::assemble_table3();
    let row = rows.iter().find(|r| r.id == 19).unwrap();
    for v in pipeline::eliminate_case(row, &SearchBudget::default()) {
        assert_eq!(v.strategy, pipeline::StrategyTag::L3IndexOracle);
        match v.verdict {
            design_engine::Verdict::Eliminated(design_engine::Witness::NoSubgroupOfIndex {
                index: 429,
                ..
            }) => {}
            other => panic!("{other:?}"),
        }
    }
}
