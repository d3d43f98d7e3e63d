mod common;

use cotilt_core::classes;
use cotilt_core::engine::{self, approximations, constructions};
use cotilt_core::{Field, IndecSet};

#[test]
fn every_predicate_agrees_with_its_cross_checks() {
    for (name, cat) in common::corpus(Field::Prime(2)) {
        let lattice = classes::enumerate_torsion_free_classes(&cat).unwrap();
        let b = engine::bijection_report(&cat).unwrap();
        eprintln!(
            "{name}: {} indecs, {} classes, {} rows",
            cat.len(),
            lattice.classes.len(),
            b.rows.len()
        );
        for bits in 0..1u64 << cat.len() {
            let set = IndecSet(bits);
            let m = cat.basic_module(set);
            let qct = engine::is_quasi_cotilting(&cat, &m).unwrap();
            let cot = engine::is_cotilting(&cat, &m).unwrap();
            let faithful = engine::is_faithful(&cat, &m).unwrap();
            let costar = engine::is_costar(&cat, &m).unwrap();
            let rel = engine::is_relative_cotilting(&cat, &m).unwrap();
            engine::is_ext_injective_in_cogen(&cat, &m).unwrap();
            assert_eq!(
                cot.verdict,
                faithful.verdict && qct.verdict,
                "{name} {}",
                cat.describe_sum(set)
            );
            assert_eq!(costar.verdict, rel.verdict);
            if qct.verdict {
                let seq = constructions::precover_sequence(&cat, &m).unwrap();
                assert!(seq.m0_in_add && seq.m1_in_add && seq.is_cover);
                assert!(
                    constructions::verify_add_closure_identity(&cat, &m)
                        .unwrap()
                        .verdict
                );
                assert!(
                    constructions::verify_image_cogenerator(&cat, &m)
                        .unwrap()
                        .verdict
                );
                let class = classes::cogen_set(&cat, set);
                for t in cat.ids() {
                    let c = approximations::cover(&cat, cat.module(t), class).unwrap();
                    assert!(c.minimal);
                    assert_eq!(
                        approximations::kernel_ext_violation(&cat, &c.map, class).unwrap(),
                        None
                    );
                }
            }
        }
    }
}
