mod common;

use common::{instance_set, point, random_groups};
use eqeuler::bredon::{check_lemma_identity, verify_suite, Analysis};
use eqeuler::context::GroupContext;
use eqeuler::gcomplex::{fixed_vertices, FixedData};
use eqeuler::group::catalog;

#[test]
fn verify_suite_on_instances() {
    for inst in instance_set() {
        let ctx = GroupContext::new(inst.group.clone());
        let a = Analysis::compute(&ctx, &inst.complex).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        let r = verify_suite(&ctx, &inst.complex, &a);
        assert!(r.all_passed(), "{}: {:?}", inst.name, r.failures());
    }
}

#[test]
fn points_of_small_groups() {
    for (name, g) in catalog::groups_up_to_16().into_iter().filter(|(_, g)| g.order() <= 12) {
        let ctx = GroupContext::new(g.clone());
        let x = point(&g);
        let a = Analysis::compute(&ctx, &x).unwrap();
        assert!(verify_suite(&ctx, &x, &a).all_passed(), "{name}");
        // H₀ of a point is R_F(G)
        assert_eq!(a.hr.pres.free_rank(), ctx.basis(ctx.top(), eqeuler::Field::R).unwrap().len());
        assert!(a.hr.pres.torsion().is_empty());
        assert!(check_lemma_identity(&a).is_none());
    }
}

#[test]
fn random_complexes_have_invariant_faces() {
    for inst in common::random_instances(9, 7) {
        assert!(inst.complex.is_admissible(), "{}", inst.name);
        let ctx = GroupContext::new(inst.group.clone());
        let fd = FixedData::compute(&ctx, &inst.complex);
        // objects over the trivial subgroup are the orbits of components of X
        let whole = fixed_vertices(&inst.complex, &[0]);
        assert!(whole.iter().all(|&b| b));
        assert!(fd.classes[0].orbits.len() <= fd.classes[0].components.len());
    }
    assert_eq!(random_groups().len(), 9);
}

mod property {
    use super::common::random_complex;
    use eqeuler::bredon::{verify_suite, Analysis};
    use eqeuler::context::GroupContext;
    use eqeuler::group::catalog;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn checks_hold_on_random_complexes(which in 0usize..4, seed in any::<u64>()) {
            let g = [catalog::cyclic(2), catalog::cyclic(4), catalog::s3(), catalog::dihedral(4)][which].clone();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_complex(&g, &mut rng);
            let ctx = GroupContext::new(g);
            let a = Analysis::compute(&ctx, &x).unwrap();
            let r = verify_suite(&ctx, &x, &a);
            prop_assert!(r.all_passed(), "{:?}", r.failures());
            // the orbifold Euler characteristic of X itself is χ(X)/|G|
            let whole = &a.orbifold[0];
            let expect = eqeuler::rational::Rational::new(x.euler_characteristic().into(), (ctx.group().order() as i64).into());
            let objects_over_1: usize = a.fixed.classes[0].orbits.len();
            if objects_over_1 == 1 {
                prop_assert_eq!(whole, &expect);
            }
        }
    }
}
