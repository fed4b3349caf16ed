use eo_core::algebra::{RationalFunction, Var};
use eo_core::catalan::{self, CatalanModel};
use eo_core::hurwitz::{self, s_sequence_recursive, HurwitzModel};
use eo_core::wkb::{recover_corrections, recover_corrections_from, s_prime_from_hierarchy, CurveModel, ModelRef};

#[test]
fn corrections_vanish_for_both_models() {
    let cm = CatalanModel::new();
    let hm = HurwitzModel::new();
    for model in [ModelRef::Catalan(&cm), ModelRef::Hurwitz(&hm)] {
        let report = recover_corrections(model, 4).unwrap();
        assert_eq!(report.corrections.len(), 4);
        assert!(report.pass, "{:?}: {:?}", report.model, report.corrections);
    }
}

#[test]
fn perturbed_s3_produces_a3() {
    let cm = CatalanModel::new();
    let model = ModelRef::Catalan(&cm);
    let mut data = model.s_primes(4).unwrap();
    data[3] = &data[3] + &RationalFunction::variable(Var::Z);
    let a = recover_corrections_from(&model.curve(), &data, 4).unwrap();
    assert!(a[0].is_zero() && a[1].is_zero());
    assert!(!a[2].is_zero());
}

#[test]
fn catalan_three_paths_agree() {
    let cm = CatalanModel::new();
    let recursive = catalan::s_sequence_recursive(4).unwrap();
    for m in 2..=4u32 {
        let assembled = catalan::t_to_z(&cm.s_coeff_assembled(m).unwrap().dx());
        let rec = catalan::t_to_z(&recursive[m as usize].dx());
        let hier = s_prime_from_hierarchy(CurveModel::Catalan, m).unwrap();
        assert_eq!(assembled, rec, "m = {m}");
        assert_eq!(assembled, hier, "m = {m}");
    }
}

#[test]
fn hurwitz_three_paths_agree() {
    let hm = HurwitzModel::new();
    let recursive = s_sequence_recursive(4).unwrap();
    for m in 2..=4u32 {
        let assembled = hurwitz::t_to_z(&hm.s_coeff_assembled(m).unwrap().x_dx());
        let rec = hurwitz::t_to_z(&recursive[m as usize].x_dx());
        let hier = s_prime_from_hierarchy(CurveModel::Hurwitz, m).unwrap();
        assert_eq!(assembled, rec, "m = {m}");
        assert_eq!(assembled, hier, "m = {m}");
    }
}

#[test]
fn hierarchy_reproduces_low_seeds() {
    for m in 0..=1 {
        let hier = s_prime_from_hierarchy(CurveModel::Hurwitz, m).unwrap();
        assert_eq!(hier, hurwitz::t_to_z(&hurwitz::seed(m).x_dx()), "m = {m}");
        let hier = s_prime_from_hierarchy(CurveModel::Catalan, m).unwrap();
        assert_eq!(hier, catalan::t_to_z(&CatalanModel::new().s_coeff_assembled(m).unwrap().dx()), "m = {m}");
    }
}
