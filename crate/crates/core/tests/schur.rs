use eo_core::algebra::Rational;
use eo_core::hurwitz::HurwitzTable;
use eo_core::schur::{
    cauchy_residual, eigenvalue_residuals, principal_collapse_check, tau_expansion_residual, CharacterTable,
};

#[test]
fn schur_functions_are_cut_and_join_eigenfunctions() {
    let chars = CharacterTable::new();
    let residuals = eigenvalue_residuals(&chars, 6);
    assert_eq!(residuals.len(), 1 + 1 + 2 + 3 + 5 + 7 + 11);
    for (mu, r) in residuals {
        assert!(r.is_zero(), "{mu}: {r}");
    }
}

#[test]
fn tau_function_expansion_matches_hurwitz_generating_function() {
    let chars = CharacterTable::new();
    let numbers = HurwitzTable::new();
    let report = tau_expansion_residual(&chars, &numbers, 6, 6).unwrap();
    assert!(report.pass(), "{} residual terms", report.residual_terms());
}

#[test]
fn tau_expansion_detects_wrong_hurwitz_number() {
    let chars = CharacterTable::new();
    let numbers = HurwitzTable::new();
    let mut entries = std::collections::BTreeMap::new();
    entries.insert("1,1,2".to_string(), "1/11".to_string());
    assert!(numbers.import(&entries).is_empty());
    let report = tau_expansion_residual(&chars, &numbers, 3, 3).unwrap();
    assert!(!report.pass());
}

#[test]
fn cauchy_identity_through_weight_five() {
    let chars = CharacterTable::new();
    let report = cauchy_residual(&chars, 5);
    assert!(report.pass(), "{report:?}");
}

#[test]
fn principal_specialization_collapses_to_one_row() {
    let chars = CharacterTable::new();
    let report = principal_collapse_check(&chars, 8);
    assert!(report.pass(), "{:?}", report.residual);
    for rec in &report.records {
        if rec.mu.len() == 1 {
            let m = rec.mu.size();
            let fact: Rational = (1..=m as i64).map(Rational::from).product();
            let (&(j, k, mm), c) = rec.contribution.terms().next().unwrap();
            assert_eq!((j, k, mm), ((m * (m - 1) / 2) as i64, -(m as i64), m));
            assert_eq!(c, &fact.recip().unwrap());
        }
    }
}
