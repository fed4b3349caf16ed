//! Exit criteria. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use eo_core::algebra::{Rational, RationalFunction, Var};
use eo_core::catalan::{self, curve_inversion_check, curve_inversion_check_with, s_polynomial, CatalanModel};
use eo_core::hurwitz::{
    self, assemble, heat_residual_from, pq_commutator_check, s0_identity, zhou_series_checks, zhou_series_checks_with,
    HurwitzModel, QCoefficients, SHurwitz,
};
use eo_core::schur::{
    cauchy_residual, eigenvalue_residuals, principal_collapse_check, tau_expansion_residual, CharacterTable,
};
use eo_core::stable_topologies;
use eo_core::wkb::{recover_corrections, recover_corrections_from, s_prime_from_hierarchy, CurveModel, ModelRef};
use num_bigint::BigInt;

const CATALAN_BASE_BUDGET: Duration = Duration::from_secs(1);
const S_TABLE_BUDGET: Duration = Duration::from_secs(300);
const SCHUR_BUDGET: Duration = Duration::from_secs(600);
const LAPLACE_TOLERANCE: f64 = 1e-8;
const CATALAN_LAPLACE_TRUNCATION: u32 = 60;
const HURWITZ_LAPLACE_TRUNCATION: u32 = 40;
const CATALAN_POINTS: [f64; 3] = [10.0, 11.0, 12.0];
const HURWITZ_POINTS: [f64; 3] = [3.0, 3.1, 3.2];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

struct Models {
    catalan: CatalanModel,
    hurwitz: HurwitzModel,
}

fn catalan_base(_: &Models) -> Outcome {
    let start = Instant::now();
    let table = catalan::CatalanTable::new();
    let mismatches: Vec<u32> =
        (0..=12).filter(|&m| table.count(0, &[2 * m.max(1)]).unwrap() != catalan_number(m.max(1))).collect();
    let zero_ok = table.count(0, &[0]).unwrap() == BigInt::from(1);
    let elapsed = start.elapsed();
    Outcome::new(
        mismatches.is_empty() && zero_ok && elapsed < CATALAN_BASE_BUDGET,
        format!("m <= 12, mismatches {mismatches:?}, {elapsed:.2?}"),
    )
}

fn catalan_s_table(models: &Models) -> Outcome {
    let start = Instant::now();
    let recursive = catalan::s_sequence_recursive(4).unwrap();
    let mut bad = Vec::new();
    for m in 2..=4u32 {
        let assembled = models.catalan.s_coeff_assembled(m).unwrap().in_z().unwrap();
        let rec = recursive[m as usize].in_z().unwrap();
        if assembled != printed_catalan_s(m) || rec != printed_catalan_s(m) {
            bad.push(m);
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(bad.is_empty() && elapsed < S_TABLE_BUDGET, format!("mismatched m {bad:?}, {elapsed:.2?}"))
}

fn hurwitz_s_table(models: &Models) -> Outcome {
    let start = Instant::now();
    let recursive = hurwitz::s_sequence_recursive(4).unwrap();
    let mut detail = Vec::new();
    let mut pass = true;
    for m in 2..=4u32 {
        let assembled = hurwitz::t_to_z(&models.hurwitz.s_coeff_assembled(m).unwrap().x_dx());
        let rec = hurwitz::t_to_z(&recursive[m as usize].x_dx());
        let hier = s_prime_from_hierarchy(CurveModel::Hurwitz, m).unwrap();
        let printed = printed_hurwitz_s_prime(m);
        let ok = assembled == printed && rec == printed && hier == printed;
        pass &= ok;
        if !ok {
            let paths_agree = assembled == rec && rec == hier;
            detail.push(format!("m={m}: computed {assembled} (paths agree: {paths_agree}), expected {printed}"));
        }
    }
    let elapsed = start.elapsed();
    pass &= elapsed < S_TABLE_BUDGET;
    Outcome::new(pass, if detail.is_empty() { format!("{elapsed:.2?}") } else { detail.join("; ") })
}

fn quantum_corrections(models: &Models) -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for model in [ModelRef::Catalan(&models.catalan), ModelRef::Hurwitz(&models.hurwitz)] {
        let report = recover_corrections(model, 4).unwrap();
        pass &= report.pass && report.corrections.len() == 4;
        detail.push(format!("{:?}: {}", report.model, if report.pass { "A1..A4 = 0" } else { "nonzero" }));
    }
    Outcome::new(pass, detail.join(", "))
}

fn schrodinger_residuals(models: &Models) -> Outcome {
    let cat = models.catalan.schrodinger_residual(3).unwrap();
    let heat = models.hurwitz.heat_residual(3).unwrap();
    let cat_ok = cat.len() == 5 && cat.iter().all(RationalFunction::is_zero);
    let heat_ok = heat.len() == 4 && heat.iter().all(RationalFunction::is_zero) && s0_identity().is_zero();
    Outcome::new(cat_ok && heat_ok, format!("catalan orders 0..4 zero: {cat_ok}, hurwitz m <= 3 zero: {heat_ok}"))
}

fn hurwitz_recursion(models: &Models) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for chi in 1..=3 {
        for (g, n) in stable_topologies(chi) {
            checked += 1;
            if !models.hurwitz.fh_recursion_residual(g, n).unwrap().is_zero() {
                bad.push((g, n));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{checked} topologies, nonzero at {bad:?}"))
}

fn laplace_probes(models: &Models) -> Outcome {
    let mut worst = 0.0f64;
    let mut detail = Vec::new();
    for chi in 1..=3 {
        for (g, n) in stable_topologies(chi).into_iter().filter(|&(_, n)| n <= 3) {
            let n = n as usize;
            let f = models.catalan.free_energy(g, n as u32).unwrap();
            let xs = &CATALAN_POINTS[..n];
            let ts: Vec<f64> = xs.iter().map(|&x| catalan_t(x)).collect();
            let direct = catalan_laplace(models.catalan.counts(), g, xs, CATALAN_LAPLACE_TRUNCATION);
            let err = relative_error(f.poly.eval_f64(&ts), direct);
            worst = worst.max(err);
            detail.push(format!("C({g},{n}) {err:.1e}"));

            let f = models.hurwitz.free_energy(g, n as u32).unwrap();
            let ws = &HURWITZ_POINTS[..n];
            let ts: Vec<f64> = ws.iter().map(|&w| hurwitz_t(w)).collect();
            let direct = hurwitz_laplace(models.hurwitz.numbers(), g, ws, HURWITZ_LAPLACE_TRUNCATION);
            let err = relative_error(f.poly.eval_f64(&ts), direct);
            worst = worst.max(err);
            detail.push(format!("H({g},{n}) {err:.1e}"));
        }
    }
    Outcome::new(worst <= LAPLACE_TOLERANCE, format!("worst {worst:.2e}: {}", detail.join(", ")))
}

fn schur_suite(models: &Models) -> Outcome {
    let start = Instant::now();
    let chars = CharacterTable::new();
    let eig = eigenvalue_residuals(&chars, 6).iter().all(|(_, r)| r.is_zero());
    let tau = tau_expansion_residual(&chars, models.hurwitz.numbers(), 6, 6).unwrap().pass();
    let cauchy = cauchy_residual(&chars, 5).pass();
    let collapse = principal_collapse_check(&chars, 8).pass();
    let elapsed = start.elapsed();
    Outcome::new(
        eig && tau && cauchy && collapse && elapsed < SCHUR_BUDGET,
        format!("eigen {eig}, tau {tau}, cauchy {cauchy}, collapse {collapse}, {elapsed:.2?}"),
    )
}

fn zhou_and_commutator(_: &Models) -> Outcome {
    let zhou = zhou_series_checks(20).pass();
    let records = pq_commutator_check(10, &QCoefficients::default());
    let comm = records.len() == 11 * 7 && records.iter().all(|r| r.residual.is_zero());
    Outcome::new(zhou && comm, format!("zhou m <= 20: {zhou}, [P,Q] - P on {} basis elements: {comm}", records.len()))
}

fn property_suites(models: &Models) -> Outcome {
    let mut failures: Vec<String> = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };

    for chi in 1..=3 {
        for (g, n) in stable_topologies(chi) {
            let fc = models.catalan.free_energy(g, n).unwrap();
            check(&format!("C({g},{n}) symmetric"), fc.poly.is_symmetric());
            check(
                &format!("C({g},{n}) vanishes at t=-1"),
                fc.poly.substitute(0, &Rational::from(-1)).unwrap().is_zero(),
            );
            let fh = models.hurwitz.free_energy(g, n).unwrap();
            check(&format!("H({g},{n}) symmetric"), fh.poly.is_symmetric());
            check(&format!("H({g},{n}) vanishes at t=1"), fh.poly.substitute(0, &Rational::one()).unwrap().is_zero());
            let (_, top) = fh.poly.total_degree_range().unwrap();
            check(&format!("H({g},{n}) degree"), top == (6 * g + 3 * n) as i32 - 6);
        }
    }
    for m in 2..=4u32 {
        check(&format!("S^H_{m} degree"), models.hurwitz.s_coeff(m).map(|p| p.degree()) == Ok(Some(3 * m as usize - 3)));
        let sz = catalan::t_to_z(models.catalan.s_coeff_assembled(m).unwrap().function().unwrap());
        let deg = s_polynomial(&sz).and_then(|p| p.as_polynomial().and_then(|q| q.degree()));
        check(&format!("S^C_{m} s-degree"), deg.is_some_and(|d| d <= 3 * m as usize - 3));
    }

    let counts = models.catalan.counts();
    for g in 0..=2u32 {
        for n in 1..=3usize {
            for mu in bounded_vectors(n, 10) {
                let c = counts.count(g, &mu).unwrap();
                if c != BigInt::from(pairing_count(g, &mu)) {
                    check(&format!("C_{g}{mu:?} integral count"), false);
                }
            }
        }
    }
    for g in 0..=2u32 {
        for n in 1..=3usize {
            for mu in bounded_vectors(n, 8) {
                if models.hurwitz.numbers().number(g, &mu).unwrap().is_negative() {
                    check(&format!("H_{g}{mu:?} nonnegative"), false);
                }
            }
        }
    }

    // Each fault must be detected.
    check("curve inversion passes", curve_inversion_check(6).pass);
    let mut cat: Vec<Rational> = [1, 1, 2, 5, 14, 42].iter().map(|&c| Rational::from(c)).collect();
    cat[2] = Rational::from(3);
    check("curve fault", !curve_inversion_check_with(&cat).pass);

    let mut dx: Vec<RationalFunction> =
        models.catalan.s_sequence_assembled(4).unwrap().iter().map(|s| s.dx()).collect();
    dx[2] = &dx[2] + &catalan::dx_in_t(&RationalFunction::variable(Var::T));
    check("schrodinger fault", !catalan::schrodinger_residual_from(&dx)[2].is_zero());

    let mut table = (*models.hurwitz.elsv_coefficients(1, 1).unwrap()).clone();
    for e in &mut table.entries {
        if e.k == [1] {
            e.value = Rational::frac(1, 23);
        }
    }
    check("elsv fault", !models.hurwitz.fh_recursion_residual_of(&assemble(&table)).unwrap().is_zero());

    let mut seq = models.hurwitz.s_sequence_assembled(3).unwrap();
    if let SHurwitz::Function(f) = &mut seq[2] {
        *f = &*f + &RationalFunction::variable(Var::T);
    }
    check("heat fault", heat_residual_from(&seq).iter().any(|r| !r.is_zero()));

    let model = ModelRef::Catalan(&models.catalan);
    let mut data = model.s_primes(4).unwrap();
    data[3] = &data[3] + &RationalFunction::variable(Var::Z);
    check("corrections fault", !recover_corrections_from(&model.curve(), &data, 4).unwrap()[2].is_zero());

    check("zhou fault", !zhou_series_checks_with(5, &|m| m * (m + 1) / 2).pass());
    let broken = QCoefficients { c1: Rational::zero(), ..QCoefficients::default() };
    check("commutator fault", pq_commutator_check(2, &broken).iter().any(|r| !r.residual.is_zero()));

    let tampered = catalan::CatalanTable::new();
    let mut entries = BTreeMap::new();
    entries.insert("0,1,2".to_string(), "1/3".to_string());
    let warnings = tampered.import(&entries);
    check("cache fault", warnings.len() == 1 && tampered.count(0, &[2]).unwrap() == BigInt::from(1));

    let numbers = hurwitz::HurwitzTable::new();
    let mut entries = BTreeMap::new();
    entries.insert("1,1,2".to_string(), "1/11".to_string());
    numbers.import(&entries);
    check("tau fault", !tau_expansion_residual(&CharacterTable::new(), &numbers, 3, 3).unwrap().pass());

    Outcome::new(failures.is_empty(), if failures.is_empty() { "all properties hold".into() } else { failures.join(", ") })
}

fn euler_characteristic(models: &Models) -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for (g, n) in [(1, 1), (0, 3), (1, 2), (2, 1)] {
        let value = models.catalan.free_energy(g, n).unwrap().value_at_one();
        let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
        let expect = sign * harer_zagier_chi(g, n);
        pass &= value == expect;
        detail.push(format!("({g},{n}) {value} vs {expect}"));
    }
    Outcome::new(pass, detail.join(", "))
}

type Criterion = (&'static str, fn(&Models) -> Outcome);

fn main() -> ExitCode {
    let models = Models { catalan: CatalanModel::new(), hurwitz: HurwitzModel::new() };
    let criteria: [Criterion; 11] = [
        ("catalan base sequence", catalan_base),
        ("catalan S_2..S_4 closed forms on both paths", catalan_s_table),
        ("hurwitz dS_m/dx closed forms on all paths", hurwitz_s_table),
        ("quantum curve corrections vanish", quantum_corrections),
        ("schrodinger and heat residuals", schrodinger_residuals),
        ("hurwitz free energy recursion", hurwitz_recursion),
        ("laplace probes", laplace_probes),
        ("schur and KP identities", schur_suite),
        ("zhou series and [P,Q] = P", zhou_and_commutator),
        ("property suites and fault injection", property_suites),
        ("euler characteristic at s = 1", euler_characteristic),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&models);
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        if !outcome.pass {
            failed += 1;
        }
        println!("{status} criterion {:>2}: {name} [{:.2?}] {}", i + 1, start.elapsed(), outcome.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
