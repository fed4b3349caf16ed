//! Verification suites and the reports they produce.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Rational, RationalFunction};
use crate::catalan::{self, CatalanModel};
use crate::hurwitz::{self, HurwitzModel, QCoefficients};
use crate::schur::{self, CharacterTable};
use crate::stable_topologies;
use crate::wkb::{self, CurveModel, CurveSymbol, ModelRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Catalan,
    Hurwitz,
    Wkb,
    Schur,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Catalan, Suite::Hurwitz, Suite::Wkb, Suite::Schur, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Catalan => "catalan",
            Suite::Hurwitz => "hurwitz",
            Suite::Wkb => "wkb",
            Suite::Schur => "schur",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// What the check establishes.
    pub reference: String,
    pub status: Status,
    pub residual: String,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub status: Status,
    pub version: String,
    pub config: serde_json::Value,
}

impl Report {
    pub fn new(suite: impl Into<String>, records: Vec<CheckRecord>, config: serde_json::Value) -> Self {
        let status =
            if records.iter().any(|r| r.status == Status::Fail) { Status::Fail } else { Status::Pass };
        Report { suite: suite.into(), records, status, version: env!("CARGO_PKG_VERSION").to_string(), config }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    /// Highest `m` for S-coefficient checks, at most 4 with the default bound.
    pub max_order: u32,
    /// Worker threads; 1 runs serially.
    pub parallelism: usize,
    /// Largest partition weight for the Schur checks.
    pub max_weight: u32,
    /// Truncation order in `s` for the tau expansion.
    pub s_order: u32,
    /// Keep only checks whose id contains one of these fragments; empty keeps all.
    #[serde(default)]
    pub only: Vec<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_order: 4, parallelism: 1, max_weight: 6, s_order: 6, only: Vec::new() }
    }
}

/// Models shared by all checks of a run.
#[derive(Default)]
pub struct Engine {
    pub catalan: CatalanModel,
    pub hurwitz: HurwitzModel,
    pub characters: CharacterTable,
}

type Verdict = Result<(bool, String), String>;
type CheckFn = dyn Fn(&Engine, &SuiteOptions) -> Verdict + Send + Sync;

struct Check {
    id: &'static str,
    reference: &'static str,
    run: Box<CheckFn>,
}

fn check(
    id: &'static str,
    reference: &'static str,
    run: impl Fn(&Engine, &SuiteOptions) -> Verdict + Send + Sync + 'static,
) -> Check {
    Check { id, reference, run: Box::new(run) }
}

fn zeros(items: &[RationalFunction]) -> (bool, String) {
    let bad: Vec<usize> = items.iter().enumerate().filter(|(_, r)| !r.is_zero()).map(|(k, _)| k).collect();
    (bad.is_empty(), format!("{} residuals, nonzero at {bad:?}", items.len()))
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn all_topologies(bound: u32) -> Vec<(u32, u32)> {
    (1..=bound).flat_map(stable_topologies).collect()
}

fn catalan_checks() -> Vec<Check> {
    vec![
        check("catalan.base-sequence", "C_{0,1}(2m) are the Catalan numbers, m <= 12", |e, _| {
            let mut expect = BigInt::from(1);
            for m in 1..=12u32 {
                expect = expect * BigInt::from(2 * (2 * m - 1)) / BigInt::from(m + 1);
                if e.catalan.counts().count(0, &[2 * m]).map_err(err)? != expect {
                    return Ok((false, format!("mismatch at m = {m}")));
                }
            }
            Ok((true, "12 values exact".into()))
        }),
        check("catalan.curve-inversion", "z + 1/z = x with z = sum of Catalan numbers x^{-2m-1}", |_, _| {
            let r = catalan::curve_inversion_check(8);
            Ok((r.pass, format!("order {}, first failure {:?}", r.order, r.first_failure)))
        }),
        check("catalan.free-energy-properties", "F^C symmetric and vanishing at t_i = -1", |e, _| {
            let mut bad = Vec::new();
            for (g, n) in all_topologies(e.catalan.bound()) {
                let f = e.catalan.free_energy(g, n).map_err(err)?;
                if !f.poly.is_symmetric() || !f.poly.substitute(0, &Rational::from(-1)).map_err(err)?.is_zero() {
                    bad.push((g, n));
                }
            }
            Ok((bad.is_empty(), format!("violations at {bad:?}")))
        }),
        check("catalan.s-cross-path", "assembled and recursive S_m agree", |e, o| {
            let rec = catalan::s_sequence_recursive(o.max_order).map_err(err)?;
            let mut bad = Vec::new();
            for m in 2..=o.max_order {
                if e.catalan.s_coeff_assembled(m).map_err(err)? != rec[m as usize] {
                    bad.push(m);
                }
            }
            Ok((bad.is_empty(), format!("mismatch at m = {bad:?}")))
        }),
        check("catalan.schrodinger", "Schrodinger equation order by order in hbar", |e, o| {
            Ok(zeros(&e.catalan.schrodinger_residual(o.max_order.saturating_sub(1)).map_err(err)?))
        }),
        check("catalan.s-polynomiality", "S_m is a polynomial in s of degree <= 3m - 3", |e, o| {
            let mut bad = Vec::new();
            for m in 2..=o.max_order {
                let s = e.catalan.s_coeff_assembled(m).map_err(err)?;
                let sz = catalan::t_to_z(s.function().expect("m >= 2"));
                let deg = catalan::s_polynomial(&sz).and_then(|p| p.as_polynomial().and_then(|q| q.degree()));
                if !deg.is_some_and(|d| d <= 3 * m as usize - 3) {
                    bad.push(m);
                }
            }
            Ok((bad.is_empty(), format!("violations at m = {bad:?}")))
        }),
    ]
}

fn hurwitz_checks() -> Vec<Check> {
    vec![
        check("hurwitz.unstable-numbers", "H_{0,1}(d) = d^{d-2}/d!, d <= 8", |e, _| {
            for d in 1..=8i64 {
                let fact: Rational = (1..=d).map(Rational::from).product();
                let expect = Rational::from(d).pow(d as i32 - 2) / fact;
                if e.hurwitz.numbers().number(0, &[d as u32]).map_err(err)? != expect {
                    return Ok((false, format!("mismatch at d = {d}")));
                }
            }
            Ok((true, "8 values exact".into()))
        }),
        check("hurwitz.lambert-inversion", "z e^{-z} = x and t = 1/(1-z) as series", |_, _| {
            let r = hurwitz::lambert_inversion_check(12);
            Ok((r.pass() && hurwitz::xi_series_consistency(4, 12), format!("order {}", r.order)))
        }),
        check("hurwitz.elsv", "ELSV fit reproduces cut-and-join off the solve grid", |e, _| {
            let mut points = 0;
            for (g, n) in all_topologies(e.hurwitz.bound()) {
                points += e.hurwitz.elsv_coefficients(g, n).map_err(err)?.verified_points;
            }
            Ok((true, format!("{points} extra profiles verified")))
        }),
        check("hurwitz.f-recursion", "F^H satisfies its polynomial recursion", |e, _| {
            let mut bad = Vec::new();
            for (g, n) in all_topologies(e.hurwitz.bound()) {
                if !e.hurwitz.fh_recursion_residual(g, n).map_err(err)?.is_zero() {
                    bad.push((g, n));
                }
            }
            Ok((bad.is_empty(), format!("nonzero at {bad:?}")))
        }),
        check("hurwitz.vanishing-at-one", "F^H vanishes at t_i = 1", |e, _| {
            let mut bad = Vec::new();
            for (g, n) in all_topologies(e.hurwitz.bound()) {
                let f = e.hurwitz.free_energy(g, n).map_err(err)?;
                if !f.poly.substitute(0, &Rational::one()).map_err(err)?.is_zero() || !f.poly.is_symmetric() {
                    bad.push((g, n));
                }
            }
            Ok((bad.is_empty(), format!("violations at {bad:?}")))
        }),
        check("hurwitz.s-cross-path", "assembled and recursive S_m agree, degree 3m - 3", |e, o| {
            let mut bad = Vec::new();
            for m in 2..=o.max_order {
                if e.hurwitz.s_coeff(m).is_err() {
                    bad.push(m);
                }
            }
            Ok((bad.is_empty(), format!("violations at m = {bad:?}")))
        }),
        check("hurwitz.heat", "heat-type equation order by order", |e, o| {
            let mut r = e.hurwitz.heat_residual(o.max_order.saturating_sub(1)).map_err(err)?;
            r.push(hurwitz::s0_identity());
            Ok(zeros(&r))
        }),
        check("hurwitz.zhou", "difference equation and heat bracket on Zhou's series, m <= 20", |_, _| {
            let r = hurwitz::zhou_series_checks(20);
            Ok((r.pass(), format!("first failure {:?}", r.first_failure())))
        }),
        check("hurwitz.pq-commutator", "[P,Q] = P on e^{-mw} hbar^k, m <= 10, |k| <= 3", |_, _| {
            let r = hurwitz::pq_commutator_check(10, &QCoefficients::default());
            let bad = r.iter().filter(|x| !x.residual.is_zero()).count();
            Ok((bad == 0, format!("{} basis elements, {bad} nonzero", r.len())))
        }),
    ]
}

fn wkb_checks() -> Vec<Check> {
    vec![
        check("wkb.operator-expansion", "exp generating function equals composition sum", |e, o| {
            let model = ModelRef::Catalan(&e.catalan);
            let data = model.s_primes(o.max_order).map_err(err)?;
            let curve = model.curve();
            let a = wkb::build_d_operators(o.max_order, &data, &curve).map_err(err)?;
            let b = wkb::d_operators_by_compositions(o.max_order, &data, &curve).map_err(err)?;
            let degree_ok = a.iter().enumerate().all(|(r, op)| op.order().unwrap_or(0) <= 2 * r as u32);
            Ok((a == b && degree_ok, format!("{} operators", a.len())))
        }),
        check("wkb.corrections.catalan", "A_k = 0 for the Catalan curve", |e, o| {
            let r = wkb::recover_corrections(ModelRef::Catalan(&e.catalan), o.max_order).map_err(err)?;
            Ok(zeros(&r.corrections))
        }),
        check("wkb.corrections.hurwitz", "A_k = 0 for the Lambert curve", |e, o| {
            let r = wkb::recover_corrections(ModelRef::Hurwitz(&e.hurwitz), o.max_order).map_err(err)?;
            Ok(zeros(&r.corrections))
        }),
        check("wkb.triple-path", "hierarchy S_m' equals assembled S_m' for both curves", |e, o| {
            let mut bad = Vec::new();
            for model in [ModelRef::Catalan(&e.catalan), ModelRef::Hurwitz(&e.hurwitz)] {
                let assembled = model.s_primes(o.max_order).map_err(err)?;
                let hier = wkb::hierarchy_s_primes(&CurveSymbol::for_model(model.kind()), o.max_order).map_err(err)?;
                for (m, (a, h)) in assembled.iter().zip(&hier).enumerate() {
                    if a != h {
                        bad.push((model.kind(), m));
                    }
                }
            }
            Ok((bad.is_empty(), format!("mismatch at {bad:?}")))
        }),
    ]
}

fn schur_checks() -> Vec<Check> {
    vec![
        check("schur.orthogonality", "character orthogonality and dim = chi(1^n)", |e, o| {
            for n in 1..=o.max_weight {
                let ps = schur::partitions(n);
                let ones = schur::Partition::new(vec![1; n as usize]);
                for mu in &ps {
                    if e.characters.character(mu, &ones).map_err(err)? != mu.dimension() {
                        return Ok((false, format!("dimension of {mu}")));
                    }
                    for nu in &ps {
                        let mut s = Rational::zero();
                        for l in &ps {
                            let c = e.characters.character(mu, l).map_err(err)?
                                * e.characters.character(nu, l).map_err(err)?;
                            s += Rational::new(c, l.z()).map_err(err)?;
                        }
                        let expect = if mu == nu { Rational::one() } else { Rational::zero() };
                        if s != expect {
                            return Ok((false, format!("<{mu},{nu}> = {s}")));
                        }
                    }
                }
            }
            Ok((true, format!("sizes 1..{}", o.max_weight)))
        }),
        check("schur.eigenvalue", "cut-and-join eigenvalue p_2[mu]/2 on s_mu", |e, o| {
            let r = schur::eigenvalue_residuals(&e.characters, o.max_weight);
            let bad: Vec<String> = r.iter().filter(|(_, x)| !x.is_zero()).map(|(m, _)| m.to_string()).collect();
            Ok((bad.is_empty(), format!("{} partitions, nonzero at {bad:?}", r.len())))
        }),
        check("schur.tau", "exp H(s,p) equals the character expansion", |e, o| {
            let r = schur::tau_expansion_residual(&e.characters, e.hurwitz.numbers(), o.max_weight, o.s_order)
                .map_err(err)?;
            Ok((r.pass(), format!("{} residual terms", r.residual_terms())))
        }),
        check("schur.cauchy", "Cauchy identity through the weight bound, capped at 5", |e, o| {
            let r = schur::cauchy_residual(&e.characters, o.max_weight.min(5));
            Ok((r.pass(), format!("{} residual terms", r.residual_terms + r.restriction.len())))
        }),
        check("schur.principal-collapse", "principal specialization keeps one-row partitions only", |e, o| {
            let r = schur::principal_collapse_check(&e.characters, o.max_weight + 2);
            Ok((r.pass(), format!("{} surviving multi-row, {} residual terms", r.surviving_multirow.len(), r.residual.len())))
        }),
    ]
}

fn checks_for(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Catalan => catalan_checks(),
        Suite::Hurwitz => hurwitz_checks(),
        Suite::Wkb => wkb_checks(),
        Suite::Schur => schur_checks(),
        Suite::All => [catalan_checks(), hurwitz_checks(), wkb_checks(), schur_checks()].into_iter().flatten().collect(),
    }
}

/// Identifiers of the checks in a suite, in report order.
pub fn check_ids(suite: Suite) -> Vec<&'static str> {
    checks_for(suite).iter().map(|c| c.id).collect()
}

fn run_one(c: &Check, engine: &Engine, options: &SuiteOptions) -> CheckRecord {
    let start = Instant::now();
    let (status, residual) = match (c.run)(engine, options) {
        Ok((true, s)) => (Status::Pass, s),
        Ok((false, s)) => (Status::Fail, s),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    CheckRecord {
        id: c.id.to_string(),
        reference: c.reference.to_string(),
        status,
        residual,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

pub fn run_suite(engine: &Engine, suite: Suite, options: &SuiteOptions, config: serde_json::Value) -> Report {
    let mut checks = checks_for(suite);
    if !options.only.is_empty() {
        checks.retain(|c| options.only.iter().any(|f| c.id.contains(f.as_str())));
    }
    let records: Vec<CheckRecord> = if options.parallelism > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(options.parallelism).build().expect("thread pool");
        pool.install(|| checks.par_iter().map(|c| run_one(c, engine, options)).collect())
    } else {
        checks.iter().map(|c| run_one(c, engine, options)).collect()
    };
    Report::new(suite.name(), records, config)
}

/// Which curve a command targets.
pub fn curve_model(name: &str) -> Option<CurveModel> {
    match name {
        "catalan" => Some(CurveModel::Catalan),
        "hurwitz" => Some(CurveModel::Hurwitz),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn all_is_the_concatenation() {
        let all = check_ids(Suite::All);
        let parts: Vec<&str> =
            [Suite::Catalan, Suite::Hurwitz, Suite::Wkb, Suite::Schur].into_iter().flat_map(check_ids).collect();
        assert_eq!(all, parts);
    }

    #[test]
    fn overall_status_follows_records() {
        let rec = |status| CheckRecord {
            id: "x".into(),
            reference: String::new(),
            status,
            residual: String::new(),
            wall_ms: 0.0,
        };
        assert!(Report::new("s", vec![rec(Status::Pass), rec(Status::Skipped)], serde_json::Value::Null).passed());
        assert!(!Report::new("s", vec![rec(Status::Pass), rec(Status::Fail)], serde_json::Value::Null).passed());
    }

    #[test]
    fn schur_suite_passes_in_parallel() {
        let engine = Engine::default();
        let opts = SuiteOptions { parallelism: 2, max_weight: 4, s_order: 4, ..SuiteOptions::default() };
        let report = run_suite(&engine, Suite::Schur, &opts, serde_json::Value::Null);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn filter_keeps_matching_checks() {
        let engine = Engine::default();
        let opts = SuiteOptions { only: vec!["zhou".into(), "commutator".into()], ..SuiteOptions::default() };
        let report = run_suite(&engine, Suite::Hurwitz, &opts, serde_json::Value::Null);
        let ids: Vec<&str> = report.records.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["hurwitz.zhou", "hurwitz.pq-commutator"]);
        assert!(report.passed());
    }
}
