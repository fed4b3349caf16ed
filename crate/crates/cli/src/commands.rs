//! Dispatch from parsed arguments to the engine.

use std::path::Path;
use std::time::Instant;

use eo_core::catalan::{self, SCatalan};
use eo_core::hurwitz::{self, SHurwitz};
use eo_core::report::{run_suite, CheckRecord, Engine, Report, Status, Suite, SuiteOptions};
use eo_core::schur::{partitions, Partition};
use eo_core::wkb::{self, CurveModel, ModelRef};
use eo_core::{RationalFunction, SparseLaurent, Var};
use serde_json::{json, Value};

use crate::args::{CacheCmd, CatalanCmd, Cli, Command, HurwitzCmd, ModelArg, Profile, SchurCmd, SuiteArg, WkbCmd};
use crate::cache::{self, Snapshot};
use crate::error::CliError;
use crate::output::{join, Output};

/// Everything a command needs besides its own arguments.
pub struct Context<'a> {
    pub engine: &'a Engine,
    pub config: Value,
    pub cache_file: Option<&'a Path>,
}

pub fn run(cli: &Cli, ctx: &Context<'_>) -> Result<Output, CliError> {
    match &cli.command {
        Command::Catalan(c) => catalan_cmd(c, ctx),
        Command::Hurwitz(c) => hurwitz_cmd(c, ctx, cli.global.jobs),
        Command::Wkb(c) => wkb_cmd(c, ctx),
        Command::Schur(c) => schur_cmd(c, ctx, cli.global.jobs),
        Command::Verify(v) => {
            let options = SuiteOptions {
                max_order: v.max_order,
                parallelism: cli.global.jobs as usize,
                max_weight: v.max_weight,
                s_order: v.s_order,
                only: Vec::new(),
            };
            suite(ctx, suite_of(v.suite), &options)
        }
        Command::Cache(c) => cache_cmd(c, ctx),
    }
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Catalan => Suite::Catalan,
        SuiteArg::Hurwitz => Suite::Hurwitz,
        SuiteArg::Wkb => Suite::Wkb,
        SuiteArg::Schur => Suite::Schur,
        SuiteArg::All => Suite::All,
    }
}

fn model_of(m: ModelArg) -> CurveModel {
    match m {
        ModelArg::Catalan => CurveModel::Catalan,
        ModelArg::Hurwitz => CurveModel::Hurwitz,
    }
}

fn suite(ctx: &Context<'_>, s: Suite, options: &SuiteOptions) -> Result<Output, CliError> {
    if options.max_order > ctx.engine.catalan.bound() + 1 {
        return Err(CliError::Usage(format!(
            "--max-order {} needs --bound {} or more",
            options.max_order,
            options.max_order - 1
        )));
    }
    Output::report(&run_suite(ctx.engine, s, options, ctx.config.clone()))
}

fn check_profile(p: &Profile) -> Result<(), CliError> {
    if p.n as usize != p.mu.len() {
        return Err(CliError::Usage(format!("--n {} but --mu has {} parts", p.n, p.mu.len())));
    }
    Ok(())
}

fn laurent_rows(poly: &SparseLaurent) -> Vec<Vec<String>> {
    poly.terms().map(|(e, c)| vec![join(e), c.to_string()]).collect()
}

fn catalan_cmd(cmd: &CatalanCmd, ctx: &Context<'_>) -> Result<Output, CliError> {
    let model = &ctx.engine.catalan;
    match cmd {
        CatalanCmd::Count(p) => {
            check_profile(p)?;
            let count = model.counts().count(p.g, &p.mu)?;
            Ok(Output::value(
                json!({"g": p.g, "n": p.n, "mu": p.mu, "count": count.to_string(), "config": ctx.config}),
                &["g", "n", "mu", "count"],
                vec![vec![p.g.to_string(), p.n.to_string(), join(&p.mu), count.to_string()]],
                count.to_string(),
            ))
        }
        CatalanCmd::FreeEnergy(t) => {
            let f = model.free_energy(t.g, t.n)?;
            let at_one = f.value_at_one();
            Ok(Output::value(
                json!({"g": t.g, "n": t.n, "poly": f.poly, "value_at_one": at_one, "config": ctx.config}),
                &["exponents", "coefficient"],
                laurent_rows(&f.poly),
                format!("F^C_{{{},{}}} = {}\nvalue at t = 1: {at_one}", t.g, t.n, f.poly),
            ))
        }
        CatalanCmd::SCoeff { m } => {
            let assembled = model.s_coeff_assembled(*m)?;
            let recursive = catalan::s_sequence_recursive(*m)?.pop().expect("nonempty");
            let agree = assembled == recursive;
            let dx = assembled.dx();
            let (label, t_form) = match &assembled {
                SCatalan::Function(f) => ("S", f.clone()),
                SCatalan::TDerivative(d) => ("dS/dt", d.clone()),
            };
            let z_form = assembled.in_z();
            let mut rows = vec![vec![format!("{label}(t)"), t_form.to_string()], vec!["dS/dx(t)".into(), dx.to_string()]];
            let mut pretty = format!("{label}_{m}(t) = {t_form}\ndS_{m}/dx = {dx}");
            if let Some(z) = &z_form {
                rows.push(vec!["S(z)".into(), z.to_string()]);
                pretty += &format!("\nS_{m}(z) = {z}");
            }
            pretty += &format!("\nassembled and recursive paths agree: {agree}");
            let mut out = Output::value(
                json!({"m": m, "t": assembled, "z": z_form, "dx": dx, "paths_agree": agree, "config": ctx.config}),
                &["form", "value"],
                rows,
                pretty,
            );
            out.pass = agree;
            Ok(out)
        }
        CatalanCmd::VerifySchrodinger { order } => {
            if *order > model.bound() {
                return Err(CliError::Usage(format!("--order {order} needs --bound {order} or more")));
            }
            let start = Instant::now();
            let residuals = model.schrodinger_residual(*order)?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            Ok(Output::report(&zero_report("catalan.schrodinger", "hbar", &residuals, ms, ctx)?)?)
        }
    }
}

/// One record per residual, passing when it vanishes.
fn zero_report(
    suite: &str,
    prefix: &str,
    residuals: &[RationalFunction],
    wall_ms: f64,
    ctx: &Context<'_>,
) -> Result<Report, CliError> {
    let records = residuals
        .iter()
        .enumerate()
        .map(|(k, r)| CheckRecord {
            id: format!("{suite}.{prefix}{k}"),
            reference: format!("coefficient of {prefix}^{k} vanishes"),
            status: if r.is_zero() { Status::Pass } else { Status::Fail },
            residual: r.to_string(),
            wall_ms: wall_ms / residuals.len().max(1) as f64,
        })
        .collect();
    Ok(Report::new(suite, records, ctx.config.clone()))
}

fn hurwitz_cmd(cmd: &HurwitzCmd, ctx: &Context<'_>, jobs: u32) -> Result<Output, CliError> {
    let model = &ctx.engine.hurwitz;
    match cmd {
        HurwitzCmd::Number(p) => {
            check_profile(p)?;
            let h = model.numbers().number(p.g, &p.mu)?;
            Ok(Output::value(
                json!({"g": p.g, "n": p.n, "mu": p.mu, "number": h, "config": ctx.config}),
                &["g", "n", "mu", "number"],
                vec![vec![p.g.to_string(), p.n.to_string(), join(&p.mu), h.to_string()]],
                h.to_string(),
            ))
        }
        HurwitzCmd::FreeEnergy(t) => {
            let elsv = model.elsv_coefficients(t.g, t.n)?;
            let f = model.free_energy(t.g, t.n)?;
            let mut pretty = format!("F^H_{{{},{}}} = {}\nELSV coefficients:", t.g, t.n, f.poly);
            for e in &elsv.entries {
                pretty += &format!("\n  k = ({}): {}", join(&e.k), e.value);
            }
            Ok(Output::value(
                json!({"g": t.g, "n": t.n, "poly": f.poly, "elsv": elsv.entries, "config": ctx.config}),
                &["exponents", "coefficient"],
                laurent_rows(&f.poly),
                pretty,
            ))
        }
        HurwitzCmd::SCoeff { m } => {
            let (label, value) = if *m < 2 {
                match hurwitz::seed(*m) {
                    SHurwitz::Function(f) => ("S", f),
                    SHurwitz::TDerivative(d) => ("dS/dt", d),
                }
            } else {
                ("S", RationalFunction::from_poly(model.s_coeff(*m)?, Var::T))
            };
            let z = hurwitz::t_to_z(&value);
            Ok(Output::value(
                json!({"m": m, "form": label, "t": value, "z": z, "config": ctx.config}),
                &["form", "value"],
                vec![vec![format!("{label}(t)"), value.to_string()], vec![format!("{label}(z)"), z.to_string()]],
                format!("{label}_{m}(t) = {value}\n{label}_{m}(z) = {z}"),
            ))
        }
        HurwitzCmd::Verify { only, max_order } => {
            let options = SuiteOptions {
                max_order: *max_order,
                parallelism: jobs as usize,
                only: only.clone(),
                ..SuiteOptions::default()
            };
            suite(ctx, Suite::Hurwitz, &options)
        }
    }
}

fn wkb_cmd(cmd: &WkbCmd, ctx: &Context<'_>) -> Result<Output, CliError> {
    let model_ref = |m: ModelArg| match m {
        ModelArg::Catalan => ModelRef::Catalan(&ctx.engine.catalan),
        ModelArg::Hurwitz => ModelRef::Hurwitz(&ctx.engine.hurwitz),
    };
    match cmd {
        WkbCmd::Corrections { model, order } => {
            let report = wkb::recover_corrections(model_ref(*model), *order)?;
            let rows: Vec<Vec<String>> =
                report.corrections.iter().enumerate().map(|(k, a)| vec![k.to_string(), a.to_string()]).collect();
            let mut pretty: String =
                report.corrections.iter().enumerate().map(|(k, a)| format!("A_{k} = {a}\n")).collect();
            pretty += if report.pass { "pass" } else { "fail" };
            let mut out = Output::value(
                json!({
                    "model": report.model,
                    "order": report.order,
                    "corrections": report.corrections,
                    "status": if report.pass { "pass" } else { "fail" },
                    "config": ctx.config,
                }),
                &["k", "A_k"],
                rows,
                pretty,
            );
            out.pass = report.pass;
            out.default_format = crate::args::Format::Json;
            Ok(out)
        }
        WkbCmd::SPrime { model, n } => {
            let value = wkb::s_prime_from_hierarchy(model_of(*model), *n)?;
            // Free energies reach S_n only within the bound.
            let assembled = match model_ref(*model).s_primes(*n) {
                Ok(v) => Some(v[*n as usize] == value),
                Err(_) => None,
            };
            let mut pretty = format!("dS_{n}/dx = {value}");
            if let Some(a) = assembled {
                pretty += &format!("\nmatches assembled free energies: {a}");
            }
            let mut out = Output::value(
                json!({"model": model, "n": n, "s_prime": value, "matches_assembled": assembled, "config": ctx.config}),
                &["n", "s_prime"],
                vec![vec![n.to_string(), value.to_string()]],
                pretty,
            );
            out.pass = assembled != Some(false);
            Ok(out)
        }
    }
}

fn schur_cmd(cmd: &SchurCmd, ctx: &Context<'_>, jobs: u32) -> Result<Output, CliError> {
    match cmd {
        SchurCmd::Verify { max_weight, s_order } => {
            let options = SuiteOptions {
                parallelism: jobs as usize,
                max_weight: *max_weight,
                s_order: *s_order,
                ..SuiteOptions::default()
            };
            suite(ctx, Suite::Schur, &options)
        }
        SchurCmd::Character { mu, lambda } => {
            let mu = Partition::new(mu.clone());
            let lambdas = match lambda {
                Some(l) => vec![Partition::new(l.clone())],
                None => partitions(mu.size()),
            };
            let mut rows = Vec::new();
            for l in &lambdas {
                let chi = ctx.engine.characters.character(&mu, l)?;
                rows.push(vec![l.to_string(), chi.to_string()]);
            }
            let pretty = if lambda.is_some() {
                rows[0][1].clone()
            } else {
                rows.iter().map(|r| format!("chi^{mu}({}) = {}", r[0], r[1])).collect::<Vec<_>>().join("\n")
            };
            let values: Vec<Value> = lambdas
                .iter()
                .zip(&rows)
                .map(|(l, r)| json!({"lambda": l, "character": r[1]}))
                .collect();
            Ok(Output::value(
                json!({"mu": mu, "characters": values, "dimension": mu.dimension().to_string(), "config": ctx.config}),
                &["lambda", "character"],
                rows,
                pretty,
            ))
        }
    }
}

fn cache_cmd(cmd: &CacheCmd, ctx: &Context<'_>) -> Result<Output, CliError> {
    match cmd {
        CacheCmd::Export { out } => {
            let snap = Snapshot::capture(ctx.engine);
            let summary = json!({"catalan": snap.catalan.len(), "hurwitz": snap.hurwitz.len()});
            match out {
                Some(path) => {
                    cache::write(path, &snap)?;
                    Ok(Output::value(
                        json!({"written": path, "entries": summary}),
                        &["table", "entries"],
                        vec![
                            vec!["catalan".into(), snap.catalan.len().to_string()],
                            vec!["hurwitz".into(), snap.hurwitz.len().to_string()],
                        ],
                        format!("wrote {} entries to {}", snap.len(), path.display()),
                    ))
                }
                None => {
                    let text = cache::to_json(&snap)?;
                    let mut o = Output::value(serde_json::to_value(&snap)?, &["table", "key", "value"], Vec::new(), text);
                    o.rows = snapshot_rows(&snap);
                    o.pretty = o.pretty.trim_end().to_string();
                    Ok(o)
                }
            }
        }
        CacheCmd::Import { from } => {
            if ctx.cache_file.is_none() {
                return Err(CliError::Usage("cache import needs a cache directory; drop --no-cache".into()));
            }
            let snap = cache::read(from)?;
            let warnings = snap.apply(ctx.engine);
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            let accepted = snap.len() - warnings.len();
            Ok(Output::value(
                json!({"from": from, "accepted": accepted, "rejected": warnings}),
                &["accepted", "rejected"],
                vec![vec![accepted.to_string(), warnings.len().to_string()]],
                format!("imported {accepted} entries, rejected {}", warnings.len()),
            ))
        }
    }
}

fn snapshot_rows(snap: &Snapshot) -> Vec<Vec<String>> {
    let tagged = |name: &str, m: &std::collections::BTreeMap<String, String>| -> Vec<Vec<String>> {
        m.iter().map(|(k, v)| vec![name.to_string(), k.clone(), v.clone()]).collect()
    };
    let mut rows = tagged("catalan", &snap.catalan);
    rows.extend(tagged("hurwitz", &snap.hurwitz));
    rows
}
