//! Named suites over seeded corpora.

use std::sync::Arc;
use std::time::Instant;

use super::checks::*;
use super::instances::{derive_seed, generate_instance, Instance, InstanceKind, InstanceSpec};
use super::report::{SuiteConfig, SuiteReport, VerificationReport};
use crate::arith::{int, rat, Rational};
use crate::asymptotic::{GradedFamily, DEFAULT_SCHEDULE};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::AmbientRing;

pub const SUITES: [&str; 7] = [
    "subadditivity",
    "summation",
    "skoda",
    "symbolic",
    "asymptotic",
    "tau-vs-j",
    "paper-example",
];

pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

/// The exponents used by the characteristic-p corpus.
pub fn tau_exponents() -> [Rational; 4] {
    [rat(1, 2), rat(2, 3), int(1), rat(3, 2)]
}

type Job = Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>;

/// Runs a job, timing it and turning an error into a failing report.
fn run_job(id: &str, job: &Job) -> Vec<VerificationReport> {
    let start = Instant::now();
    let mut out = job().unwrap_or_else(|e| vec![VerificationReport::new(id).errored(&e)]);
    let ms = start.elapsed().as_millis() as u64;
    for r in &mut out {
        r.millis = ms;
    }
    out
}

fn run_jobs(id: &str, jobs: Vec<Job>) -> Vec<VerificationReport> {
    crate::par::map_vec(&jobs, |j| run_job(id, j))
        .into_iter()
        .flatten()
        .collect()
}

fn with_index(mut reps: Vec<VerificationReport>, index: usize) -> Vec<VerificationReport> {
    for r in &mut reps {
        r.instance.insert("index".into(), index.to_string());
    }
    reps
}

fn instance(cfg: &SuiteConfig, salt: u64, i: usize, edit: impl Fn(&mut InstanceSpec)) -> Result<Instance> {
    let mut spec = InstanceSpec::new(derive_seed(cfg.seed ^ salt, i as u64));
    if let Some(ring) = &cfg.ring {
        spec.ring = ring.clone();
    }
    edit(&mut spec);
    generate_instance(&spec)
}

fn is_toric_override(cfg: &SuiteConfig) -> bool {
    cfg.ring.as_deref().is_some_and(|r| r.trim() != "poly")
}

fn subadditivity_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for i in 0..cfg.count {
        let cfg = cfg.clone();
        jobs.push(Box::new(move || {
            let inst = instance(&cfg, 0x5AB, i, |s| s.vars = 2 + i % 2)?;
            let r = check_subadditivity(&inst.ideals[0], &inst.exponents[0], &inst.ideals[1], &inst.exponents[1])?;
            Ok(with_index(vec![r], i))
        }));
    }
    if !is_toric_override(cfg) {
        for i in 0..cfg.count.div_ceil(10) {
            let cfg = cfg.clone();
            jobs.push(Box::new(move || {
                let ring = if i % 2 == 0 { "A2n n=2" } else { "A2n n=3" };
                let inst = instance(&cfg, 0x70C, i, |s| {
                    s.ring = ring.into();
                    s.max_exponent = 4;
                    s.max_denominator = 4;
                })?;
                let r = check_subadditivity(&inst.ideals[0], &inst.exponents[0], &inst.ideals[1], &inst.exponents[1])?;
                Ok(with_index(vec![r], cfg.count + i))
            }));
        }
    }
    let n = cfg.n.unwrap_or(2).max(2);
    jobs.push(Box::new(move || Ok(vec![check_radical_probe(n)?])));
    jobs
}

fn summation_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(|| {
        let ring = Arc::new(AmbientRing::polynomial(&["x", "y"])?);
        let a = MonomialIdeal::parse(ring.clone(), "(x^2)")?;
        let b = MonomialIdeal::parse(ring, "(y^3)")?;
        Ok(vec![check_summation(&a, &b, &int(1))?])
    }));
    for i in 0..cfg.count {
        let cfg = cfg.clone();
        jobs.push(Box::new(move || {
            let inst = instance(&cfg, 0x5E3, i, |s| s.vars = 2 + i % 2)?;
            let r = check_summation(&inst.ideals[0], &inst.ideals[1], &inst.exponents[0])?;
            Ok(with_index(vec![r], i))
        }));
    }
    jobs
}

fn skoda_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(|| {
        let ring = Arc::new(AmbientRing::polynomial(&["x", "y"])?);
        let a = MonomialIdeal::parse(ring.clone(), "(x^2, y^3)")?;
        let unit = MonomialIdeal::unit(ring.clone());
        let x = MonomialIdeal::parse(ring.clone(), "(x)")?;
        let b = MonomialIdeal::parse(ring.clone(), "(x*y^2, y^3)")?;
        let line = Arc::new(AmbientRing::polynomial(&["x"])?);
        let principal = MonomialIdeal::parse(line.clone(), "(x)")?;
        let cubic = MonomialIdeal::parse(line, "(x^3)")?;
        Ok(vec![
            check_skoda(&a, &unit, &int(1))?,
            check_skoda(&principal, &cubic, &rat(2, 3))?,
            check_skoda(&a, &b, &rat(1, 2))?,
            check_skoda(&x, &b, &rat(1, 2))?,
        ])
    }));
    for i in 0..cfg.count {
        let cfg = cfg.clone();
        jobs.push(Box::new(move || {
            let inst = instance(&cfg, 0x5D0, i, |s| {
                s.ring = "poly".into();
                s.vars = 2;
                s.kind = InstanceKind::MPrimary;
            })?;
            let r = check_skoda(&inst.ideals[0], &inst.ideals[1], &inst.exponents[0])?;
            Ok(with_index(vec![r], i))
        }));
    }
    jobs
}

fn symbolic_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(|| {
        let ring = Arc::new(AmbientRing::polynomial(&["x", "y", "z"])?);
        let tri = MonomialIdeal::parse(ring, "(x*y, y*z, z*x)")?;
        Ok(vec![
            check_symbolic_growth(&tri, 0, 2)?,
            check_symbolic_growth(&tri, 0, 1)?,
            check_symbolic_growth_grid(&tri, 2, 3)?,
        ])
    }));
    for n in [2, 3] {
        jobs.push(Box::new(move || {
            let ring = Arc::new(AmbientRing::a2n(n)?);
            (0..2).map(|ray| check_divisorial_growth(&ring, ray, 0, 2)).collect()
        }));
    }
    for i in 0..cfg.count {
        let cfg = cfg.clone();
        jobs.push(Box::new(move || {
            let inst = instance(&cfg, 0x5F1, i, |s| {
                s.ring = "poly".into();
                s.vars = 1 + i % 3;
                s.kind = InstanceKind::Squarefree;
            })?;
            Ok(with_index(vec![check_symbolic_growth_grid(&inst.ideals[0], 2, 3)?], i))
        }));
    }
    jobs
}

fn tau_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for t in [rat(1, 2), rat(5, 6), int(1), int(2)] {
        jobs.push(Box::new(move || {
            let ring = Arc::new(AmbientRing::polynomial(&["x", "y"])?);
            let a = MonomialIdeal::parse(ring, "(x^2, y^3)")?;
            Ok(vec![check_tau_equals_multiplier(&a, &t, &PRIMES)?])
        }));
    }
    for i in 0..cfg.count {
        let cfg = cfg.clone();
        jobs.push(Box::new(move || {
            let inst = instance(&cfg, 0x7A0, i, |s| {
                s.ring = "poly".into();
                s.vars = 1 + i % 3;
            })?;
            let t = tau_exponents()[i % 4].clone();
            Ok(with_index(vec![check_tau_equals_multiplier(&inst.ideals[0], &t, &PRIMES)?], i))
        }));
    }
    jobs
}

fn family(a: &MonomialIdeal, symbolic: bool) -> Result<(Arc<GradedFamily>, String)> {
    if symbolic {
        Ok((GradedFamily::symbolic(a)?, format!("symbolic {a}")))
    } else {
        Ok((GradedFamily::powers(a)?, format!("powers {a}")))
    }
}

fn asymptotic_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for i in 0..cfg.count {
        let cfg = cfg.clone();
        jobs.push(Box::new(move || {
            let (fs, gs) = [(false, false), (true, true), (false, true)][i % 3];
            let kind = if fs || gs { InstanceKind::Squarefree } else { InstanceKind::General };
            let inst = instance(&cfg, 0xA51, i, |s| {
                s.ring = "poly".into();
                s.vars = 2 + i % 2;
                s.max_exponent = 4;
                s.max_denominator = 4;
                s.max_generators = 3;
                s.kind = kind;
            })?;
            let (f, fl) = family(&inst.ideals[0], fs)?;
            let (g, gl) = family(&inst.ideals[1], gs)?;
            let t = &inst.exponents[0];
            let reps = vec![
                check_asymptotic_summation(&f, &g, t, &DEFAULT_SCHEDULE, &format!("{fl} + {gl}"))?,
                check_asymptotic_lemma(&f, 1 + (i as u64 % 2), 1, &DEFAULT_SCHEDULE, &fl)?,
                check_asymptotic_subadditivity(&g, t, 1, 1 + (i as u64 % 2), &DEFAULT_SCHEDULE, &gl)?,
            ];
            Ok(with_index(reps, i))
        }));
    }
    jobs
}

fn jobs_for(name: &str, cfg: &SuiteConfig) -> Result<Vec<Job>> {
    Ok(match name {
        "subadditivity" => subadditivity_jobs(cfg),
        "summation" => summation_jobs(cfg),
        "skoda" => skoda_jobs(cfg),
        "symbolic" => symbolic_jobs(cfg),
        "asymptotic" => asymptotic_jobs(cfg),
        "tau-vs-j" => tau_jobs(cfg),
        "paper-example" => {
            let n = cfg.n.unwrap_or(2);
            vec![Box::new(move || run_paper_example(n)) as Job]
        }
        _ => return Err(Error::InvalidParameter(format!("unknown suite `{name}`"))),
    })
}

fn validate(cfg: &SuiteConfig) -> Result<()> {
    if let Some(ring) = &cfg.ring {
        if ring.trim() != "poly" {
            AmbientRing::parse(ring).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        }
    }
    Ok(())
}

/// Runs one suite, or every suite in order for `all`.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    validate(cfg)?;
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let mut results = Vec::new();
    for n in names {
        let jobs = jobs_for(n, cfg)?;
        results.extend(run_jobs(n, jobs));
    }
    Ok(SuiteReport::new(name, cfg.clone(), results))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::report::Verdict;

    fn small(count: usize) -> SuiteConfig {
        SuiteConfig {
            seed: 3,
            count,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &small(1)).is_err());
    }

    #[test]
    fn paper_example_suite() {
        let rep = run_suite("paper-example", &small(1)).unwrap();
        assert_eq!(rep.totals.pass, 4);
        assert!(!rep.has_failures());
    }

    #[test]
    fn small_suites_pass_and_are_deterministic() {
        for name in ["subadditivity", "summation", "skoda", "symbolic"] {
            let a = run_suite(name, &small(4)).unwrap();
            let b = run_suite(name, &small(4)).unwrap();
            assert!(a.results.iter().all(|r| r.verdict != Verdict::Fail), "{}", a.to_text());
            assert_eq!(a.without_timings(), b.without_timings());
        }
    }
}
