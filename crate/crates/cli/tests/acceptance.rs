//! Acceptance run: one line per criterion, non-zero exit if any fails.

#[path = "../../core/tests/support/props.rs"]
mod props;

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use mideal::arith::int;
use mideal::harness::{
    check_skoda, check_summation, check_symbolic_growth, check_tau_equals_multiplier, derive_seed, generate_instance,
    run_suite, tau_exponents, InstanceKind, InstanceSpec, SuiteConfig, Verdict, VerificationReport, PRIMES,
};
use mideal::{rat, AmbientRing, MonomialIdeal};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(reps: &[VerificationReport]) -> Result<(), String> {
    match reps.iter().find(|r| r.verdict != Verdict::Pass) {
        None => Ok(()),
        Some(r) => Err(format!(
            "{} {:?} on {:?}: witness {:?}, reason {:?}, error {:?}",
            r.theorem_id, r.verdict, r.instance, r.witness, r.reason, r.error
        )),
    }
}

fn poly(names: &[&str]) -> Arc<AmbientRing> {
    Arc::new(AmbientRing::polynomial(names).unwrap())
}

fn ideal(r: &Arc<AmbientRing>, s: &str) -> MonomialIdeal {
    MonomialIdeal::parse(r.clone(), s).unwrap()
}

fn cfg(seed: u64, count: usize) -> SuiteConfig {
    SuiteConfig {
        seed,
        count,
        ..SuiteConfig::default()
    }
}

fn criterion_1() -> Outcome {
    for n in [2, 3] {
        let out = Command::new(env!("CARGO_BIN_EXE_mideal"))
            .args(["verify", "paper-example", "--n", &n.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), format!("n = {n}: exit {:?}", out.status.code()))?;
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        ensure(v["totals"]["pass"] == 4 && v["totals"]["fail"] == 0, format!("n = {n}: totals {}", v["totals"]))?;
        let res = v["results"].as_array().unwrap();
        let strings = |i: usize, side: &str| -> Vec<String> {
            res[i][side].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
        };
        let mut jac = vec!["x".to_string(), "y".to_string(), format!("z^{}", 2 * n)];
        let mut got = strings(0, "lhs");
        jac.sort();
        got.sort();
        ensure(got == jac, format!("jacobian {got:?}"))?;
        let mut half = vec!["x".to_string()];
        for k in 0..=n {
            half.push(match (n - k, k) {
                (0, k) => format!("z^{k}"),
                (j, 0) => format!("y^{j}"),
                (1, 1) => "y*z".into(),
                (1, k) => format!("y*z^{k}"),
                (j, 1) => format!("y^{j}*z"),
                (j, k) => format!("y^{j}*z^{k}"),
            });
        }
        let mut got = strings(2, "lhs");
        half.sort();
        got.sort();
        ensure(got == half, format!("J(a^1/2) = {got:?}"))?;
        ensure(
            res[3]["instance"]["radical-witness"] == "x*z",
            format!("radical witness {}", res[3]["instance"]["radical-witness"]),
        )?;
    }
    Ok("n = 2, 3: 4/4 each, witness x*z".into())
}

fn criterion_2() -> Outcome {
    let mut checks = 0;
    let mut max_e = 0;
    for i in 0..50u64 {
        let mut spec = InstanceSpec::new(derive_seed(2, i));
        spec.vars = 1 + (i % 3) as usize;
        let a = generate_instance(&spec).map_err(|e| e.to_string())?.ideals.remove(0);
        for t in tau_exponents() {
            let r = check_tau_equals_multiplier(&a, &t, &PRIMES).map_err(|e| format!("{a} t={t}: {e}"))?;
            all_pass(std::slice::from_ref(&r))?;
            for part in r.instance["stabilized"].split_whitespace() {
                let e: u32 = part.rsplit('=').next().unwrap().parse().unwrap();
                max_e = max_e.max(e);
                checks += 1;
            }
        }
    }
    ensure(max_e <= 12, format!("stabilized at e = {max_e}"))?;
    Ok(format!("{checks} chains equal J, max stabilization e = {max_e}"))
}

fn criterion_3() -> Outcome {
    let rep = run_suite("summation", &cfg(3, 100)).map_err(|e| e.to_string())?;
    all_pass(&rep.results)?;
    ensure(rep.results.len() == 101, format!("{} reports", rep.results.len()))?;
    let r = poly(&["x", "y"]);
    let hand = check_summation(&ideal(&r, "(x^2)"), &ideal(&r, "(y^3)"), &int(1)).map_err(|e| e.to_string())?;
    all_pass(std::slice::from_ref(&hand))?;
    let pts: Vec<&str> = hand.instance["breakpoints"].split_whitespace().collect();
    for p in ["1/3", "1/2", "2/3"] {
        ensure(pts.contains(&p), format!("breakpoints {pts:?}"))?;
    }
    ensure(hand.lhs == ["x", "y"] && hand.rhs == ["x", "y"], "hand sides")?;
    Ok(format!("{} instances, hand breakpoints {}", rep.results.len() - 1, pts.join(" ")))
}

fn criterion_4() -> Outcome {
    let rep = run_suite("subadditivity", &cfg(4, 100)).map_err(|e| e.to_string())?;
    all_pass(&rep.results)?;
    let toric = rep.results.iter().filter(|r| r.instance["ring"].starts_with("A")).count();
    let poly = rep.results.iter().filter(|r| r.theorem_id == "subadditivity" && r.instance["ring"].starts_with("poly")).count();
    ensure(poly == 100 && toric >= 10, format!("{poly} polynomial, {toric} toric"))?;
    let probe = rep
        .results
        .iter()
        .find(|r| r.theorem_id == "subadditivity/radical-probe")
        .ok_or("no radical probe")?;
    ensure(
        probe.expect == mideal::harness::Expectation::NonContainment && probe.witness.as_deref() == Some("x*z"),
        "probe witness",
    )?;
    Ok(format!("{poly} polynomial + {} toric instances, probe witness x*z", toric - 1))
}

fn criterion_5() -> Outcome {
    let r = poly(&["x", "y"]);
    let hand = check_skoda(&ideal(&r, "(x^2, y^3)"), &MonomialIdeal::unit(r.clone()), &int(1)).map_err(|e| e.to_string())?;
    ensure(hand.verdict == Verdict::Pass, "hand instance")?;
    ensure(hand.lhs == ["x^3", "x^2*y", "x*y^3", "y^4"], format!("J(a^2) = {:?}", hand.lhs))?;
    let mut reps = Vec::new();
    for i in 0..50u64 {
        let mut spec = InstanceSpec::new(derive_seed(5, i));
        spec.kind = InstanceKind::MPrimary;
        let inst = generate_instance(&spec).map_err(|e| e.to_string())?;
        reps.push(check_skoda(&inst.ideals[0], &inst.ideals[1], &inst.exponents[0]).map_err(|e| e.to_string())?);
    }
    all_pass(&reps)?;
    Ok("50 m-primary instances, 0 flagged; hand value exact".into())
}

fn criterion_6() -> Outcome {
    let r = poly(&["x", "y", "z"]);
    let tri = ideal(&r, "(x*y, y*z, z*x)");
    let a2 = check_symbolic_growth(&tri, 0, 2).map_err(|e| e.to_string())?;
    ensure(a2.verdict == Verdict::Pass && a2.instance["h"] == "2", "triangle a^(4) in a^2")?;
    let second = tri.symbolic_power(2).map_err(|e| e.to_string())?;
    let square = tri.power(2).map_err(|e| e.to_string())?;
    ensure(
        second.member(&[1, 1, 1]).unwrap() && !square.member(&[1, 1, 1]).unwrap(),
        "xyz in a^(2) minus a^2",
    )?;
    let mut pairs = 0;
    for i in 0..30u64 {
        let mut spec = InstanceSpec::new(derive_seed(6, i));
        spec.vars = 1 + (i % 3) as usize;
        spec.kind = InstanceKind::Squarefree;
        let a = generate_instance(&spec).map_err(|e| e.to_string())?.ideals.remove(0);
        for m in 0..=2 {
            for n in 1..=3 {
                let rep = check_symbolic_growth(&a, m, n).map_err(|e| e.to_string())?;
                all_pass(std::slice::from_ref(&rep))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("30 squarefree ideals, {pairs} (m, n) pairs, triangle exact"))
}

/// Degree of growth of `n -> mu(a^n)` plus one, read off finite differences
/// over `4 <= n <= 8`.
fn spread_oracle(a: &MonomialIdeal) -> usize {
    let counts: Vec<i64> = (4..=8).map(|n| a.power(n).unwrap().num_generators() as i64).collect();
    let mut diff = counts;
    let mut k = 0;
    while diff.iter().any(|&x| x != 0) {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        k += 1;
    }
    k
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let r = poly(&["x", "y"]);
    let mut literal_rank_mismatches = 0;
    for _ in 0..20 {
        // a staircase with exactly k minimal generators
        let k = rng.gen_range(1..=4);
        let mut xs = rand::seq::index::sample(&mut rng, 7, k).into_vec();
        let mut ys = rand::seq::index::sample(&mut rng, 7, k).into_vec();
        xs.sort_unstable();
        ys.sort_unstable_by(|a, b| b.cmp(a));
        let gens: Vec<Vec<i64>> = xs
            .iter()
            .zip(&ys)
            .map(|(&x, &y)| vec![x as i64 + 1, y as i64])
            .collect();
        let a = MonomialIdeal::new(r.clone(), gens).unwrap();
        let spread = a.analytic_spread().map_err(|e| e.to_string())?;
        let oracle = spread_oracle(&a);
        ensure(spread == oracle, format!("{a}: spread {spread}, oracle {oracle}"))?;
        if a.fiber_cone_rank() != oracle {
            literal_rank_mismatches += 1;
        }
    }
    Ok(format!(
        "20 ideals agree with the growth oracle; all-generator rank differs on {literal_rank_mismatches}"
    ))
}

fn run_prop<S: Strategy>(
    name: &str,
    strategy: S,
    body: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 200,
        rng_seed: RngSeed::Fixed(0x6163_6365),
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, body).map_err(|e| format!("{name}: {e}"))
}

fn criterion_8() -> Outcome {
    use props::*;
    let dims = |max_exp: i64, max_gens: usize| (1usize..=3).prop_flat_map(move |d| (Just(d), gens(d, max_exp, max_gens)));
    let dims2 = |max_exp: i64, max_gens: usize| {
        (1usize..=3).prop_flat_map(move |d| (Just(d), gens(d, max_exp, max_gens), gens(d, max_exp, max_gens)))
    };
    run_prop("H/V round trip", dims(12, 6), |(d, g)| hv_round_trip(d, &g))?;
    run_prop("support additivity", (dims2(8, 4), positive_rational(12, 6)), |((d, g, h), t)| {
        support_additivity(d, &g, &h, &t)
    })?;
    run_prop(
        "Frobenius adjunction",
        (dims2(12, 4), prop::sample::select(vec![2u64, 3]), 1u32..=2),
        |((d, i, j), p, e)| frobenius_adjunction(d, &i, &j, p, e),
    )?;
    run_prop(
        "chain ascent",
        (
            (1usize..=3).prop_flat_map(|d| (Just(d), gens(d, 6, 3))),
            prop::sample::select(vec![(1i64, 2i64), (2, 3), (1, 1), (3, 2)]),
            prop::sample::select(vec![2u64, 3, 5, 7]),
        ),
        |((d, g), (num, den), p)| {
            if den % p as i64 == 0 {
                return Ok(());
            }
            chain_ascent(d, &g, &rat(num, den), p)
        },
    )?;
    run_prop(
        "divisibility monotonicity",
        ((2usize..=3).prop_flat_map(|d| (Just(d), squarefree(d))), positive_rational(6, 4), 1u64..=2, 2u64..=3),
        |((d, g), t, k, l)| divisibility_monotone(d, &g, &t, k, l),
    )?;
    run_prop(
        "graded-family law",
        ((1usize..=3).prop_flat_map(|d| (Just(d), squarefree(d))), 1i64..=4, 1i64..=4),
        |((d, g), k, l)| graded_law(d, &g, k, l),
    )?;
    Ok("6 properties x 200 seeded cases".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden example", criterion_1, Duration::from_secs(1)),
        ("test ideal equals multiplier ideal", criterion_2, Duration::from_secs(30)),
        ("summation formula", criterion_3, Duration::from_secs(30)),
        ("subadditivity", criterion_4, Duration::from_secs(30)),
        ("Skoda", criterion_5, Duration::from_secs(10)),
        ("symbolic growth", criterion_6, Duration::from_secs(20)),
        ("analytic spread oracle", criterion_7, Duration::from_secs(20)),
        ("property suites", criterion_8, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (verdict, detail) = match &outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("{d}; over budget {budget:?}")),
            Err(e) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {verdict} {name} ({:.2}s of {}s): {detail}",
            i + 1,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} of 8 criteria pass", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
