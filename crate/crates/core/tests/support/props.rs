//! Strategies and property bodies shared by the property suite and the
//! acceptance run.

#![allow(dead_code)]

use std::sync::Arc;

use mideal::arith::int;
use mideal::asymptotic::{level_multiplier, GradedFamily};
use mideal::multiplier::{multiplier_ideal, test_ideal_chain};
use mideal::{rat, AmbientRing, FrobeniusLevel, MembershipPencil, MonomialIdeal, NewtonPolyhedron, Rational, RationalVector};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Gens = Vec<Vec<i64>>;

fn names(d: usize) -> &'static [&'static str] {
    &["x", "y", "z"][..d]
}

pub fn ring(d: usize) -> Arc<AmbientRing> {
    Arc::new(AmbientRing::polynomial(names(d)).unwrap())
}

pub fn gens(d: usize, max_exp: i64, max_gens: usize) -> impl Strategy<Value = Gens> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, d), 1..=max_gens)
        .prop_filter("nonconstant", |g| g.iter().all(|v| v.iter().any(|&x| x > 0)))
}

pub fn squarefree(d: usize) -> impl Strategy<Value = Gens> {
    prop::collection::vec(1u32..(1 << d), 1..=4)
        .prop_map(move |ms| ms.into_iter().map(|m| (0..d).map(|i| i64::from(m >> i & 1)).collect()).collect())
}

pub fn positive_rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_num, 1..=max_den).prop_map(|(n, d)| rat(n, d))
}

fn sorted(mut v: Vec<RationalVector>) -> Vec<RationalVector> {
    v.sort();
    v
}

fn ideal(d: usize, g: &Gens) -> MonomialIdeal {
    MonomialIdeal::new(ring(d), g.clone()).unwrap()
}

fn orth(d: usize) -> Vec<Vec<i64>> {
    NewtonPolyhedron::orthant_rays(d)
}

/// V -> H -> V reproduces the vertex set and rays.
pub fn hv_round_trip(d: usize, g: &Gens) -> Result<(), TestCaseError> {
    let p = NewtonPolyhedron::new(g, &orth(d)).unwrap();
    let back = NewtonPolyhedron::vertices_from_facets(d, p.facets());
    prop_assert_eq!(sorted(back), sorted(p.vertices().to_vec()));
    let mut rays = NewtonPolyhedron::rays_from_facets(d, p.facets());
    rays.sort();
    let mut expected = p.rays().to_vec();
    expected.sort();
    prop_assert_eq!(rays, expected);
    let again = NewtonPolyhedron::from_points(p.vertices(), &orth(d)).unwrap();
    prop_assert_eq!(again.facets(), p.facets());
    Ok(())
}

/// Support values add under Minkowski sums and scale linearly.
pub fn support_additivity(d: usize, g: &Gens, h: &Gens, t: &Rational) -> Result<(), TestCaseError> {
    let p = NewtonPolyhedron::new(g, &orth(d)).unwrap();
    let q = NewtonPolyhedron::new(h, &orth(d)).unwrap();
    let s = p.minkowski_sum(&q).unwrap();
    let pt = p.scale(t).unwrap();
    for n in p.facets().iter().chain(q.facets()).map(|f| &f.normal) {
        let lhs = s.support_value(n).unwrap();
        prop_assert_eq!(lhs, p.support_value(n).unwrap() + q.support_value(n).unwrap());
        prop_assert_eq!(pt.support_value(n).unwrap(), t * p.support_value(n).unwrap());
    }
    Ok(())
}

/// Interiority survives moving along the interior of the recession cone.
pub fn interior_monotone(d: usize, g: &Gens, x: &[i64], e: &[i64]) -> Result<(), TestCaseError> {
    let p = NewtonPolyhedron::new(g, &orth(d)).unwrap();
    let xv = RationalVector::from_ints(x);
    if p.contains_interior(&xv).unwrap() {
        let moved: Vec<i64> = x.iter().zip(e).map(|(a, b)| a + b).collect();
        prop_assert!(p.contains_interior(&RationalVector::from_ints(&moved)).unwrap());
    }
    Ok(())
}

/// The feasibility interval agrees with direct Minkowski-sum membership on a
/// grid of step `t/360` and at its exact endpoints.
pub fn interval_vs_grid(d: usize, g: &Gens, h: &Gens, t: &Rational, x: &[i64]) -> Result<(), TestCaseError> {
    let p = NewtonPolyhedron::new(g, &orth(d)).unwrap();
    let q = NewtonPolyhedron::new(h, &orth(d)).unwrap();
    let pencil = MembershipPencil::new(&p, &q, t).unwrap();
    let xv = RationalVector::from_ints(x);
    let interval = pencil.interval(&xv).unwrap();
    let direct = |l: &Rational| -> bool {
        let mu = t - l;
        let slice = if *l == int(0) {
            q.scale(t).unwrap()
        } else if mu == int(0) {
            p.scale(t).unwrap()
        } else {
            p.scale(l).unwrap().minkowski_sum(&q.scale(&mu).unwrap()).unwrap()
        };
        slice.contains(&xv).unwrap()
    };
    for k in 0..=360 {
        let l = t * rat(k, 360);
        prop_assert_eq!(interval.contains(&l), direct(&l), "lambda = {}", l);
    }
    if let mideal::LambdaInterval::Closed(lo, hi) = &interval {
        prop_assert!(direct(lo) && direct(hi));
        let step = t * rat(1, 360);
        let below = lo - &step;
        let above = hi + &step;
        if below >= int(0) {
            prop_assert!(!direct(&below) || interval.contains(&below));
        }
        if above <= *t {
            prop_assert!(!direct(&above) || interval.contains(&above));
        }
    }
    Ok(())
}

/// `J^{[q]} ⊇ I` iff `J ⊇ I^{[1/q]}`.
pub fn frobenius_adjunction(d: usize, i: &Gens, j: &Gens, p: u64, e: u32) -> Result<(), TestCaseError> {
    let (i, j) = (ideal(d, i), ideal(d, j));
    let q = FrobeniusLevel::new(p, e).unwrap();
    let left = j.bracket_power(&q).unwrap().contains(&i).unwrap();
    let right = j.contains(&i.bracket_root(&q).unwrap()).unwrap();
    prop_assert_eq!(left, right);
    Ok(())
}

/// Levels ascend, the last two agree and the limit is the multiplier ideal.
pub fn chain_ascent(d: usize, g: &Gens, t: &Rational, p: u64) -> Result<(), TestCaseError> {
    let a = ideal(d, g);
    let res = test_ideal_chain(&a, t, p).unwrap();
    for w in res.levels.windows(2) {
        prop_assert!(w[1].contains(&w[0]).unwrap());
    }
    let n = res.levels.len();
    prop_assert!(n >= 2 && res.levels[n - 1] == res.levels[n - 2]);
    prop_assert_eq!(res.ideal, multiplier_ideal(&a, t).unwrap());
    Ok(())
}

/// `J(a_k^{t/k}) ⊆ J(a_{kl}^{t/kl})` for the symbolic family.
pub fn divisibility_monotone(d: usize, g: &Gens, t: &Rational, k: u64, l: u64) -> Result<(), TestCaseError> {
    let f = GradedFamily::symbolic(&ideal(d, g)).unwrap();
    let small = level_multiplier(&f, t, k).unwrap();
    let large = level_multiplier(&f, t, k * l).unwrap();
    prop_assert!(large.contains(&small).unwrap());
    Ok(())
}

/// `I^{(k)} I^{(l)} ⊆ I^{(k+l)}` and `I^n ⊆ I^{(n)}`.
pub fn graded_law(d: usize, g: &Gens, k: i64, l: i64) -> Result<(), TestCaseError> {
    let i = ideal(d, g);
    let prod = i.symbolic_power(k).unwrap().product(&i.symbolic_power(l).unwrap()).unwrap();
    prop_assert!(i.symbolic_power(k + l).unwrap().contains(&prod).unwrap());
    prop_assert!(i.symbolic_power(k).unwrap().contains(&i.power(k).unwrap()).unwrap());
    Ok(())
}

/// `v ∈ I : J` iff `v J ⊆ I`, and `I ∩ J` is the largest ideal in both.
pub fn colon_duality(d: usize, i: &Gens, j: &Gens, v: &[i64]) -> Result<(), TestCaseError> {
    let r = ring(d);
    let (i, j) = (ideal(d, i), ideal(d, j));
    let vj = MonomialIdeal::new(r, vec![v.to_vec()]).unwrap().product(&j).unwrap();
    prop_assert_eq!(i.colon(&j).unwrap().member(v).unwrap(), i.contains(&vj).unwrap());
    let both = i.intersect(&j).unwrap();
    prop_assert!(i.contains(&both).unwrap() && j.contains(&both).unwrap());
    prop_assert_eq!(both.member(v).unwrap(), i.member(v).unwrap() && j.member(v).unwrap());
    Ok(())
}

/// Larger exponents give smaller multiplier ideals.
pub fn monotone_in_t(d: usize, g: &Gens, t: &Rational, s: &Rational) -> Result<(), TestCaseError> {
    let a = ideal(d, g);
    let (lo, hi) = if t <= s { (t, s) } else { (s, t) };
    prop_assert!(multiplier_ideal(&a, lo).unwrap().contains(&multiplier_ideal(&a, hi).unwrap()).unwrap());
    Ok(())
}
