//! Seeded instance generation.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::AmbientRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    General,
    /// Generators are products of distinct variables.
    Squarefree,
    /// Every variable has a pure power among the generators.
    MPrimary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub seed: u64,
    /// `poly` or a ring declaration such as `A2n n=2`.
    pub ring: String,
    pub vars: usize,
    pub max_generators: usize,
    pub max_exponent: i64,
    pub max_denominator: i64,
    pub kind: InstanceKind,
}

impl InstanceSpec {
    pub fn new(seed: u64) -> Self {
        InstanceSpec {
            seed,
            ring: "poly".into(),
            vars: 2,
            max_generators: 4,
            max_exponent: 6,
            max_denominator: 6,
            kind: InstanceKind::General,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidSpec(m.to_string()));
        if !(1..=3).contains(&self.vars) {
            return bad("vars must lie in 1..=3");
        }
        if !(1..=6).contains(&self.max_generators) {
            return bad("max_generators must lie in 1..=6");
        }
        if !(1..=8).contains(&self.max_exponent) {
            return bad("max_exponent must lie in 1..=8");
        }
        if !(1..=12).contains(&self.max_denominator) {
            return bad("max_denominator must lie in 1..=12");
        }
        Ok(())
    }

    fn build_ring(&self) -> Result<Arc<AmbientRing>> {
        let ring = if self.ring.trim() == "poly" {
            let names = ["x", "y", "z"];
            AmbientRing::polynomial(&names[..self.vars])?
        } else {
            AmbientRing::parse(&self.ring).map_err(|e| Error::InvalidSpec(e.to_string()))?
        };
        if self.kind == InstanceKind::Squarefree && !ring.is_polynomial() {
            return Err(Error::InvalidSpec("squarefree instances need a polynomial ring".into()));
        }
        Ok(Arc::new(ring))
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub ring: Arc<AmbientRing>,
    pub ideals: Vec<MonomialIdeal>,
    pub exponents: Vec<Rational>,
}

/// Mixes a base seed with an index into an independent seed.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    fn splitmix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    splitmix(base ^ splitmix(index))
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &Arc<AmbientRing>, spec: &InstanceSpec) -> Result<MonomialIdeal> {
    let d = ring.dim();
    let k = rng.gen_range(1..=spec.max_generators);
    let mut gens = Vec::with_capacity(k + d);
    match spec.kind {
        InstanceKind::Squarefree => {
            for _ in 0..k {
                let mask = rng.gen_range(1u32..(1 << d));
                gens.push((0..d).map(|i| i64::from(mask >> i & 1)).collect());
            }
        }
        InstanceKind::General | InstanceKind::MPrimary if ring.is_polynomial() => {
            if spec.kind == InstanceKind::MPrimary {
                for i in 0..d {
                    let mut g = vec![0; d];
                    g[i] = rng.gen_range(1..=spec.max_exponent);
                    gens.push(g);
                }
            }
            let target = if spec.kind == InstanceKind::MPrimary { k.max(d) } else { k };
            while gens.len() < target {
                let g: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=spec.max_exponent)).collect();
                if g.iter().any(|&x| x > 0) {
                    gens.push(g);
                }
            }
        }
        _ => {
            // presentation monomials x^i y^j z^k
            let names = ring.names().to_vec();
            let exps: Vec<Vec<i64>> = names.iter().filter_map(|n| ring.variable_exponent(n)).collect();
            if spec.kind == InstanceKind::MPrimary {
                let zk = rng.gen_range(1..=spec.max_exponent);
                gens.push(exps[0].clone());
                gens.push(exps[1].clone());
                gens.push(exps[2].iter().map(|x| x * zk).collect());
            }
            while gens.len() < k {
                let powers = [rng.gen_range(0..=1i64), rng.gen_range(0..=1i64), rng.gen_range(0..=spec.max_exponent)];
                if powers.iter().all(|&p| p == 0) {
                    continue;
                }
                let mut g = vec![0; d];
                for (p, e) in powers.iter().zip(&exps) {
                    for (gi, ei) in g.iter_mut().zip(e) {
                        *gi += p * ei;
                    }
                }
                gens.push(g);
            }
        }
    }
    MonomialIdeal::new(ring.clone(), gens)
}

fn random_exponent(rng: &mut ChaCha8Rng, spec: &InstanceSpec) -> Rational {
    let den = rng.gen_range(1..=spec.max_denominator);
    let num = rng.gen_range(1..=2 * den);
    rat(num, den)
}

/// Two ideals and two exponents, fully determined by the instance spec.
pub fn generate_instance(spec: &InstanceSpec) -> Result<Instance> {
    spec.validate()?;
    let ring = spec.build_ring()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let a = random_ideal(&mut rng, &ring, spec)?;
    let b = random_ideal(&mut rng, &ring, spec)?;
    let t = random_exponent(&mut rng, spec);
    let s = random_exponent(&mut rng, spec);
    Ok(Instance {
        ring,
        ideals: vec![a, b],
        exponents: vec![t, s],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let spec = InstanceSpec::new(42);
        let a = generate_instance(&spec).unwrap();
        let b = generate_instance(&spec).unwrap();
        assert_eq!(a.ideals, b.ideals);
        assert_eq!(a.exponents, b.exponents);
    }

    #[test]
    fn bounds_hold() {
        for seed in 0..1000 {
            let mut spec = InstanceSpec::new(seed);
            spec.vars = 1 + (seed % 3) as usize;
            spec.max_generators = 6;
            spec.max_exponent = 8;
            spec.max_denominator = 12;
            spec.kind = [InstanceKind::General, InstanceKind::Squarefree, InstanceKind::MPrimary][(seed % 3) as usize];
            let inst = generate_instance(&spec).unwrap();
            for (a, t) in inst.ideals.iter().zip(&inst.exponents) {
                assert!(a.num_generators() <= 6);
                assert!(a.generators().iter().all(|g| g.iter().all(|&x| (0..=8).contains(&x))));
                assert!(*t.denom() <= 12.into() && *t > rat(0, 1));
                if spec.kind == InstanceKind::Squarefree {
                    assert!(a.is_squarefree());
                }
                if spec.kind == InstanceKind::MPrimary {
                    for i in 0..spec.vars {
                        assert!(a.generators().iter().any(|g| g.iter().enumerate().all(|(j, &x)| (j == i) == (x > 0))));
                    }
                }
            }
        }
    }

    #[test]
    fn antichain_after_minimalization() {
        for seed in 0..200 {
            let inst = generate_instance(&InstanceSpec::new(seed)).unwrap();
            for a in &inst.ideals {
                let g = a.generators();
                for (i, u) in g.iter().enumerate() {
                    for (j, v) in g.iter().enumerate() {
                        assert!(i == j || !u.divides(v));
                    }
                }
            }
        }
    }

    #[test]
    fn toric_instances() {
        let mut spec = InstanceSpec::new(7);
        spec.ring = "A2n n=3".into();
        let inst = generate_instance(&spec).unwrap();
        for a in &inst.ideals {
            assert!(a.generators().iter().all(|g| inst.ring.in_semigroup(g)));
        }
        spec.kind = InstanceKind::Squarefree;
        assert!(generate_instance(&spec).is_err());
        spec.vars = 4;
        assert!(matches!(generate_instance(&spec), Err(Error::InvalidSpec(_))));
    }
}
