//! Graded families of monomial ideals and their asymptotic multiplier ideals.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::multiplier::{multiplier_ideal, summation_rhs};
use crate::ring::AmbientRing;

#[derive(Clone, Debug)]
pub enum FamilyRule {
    Powers(MonomialIdeal),
    Symbolic(MonomialIdeal),
    Sum(Arc<GradedFamily>, Arc<GradedFamily>),
}

/// Largest number of graded-law pairs checked per new member.
const LAW_CHECKS: usize = 4;

#[derive(Debug)]
pub struct GradedFamily {
    ring: Arc<AmbientRing>,
    rule: FamilyRule,
    memo: Mutex<BTreeMap<u64, MonomialIdeal>>,
}

impl GradedFamily {
    fn build(ring: Arc<AmbientRing>, rule: FamilyRule) -> Result<Arc<Self>> {
        let fam = Arc::new(GradedFamily {
            ring,
            rule,
            memo: Mutex::new(BTreeMap::new()),
        });
        fam.member(1)?;
        Ok(fam)
    }

    pub fn powers(a: &MonomialIdeal) -> Result<Arc<Self>> {
        Self::build(a.ring().clone(), FamilyRule::Powers(a.clone()))
    }

    pub fn symbolic(a: &MonomialIdeal) -> Result<Arc<Self>> {
        if !a.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Self::build(a.ring().clone(), FamilyRule::Symbolic(a.clone()))
    }

    pub fn sum(f: &Arc<Self>, g: &Arc<Self>) -> Result<Arc<Self>> {
        if f.ring != g.ring {
            return Err(Error::AmbientMismatch);
        }
        Self::build(f.ring.clone(), FamilyRule::Sum(f.clone(), g.clone()))
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn rule(&self) -> &FamilyRule {
        &self.rule
    }

    fn compute(&self, m: u64) -> Result<MonomialIdeal> {
        let n = i64::try_from(m).map_err(|_| Error::Overflow)?;
        match &self.rule {
            FamilyRule::Powers(a) => a.power(n),
            FamilyRule::Symbolic(a) => a.symbolic_power(n),
            FamilyRule::Sum(f, g) => {
                let mut acc: Option<MonomialIdeal> = None;
                for k in 0..=m {
                    let term = f.member(k)?.product(&g.member(m - k)?)?;
                    acc = Some(match acc {
                        None => term,
                        Some(s) => s.sum(&term)?,
                    });
                }
                Ok(acc.expect("at least one term"))
            }
        }
    }

    /// `a_m`; `a_0` is the unit ideal.
    pub fn member(&self, m: u64) -> Result<MonomialIdeal> {
        if m == 0 {
            return Ok(MonomialIdeal::unit(self.ring.clone()));
        }
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&m) {
            return Ok(hit.clone());
        }
        let value = self.compute(m)?;
        // spot-check a_k a_{m-k} inside a_m against members already known
        let known: Vec<(u64, MonomialIdeal)> = {
            let memo = self.memo.lock().expect("memo lock");
            memo.range(1..m)
                .filter_map(|(k, v)| memo.get(&(m - k)).map(|w| (*k, v.product(w))))
                .filter(|(k, _)| *k <= m - k)
                .take(LAW_CHECKS)
                .map(|(k, p)| p.map(|p| (k, p)))
                .collect::<Result<_>>()?
        };
        for (k, prod) in known {
            if !value.contains(&prod)? {
                return Err(Error::GradedLawViolated(k, m - k));
            }
        }
        let mut memo = self.memo.lock().expect("memo lock");
        Ok(memo.entry(m).or_insert(value).clone())
    }

    /// Indices currently memoized.
    pub fn memoized(&self) -> Vec<u64> {
        self.memo.lock().expect("memo lock").keys().copied().collect()
    }
}

#[derive(Clone, Debug)]
pub struct StabilizationCertificate {
    pub ideal: MonomialIdeal,
    pub witness_m: u64,
    pub checked_multiples: Vec<u64>,
}

pub const DEFAULT_SCHEDULE: [u64; 5] = [1, 2, 6, 24, 120];

fn check_schedule(schedule: &[u64]) -> Result<()> {
    if schedule.is_empty() || schedule[0] == 0 {
        return Err(Error::NotDivisibilityChain);
    }
    if schedule.windows(2).any(|w| w[1] <= w[0] || w[1] % w[0] != 0) {
        return Err(Error::NotDivisibilityChain);
    }
    Ok(())
}

/// `J(a_m^{t/m})`.
pub fn level_multiplier(f: &GradedFamily, t: &Rational, m: u64) -> Result<MonomialIdeal> {
    let mm = i64::try_from(m).map_err(|_| Error::Overflow)?;
    multiplier_ideal(&f.member(m)?, &(t / int(mm)))
}

/// Walks the schedule until two consecutive levels agree.
pub fn asymptotic_multiplier(
    f: &GradedFamily,
    t: &Rational,
    schedule: &[u64],
) -> Result<StabilizationCertificate> {
    check_schedule(schedule)?;
    let mut prev: Option<(u64, MonomialIdeal)> = None;
    for &m in schedule {
        let cur = level_multiplier(f, t, m)?;
        if let Some((pm, pj)) = &prev {
            if !cur.contains(pj)? {
                return Err(Error::DivisibilityMonotonicity(m));
            }
            if *pj == cur {
                return Ok(StabilizationCertificate {
                    ideal: cur,
                    witness_m: *pm,
                    checked_multiples: vec![*pm, m],
                });
            }
        }
        prev = Some((m, cur));
    }
    Err(Error::NoStabilization)
}

/// Both sides of the asymptotic summation formula at one level `m`:
/// `J((f+g)_m^{t/m})` and `sum J(f_m^{lambda/m} g_m^{mu/m})`.
#[derive(Clone, Debug)]
pub struct SummationLevel {
    pub m: u64,
    pub lhs: MonomialIdeal,
    pub rhs: MonomialIdeal,
}

#[derive(Clone, Debug)]
pub struct AsymptoticSummation {
    pub levels: Vec<SummationLevel>,
    /// Index into `levels` where both sides stopped changing.
    pub stable: usize,
}

impl AsymptoticSummation {
    pub fn stable_level(&self) -> &SummationLevel {
        &self.levels[self.stable]
    }
}

pub fn asymptotic_summation(
    f: &Arc<GradedFamily>,
    g: &Arc<GradedFamily>,
    t: &Rational,
    schedule: &[u64],
) -> Result<AsymptoticSummation> {
    check_schedule(schedule)?;
    let h = GradedFamily::sum(f, g)?;
    let mut levels: Vec<SummationLevel> = Vec::new();
    for &m in schedule {
        let mm = i64::try_from(m).map_err(|_| Error::Overflow)?;
        let s = t / int(mm);
        let lhs = multiplier_ideal(&h.member(m)?, &s)?;
        let (rhs, _) = summation_rhs(&f.member(m)?, &g.member(m)?, &s)?;
        if let Some(prev) = levels.last() {
            if !lhs.contains(&prev.lhs)? || !rhs.contains(&prev.rhs)? {
                return Err(Error::DivisibilityMonotonicity(m));
            }
            if prev.lhs == lhs && prev.rhs == rhs {
                let stable = levels.len() - 1;
                levels.push(SummationLevel { m, lhs, rhs });
                return Ok(AsymptoticSummation { levels, stable });
            }
        }
        levels.push(SummationLevel { m, lhs, rhs });
    }
    Err(Error::NoStabilization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn poly(names: &[&str]) -> Arc<AmbientRing> {
        Arc::new(AmbientRing::polynomial(names).unwrap())
    }

    fn ideal(r: &Arc<AmbientRing>, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r.clone(), s).unwrap()
    }

    #[test]
    fn members() {
        let r = poly(&["x", "y", "z"]);
        let tri = GradedFamily::symbolic(&ideal(&r, "(x*y, y*z, z*x)")).unwrap();
        assert!(tri.member(2).unwrap().member(&[1, 1, 1]).unwrap());
        assert!(tri.member(0).unwrap().is_unit());
        let a = ideal(&r, "(x^2, y)");
        let b = ideal(&r, "(z^3, x*y)");
        let s = GradedFamily::sum(&GradedFamily::powers(&a).unwrap(), &GradedFamily::powers(&b).unwrap()).unwrap();
        for m in 0..5 {
            assert_eq!(s.member(m).unwrap(), a.sum(&b).unwrap().power(m as i64).unwrap());
        }
        assert_eq!(s.memoized(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn powers_stabilize_immediately() {
        let r = poly(&["x", "y"]);
        let a = ideal(&r, "(x^2, y^3)");
        let f = GradedFamily::powers(&a).unwrap();
        let cert = asymptotic_multiplier(&f, &rat(3, 2), &DEFAULT_SCHEDULE).unwrap();
        assert_eq!(cert.witness_m, 1);
        assert_eq!(cert.ideal, multiplier_ideal(&a, &rat(3, 2)).unwrap());
    }

    #[test]
    fn triangle_symbolic_family() {
        let r = poly(&["x", "y", "z"]);
        let a = ideal(&r, "(x*y, y*z, z*x)");
        let f = GradedFamily::symbolic(&a).unwrap();
        let cert = asymptotic_multiplier(&f, &int(2), &[1, 2, 6]).unwrap();
        assert_eq!(cert.checked_multiples, vec![1, 2]);
        assert!(cert.ideal.contains(&multiplier_ideal(&a.symbolic_power(2).unwrap(), &int(1)).unwrap()).unwrap());
    }

    #[test]
    fn unit_summand_family() {
        let r = poly(&["x", "y"]);
        let a = ideal(&r, "(x^2, y^3)");
        let f = GradedFamily::powers(&a).unwrap();
        let u = GradedFamily::powers(&MonomialIdeal::unit(r.clone())).unwrap();
        let s = GradedFamily::sum(&f, &u).unwrap();
        let cert = asymptotic_multiplier(&s, &int(1), &DEFAULT_SCHEDULE).unwrap();
        assert!(cert.ideal.is_unit());
    }

    #[test]
    fn bad_schedules() {
        let r = poly(&["x"]);
        let f = GradedFamily::powers(&ideal(&r, "(x)")).unwrap();
        assert_eq!(asymptotic_multiplier(&f, &int(1), &[1, 3, 4]).unwrap_err(), Error::NotDivisibilityChain);
        assert_eq!(asymptotic_multiplier(&f, &int(1), &[]).unwrap_err(), Error::NotDivisibilityChain);
        assert_eq!(asymptotic_multiplier(&f, &int(1), &[2]).unwrap_err(), Error::NoStabilization);
    }

    #[test]
    fn disjoint_symbolic_summation() {
        let r = poly(&["x", "y", "z"]);
        let f = GradedFamily::symbolic(&ideal(&r, "(x*y)")).unwrap();
        let g = GradedFamily::symbolic(&ideal(&r, "(z)")).unwrap();
        let res = asymptotic_summation(&f, &g, &int(1), &DEFAULT_SCHEDULE).unwrap();
        let lvl = res.stable_level();
        assert_eq!(lvl.lhs, lvl.rhs);
    }
}
