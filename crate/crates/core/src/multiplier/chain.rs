//! Test ideals in characteristic `p` as the stabilization of
//! `I_e = (a^{ceil(t p^e)})^{[1/p^e]}`.
//!
//! The chain ascends and is bounded above by `{w : w + 1 in Int(t Newt(a))}`,
//! since the exponents of `a^N` lie in `N Newt(a)` and `N / q >= t`. A plateau
//! `I_e = I_{e+1}` alone does not certify the limit (`a = (x)`, `t = 2/3`,
//! `p = 2` gives `(x), (x), (1)`), so the chain stops once it meets the bound.
//!
//! `x^w` lies in `I_e` exactly when `x^{q(w+1)-1}` lies in `a^N` with
//! `N = ceil(t q)`. Membership in `a^N` is an integer program: the largest
//! number of generators whose product divides `x^u`. It is solved by depth
//! first search over generator multiplicities, pruned by the linear relaxation
//! read off the Newton polyhedra of the remaining generators.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Signed;

use super::{multiplier_ideal, newton};
use crate::arith::{ceil_i64, floor_i64, int, to_i64, Rational};
use crate::error::{Error, Result};
use crate::geometry::Facet;
use crate::ideal::{scan_ideal_with, FrobeniusLevel, MonomialIdeal};

pub const E_MAX: u32 = 12;

#[derive(Clone, Debug)]
pub struct ChainResult {
    pub ideal: MonomialIdeal,
    pub stabilized_at_e: u32,
    pub levels: Vec<MonomialIdeal>,
}

/// Decides `x^u in a^n` for a fixed generator list.
pub(crate) struct PowerMembership {
    gens: Vec<Vec<i64>>,
    /// Facets with positive offset of the Newton polyhedron of `gens[j..]`.
    bounds: Vec<Vec<Facet>>,
}

impl PowerMembership {
    pub(crate) fn new(a: &MonomialIdeal) -> Result<Self> {
        // Larger generators first keeps the search shallow.
        let mut gens: Vec<Vec<i64>> = a.generators().iter().map(|g| g.0.clone()).collect();
        gens.sort_by_key(|g| std::cmp::Reverse(g.iter().sum::<i64>()));
        let mut bounds = Vec::with_capacity(gens.len());
        for j in 0..gens.len() {
            let sub = MonomialIdeal::new(a.ring().clone(), gens[j..].to_vec())?;
            let facets = newton(&sub)?
                .facets()
                .iter()
                .filter(|f| f.offset.is_positive())
                .cloned()
                .collect();
            bounds.push(facets);
        }
        Ok(PowerMembership { gens, bounds })
    }

    fn relaxation(&self, j: usize, u: &[i64]) -> i64 {
        self.bounds[j]
            .iter()
            .map(|f| {
                let num = Rational::from_integer(f.normal.iter().zip(u).map(|(a, b)| a * b).sum::<i64>().into());
                floor_i64(&(num / &f.offset)).unwrap_or(i64::MAX)
            })
            .min()
            .unwrap_or(i64::MAX)
    }

    pub(crate) fn contains(&self, u: &[i64], n: i64) -> bool {
        if n <= 0 {
            return u.iter().all(|&x| x >= 0);
        }
        let mut failed: HashMap<(usize, Vec<i64>), i64> = HashMap::new();
        self.search(0, u.to_vec(), n, &mut failed)
    }

    fn search(&self, j: usize, u: Vec<i64>, need: i64, failed: &mut HashMap<(usize, Vec<i64>), i64>) -> bool {
        if need <= 0 {
            return true;
        }
        if j == self.gens.len() || self.relaxation(j, &u) < need {
            return false;
        }
        let key = (j, u);
        if let Some(&f) = failed.get(&key) {
            if f <= need {
                return false;
            }
        }
        let u = key.1;
        let g = &self.gens[j];
        let most = g
            .iter()
            .zip(&u)
            .filter(|(gi, _)| **gi > 0)
            .map(|(gi, ui)| ui.div_euclid(*gi))
            .min()
            .unwrap_or(need)
            .min(need);
        for c in (0..=most).rev() {
            let rest: Vec<i64> = u.iter().zip(g).map(|(a, b)| a - c * b).collect();
            if self.search(j + 1, rest, need - c, failed) {
                return true;
            }
        }
        let entry = failed.entry((j, u)).or_insert(need);
        *entry = (*entry).min(need);
        false
    }
}

/// `(a^{ceil(t q)})^{[1/q]}` for `q = p^e`.
pub(crate) fn chain_level(
    a: &MonomialIdeal,
    membership: &PowerMembership,
    t: &Rational,
    level: &FrobeniusLevel,
) -> Result<MonomialIdeal> {
    let q = level.q_i64()?;
    let n = ceil_i64(&(t * int(q)))?;
    let maxes = a.max_exponents();
    let bounds: Vec<i64> = maxes
        .iter()
        .map(|m| {
            m.checked_mul(n)
                .map(|x| x / q)
                .ok_or(Error::Overflow)
        })
        .collect::<Result<_>>()?;
    scan_ideal_with(
        a.ring(),
        &bounds,
        |w| {
            let u: Vec<i64> = w.iter().map(|x| q * (x + 1) - 1).collect();
            membership.contains(&u, n)
        },
        false,
    )
}

/// Ascending chain of Frobenius roots, stopped once a level meets the upper
/// bound; one further level is computed and must agree.
pub fn test_ideal_chain(a: &MonomialIdeal, t: &Rational, p: u64) -> Result<ChainResult> {
    if !a.ring().is_polynomial() {
        return Err(Error::NotPolynomialAmbient);
    }
    if !t.is_positive() {
        return Err(Error::NonpositiveExponent);
    }
    let pb = num_bigint::BigInt::from(p);
    if t.denom().is_multiple_of(&pb) {
        return Err(Error::DenominatorDivisibleByP(p));
    }
    let _ = to_i64(t.denom())?;
    let bound = multiplier_ideal(a, t)?;
    let membership = PowerMembership::new(a)?;
    let mut levels: Vec<MonomialIdeal> = Vec::new();
    let mut reached: Option<u32> = None;
    for e in 0..=E_MAX {
        let level = FrobeniusLevel::new(p, e)?;
        let ideal = chain_level(a, &membership, t, &level)?;
        if let Some(prev) = levels.last() {
            if !ideal.contains(prev)? {
                return Err(Error::ChainNotAscending(e));
            }
        }
        if !bound.contains(&ideal)? {
            return Err(Error::ChainNotAscending(e));
        }
        levels.push(ideal.clone());
        if let Some(at) = reached {
            return Ok(ChainResult {
                ideal,
                stabilized_at_e: at,
                levels,
            });
        }
        if ideal == bound {
            reached = Some(e);
        }
    }
    match reached {
        Some(at) => Ok(ChainResult {
            ideal: bound,
            stabilized_at_e: at,
            levels,
        }),
        None => Err(Error::NonStabilized { e_max: E_MAX }),
    }
}
