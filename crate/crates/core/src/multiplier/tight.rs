//! Finite-level `a^t`-tight closure: search for a monomial `c` with
//! `c z^q a^{ceil(t q)} inside I^{[q]}` for every `q = p^e` up to a bound.

use num_traits::Signed;

use crate::arith::{ceil_i64, int, Rational};
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, FrobeniusLevel, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TightClosureVerdict {
    /// `c` works at every checked level.
    Member { c: ExponentVector },
    /// No `c` within the degree bound works at every level up to `q_max`.
    NonMemberUpTo { q_max: u64 },
}

const GENERATOR_BUDGET: usize = 200_000;

/// Monomials of total degree `deg` in `d` variables.
fn monomials_of_degree(d: usize, deg: i64) -> Vec<Vec<i64>> {
    if d == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials_of_degree(d - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn tight_closure_membership(
    z: &[i64],
    i: &MonomialIdeal,
    a: &MonomialIdeal,
    t: &Rational,
    p: u64,
    e_max: u32,
    degree_bound: i64,
) -> Result<TightClosureVerdict> {
    if !i.ring().is_polynomial() {
        return Err(Error::NotPolynomialAmbient);
    }
    if **i.ring() != **a.ring() {
        return Err(Error::AmbientMismatch);
    }
    if !t.is_positive() {
        return Err(Error::NonpositiveExponent);
    }
    if e_max == 0 || e_max > 8 {
        return Err(Error::InvalidParameter(format!("e_max must lie in 1..=8, got {e_max}")));
    }
    if i.member(z)? {
        return Ok(TightClosureVerdict::Member {
            c: ExponentVector(vec![0; i.dim()]),
        });
    }
    // Per level: the ideal `z^q a^N` and the target `I^{[q]}`.
    let mut levels = Vec::new();
    for e in 1..=e_max {
        let level = FrobeniusLevel::new(p, e)?;
        let q = level.q_i64()?;
        let n = ceil_i64(&(t * int(q)))?;
        let zq: Vec<i64> = z.iter().map(|x| x * q).collect();
        let an = a.power_within(n, GENERATOR_BUDGET)?;
        levels.push((an.shift(&zq)?, i.bracket_power(&level)?));
    }
    let q_max = crate::arith::checked_pow(p, e_max)?;
    for deg in 0..=degree_bound {
        for c in monomials_of_degree(i.dim(), deg) {
            let ok = levels.iter().all(|(lhs, target)| {
                lhs.shift(&c)
                    .and_then(|shifted| target.contains(&shifted))
                    .unwrap_or(false)
            });
            if ok {
                return Ok(TightClosureVerdict::Member { c: ExponentVector(c) });
            }
        }
    }
    Ok(TightClosureVerdict::NonMemberUpTo { q_max })
}
