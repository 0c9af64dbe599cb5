//! Frobenius bracket powers and roots.

use num_bigint::BigInt;

use super::MonomialIdeal;
use crate::arith::{checked_pow, is_prime};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusLevel {
    p: u64,
    e: u32,
    q: BigInt,
}

impl FrobeniusLevel {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(FrobeniusLevel {
            p,
            e,
            q: BigInt::from(p).pow(e),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `q` as a machine integer, when it fits.
    pub fn q_i64(&self) -> Result<i64> {
        let q = checked_pow(self.p, self.e)?;
        i64::try_from(q).map_err(|_| Error::Overflow)
    }
}

impl MonomialIdeal {
    /// `I^{[q]}`, generated by the `q`-th powers of the generators.
    pub fn bracket_power(&self, level: &FrobeniusLevel) -> Result<Self> {
        let q = level.q_i64()?;
        let gens = self
            .raw()
            .map(|g| {
                g.iter()
                    .map(|x| x.checked_mul(q).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_valid(self.ring.clone(), gens))
    }

    /// `I^{[1/q]}`, the smallest ideal whose bracket power contains `I`:
    /// generated by the componentwise floors `v / q`.
    pub fn bracket_root(&self, level: &FrobeniusLevel) -> Result<Self> {
        if !self.ring.is_polynomial() {
            return Err(Error::NotPolynomialAmbient);
        }
        let q = level.q_i64()?;
        let gens = self.raw().map(|g| g.iter().map(|x| x.div_euclid(q)).collect()).collect();
        Ok(Self::from_valid(self.ring.clone(), gens))
    }
}
