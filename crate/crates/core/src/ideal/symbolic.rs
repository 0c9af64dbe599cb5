//! Minimal primes, symbolic powers and analytic spread.

use std::sync::Arc;

use super::{minimalize, scan_ideal, MonomialIdeal};
use crate::error::{Error, Result};
use crate::geometry::linalg::rank_i64;
use crate::geometry::NewtonPolyhedron;
use crate::ring::AmbientRing;

/// A prime generated by a subset of the variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    pub vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn ideal(&self, ring: &Arc<AmbientRing>) -> Result<MonomialIdeal> {
        let d = ring.dim();
        let gens = self
            .vars
            .iter()
            .map(|&i| {
                let mut e = vec![0; d];
                e[i] = 1;
                e
            })
            .collect();
        MonomialIdeal::new(ring.clone(), gens)
    }
}

impl MonomialIdeal {
    fn require_squarefree(&self) -> Result<()> {
        if !self.ring.is_polynomial() {
            return Err(Error::NotPolynomialAmbient);
        }
        if !self.is_squarefree() || self.is_unit() {
            return Err(Error::NotSquarefree);
        }
        Ok(())
    }

    /// Minimal vertex covers of the generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        self.require_squarefree()?;
        let d = self.dim();
        if d > 20 {
            return Err(Error::SearchBudgetExceeded("too many variables".into()));
        }
        let supports: Vec<u32> = self
            .raw()
            .map(|g| g.iter().enumerate().filter(|(_, x)| **x > 0).map(|(i, _)| 1u32 << i).sum())
            .collect();
        let mut covers: Vec<u32> = (0u32..(1 << d))
            .filter(|s| supports.iter().all(|g| g & s != 0))
            .collect();
        covers.sort_by_key(|s| s.count_ones());
        let mut minimal: Vec<u32> = Vec::new();
        for c in covers {
            if !minimal.iter().any(|m| m & c == *m) {
                minimal.push(c);
            }
        }
        let mut primes: Vec<MonomialPrime> = minimal
            .into_iter()
            .map(|m| MonomialPrime {
                vars: (0..d).filter(|i| m & (1 << i) != 0).collect(),
            })
            .collect();
        primes.sort();
        Ok(primes)
    }

    /// `I^{(n)}`, the intersection of the `n`-th powers of the minimal primes.
    pub fn symbolic_power(&self, n: i64) -> Result<Self> {
        self.require_squarefree()?;
        if n < 0 {
            return Err(Error::NonpositivePower);
        }
        if n == 0 {
            return Ok(Self::unit(self.ring.clone()));
        }
        let primes = self.minimal_primes()?;
        // w lies in P^n iff the P-coordinates of w sum to at least n; each
        // coordinate of a minimal generator is at most n.
        let bounds = vec![n; self.dim()];
        scan_ideal(&self.ring, &bounds, |w| {
            primes.iter().all(|p| p.vars.iter().map(|&i| w[i]).sum::<i64>() >= n)
        })
    }

    /// Rank of the vectors `(v, 1)` over all generators `v`.
    pub fn fiber_cone_rank(&self) -> usize {
        let rows: Vec<Vec<i64>> = self
            .raw()
            .map(|g| g.iter().copied().chain(std::iter::once(1)).collect())
            .collect();
        rank_i64(&rows)
    }

    /// Analytic spread: one plus the largest dimension of a bounded face of
    /// the Newton polyhedron.
    pub fn analytic_spread(&self) -> Result<usize> {
        if !self.ring.is_polynomial() {
            return Err(Error::NotPolynomialAmbient);
        }
        let d = self.dim();
        let gens: Vec<Vec<i64>> = self.raw().cloned().collect();
        let newt = NewtonPolyhedron::new(&gens, &NewtonPolyhedron::orthant_rays(d))?;
        let verts: Vec<Vec<i64>> = newt
            .vertices()
            .iter()
            .map(|v| v.as_ints().expect("vertices of integral generators are integral"))
            .collect();
        let facets: Vec<(Vec<i64>, u64)> = newt
            .facets()
            .iter()
            .map(|f| {
                let support = f
                    .normal
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, _)| 1u64 << i)
                    .sum();
                (f.normal.clone(), support)
            })
            .filter(|(_, s)| *s != 0)
            .collect();
        let full: u64 = (1u64 << d) - 1;
        let mut best = 1;
        // A face is the set of vertices tight on a chosen family of facets;
        // it is bounded when the family's normals involve every coordinate.
        let tight: Vec<Vec<bool>> = facets
            .iter()
            .map(|(n, _)| {
                let f = newt.facets().iter().find(|f| &f.normal == n).expect("facet");
                verts.iter().map(|v| !f.strict_int(v)).collect()
            })
            .collect();
        let k = facets.len();
        if k > 20 {
            return Err(Error::SearchBudgetExceeded("too many facets".into()));
        }
        for mask in 1u32..(1 << k) {
            let cover: u64 = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| facets[i].1).fold(0, |a, b| a | b);
            if cover != full {
                continue;
            }
            let rows: Vec<Vec<i64>> = verts
                .iter()
                .enumerate()
                .filter(|(vi, _)| (0..k).filter(|i| mask & (1 << i) != 0).all(|i| tight[i][*vi]))
                .map(|(_, v)| v.iter().copied().chain(std::iter::once(1)).collect())
                .collect();
            if !rows.is_empty() {
                best = best.max(rank_i64(&rows));
            }
        }
        Ok(best)
    }

    /// Largest analytic spread of the localizations at the minimal primes.
    pub fn spread_bound_h(&self) -> Result<usize> {
        let mut h = 0;
        for p in self.minimal_primes()? {
            let names: Vec<&str> = p.vars.iter().map(|&i| self.ring.names()[i].as_str()).collect();
            let local = Arc::new(AmbientRing::polynomial(&names)?);
            let gens = minimalize(
                self.raw()
                    .map(|g| p.vars.iter().map(|&i| g[i]).collect())
                    .collect(),
            );
            let localized = MonomialIdeal::new(local, gens)?;
            h = h.max(localized.analytic_spread()?);
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(names: &[&str]) -> Arc<AmbientRing> {
        Arc::new(AmbientRing::polynomial(names).unwrap())
    }

    fn ideal(r: &Arc<AmbientRing>, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r.clone(), s).unwrap()
    }

    fn primes(r: &Arc<AmbientRing>, s: &str) -> Vec<Vec<usize>> {
        ideal(r, s).minimal_primes().unwrap().into_iter().map(|p| p.vars).collect()
    }

    #[test]
    fn minimal_primes_by_hand() {
        let r = poly(&["x", "y", "z"]);
        assert_eq!(primes(&r, "(x*y, y*z, z*x)"), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(primes(&r, "(x)"), vec![vec![0]]);
        assert_eq!(primes(&r, "(x*y)"), vec![vec![0], vec![1]]);
        assert_eq!(ideal(&r, "(x^2)").minimal_primes().unwrap_err(), Error::NotSquarefree);
    }

    #[test]
    fn triangle_symbolic_square() {
        let r = poly(&["x", "y", "z"]);
        let a = ideal(&r, "(x*y, y*z, z*x)");
        let s2 = a.symbolic_power(2).unwrap();
        assert!(s2.member(&[1, 1, 1]).unwrap());
        assert!(!a.power(2).unwrap().member(&[1, 1, 1]).unwrap());
        assert_eq!(a.symbolic_power(1).unwrap(), a);
        assert!(a.symbolic_power(0).unwrap().is_unit());
    }

    #[test]
    fn symbolic_power_matches_prime_intersection() {
        let r = poly(&["x", "y", "z"]);
        for s in ["(x*y, y*z, z*x)", "(x*y*z)", "(x, y*z)", "(x*y, z)"] {
            let a = ideal(&r, s);
            for n in 1..5 {
                let mut inter: Option<MonomialIdeal> = None;
                for p in a.minimal_primes().unwrap() {
                    let pn = p.ideal(&r).unwrap().power(n).unwrap();
                    inter = Some(match inter {
                        None => pn,
                        Some(i) => i.intersect(&pn).unwrap(),
                    });
                }
                assert_eq!(a.symbolic_power(n).unwrap(), inter.unwrap(), "{s} n={n}");
            }
        }
    }

    #[test]
    fn principal_symbolic_powers() {
        let r = poly(&["x", "y"]);
        let x = ideal(&r, "(x)");
        for n in 1..5 {
            assert_eq!(x.symbolic_power(n).unwrap(), x.power(n).unwrap());
        }
    }

    #[test]
    fn spreads() {
        let r = poly(&["x", "y", "z"]);
        assert_eq!(ideal(&r, "(x^2, y^3)").analytic_spread().unwrap(), 2);
        assert_eq!(ideal(&r, "(x)").analytic_spread().unwrap(), 1);
        assert_eq!(ideal(&r, "(x*y, y*z, z*x)").analytic_spread().unwrap(), 3);
        // generators of unequal degree: the fiber cone is two-dimensional
        let mixed = ideal(&r, "(x^2, x*y, y^3)");
        assert_eq!(mixed.analytic_spread().unwrap(), 2);
        assert_eq!(mixed.fiber_cone_rank(), 3);
    }

    #[test]
    fn spread_bounds() {
        let r = poly(&["x", "y", "z"]);
        assert_eq!(ideal(&r, "(x*y, y*z, z*x)").spread_bound_h().unwrap(), 2);
        assert_eq!(ideal(&r, "(x)").spread_bound_h().unwrap(), 1);
        assert_eq!(ideal(&r, "(x*y)").spread_bound_h().unwrap(), 1);
    }
}
