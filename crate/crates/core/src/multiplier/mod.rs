//! Multiplier ideals of monomial ideals through the Newton polyhedron
//! criterion, summation right-hand sides, Frobenius-root test ideal chains and
//! a finite-level tight closure checker.

mod chain;
mod summation;
mod tight;

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::arith::{ceil_i64, Rational};
use crate::error::{Error, Result};
use crate::geometry::{NewtonPolyhedron, RationalVector};
use crate::ideal::{box_points, ideal_from_flags, scan_ideal, MonomialIdeal};
use crate::ring::AmbientRing;

pub use chain::{test_ideal_chain, ChainResult, E_MAX};
pub use summation::{pencil_ideal, summation_lhs, summation_rhs, BreakpointSchedule, Piece};
pub use tight::{tight_closure_membership, TightClosureVerdict};

/// Newton polyhedron of a monomial ideal in its ambient.
pub fn newton(a: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    let gens: Vec<Vec<i64>> = a.generators().iter().map(|g| g.0.clone()).collect();
    NewtonPolyhedron::new(&gens, &a.ring().dual_cone_rays())
}

/// A product `a_1^{t_1} ... a_k^{t_k}` of ideals with positive rational
/// exponents.
#[derive(Clone, Debug)]
pub struct MultiplierQuery {
    ring: Arc<AmbientRing>,
    factors: Vec<(MonomialIdeal, Rational)>,
}

impl MultiplierQuery {
    pub fn new(factors: Vec<(MonomialIdeal, Rational)>) -> Result<Self> {
        let ring = factors.first().ok_or(Error::EmptyGenerators)?.0.ring().clone();
        for (a, t) in &factors {
            if !t.is_positive() {
                return Err(Error::NonpositiveExponent);
            }
            if **a.ring() != *ring {
                return Err(Error::AmbientMismatch);
            }
        }
        Ok(MultiplierQuery { ring, factors })
    }

    pub fn single(a: &MonomialIdeal, t: &Rational) -> Result<Self> {
        Self::new(vec![(a.clone(), t.clone())])
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn factors(&self) -> &[(MonomialIdeal, Rational)] {
        &self.factors
    }

    /// `sum_i t_i * Newt(a_i)`.
    pub fn polyhedron(&self) -> Result<NewtonPolyhedron> {
        let mut acc: Option<NewtonPolyhedron> = None;
        for (a, t) in &self.factors {
            let p = newton(a)?.scale(t)?;
            acc = Some(match acc {
                None => p,
                Some(q) => q.minkowski_sum(&p)?,
            });
        }
        Ok(acc.expect("query has factors"))
    }

    pub fn compute(&self) -> Result<MonomialIdeal> {
        let poly = self.polyhedron()?;
        let m = self.ring.gorenstein_vector().clone();
        let bounds = scan_bounds(&self.ring, &poly.max_vertex_coords())?;
        scan_ideal(&self.ring, &bounds, |w| {
            poly.contains_interior(&RationalVector::from_ints(w).add(&m))
                .unwrap_or(false)
        })
    }
}

/// Box holding every minimal generator: past the polyhedron's vertices and the
/// Gorenstein shift, plus one lattice step.
pub(crate) fn scan_bounds(ring: &AmbientRing, max_vertex: &[Rational]) -> Result<Vec<i64>> {
    let m = ring.gorenstein_vector();
    max_vertex
        .iter()
        .zip(&m.0)
        .map(|(v, mi)| Ok(ceil_i64(v)?.max(0) + ceil_i64(mi)? + ring.modulus()))
        .collect()
}

/// `J(a^t)`.
pub fn multiplier_ideal(a: &MonomialIdeal, t: &Rational) -> Result<MonomialIdeal> {
    MultiplierQuery::single(a, t)?.compute()
}

/// `J(a_1^{t_1} ... a_k^{t_k})`.
pub fn mixed_multiplier_ideal(factors: &[(MonomialIdeal, Rational)]) -> Result<MonomialIdeal> {
    MultiplierQuery::new(factors.to_vec())?.compute()
}

/// Log canonical threshold: the least `t` with `J(a^t)` proper.
pub fn lct(a: &MonomialIdeal) -> Result<Rational> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let p = newton(a)?;
    let m = a.ring().gorenstein_vector();
    p.facets()
        .iter()
        .filter(|f| f.offset.is_positive())
        .map(|f| m.dot(&f.normal) / &f.offset)
        .min()
        .ok_or(Error::UnitIdeal)
}

/// `J(a^lambda)` for every `lambda` in `[0, up_to]` from a single pass over
/// the lattice: `x^w` lies in `J(a^lambda)` exactly when `lambda` is below the
/// threshold `min_F <n_F, w + m> / c_F` over the facets `<n_F, .> >= c_F > 0`.
#[derive(Clone, Debug)]
pub struct MultiplierFamily {
    ring: Arc<AmbientRing>,
    up_to: Rational,
    bounds: Vec<i64>,
    /// Box points with their thresholds; `None` stands for no bound.
    outer: Vec<(Vec<i64>, Option<Rational>)>,
    index: HashMap<Vec<i64>, usize>,
    inner: Vec<usize>,
}

impl MultiplierFamily {
    pub fn new(a: &MonomialIdeal, up_to: &Rational) -> Result<Self> {
        if !up_to.is_positive() {
            return Err(Error::NonpositiveExponent);
        }
        let ring = a.ring().clone();
        let p = newton(a)?;
        let scaled: Vec<Rational> = p.max_vertex_coords().iter().map(|v| v * up_to).collect();
        let bounds = scan_bounds(&ring, &scaled)?;
        let r = ring.modulus();
        let grown: Vec<i64> = bounds.iter().map(|b| b + r).collect();
        let m = ring.gorenstein_vector();
        let facets = p.facets();
        let outer: Vec<(Vec<i64>, Option<Rational>)> = crate::par::map_vec(&box_points(&ring, &grown)?, |w| {
            let x = RationalVector::from_ints(w).add(m);
            let mut best: Option<Rational> = None;
            for f in facets {
                let v = x.dot(&f.normal);
                let c = if f.offset.is_positive() {
                    v / &f.offset
                } else if v.is_positive() {
                    continue;
                } else {
                    Rational::zero()
                };
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
            (w.clone(), best)
        });
        let index = outer.iter().enumerate().map(|(i, (w, _))| (w.clone(), i)).collect();
        let inner = outer
            .iter()
            .enumerate()
            .filter(|(_, (w, _))| w.iter().zip(&bounds).all(|(x, b)| x <= b))
            .map(|(i, _)| i)
            .collect();
        Ok(MultiplierFamily {
            ring,
            up_to: up_to.clone(),
            bounds,
            outer,
            index,
            inner,
        })
    }

    fn below(threshold: &Option<Rational>, lambda: &Rational) -> bool {
        threshold.as_ref().is_none_or(|c| lambda < c)
    }

    /// `J(a^lambda)`, the unit ideal at `lambda = 0`.
    pub fn at(&self, lambda: &Rational) -> Result<MonomialIdeal> {
        if lambda.is_negative() || *lambda > self.up_to {
            return Err(Error::InvalidParameter(format!(
                "exponent {lambda} outside [0, {}]",
                self.up_to
            )));
        }
        if lambda.is_zero() {
            return Ok(MonomialIdeal::unit(self.ring.clone()));
        }
        let points: Vec<Vec<i64>> = self.inner.iter().map(|&i| self.outer[i].0.clone()).collect();
        let flags: Vec<bool> = self.inner.iter().map(|&i| Self::below(&self.outer[i].1, lambda)).collect();
        let pred = |w: &[i64]| {
            self.index
                .get(w)
                .is_some_and(|&i| Self::below(&self.outer[i].1, lambda))
        };
        ideal_from_flags(&self.ring, &self.bounds, &points, &flags, Some(&pred))
    }

    /// Values in `(0, up_to]` at which `J(a^lambda)` changes.
    pub fn jumps(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .inner
            .iter()
            .filter_map(|&i| self.outer[i].1.clone())
            .filter(|c| !c.is_zero() && *c <= self.up_to)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Values `t` in `(0, up_to]` at which `J(a^t)` changes.
pub fn jumping_numbers(a: &MonomialIdeal, up_to: &Rational) -> Result<Vec<Rational>> {
    if a.is_unit() {
        return Ok(Vec::new());
    }
    Ok(MultiplierFamily::new(a, up_to)?.jumps())
}
