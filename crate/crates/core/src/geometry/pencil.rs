//! The pencil `lambda -> lambda*P + (t - lambda)*Q`.
//!
//! The union of all slices is the Cayley polyhedron
//! `conv(tP x {t}  U  tQ x {0}) + (rec x {0})` in one extra coordinate; its
//! slice at height `lambda` is exactly `lambda*P + (t - lambda)*Q`. Each facet
//! `<y, n> + alpha*lambda >= c` of the Cayley polyhedron gives one linear bound
//! on `lambda` for a fixed point `y`, so the feasible set is an interval with
//! exactly computed endpoints.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::polyhedron::{hull, NewtonPolyhedron, RationalVector};
use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaInterval {
    Empty,
    Closed(Rational, Rational),
}

impl LambdaInterval {
    pub fn contains(&self, lambda: &Rational) -> bool {
        match self {
            LambdaInterval::Empty => false,
            LambdaInterval::Closed(lo, hi) => lo <= lambda && lambda <= hi,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, LambdaInterval::Empty)
    }
}

#[derive(Clone, Debug)]
struct SlabFacet {
    normal: Vec<i64>,
    alpha: i64,
    offset: Rational,
}

#[derive(Clone, Debug)]
pub struct MembershipPencil {
    dim: usize,
    t: Rational,
    facets: Vec<SlabFacet>,
    tp: NewtonPolyhedron,
    tq: NewtonPolyhedron,
}

impl MembershipPencil {
    pub fn new(p: &NewtonPolyhedron, q: &NewtonPolyhedron, t: &Rational) -> Result<Self> {
        if p.dim() != q.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: q.dim(),
            });
        }
        if p.rays() != q.rays() {
            return Err(Error::RecessionMismatch);
        }
        if !t.is_positive() {
            return Err(Error::NonpositiveScale);
        }
        let dim = p.dim();
        let lift = |v: &RationalVector, h: Rational| {
            let mut c: Vec<Rational> = v.0.iter().map(|x| x * t).collect();
            c.push(h);
            RationalVector(c)
        };
        let mut points: Vec<RationalVector> = p.vertices().iter().map(|v| lift(v, t.clone())).collect();
        points.extend(q.vertices().iter().map(|v| lift(v, Rational::zero())));
        let rays: Vec<Vec<i64>> = p
            .rays()
            .iter()
            .map(|r| r.iter().copied().chain(std::iter::once(0)).collect())
            .collect();
        let h = hull(dim + 1, &points, &rays)?;
        let facets = h
            .facets
            .into_iter()
            .map(|f| SlabFacet {
                normal: f.normal[..dim].to_vec(),
                alpha: f.normal[dim],
                offset: f.offset,
            })
            .collect();
        Ok(MembershipPencil {
            dim,
            t: t.clone(),
            facets,
            tp: p.scale(t)?,
            tq: q.scale(t)?,
        })
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    /// `t*P`, the slice at `lambda = t`.
    pub fn top(&self) -> &NewtonPolyhedron {
        &self.tp
    }

    /// `t*Q`, the slice at `lambda = 0`.
    pub fn bottom(&self) -> &NewtonPolyhedron {
        &self.tq
    }

    fn check(&self, x: &RationalVector) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// Closed set of `lambda` in `[0, t]` with `x` in `lambda*P + (t - lambda)*Q`.
    pub fn interval(&self, x: &RationalVector) -> Result<LambdaInterval> {
        self.check(x)?;
        let mut lo = Rational::zero();
        let mut hi = self.t.clone();
        for f in &self.facets {
            let rhs = &f.offset - x.dot(&f.normal);
            match f.alpha.signum() {
                0 => {
                    if rhs.is_positive() {
                        return Ok(LambdaInterval::Empty);
                    }
                }
                1 => {
                    let b = rhs / BigInt::from(f.alpha);
                    if b > lo {
                        lo = b;
                    }
                }
                _ => {
                    let b = rhs / BigInt::from(f.alpha);
                    if b < hi {
                        hi = b;
                    }
                }
            }
        }
        Ok(if lo <= hi {
            LambdaInterval::Closed(lo, hi)
        } else {
            LambdaInterval::Empty
        })
    }

    /// Open set of `lambda` in `(0, t)` with `x` in the interior of the slice,
    /// returned as its endpoints `(lo, hi)`, `lo < hi`.
    pub fn open_range(&self, x: &RationalVector) -> Result<Option<(Rational, Rational)>> {
        self.check(x)?;
        let mut lo = Rational::zero();
        let mut hi = self.t.clone();
        for f in &self.facets {
            if f.normal.iter().all(|c| *c == 0) {
                // the slab walls lambda >= 0 and lambda <= t
                continue;
            }
            let rhs = &f.offset - x.dot(&f.normal);
            match f.alpha.signum() {
                0 => {
                    if !rhs.is_negative() {
                        return Ok(None);
                    }
                }
                1 => {
                    let b = rhs / BigInt::from(f.alpha);
                    if b > lo {
                        lo = b;
                    }
                }
                _ => {
                    let b = rhs / BigInt::from(f.alpha);
                    if b < hi {
                        hi = b;
                    }
                }
            }
        }
        Ok((lo < hi).then_some((lo, hi)))
    }

    /// Whether `x` lies in the interior of `lambda*P + (t - lambda)*Q` for the
    /// given `lambda` in `[0, t]`.
    pub fn interior_at(&self, x: &RationalVector, lambda: &Rational) -> Result<bool> {
        self.check(x)?;
        if lambda.is_zero() {
            return self.tq.contains_interior(x);
        }
        if *lambda == self.t {
            return self.tp.contains_interior(x);
        }
        Ok(match self.open_range(x)? {
            Some((lo, hi)) => &lo < lambda && lambda < &hi,
            None => false,
        })
    }

    /// Strict membership for some `lambda` in the closed range `[0, t]`.
    pub fn interior_somewhere(&self, x: &RationalVector) -> Result<bool> {
        Ok(self.open_range(x)?.is_some()
            || self.tq.contains_interior(x)?
            || self.tp.contains_interior(x)?)
    }
}

/// Closed feasibility interval of `x` in the pencil spanned by `P` and `Q`.
pub fn membership_interval(
    p: &NewtonPolyhedron,
    q: &NewtonPolyhedron,
    t: &Rational,
    x: &RationalVector,
) -> Result<LambdaInterval> {
    MembershipPencil::new(p, q, t)?.interval(x)
}
