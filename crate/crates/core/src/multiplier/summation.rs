//! Both sides of the summation formula
//! `J((a+b)^t) = sum over lambda + mu = t of J(a^lambda b^mu)`.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::{multiplier_ideal, newton, scan_bounds, MultiplierQuery};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::geometry::{MembershipPencil, RationalVector};
use crate::ideal::{box_points, ideal_from_flags, MonomialIdeal};

/// One piece of the schedule: either a breakpoint or the open interval between
/// two consecutive breakpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Piece {
    Point(Rational),
    Open(Rational, Rational),
}

impl Piece {
    /// A value of `lambda` inside the piece.
    pub fn representative(&self) -> Rational {
        match self {
            Piece::Point(l) => l.clone(),
            Piece::Open(lo, hi) => (lo + hi) / Rational::from_integer(2.into()),
        }
    }
}

/// Breakpoints of `lambda -> J(a^lambda b^{t - lambda})` on `[0, t]` with the
/// ideal on every piece.
#[derive(Clone, Debug)]
pub struct BreakpointSchedule {
    pub t: Rational,
    pub points: Vec<Rational>,
    pub pieces: Vec<(Piece, MonomialIdeal)>,
}

impl BreakpointSchedule {
    /// Breakpoints strictly between 0 and `t`.
    pub fn interior_points(&self) -> Vec<Rational> {
        self.points
            .iter()
            .filter(|p| !p.is_zero() && **p != self.t)
            .cloned()
            .collect()
    }
}

/// `J(a^lambda b^{t - lambda})`, dropping a factor whose exponent is zero.
pub fn pencil_ideal(a: &MonomialIdeal, b: &MonomialIdeal, t: &Rational, lambda: &Rational) -> Result<MonomialIdeal> {
    let mu = t - lambda;
    let mut factors = Vec::new();
    if !lambda.is_zero() {
        factors.push((a.clone(), lambda.clone()));
    }
    if !mu.is_zero() {
        factors.push((b.clone(), mu));
    }
    MultiplierQuery::new(factors)?.compute()
}

/// `J((a+b)^t)`.
pub fn summation_lhs(a: &MonomialIdeal, b: &MonomialIdeal, t: &Rational) -> Result<MonomialIdeal> {
    multiplier_ideal(&a.sum(b)?, t)
}

/// Where a shifted lattice point is interior along the pencil.
struct Profile {
    open: Option<(Rational, Rational)>,
    at_zero: bool,
    at_t: bool,
}

impl Profile {
    fn somewhere(&self) -> bool {
        self.open.is_some() || self.at_zero || self.at_t
    }

    fn at(&self, lambda: &Rational, t: &Rational) -> bool {
        if lambda.is_zero() {
            self.at_zero
        } else if lambda == t {
            self.at_t
        } else {
            matches!(&self.open, Some((lo, hi)) if lo < lambda && lambda < hi)
        }
    }
}

/// `sum over lambda in [0,t] of J(a^lambda b^{t-lambda})` computed exactly from
/// the per-monomial feasibility intervals, with its minimal breakpoint
/// schedule.
pub fn summation_rhs(
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    t: &Rational,
) -> Result<(MonomialIdeal, BreakpointSchedule)> {
    if **a.ring() != **b.ring() {
        return Err(Error::AmbientMismatch);
    }
    let ring = a.ring().clone();
    let pa = newton(a)?;
    let pb = newton(b)?;
    let pencil = MembershipPencil::new(&pa, &pb, t)?;
    let m = ring.gorenstein_vector().clone();
    let reach: Vec<Rational> = pa
        .max_vertex_coords()
        .iter()
        .zip(pb.max_vertex_coords())
        .map(|(x, y)| if *x > y { x * t } else { y * t })
        .collect();
    let bounds = scan_bounds(&ring, &reach)?;
    let shifted = |w: &[i64]| RationalVector::from_ints(w).add(&m);
    // Profiles on the box grown by one lattice step answer the box checks.
    let r = ring.modulus();
    let outer: Vec<i64> = bounds.iter().map(|b| b + r).collect();
    let outer_points = box_points(&ring, &outer)?;
    let profiles = crate::par::map_vec(&outer_points, |w| {
        let x = shifted(w);
        Ok(Profile {
            open: pencil.open_range(&x)?,
            at_zero: pencil.bottom().contains_interior(&x)?,
            at_t: pencil.top().contains_interior(&x)?,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let index: HashMap<&[i64], usize> = outer_points
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let lookup = |w: &[i64]| index.get(w).map(|&i| &profiles[i]);
    let inner: Vec<usize> = outer_points
        .iter()
        .enumerate()
        .filter(|(_, w)| w.iter().zip(&bounds).all(|(x, b)| x <= b))
        .map(|(i, _)| i)
        .collect();
    let points: Vec<Vec<i64>> = inner.iter().map(|&i| outer_points[i].clone()).collect();
    let flags_for = |f: &dyn Fn(&Profile) -> bool| -> Vec<bool> { inner.iter().map(|&i| f(&profiles[i])).collect() };
    let somewhere = |w: &[i64]| lookup(w).is_some_and(Profile::somewhere);
    let flags = flags_for(&Profile::somewhere);
    let ideal = ideal_from_flags(&ring, &bounds, &points, &flags, Some(&somewhere))?;

    let mut cuts: BTreeSet<Rational> = BTreeSet::new();
    cuts.insert(Rational::zero());
    cuts.insert(t.clone());
    for (lo, hi) in inner.iter().filter_map(|&i| profiles[i].open.as_ref()) {
        cuts.insert(lo.clone());
        cuts.insert(hi.clone());
    }
    let points_t: Vec<Rational> = cuts.into_iter().collect();
    let piece_ideal = |piece: &Piece| -> Result<MonomialIdeal> {
        let lambda = piece.representative();
        let flags = flags_for(&|p| p.at(&lambda, t));
        let pred = |w: &[i64]| lookup(w).is_some_and(|p| p.at(&lambda, t));
        ideal_from_flags(&ring, &bounds, &points, &flags, Some(&pred))
    };
    let schedule = minimal_schedule(t, points_t, piece_ideal)?;
    Ok((ideal, schedule))
}

fn pieces_of(points: &[Rational]) -> Vec<Piece> {
    let mut out = Vec::with_capacity(2 * points.len());
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            out.push(Piece::Open(points[i - 1].clone(), p.clone()));
        }
        out.push(Piece::Point(p.clone()));
    }
    out
}

fn minimal_schedule<F>(t: &Rational, mut points: Vec<Rational>, piece_ideal: F) -> Result<BreakpointSchedule>
where
    F: Fn(&Piece) -> Result<MonomialIdeal> + Sync + Send,
{
    let pieces = pieces_of(&points);
    let ideals = crate::par::map_vec(&pieces, |p| piece_ideal(p))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut entries: Vec<(Piece, MonomialIdeal)> = pieces.into_iter().zip(ideals).collect();
    // Interior point k sits at entry 2k; drop it when it agrees with both
    // neighbouring open pieces, merging the three entries into one.
    let mut k = 1;
    while k + 1 < points.len() {
        let i = 2 * k;
        if entries[i - 1].1 == entries[i].1 && entries[i].1 == entries[i + 1].1 {
            let lo = points[k - 1].clone();
            let hi = points[k + 1].clone();
            let ideal = entries[i].1.clone();
            entries.splice(i - 1..=i + 1, [(Piece::Open(lo, hi), ideal)]);
            points.remove(k);
        } else {
            k += 1;
        }
    }
    Ok(BreakpointSchedule {
        t: t.clone(),
        points,
        pieces: entries,
    })
}
