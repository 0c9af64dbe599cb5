//! Monomial ideals as canonical antichains of semigroup exponents.

mod frobenius;
mod parse;
mod symbolic;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::AmbientRing;

pub use frobenius::FrobeniusLevel;
pub use symbolic::MonomialPrime;

/// Exponent of a monomial in the ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn divides(&self, other: &[i64]) -> bool {
        self.0.len() == other.len() && self.0.iter().zip(other).all(|(a, b)| a <= b)
    }
}

impl Deref for ExponentVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Keeps the componentwise-minimal elements, sorted lexicographically.
pub(crate) fn minimalize(mut gens: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    gens.sort_by(|a, b| {
        a.iter()
            .sum::<i64>()
            .cmp(&b.iter().sum::<i64>())
            .then_with(|| a.cmp(b))
    });
    gens.dedup();
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.iter().zip(&g).all(|(a, b)| a <= b)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ring: Arc<AmbientRing>,
    gens: Vec<ExponentVector>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for MonomialIdeal {}

impl MonomialIdeal {
    pub fn new(ring: Arc<AmbientRing>, gens: Vec<Vec<i64>>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            if g.len() != ring.dim() {
                return Err(Error::DimensionMismatch {
                    expected: ring.dim(),
                    found: g.len(),
                });
            }
            if !ring.in_semigroup(g) {
                return Err(Error::NotInSemigroup);
            }
        }
        Ok(Self::from_valid(ring, gens))
    }

    fn from_valid(ring: Arc<AmbientRing>, gens: Vec<Vec<i64>>) -> Self {
        let gens = minimalize(gens).into_iter().map(ExponentVector).collect();
        MonomialIdeal { ring, gens }
    }

    pub fn unit(ring: Arc<AmbientRing>) -> Self {
        let d = ring.dim();
        MonomialIdeal {
            ring,
            gens: vec![ExponentVector(vec![0; d])],
        }
    }

    /// The ideal generated by the presentation variables.
    pub fn maximal(ring: Arc<AmbientRing>) -> Self {
        let gens = ring
            .names()
            .iter()
            .filter_map(|n| ring.variable_exponent(n))
            .collect();
        Self::from_valid(ring, gens)
    }

    /// Parses `(x^2, x*y, y^3)` against the ring's variable names.
    pub fn parse(ring: Arc<AmbientRing>, text: &str) -> Result<Self> {
        let gens = parse::parse_generators(&ring, text)?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].iter().all(|&x| x == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.ring.is_polynomial() && self.gens.iter().all(|g| g.iter().all(|&x| x <= 1))
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<i64> {
        let mut m = vec![0; self.dim()];
        for g in &self.gens {
            for (a, b) in m.iter_mut().zip(g.iter()) {
                *a = (*a).max(*b);
            }
        }
        m
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    fn raw(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.gens.iter().map(|g| &g.0)
    }

    pub fn member(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        if !self.ring.in_semigroup(v) {
            return Ok(false);
        }
        Ok(self.gens.iter().any(|g| g.divides(v)))
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other.gens.iter().all(|v| self.gens.iter().any(|g| g.divides(v))))
    }

    /// A generator of `other` outside `self`, if any.
    pub fn containment_witness(&self, other: &Self) -> Result<Option<ExponentVector>> {
        self.same_ring(other)?;
        Ok(other
            .gens
            .iter()
            .find(|v| !self.gens.iter().any(|g| g.divides(v)))
            .cloned())
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self.raw().chain(other.raw()).cloned().collect();
        Ok(Self::from_valid(self.ring.clone(), gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in self.raw() {
            for b in other.raw() {
                gens.push(add(a, b)?);
            }
        }
        Ok(Self::from_valid(self.ring.clone(), gens))
    }

    /// `n`-th power; `n = 0` gives the unit ideal.
    pub fn power(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::NonpositivePower);
        }
        let mut result = Self::unit(self.ring.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.product(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(result)
    }

    /// Like [`power`](Self::power) but refuses to build more than `budget`
    /// candidate generators in any single product.
    pub fn power_within(&self, n: i64, budget: usize) -> Result<Self> {
        if n < 0 {
            return Err(Error::NonpositivePower);
        }
        let mut result = Self::unit(self.ring.clone());
        for _ in 0..n {
            if result.gens.len() * self.gens.len() > budget {
                return Err(Error::SearchBudgetExceeded(format!(
                    "power {n} needs more than {budget} candidate generators"
                )));
            }
            result = result.product(self)?;
        }
        Ok(result)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = Vec::new();
        for a in self.raw() {
            for b in other.raw() {
                let lcm: Vec<i64> = a.iter().zip(b).map(|(x, y)| *x.max(y)).collect();
                gens.extend(self.ring.upper_closure(&lcm));
            }
        }
        Ok(Self::from_valid(self.ring.clone(), gens))
    }

    /// `(self : other)`, the monomials `w` with `w * other` inside `self`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut result: Option<Self> = None;
        for g in other.raw() {
            let mut gens = Vec::new();
            for f in self.raw() {
                let diff: Vec<i64> = f.iter().zip(g).map(|(a, b)| a - b).collect();
                gens.extend(self.ring.upper_closure(&diff));
            }
            let part = Self::from_valid(self.ring.clone(), gens);
            result = Some(match result {
                None => part,
                Some(r) => r.intersect(&part)?,
            });
        }
        Ok(result.expect("ideals are nonempty"))
    }

    /// Multiplies every generator by the monomial `v`.
    pub fn shift(&self, v: &[i64]) -> Result<Self> {
        if !self.ring.in_semigroup(v) {
            return Err(Error::NotInSemigroup);
        }
        let gens = self.raw().map(|g| add(g, v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_valid(self.ring.clone(), gens))
    }

    /// Canonical text of one generator.
    pub fn format_generator(&self, v: &[i64]) -> String {
        self.ring.format_monomial(v)
    }

    /// Generators in canonical text form and canonical order.
    pub fn generator_strings(&self) -> Vec<String> {
        let mut keyed: Vec<(Vec<i64>, String)> = self
            .gens
            .iter()
            .map(|g| (self.presentation_key(g), self.ring.format_monomial(g)))
            .collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        keyed.into_iter().map(|(_, s)| s).collect()
    }

    fn presentation_key(&self, g: &[i64]) -> Vec<i64> {
        match self.ring.presentation() {
            None => g.to_vec(),
            Some(_) => {
                let text = self.ring.format_monomial(g);
                let mut key = vec![0i64; self.ring.names().len()];
                if text != "1" {
                    for part in text.split('*') {
                        let (name, e) = match part.split_once('^') {
                            Some((n, e)) => (n, e.parse().unwrap_or(1)),
                            None => (part, 1),
                        };
                        if let Some(i) = self.ring.names().iter().position(|n| n == name) {
                            key[i] = e;
                        }
                    }
                }
                key
            }
        }
    }

    /// Set of generators, for order-independent comparisons.
    pub fn generator_set(&self) -> BTreeSet<ExponentVector> {
        self.gens.iter().cloned().collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

fn add(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
        .collect()
}

/// Points of `[0, bounds]` in lexicographic order, restricted to the lattice.
pub(crate) fn box_points(ring: &AmbientRing, bounds: &[i64]) -> Result<Vec<Vec<i64>>> {
    let mut total: u128 = 1;
    for b in bounds {
        total = total.saturating_mul((*b as u128) + 1);
    }
    if total > 20_000_000 {
        return Err(Error::SearchBudgetExceeded(format!(
            "scan box {bounds:?} has {total} points"
        )));
    }
    let d = bounds.len();
    let mut out = Vec::new();
    let mut v = vec![0i64; d];
    loop {
        if ring.in_lattice(&v) {
            out.push(v.clone());
        }
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            v[i] += 1;
            if v[i] <= bounds[i] {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Ideal of semigroup elements satisfying an upward-closed predicate, given a
/// box `[0, bounds]` that holds all minimal generators.
///
/// The box is checked: a non-member in the top lattice layer of some axis
/// whose next lattice translate along that axis is a member would be a
/// generator candidate outside the box.
pub(crate) fn scan_ideal<F>(ring: &Arc<AmbientRing>, bounds: &[i64], pred: F) -> Result<MonomialIdeal>
where
    F: Fn(&[i64]) -> bool + Sync,
{
    scan_ideal_with(ring, bounds, pred, true)
}

pub(crate) fn scan_ideal_with<F>(
    ring: &Arc<AmbientRing>,
    bounds: &[i64],
    pred: F,
    check_box: bool,
) -> Result<MonomialIdeal>
where
    F: Fn(&[i64]) -> bool + Sync,
{
    let d = ring.dim();
    if bounds.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bounds.len(),
        });
    }
    let points = box_points(ring, bounds)?;
    let flags = crate::par::map_vec(&points, |w| pred(w));
    ideal_from_flags(ring, bounds, &points, &flags, check_box.then_some(&pred as PointPredicate))
}

type PointPredicate<'a> = &'a (dyn Fn(&[i64]) -> bool + Sync);

/// The ideal whose members among `points` (the output of [`box_points`]) are
/// flagged. When `pred` is given the box is checked as in [`scan_ideal`].
pub(crate) fn ideal_from_flags(
    ring: &Arc<AmbientRing>,
    bounds: &[i64],
    points: &[Vec<i64>],
    flags: &[bool],
    pred: Option<PointPredicate>,
) -> Result<MonomialIdeal> {
    let d = ring.dim();
    let index = |w: &[i64]| -> usize {
        let mut idx = 0usize;
        for (x, b) in w.iter().zip(bounds) {
            idx = idx * (*b as usize + 1) + *x as usize;
        }
        idx
    };
    let mut member = std::collections::HashMap::with_capacity(points.len());
    for (w, f) in points.iter().zip(flags) {
        member.insert(index(w), *f);
    }
    let is_member = |w: &[i64]| member.get(&index(w)).copied().unwrap_or(false);
    let r = ring.modulus();
    let basis = ring.hilbert_basis();
    let mut gens = Vec::new();
    for (w, f) in points.iter().zip(flags) {
        if !*f {
            continue;
        }
        let minimal = basis.iter().all(|h| {
            let prev: Vec<i64> = w.iter().zip(h).map(|(a, b)| a - b).collect();
            prev.iter().any(|&x| x < 0) || !is_member(&prev)
        });
        if minimal {
            gens.push(w.clone());
        }
    }
    if let Some(pred) = pred {
        let escapes = crate::par::map_vec(points, |w| {
            if is_member(w) {
                return None;
            }
            for i in 0..d {
                if w[i] > bounds[i] - r {
                    let mut next = w.clone();
                    next[i] += r;
                    if pred(&next) {
                        return Some(next);
                    }
                }
            }
            None
        });
        if let Some(next) = escapes.into_iter().flatten().next() {
            return Err(Error::ScanBoxTooSmall(format!(
                "{next:?} lies outside the box {bounds:?}"
            )));
        }
    }
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    Ok(MonomialIdeal::from_valid(ring.clone(), gens))
}
