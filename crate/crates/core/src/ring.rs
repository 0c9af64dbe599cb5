//! Ambient rings: polynomial rings and cyclic-quotient toric surface
//! singularities (the `A_{2n}` family), with Jacobian ideals of single-binomial
//! presentations and divisorial symbolic powers.
//!
//! Toric rings are stored in quotient coordinates: the semigroup is the
//! positive orthant intersected with the lattice
//! `M = { a in Z^d : sum_i w_i a_i = 0 mod r }`, so divisibility is the
//! componentwise order and lattice membership is a congruence.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{is_prime, Rational};
use crate::error::{Error, Result};
use crate::geometry::RationalVector;
use crate::ideal::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Polynomial,
    Toric,
}

/// Named generators of the semigroup with one binomial relation
/// `prod X_i^{lhs_i} = prod X_i^{rhs_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub exponents: Vec<Vec<i64>>,
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

impl Presentation {
    fn image(&self, powers: &[u32]) -> Vec<i64> {
        let d = self.exponents[0].len();
        let mut out = vec![0i64; d];
        for (p, e) in powers.iter().zip(&self.exponents) {
            for (o, x) in out.iter_mut().zip(e) {
                *o += i64::from(*p) * x;
            }
        }
        out
    }

    /// Both sides of the relation land on the same lattice point.
    pub fn relation_holds(&self) -> bool {
        self.image(&self.lhs) == self.image(&self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmbientRing {
    kind: RingKind,
    dim: usize,
    names: Vec<String>,
    modulus: i64,
    weights: Vec<i64>,
    hilbert_basis: Vec<Vec<i64>>,
    rays: Vec<RationalVector>,
    gorenstein: RationalVector,
    presentation: Option<Presentation>,
    characteristic: Option<u64>,
    label: String,
}

impl AmbientRing {
    pub fn polynomial<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidParameter("at least one variable is required".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().trim().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidParameter(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariableName(n.clone()));
            }
        }
        let d = names.len();
        let label = format!("poly {}", names.join(","));
        Self::build(RingKind::Polynomial, d, names, 1, vec![0; d], None, label)
    }

    /// `k[X,Y,Z]/(XY - Z^{2n+1})` as the invariant ring of `Z/(2n+1)` acting on
    /// `k[u,v]` with weights `(1,-1)`: `x = u^{2n+1}`, `y = v^{2n+1}`, `z = uv`.
    pub fn a2n(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("A2n needs n >= 1, got {n}")));
        }
        let r = 2 * n + 1;
        let presentation = Presentation {
            exponents: vec![vec![r, 0], vec![0, r], vec![1, 1]],
            lhs: vec![1, 1, 0],
            rhs: vec![0, 0, r as u32],
        };
        let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
        Self::build(
            RingKind::Toric,
            2,
            names,
            r,
            vec![1, -1],
            Some(presentation),
            format!("A2n n={n}"),
        )
    }

    fn build(
        kind: RingKind,
        dim: usize,
        names: Vec<String>,
        modulus: i64,
        weights: Vec<i64>,
        presentation: Option<Presentation>,
        label: String,
    ) -> Result<Self> {
        let hilbert_basis = hilbert_basis(dim, modulus, &weights);
        // M projects onto g_i Z in coordinate i; the primitive ray of the
        // orthant cone along e_i in the dual lattice is e_i / g_i.
        let gcds: Vec<i64> = (0..dim)
            .map(|i| hilbert_basis.iter().fold(0i64, |g, h| g.gcd(&h[i])))
            .collect();
        let rays = (0..dim)
            .map(|i| {
                RationalVector(
                    (0..dim)
                        .map(|j| {
                            if i == j {
                                Rational::new(BigInt::from(1), BigInt::from(gcds[i]))
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        let gorenstein = RationalVector::from_ints(&gcds);
        let ring = AmbientRing {
            kind,
            dim,
            names,
            modulus,
            weights,
            hilbert_basis,
            rays,
            gorenstein,
            presentation,
            characteristic: None,
            label,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        for r in &self.rays {
            if self.gorenstein.0.iter().zip(&r.0).map(|(a, b)| a * b).sum::<Rational>()
                != Rational::from_integer(1.into())
            {
                return Err(Error::InvalidParameter("ring is not Q-Gorenstein".into()));
            }
        }
        if let Some(p) = &self.presentation {
            if !p.relation_holds() || !p.exponents.iter().all(|e| self.in_semigroup(e)) {
                return Err(Error::InvalidParameter("unsound presentation".into()));
            }
        }
        Ok(())
    }

    /// Reinterprets the ring over `F_p`.
    pub fn with_characteristic(mut self, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        self.characteristic = Some(p);
        Ok(self)
    }

    /// Parses `ring poly x,y,z`, `poly x,y`, `ring A2n n=2`, each optionally
    /// followed by `char=p`.
    pub fn parse(decl: &str) -> Result<Self> {
        let mut words: Vec<&str> = decl.split_whitespace().collect();
        if words.first() == Some(&"ring") {
            words.remove(0);
        }
        let bad = || Error::Parse(format!("bad ring declaration `{decl}`"));
        let mut characteristic = None;
        words.retain(|w| match w.strip_prefix("char=") {
            Some(p) => {
                characteristic = Some(p.to_string());
                false
            }
            None => true,
        });
        let ring = match words.as_slice() {
            ["poly", rest @ ..] if !rest.is_empty() => {
                let joined = rest.join("");
                let names: Vec<&str> = joined.split(',').collect();
                Self::polynomial(&names)?
            }
            ["A2n", param] => {
                let n = param
                    .strip_prefix("n=")
                    .ok_or_else(bad)?
                    .parse::<i64>()
                    .map_err(|_| bad())?;
                Self::a2n(n)?
            }
            _ => return Err(bad()),
        };
        match characteristic {
            Some(p) => ring.with_characteristic(p.parse().map_err(|_| bad())?),
            None => Ok(ring),
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn is_polynomial(&self) -> bool {
        self.kind == RingKind::Polynomial
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn characteristic(&self) -> Option<u64> {
        self.characteristic
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    /// Index of the congruence lattice in `Z^d`; also a lattice step along
    /// every coordinate axis.
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn hilbert_basis(&self) -> &[Vec<i64>] {
        &self.hilbert_basis
    }

    /// Primitive ray generators of the cone in the dual lattice.
    pub fn rays(&self) -> &[RationalVector] {
        &self.rays
    }

    /// Rays of the dual cone (the recession cone of every Newton polyhedron).
    pub fn dual_cone_rays(&self) -> Vec<Vec<i64>> {
        crate::geometry::NewtonPolyhedron::orthant_rays(self.dim)
    }

    /// The Q-Gorenstein vector: pairs to one with every ray.
    pub fn gorenstein_vector(&self) -> &RationalVector {
        &self.gorenstein
    }

    pub fn in_lattice(&self, v: &[i64]) -> bool {
        if self.modulus == 1 {
            return true;
        }
        let s: i64 = v.iter().zip(&self.weights).map(|(a, w)| a * w).sum();
        s.rem_euclid(self.modulus) == 0
    }

    pub fn in_semigroup(&self, v: &[i64]) -> bool {
        v.len() == self.dim && v.iter().all(|&x| x >= 0) && self.in_lattice(v)
    }

    /// Minimal semigroup elements that dominate `u` componentwise.
    pub fn upper_closure(&self, u: &[i64]) -> Vec<Vec<i64>> {
        let base: Vec<i64> = u.iter().map(|&x| x.max(0)).collect();
        if self.in_lattice(&base) {
            return vec![base];
        }
        let r = self.modulus;
        let mut out: Vec<Vec<i64>> = Vec::new();
        let mut delta = vec![0i64; self.dim];
        loop {
            let cand: Vec<i64> = base.iter().zip(&delta).map(|(a, b)| a + b).collect();
            if self.in_lattice(&cand) {
                out.push(cand);
            }
            let mut i = 0;
            loop {
                if i == self.dim {
                    return crate::ideal::minimalize(out);
                }
                delta[i] += 1;
                if delta[i] < r {
                    break;
                }
                delta[i] = 0;
                i += 1;
            }
        }
    }

    /// Semigroup exponent of a presentation variable.
    pub fn variable_exponent(&self, name: &str) -> Option<Vec<i64>> {
        let idx = self.names.iter().position(|n| n == name)?;
        match &self.presentation {
            Some(p) => Some(p.exponents[idx].clone()),
            None => {
                let mut e = vec![0; self.dim];
                e[idx] = 1;
                Some(e)
            }
        }
    }

    /// Canonical monomial text for a semigroup element: the presentation
    /// exponent that is lexicographically largest read from the last variable
    /// backwards (for `A_{2n}`: as much `z` as possible, then `x` or `y`).
    pub fn format_monomial(&self, v: &[i64]) -> String {
        let powers: Vec<i64> = match &self.presentation {
            None => v.to_vec(),
            Some(p) => match decompose(&p.exponents, v) {
                Some(c) => c,
                None => return format!("<{v:?}>"),
            },
        };
        let terms: Vec<String> = powers
            .iter()
            .zip(&self.names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if terms.is_empty() {
            "1".to_string()
        } else {
            terms.join("*")
        }
    }

    /// Jacobian ideal of the ring over its base field.
    pub fn jacobian_ideal(self: &Arc<Self>) -> Result<JacobianIdeal> {
        let Some(pres) = &self.presentation else {
            return match self.kind {
                RingKind::Polynomial => Ok(JacobianIdeal {
                    value: MonomialIdeal::unit(self.clone()),
                }),
                RingKind::Toric => Err(Error::UnsupportedPresentation),
            };
        };
        let k = pres.exponents.len();
        let mut gens = Vec::new();
        for i in 0..k {
            // d/dX_i (X^lhs - X^rhs)
            let (a, b) = (i64::from(pres.lhs[i]), i64::from(pres.rhs[i]));
            let (coef, powers) = match (a, b) {
                (0, 0) => continue,
                (a, 0) => (a, &pres.lhs),
                (0, b) => (-b, &pres.rhs),
                _ => return Err(Error::UnsupportedPresentation),
            };
            if let Some(p) = self.characteristic {
                if coef.unsigned_abs() % p == 0 {
                    return Err(Error::CharacteristicDividesCoefficient {
                        p,
                        coefficient: coef,
                    });
                }
            }
            let mut reduced = powers.clone();
            reduced[i] -= 1;
            gens.push(pres.image(&reduced));
        }
        if gens.is_empty() {
            return Err(Error::UnsupportedPresentation);
        }
        Ok(JacobianIdeal {
            value: MonomialIdeal::new(self.clone(), gens)?,
        })
    }

    /// Semigroup elements `u` with `<u, n_i> >= n` for the ray `n_i`.
    pub fn divisorial_symbolic_power(
        self: &Arc<Self>,
        ray: usize,
        n: i64,
    ) -> Result<MonomialIdeal> {
        if self.kind != RingKind::Toric {
            return Err(Error::UnsupportedAmbient);
        }
        if ray >= self.rays.len() {
            return Err(Error::RayOutOfRange {
                index: ray,
                rays: self.rays.len(),
            });
        }
        if n < 1 {
            return Err(Error::NonpositivePower);
        }
        let rv = self.rays[ray].clone();
        let nn = Rational::from_integer(n.into());
        let mut bounds = vec![self.modulus; self.dim];
        bounds[ray] = crate::arith::ceil_i64(&(nn.clone() / &rv.0[ray]))? + self.modulus;
        crate::ideal::scan_ideal(self, &bounds, |w| {
            RationalVector::from_ints(w).0.iter().zip(&rv.0).map(|(a, b)| a * b).sum::<Rational>() >= nn
        })
    }
}

impl fmt::Display for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if let Some(p) = self.characteristic {
            write!(f, " char={p}")?;
        }
        Ok(())
    }
}

/// The Jacobian ideal of an ambient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianIdeal {
    pub value: MonomialIdeal,
}

fn hilbert_basis(dim: usize, modulus: i64, weights: &[i64]) -> Vec<Vec<i64>> {
    let in_lattice = |v: &[i64]| {
        modulus == 1
            || v.iter().zip(weights).map(|(a, w)| a * w).sum::<i64>().rem_euclid(modulus) == 0
    };
    // Every Hilbert basis element of a cyclic-quotient orthant lies in [0, r]^d.
    let mut pts = Vec::new();
    let mut v = vec![0i64; dim];
    loop {
        if v.iter().any(|&x| x > 0) && in_lattice(&v) {
            pts.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == dim {
                let mut basis: Vec<Vec<i64>> = pts
                    .iter()
                    .filter(|p| {
                        !pts.iter().any(|q| {
                            q != *p
                                && q.iter().zip(p.iter()).all(|(a, b)| a <= b)
                                && in_lattice(&p.iter().zip(q).map(|(a, b)| a - b).collect::<Vec<_>>())
                        })
                    })
                    .cloned()
                    .collect();
                basis.sort();
                return basis;
            }
            v[i] += 1;
            if v[i] <= modulus {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// Nonnegative `c` with `sum c_i gens_i = v`, preferring large exponents on the
/// later generators.
fn decompose(gens: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    fn go(gens: &[Vec<i64>], k: usize, rest: &[i64], acc: &mut Vec<i64>) -> bool {
        if k == 0 {
            return rest.iter().all(|&x| x == 0);
        }
        let g = &gens[k - 1];
        let max = g
            .iter()
            .zip(rest)
            .filter(|(gi, _)| **gi > 0)
            .map(|(gi, r)| r / gi)
            .min()
            .unwrap_or(0);
        for c in (0..=max).rev() {
            let next: Vec<i64> = rest.iter().zip(g).map(|(r, gi)| r - c * gi).collect();
            acc[k - 1] = c;
            if go(gens, k - 1, &next, acc) {
                return true;
            }
        }
        false
    }
    let mut acc = vec![0; gens.len()];
    go(gens, gens.len(), v, &mut acc).then_some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_rings() {
        let r = AmbientRing::polynomial(&["x", "y"]).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.is_polynomial());
        assert_eq!(r.gorenstein_vector(), &RationalVector::from_ints(&[1, 1]));
        assert_eq!(AmbientRing::polynomial(&["x"]).unwrap().dim(), 1);
        assert_eq!(
            AmbientRing::polynomial(&["x", "x"]).unwrap_err(),
            Error::DuplicateVariableName("x".into())
        );
        let r = Arc::new(r);
        assert!(r.jacobian_ideal().unwrap().value.is_unit());
    }

    #[test]
    fn a4_structure() {
        let r = AmbientRing::a2n(2).unwrap();
        assert_eq!(r.modulus(), 5);
        assert!(r.in_semigroup(&[1, 1]) && r.in_semigroup(&[5, 0]) && !r.in_semigroup(&[1, 0]));
        assert_eq!(r.hilbert_basis(), &[vec![0, 5], vec![1, 1], vec![5, 0]]);
        assert!(r.presentation().unwrap().relation_holds());
        for ray in r.rays() {
            let pairing: Rational = r.gorenstein_vector().0.iter().zip(&ray.0).map(|(a, b)| a * b).sum();
            assert_eq!(pairing, Rational::from_integer(1.into()));
        }
        assert!(AmbientRing::a2n(0).is_err());
    }

    #[test]
    fn relation_identity_for_all_n() {
        for n in 1..8 {
            let r = AmbientRing::a2n(n).unwrap();
            let p = r.presentation().unwrap();
            let lhs: Vec<i64> = p.exponents[0].iter().zip(&p.exponents[1]).map(|(a, b)| a + b).collect();
            let rhs: Vec<i64> = p.exponents[2].iter().map(|z| (2 * n + 1) * z).collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn jacobian_of_a4() {
        let r = Arc::new(AmbientRing::a2n(2).unwrap());
        let j = r.jacobian_ideal().unwrap().value;
        let expected = MonomialIdeal::new(r.clone(), vec![vec![0, 5], vec![5, 0], vec![4, 4]]).unwrap();
        assert_eq!(j, expected);
        assert_eq!(j.to_string(), "(x, y, z^4)");
        let f5 = Arc::new(AmbientRing::a2n(2).unwrap().with_characteristic(5).unwrap());
        assert_eq!(
            f5.jacobian_ideal().unwrap_err(),
            Error::CharacteristicDividesCoefficient { p: 5, coefficient: -5 }
        );
        let f3 = Arc::new(AmbientRing::a2n(2).unwrap().with_characteristic(3).unwrap());
        assert!(f3.jacobian_ideal().is_ok());
    }

    #[test]
    fn divisorial_powers() {
        let r = Arc::new(AmbientRing::a2n(2).unwrap());
        let p1 = r.divisorial_symbolic_power(0, 1).unwrap();
        assert_eq!(p1.to_string(), "(x, z)");
        for n in 1..6 {
            let a = r.divisorial_symbolic_power(0, n).unwrap();
            let b = r.divisorial_symbolic_power(0, n + 1).unwrap();
            assert!(a.contains(&b).unwrap());
            // <(1,1), e_1> = 1, so z lies in P^(n) iff n <= 1
            assert_eq!(a.member(&[1, 1]).unwrap(), n <= 1);
        }
        assert!(matches!(
            r.divisorial_symbolic_power(2, 1).unwrap_err(),
            Error::RayOutOfRange { .. }
        ));
    }

    #[test]
    fn parse_declarations() {
        assert_eq!(AmbientRing::parse("ring poly x,y,z").unwrap().dim(), 3);
        assert_eq!(AmbientRing::parse("poly x, y").unwrap().names(), &["x", "y"]);
        let a = AmbientRing::parse("ring A2n n=3").unwrap();
        assert_eq!(a.modulus(), 7);
        assert_eq!(
            AmbientRing::parse("ring poly x,y char=7").unwrap().characteristic(),
            Some(7)
        );
        assert!(AmbientRing::parse("ring cone").is_err());
        assert!(AmbientRing::parse("ring A2n 2").is_err());
    }

    #[test]
    fn canonical_monomials() {
        let r = AmbientRing::a2n(2).unwrap();
        assert_eq!(r.format_monomial(&[10, 5]), "x*z^5");
        assert_eq!(r.format_monomial(&[6, 1]), "x*z");
        assert_eq!(r.format_monomial(&[0, 0]), "1");
        let p = AmbientRing::polynomial(&["x", "y"]).unwrap();
        assert_eq!(p.format_monomial(&[2, 1]), "x^2*y");
    }
}
