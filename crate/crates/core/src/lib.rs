//! Exact multiplier ideals, test ideals, Jacobian ideals and symbolic powers
//! for monomial ideals on polynomial rings and normal toric surface
//! singularities, together with an executable harness that checks the
//! subadditivity, summation, Skoda and symbolic-power containments on seeded
//! corpora.
//!
//! Everything is exact: exponents are rationals, polyhedra carry integer facet
//! normals, and ideals are canonical antichains of exponent vectors.

pub mod arith;
pub mod asymptotic;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod ideal;
pub mod multiplier;
pub mod par;
pub mod ring;

pub use arith::{rat, Rational};
pub use error::{Error, Result};
pub use geometry::{LambdaInterval, MembershipPencil, NewtonPolyhedron, RationalVector};
pub use ideal::{ExponentVector, FrobeniusLevel, MonomialIdeal};
pub use ring::{AmbientRing, JacobianIdeal};
