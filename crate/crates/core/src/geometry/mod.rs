//! Exact polyhedral kernel: Newton polyhedra in both representations,
//! scaling, Minkowski sums, interior membership, support values and the
//! parametric membership interval used by the summation formula.

pub mod linalg;
mod pencil;
mod polyhedron;

pub use pencil::{membership_interval, LambdaInterval, MembershipPencil};
pub use polyhedron::{Facet, NewtonPolyhedron, RationalVector};
