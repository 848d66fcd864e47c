//! Exact computer algebra for symbolic powers, graded families of ideals and
//! multiplier ideals of monomial ideals.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: rationals, monomials, monomial orders and sparse polynomials.
//! * [`groebner`]: Buchberger's algorithm, normal forms and the [`Ideal`] type.
//! * [`ideal_ops`]: sums, products, intersections, quotients, saturation,
//!   elimination, radical membership and colength.
//! * [`symbolic`]: symbolic powers and the uniform containment verifier.
//! * [`monomial`]: monomial ideals, Newton polyhedra, an exact simplex solver
//!   and (asymptotic) multiplier ideals with their verifiers.
//! * [`families`]: graded families of ideals and the exponential valuation.

pub mod error;
pub mod families;
pub mod groebner;
pub mod ideal_ops;
pub mod monomial;
pub mod poly;
pub mod symbolic;

pub use error::{Error, Result};
pub use groebner::{Ideal, DEFAULT_BUDGET};

pub use monomial::{MonomialIdeal, MultiplierQuery, NewtonPolyhedron};
pub use poly::{Monomial, MonomialOrder, OrderKind, Polynomial, Rational, Ring};
