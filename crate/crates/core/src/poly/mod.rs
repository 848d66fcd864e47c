//! Exact arithmetic: rationals, monomials, monomial orders and polynomials.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod rational;
mod ring;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use polynomial::Polynomial;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use ring::{Embedding, Ring};
