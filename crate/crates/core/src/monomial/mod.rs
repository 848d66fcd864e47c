//! Monomial ideals and their multiplier ideals.
//!
//! For a monomial ideal `a` and `c > 0`, `x^v ∈ J(c·a)` exactly when `v + 1`
//! lies in the interior of `c·Newt(a)`. Interiority is decided by an exact
//! linear program: maximize `δ` subject to `v + 1 − δ·1 ∈ c·Newt(a)`; the
//! point is interior iff the optimum is positive. Since the polyhedron is
//! closed upwards, moving along the diagonal reaches every interior point.

mod ideal;
pub mod lp;
mod multiplier;
mod newton;
mod verify;

pub use ideal::MonomialIdeal;
pub use multiplier::{mixed_multiplier_ideal, multiplier_ideal};
pub use newton::{diagonal_margin, lct, mixed_interior_test, newton_interior_test, MultiplierQuery, NewtonPolyhedron};
pub use verify::{
    asymptotic_multiplier_ideal, asymptotic_multiplier_ideal_with, chain_term, verify_asymptotic_containments,
    verify_asymptotic_criterion, verify_chain, verify_restriction, verify_subadditivity, Asymptotic,
    AsymptoticContainmentReport, ConclusionCheck, CriterionReport, CriterionStatus, InclusionCheck,
    SubadditivityReport, DEFAULT_MAX_P,
};
