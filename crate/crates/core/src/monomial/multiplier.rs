//! Multiplier ideals of monomial ideals by lattice enumeration.
//!
//! # Search box
//!
//! Let `P = Σ c_i·Newt(a_i)` and let `B_j = ⌈Σ c_i·M_ij⌉`, where `M_ij` is the
//! largest exponent of variable `j` among the generators of `a_i`. Every
//! minimal generator `x^v` of the multiplier ideal has `v_j ≤ B_j`.
//!
//! Suppose `v + 1 − δ·1 = p + s` with `δ > 0`, `p` a sum of scaled convex
//! combinations of generators and `s ≥ 0`. Then `p_j ≤ Σ c_i·M_ij ≤ B_j`. If
//! `v_j > B_j`, put `v' = v − e_j`: the same `p` together with the slack `s`
//! with its `j`-th entry replaced by `0` witnesses
//! `v' + 1 − δ'·1 ∈ P` for `δ' = min(δ, v_j − B_j) > 0`, since
//! `v'_j + 1 = v_j ≥ B_j + 1 > p_j`. So `x^v` is not minimal.
//!
//! # Enumeration
//!
//! The interior points form an upward-closed set. For every prefix
//! `(v_1, …, v_{n−1})` in the box the least interior last coordinate `t` is
//! found by bisection, bounded above by the values already found for the
//! prefixes one step below. A pair `(prefix, t)` is a minimal generator
//! exactly when `t` is strictly below the values of all those neighbours.

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::ideal::MonomialIdeal;
use super::newton::{mixed_interior_test, MultiplierQuery, NewtonPolyhedron};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Rational};

fn ceil_u32(r: &Rational) -> u32 {
    let c = r.numer().div_ceil(r.denom());
    c.to_u32().expect("search box fits in u32")
}

/// `J(a_1^{c_1} ⋯ a_k^{c_k})` for monomial ideals, via the Minkowski sum of
/// the scaled Newton polyhedra.
pub fn mixed_multiplier_ideal(terms: &[(Rational, MonomialIdeal)]) -> Result<MonomialIdeal> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::Precondition("no ideals given".into()));
    };
    let n = first.nvars();
    for (c, a) in terms {
        if a.nvars() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: a.nvars(),
            });
        }
        MultiplierQuery::new(c.clone(), a.clone())?;
        if a.is_zero() {
            return Ok(MonomialIdeal::zero(n));
        }
    }
    let polys = terms
        .iter()
        .map(|(_, a)| NewtonPolyhedron::of(a))
        .collect::<Result<Vec<_>>>()?;
    let scaled: Vec<(Rational, &NewtonPolyhedron)> = terms.iter().map(|(c, _)| c.clone()).zip(&polys).collect();
    let mut bounds = Vec::with_capacity(n);
    for j in 0..n {
        let mut s = Rational::from_integer(0.into());
        for (c, a) in terms {
            s += c * Rational::from_integer(a.max_exponents()[j].into());
        }
        bounds.push(ceil_u32(&s));
    }
    let test = |v: &[u32]| mixed_interior_test(v, &scaled);
    MonomialIdeal::new(n, staircase(&bounds, test))
}

/// `J(c·a)`.
pub fn multiplier_ideal(q: &MultiplierQuery) -> Result<MonomialIdeal> {
    if q.ideal().is_zero() {
        return Err(Error::ZeroIdeal);
    }
    mixed_multiplier_ideal(&[(q.c().clone(), q.ideal().clone())])
}

/// Minimal elements of an upward-closed set of lattice points, all of which
/// lie in `[0, bounds]`.
fn staircase(bounds: &[u32], interior: impl Fn(&[u32]) -> bool) -> Vec<Monomial> {
    let n = bounds.len();
    if n == 0 {
        return if interior(&[]) {
            vec![Monomial::new(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let last = bounds[n - 1];
    let none = last + 1;
    let prefix_dims: Vec<usize> = bounds[..n - 1].iter().map(|&b| b as usize + 1).collect();
    let total: usize = prefix_dims.iter().product();
    let mut strides = vec![1usize; n - 1];
    for j in (0..n.saturating_sub(2)).rev() {
        strides[j] = strides[j + 1] * prefix_dims[j + 1];
    }
    let mut table = vec![none; total];
    let mut out = Vec::new();
    let mut point = vec![0u32; n];
    for idx in 0..total {
        let mut rest = idx;
        for j in 0..n - 1 {
            point[j] = (rest / strides[j]) as u32;
            rest %= strides[j];
        }
        let mut upper = none;
        for j in 0..n - 1 {
            if point[j] > 0 {
                upper = upper.min(table[idx - strides[j]]);
            }
        }
        // every value in the table is known to be interior
        let t = if upper == 0 {
            0
        } else {
            let (mut lo, mut hi) = if upper == none {
                point[n - 1] = last;
                if !interior(&point) {
                    table[idx] = none;
                    continue;
                }
                (0, last)
            } else {
                (0, upper)
            };
            // invariant: hi is interior; the answer lies in [lo, hi]
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                point[n - 1] = mid;
                if interior(&point) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            hi
        };
        table[idx] = t;
        if t < upper {
            point[n - 1] = t;
            out.push(Monomial::new(point.clone()));
        }
    }
    out
}
