//! Symbolic powers by three routes (point configurations, decomposed radical
//! ideals, and derivative membership) and the uniform containment verifier
//! `q^(m·e) ⊆ q^m`.
//!
//! Generators of a symbolic power are only produced when the caller supplies
//! the components; for a bare radical ideal only [`diff_power_member`] is
//! available.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{intersect_all, power, quotient, saturate};
use crate::poly::{Polynomial, Rational, Ring};

/// Whether every partial derivative of `f` of total order below `m` lies in
/// `q`. For radical `q` this is membership in the symbolic power `q^(m)`
/// (characteristic zero); radicality is the caller's responsibility.
pub fn diff_power_member(f: &Polynomial, q: &Ideal, m: u32) -> Result<bool> {
    q.ring().check_same(f.ring())?;
    if m == 0 || f.is_zero() {
        return Ok(true);
    }
    let n = f.ring().nvars();
    // (derivative, smallest variable index still allowed) enumerates each
    // multi-index exactly once.
    let mut layer: Vec<(Polynomial, usize)> = vec![(f.clone(), 0)];
    for depth in 0..m {
        for (g, _) in &layer {
            if !q.is_member(g)? {
                return Ok(false);
            }
        }
        if depth + 1 == m {
            break;
        }
        let mut next = Vec::new();
        for (g, start) in &layer {
            for i in *start..n {
                let d = g.partial_derivative(i)?;
                if !d.is_zero() {
                    next.push((d, i));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Ok(true)
}

/// Finitely many distinct points of affine `dim`-space with rational coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: p.len(),
                });
            }
        }
        for i in 0..points.len() {
            if points[..i].contains(&points[i]) {
                return Err(Error::Precondition("points must be pairwise distinct".into()));
            }
        }
        if points.is_empty() {
            return Err(Error::Precondition("empty point configuration".into()));
        }
        Ok(PointConfiguration { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// The ideal `(x_1 - p_1, …, x_n - p_n)` of one point.
    pub fn maximal_ideal(ring: &Ring, point: &[Rational]) -> Result<Ideal> {
        if ring.nvars() != point.len() {
            return Err(Error::DimensionMismatch {
                left: ring.nvars(),
                right: point.len(),
            });
        }
        let gens = point
            .iter()
            .enumerate()
            .map(|(i, c)| Ok(&ring.var(i)? - &Polynomial::constant(ring, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }
}

/// `⋂_p M_p^m` over the points of `config`.
pub fn symbolic_power_points(ring: &Ring, config: &PointConfiguration, m: u32) -> Result<Ideal> {
    if m == 0 {
        return Err(Error::Precondition("symbolic power exponent must be at least 1".into()));
    }
    let parts = config
        .points()
        .iter()
        .map(|p| power(&PointConfiguration::maximal_ideal(ring, p)?, m))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(&parts)
}

/// One prime component of a decomposed radical ideal.
#[derive(Clone, Debug)]
pub struct Component {
    pub prime: Ideal,
    /// An element outside the prime whose saturation strips the embedded
    /// components of the prime's powers.
    pub witness: Option<Polynomial>,
    /// Prime generated by a regular sequence (e.g. linear forms): its
    /// ordinary powers are already primary and saturation is skipped.
    pub complete_intersection: bool,
}

impl Component {
    pub fn complete_intersection(prime: Ideal) -> Self {
        Component {
            prime,
            witness: None,
            complete_intersection: true,
        }
    }

    pub fn with_witness(prime: Ideal, witness: Polynomial) -> Self {
        Component {
            prime,
            witness: Some(witness),
            complete_intersection: false,
        }
    }
}

/// A radical ideal presented as an irredundant intersection of primes, with
/// an upper bound `e` on their codimensions.
#[derive(Clone, Debug)]
pub struct DecomposedRadical {
    ring: Ring,
    components: Vec<Component>,
    codim_bound: u32,
}

impl DecomposedRadical {
    /// Validates witnesses (`(P : s) = P`) and the absence of inclusions
    /// among components.
    pub fn new(ring: &Ring, components: Vec<Component>, codim_bound: u32) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Precondition("no components".into()));
        }
        for c in &components {
            ring.check_same(c.prime.ring())?;
            match (&c.witness, c.complete_intersection) {
                (Some(s), _) => {
                    let colon = quotient(&c.prime, &Ideal::new(ring, vec![s.clone()]))?;
                    if !colon.same_ideal(&c.prime)? {
                        return Err(Error::InvalidWitness {
                            component: c.prime.to_string(),
                            witness: s.to_string(),
                        });
                    }
                }
                (None, true) => {}
                (None, false) => {
                    return Err(Error::Precondition(format!(
                        "component {} needs a witness or the complete-intersection flag",
                        c.prime
                    )))
                }
            }
        }
        for (i, a) in components.iter().enumerate() {
            for (j, b) in components.iter().enumerate() {
                if i != j && a.prime.contains(&b.prime)? {
                    return Err(Error::Precondition(format!(
                        "component {} contains component {}",
                        a.prime, b.prime
                    )));
                }
            }
        }
        Ok(DecomposedRadical {
            ring: ring.clone(),
            components,
            codim_bound,
        })
    }

    /// Maximal ideals of affine points; codimension bound `n`.
    pub fn from_points(ring: &Ring, config: &PointConfiguration) -> Result<Self> {
        let comps = config
            .points()
            .iter()
            .map(|p| {
                Ok(Component::complete_intersection(PointConfiguration::maximal_ideal(
                    ring, p,
                )?))
            })
            .collect::<Result<Vec<_>>>()?;
        DecomposedRadical::new(ring, comps, ring.nvars() as u32)
    }

    /// The affine cone over points of projective `(n-1)`-space: each point
    /// becomes the line through the origin, cut out by `n-1` linear forms.
    /// Codimension bound `n-1`.
    pub fn cone_over_points(ring: &Ring, points: &[Vec<Rational>]) -> Result<Self> {
        let n = ring.nvars();
        let mut normalized: Vec<Vec<Rational>> = Vec::new();
        let mut comps = Vec::new();
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: p.len(),
                });
            }
            let pivot = p
                .iter()
                .position(|c| !c.is_zero())
                .ok_or_else(|| Error::Precondition("the zero vector is not a projective point".into()))?;
            let norm: Vec<Rational> = p.iter().map(|c| c / &p[pivot]).collect();
            if normalized.contains(&norm) {
                return Err(Error::Precondition("projective points must be distinct".into()));
            }
            normalized.push(norm);
            let xp = ring.var(pivot)?;
            let forms = (0..n)
                .filter(|&i| i != pivot)
                .map(|i| {
                    let xi = ring.var(i)?;
                    Ok(&xi.scale(&p[pivot]) - &xp.scale(&p[i]))
                })
                .collect::<Result<Vec<_>>>()?;
            comps.push(Component::complete_intersection(Ideal::new(ring, forms)));
        }
        DecomposedRadical::new(ring, comps, (n - 1) as u32)
    }

    /// A square-free monomial ideal decomposes into the primes generated by
    /// its minimal vertex covers; those are complete intersections.
    pub fn from_squarefree_monomial(ring: &Ring, q: &Ideal) -> Result<Self> {
        let mono = crate::monomial::MonomialIdeal::from_ideal(q)?;
        let primes = mono.minimal_primes()?;
        let codim = primes.iter().map(|p| p.gens().len() as u32).max().unwrap_or(0);
        let comps = primes
            .iter()
            .map(|p| Component::complete_intersection(p.to_ideal(ring)))
            .collect();
        DecomposedRadical::new(ring, comps, codim)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn codim_bound(&self) -> u32 {
        self.codim_bound
    }

    /// `q = ⋂ P_i`.
    pub fn radical(&self) -> Result<Ideal> {
        let primes: Vec<Ideal> = self.components.iter().map(|c| c.prime.clone()).collect();
        intersect_all(&primes)
    }
}

/// `q^(m) = ⋂_i (P_i^m : s_i^∞)`, skipping saturation for complete
/// intersection components. Generators produced through a witness are
/// re-checked with [`diff_power_member`]; a disagreement is an error.
pub fn symbolic_power_decomposed(q: &DecomposedRadical, m: u32) -> Result<Ideal> {
    if m == 0 {
        return Err(Error::Precondition("symbolic power exponent must be at least 1".into()));
    }
    let mut parts = Vec::with_capacity(q.components.len());
    let mut saturated = false;
    for c in &q.components {
        let pm = power(&c.prime, m)?;
        match (&c.witness, c.complete_intersection) {
            (Some(s), false) => {
                saturated = true;
                let (sat, _) = saturate(&pm, &Ideal::new(&q.ring, vec![s.clone()]))?;
                parts.push(sat);
            }
            _ => parts.push(pm),
        }
    }
    let result = intersect_all(&parts)?;
    if saturated && m > 1 {
        let radical = q.radical()?;
        for g in result.gens() {
            if !diff_power_member(g, &radical, m)? {
                return Err(Error::CrossCheck {
                    generator: g.to_string(),
                });
            }
        }
    }
    Ok(result)
}

/// Memoizes symbolic powers of one decomposed radical ideal.
pub struct SymbolicPowers<'a> {
    q: &'a DecomposedRadical,
    cache: BTreeMap<u32, Ideal>,
}

impl<'a> SymbolicPowers<'a> {
    pub fn new(q: &'a DecomposedRadical) -> Self {
        SymbolicPowers {
            q,
            cache: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, m: u32) -> Result<Ideal> {
        if let Some(i) = self.cache.get(&m) {
            return Ok(i.clone());
        }
        let i = symbolic_power_decomposed(self.q, m)?;
        self.cache.insert(m, i.clone());
        Ok(i)
    }
}

/// One containment `big ⊇ small` checked by the verifier.
#[derive(Clone, Debug, Serialize)]
pub struct ContainmentCheck {
    pub m: u32,
    /// `None` for the main form `q^(me) ⊆ q^m`; `Some(l)` for the refined
    /// form `q^(ml) ⊆ (q^(l+1-e))^m`.
    pub level: Option<u32>,
    pub claim: String,
    pub holds: bool,
    /// A generator of the left side outside the right side.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniformContainmentReport {
    pub codim_bound: u32,
    pub m_max: u32,
    pub checks: Vec<ContainmentCheck>,
}

impl UniformContainmentReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&ContainmentCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

/// Checks `q^(me) ⊆ q^m` for `m = 1..=m_max`, and the refined form
/// `q^(ml) ⊆ (q^(l+1-e))^m` for `l ∈ {e, e+1}`.
pub fn verify_uniform_containment(q: &DecomposedRadical, m_max: u32) -> Result<UniformContainmentReport> {
    let e = q.codim_bound.max(1);
    let mut powers = SymbolicPowers::new(q);
    let base = powers.get(1)?;
    let mut checks = Vec::new();
    for m in 1..=m_max {
        let small = powers.get(m * e)?;
        let big = power(&base, m)?;
        let witness = big.first_non_member(&small)?;
        checks.push(ContainmentCheck {
            m,
            level: None,
            claim: format!("q^({}) in q^{}", m * e, m),
            holds: witness.is_none(),
            witness: witness.map(|w| w.to_string()),
        });
        for level in [e, e + 1] {
            let inner = powers.get(level + 1 - e)?;
            let big = power(&inner, m)?;
            let small = powers.get(m * level)?;
            let witness = big.first_non_member(&small)?;
            checks.push(ContainmentCheck {
                m,
                level: Some(level),
                claim: format!("q^({}) in (q^({}))^{}", m * level, level + 1 - e, m),
                holds: witness.is_none(),
                witness: witness.map(|w| w.to_string()),
            });
        }
    }
    Ok(UniformContainmentReport {
        codim_bound: e,
        m_max,
        checks,
    })
}
