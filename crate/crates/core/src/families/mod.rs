//! Graded families of ideals `a_1, a_2, …` with `a_k·a_l ⊆ a_{k+l}`.

mod valuation;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{self, colength, Colength};
use crate::monomial::MonomialIdeal;
use crate::poly::{Polynomial, Ring};
use crate::symbolic::{
    diff_power_member, symbolic_power_decomposed, symbolic_power_points, DecomposedRadical, PointConfiguration,
};

pub use valuation::{
    sample_polynomial, valuation_membership_equivalence, valuation_order, EquivalenceReport, Mismatch, ValuationFamily,
    ValuationOrder,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Powers,
    Symbolic,
    Colon,
    DiffPowers,
    Valuation,
    Custom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Capabilities {
    pub produces_generators: bool,
    pub membership_only: bool,
    pub monomial: bool,
}

type IdealFn = dyn Fn(u32) -> Result<Ideal> + Send + Sync;
type MonomialFn = dyn Fn(u32) -> Result<MonomialIdeal> + Send + Sync;

enum Source {
    Powers(Ideal),
    SymbolicPoints(PointConfiguration),
    Symbolic(DecomposedRadical),
    /// Square-free monomial ideal: generators combinatorially, the
    /// polynomial presentation through its decomposition.
    SymbolicMonomial(MonomialIdeal, DecomposedRadical),
    Colon(Arc<GradedFamily>, Ideal),
    DiffPowers(Ideal),
    Valuation(ValuationFamily),
    Custom(Box<IdealFn>),
    CustomMonomial(Box<MonomialFn>),
}

/// A lazily evaluated graded family. Members are cached per index.
pub struct GradedFamily {
    name: String,
    kind: FamilyKind,
    caps: Capabilities,
    ring: Ring,
    source: Source,
    cache: Mutex<BTreeMap<u32, Ideal>>,
    monomial_cache: Mutex<BTreeMap<u32, MonomialIdeal>>,
}

impl fmt::Debug for GradedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedFamily")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("caps", &self.caps)
            .finish()
    }
}

const GENERATORS: Capabilities = Capabilities {
    produces_generators: true,
    membership_only: false,
    monomial: false,
};

const MONOMIAL: Capabilities = Capabilities {
    produces_generators: true,
    membership_only: false,
    monomial: true,
};

impl GradedFamily {
    fn build(name: String, kind: FamilyKind, caps: Capabilities, ring: &Ring, source: Source) -> Self {
        GradedFamily {
            name,
            kind,
            caps,
            ring: ring.clone(),
            source,
            cache: Mutex::new(BTreeMap::new()),
            monomial_cache: Mutex::new(BTreeMap::new()),
        }
    }

    /// `a_k = a^k`.
    pub fn powers(a: &Ideal) -> Self {
        let caps = if a.is_monomial() { MONOMIAL } else { GENERATORS };
        GradedFamily::build(
            format!("powers of {a}"),
            FamilyKind::Powers,
            caps,
            a.ring(),
            Source::Powers(a.clone()),
        )
    }

    /// `a_k = q^(k)` for a radical ideal given with its components.
    pub fn symbolic(q: DecomposedRadical) -> Self {
        let ring = q.ring().clone();
        GradedFamily::build(
            "symbolic powers".into(),
            FamilyKind::Symbolic,
            GENERATORS,
            &ring,
            Source::Symbolic(q),
        )
    }

    /// Symbolic powers of the ideal of finitely many points.
    pub fn symbolic_points(ring: &Ring, points: PointConfiguration) -> Result<Self> {
        if points.dim() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                left: ring.nvars(),
                right: points.dim(),
            });
        }
        Ok(GradedFamily::build(
            "symbolic powers of points".into(),
            FamilyKind::Symbolic,
            GENERATORS,
            ring,
            Source::SymbolicPoints(points),
        ))
    }

    /// Symbolic powers of a square-free monomial ideal.
    pub fn symbolic_monomial(ring: &Ring, q: &MonomialIdeal) -> Result<Self> {
        let decomposed = DecomposedRadical::from_squarefree_monomial(ring, &q.to_ideal(ring))?;
        Ok(GradedFamily::build(
            format!("symbolic powers of {}", q.display_with(ring.vars())),
            FamilyKind::Symbolic,
            MONOMIAL,
            ring,
            Source::SymbolicMonomial(q.clone(), decomposed),
        ))
    }

    /// `r_k = (a_k : b^k)`.
    pub fn colon(base: Arc<GradedFamily>, b: &Ideal) -> Result<Self> {
        base.ring.check_same(b.ring())?;
        if base.caps.membership_only {
            return Err(Error::Precondition("colon needs a family with generators".into()));
        }
        if b.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let caps = if base.caps.monomial && b.is_monomial() {
            MONOMIAL
        } else {
            GENERATORS
        };
        let ring = base.ring.clone();
        Ok(GradedFamily::build(
            format!("({} : {b}^k)", base.name),
            FamilyKind::Colon,
            caps,
            &ring,
            Source::Colon(base, b.clone()),
        ))
    }

    /// `a_k = {f : Df ∈ a for every differential operator D of order < k}`,
    /// available for membership only.
    pub fn diff_powers(a: &Ideal) -> Self {
        GradedFamily::build(
            format!("differential powers of {a}"),
            FamilyKind::DiffPowers,
            Capabilities {
                produces_generators: false,
                membership_only: true,
                monomial: false,
            },
            a.ring(),
            Source::DiffPowers(a.clone()),
        )
    }

    /// `o_k = (x^k, y − p_k(x))` in `k[x, y]`.
    pub fn valuation() -> Self {
        GradedFamily::valuation_in(&Ring::parse("x,y").expect("valid ring")).expect("two variables")
    }

    /// The valuation family with the first variable of `ring` as `x` and the
    /// second as `y`.
    pub fn valuation_in(ring: &Ring) -> Result<Self> {
        let v = ValuationFamily::new(ring)?;
        Ok(GradedFamily::build(
            "valuation ideals".into(),
            FamilyKind::Valuation,
            GENERATORS,
            ring,
            Source::Valuation(v),
        ))
    }

    pub fn custom(name: &str, ring: &Ring, f: impl Fn(u32) -> Result<Ideal> + Send + Sync + 'static) -> Self {
        GradedFamily::build(
            name.into(),
            FamilyKind::Custom,
            GENERATORS,
            ring,
            Source::Custom(Box::new(f)),
        )
    }

    pub fn custom_monomial(
        name: &str,
        ring: &Ring,
        f: impl Fn(u32) -> Result<MonomialIdeal> + Send + Sync + 'static,
    ) -> Self {
        GradedFamily::build(
            name.into(),
            FamilyKind::Custom,
            MONOMIAL,
            ring,
            Source::CustomMonomial(Box::new(f)),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn capabilities(&self) -> Capabilities {
        self.caps
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn check_index(k: u32) -> Result<()> {
        if k == 0 {
            Err(Error::Precondition("family members are indexed from 1".into()))
        } else {
            Ok(())
        }
    }

    /// `a_k` as a polynomial ideal.
    pub fn ideal_at(&self, k: u32) -> Result<Ideal> {
        Self::check_index(k)?;
        if let Some(i) = self.cache.lock().unwrap_or_else(|e| e.into_inner()).get(&k) {
            return Ok(i.clone());
        }
        let ideal = match &self.source {
            Source::Powers(a) => ideal_ops::power(a, k)?,
            Source::SymbolicPoints(t) => symbolic_power_points(&self.ring, t, k)?,
            Source::Symbolic(q) | Source::SymbolicMonomial(_, q) => symbolic_power_decomposed(q, k)?,
            Source::Colon(base, b) => ideal_ops::quotient(&base.ideal_at(k)?, &ideal_ops::power(b, k)?)?,
            Source::DiffPowers(_) => {
                return Err(Error::Precondition(format!(
                    "{} is available for membership only",
                    self.name
                )))
            }
            Source::Valuation(v) => v.ideal(k)?,
            Source::Custom(f) => f(k)?,
            Source::CustomMonomial(f) => f(k)?.to_ideal(&self.ring),
        };
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        Ok(cache.entry(k).or_insert(ideal).clone())
    }

    /// `a_k` as a monomial ideal, computed combinatorially.
    pub fn monomial_at(&self, k: u32) -> Result<MonomialIdeal> {
        Self::check_index(k)?;
        if !self.caps.monomial {
            return Err(Error::Precondition(format!("{} is not a monomial family", self.name)));
        }
        if let Some(i) = self.monomial_cache.lock().unwrap_or_else(|e| e.into_inner()).get(&k) {
            return Ok(i.clone());
        }
        let ideal = match &self.source {
            Source::Powers(a) => MonomialIdeal::from_ideal(a)?.power(k),
            Source::SymbolicMonomial(q, _) => q.symbolic_power(k)?,
            Source::Colon(base, b) => base.monomial_at(k)?.quotient(&MonomialIdeal::from_ideal(b)?.power(k))?,
            Source::CustomMonomial(f) => f(k)?,
            _ => unreachable!("monomial capability is only set for monomial sources"),
        };
        let mut cache = self.monomial_cache.lock().unwrap_or_else(|e| e.into_inner());
        Ok(cache.entry(k).or_insert(ideal).clone())
    }

    /// Whether `f ∈ a_k`.
    pub fn member_at(&self, k: u32, f: &Polynomial) -> Result<bool> {
        Self::check_index(k)?;
        match &self.source {
            Source::DiffPowers(a) => diff_power_member(f, a, k),
            _ => self.ideal_at(k)?.is_member(f),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomFailure {
    pub k: u32,
    pub l: u32,
    /// An element of `a_k·a_l` outside `a_{k+l}`.
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub n: u32,
    pub pairs_checked: usize,
    /// True when products were sampled instead of compared as ideals.
    pub sampled: bool,
    pub failure: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `a_k·a_l ⊆ a_{k+l}` for all `k + l ≤ n`, in order of increasing
/// `k + l` and then `k`, stopping at the first failure. Families available
/// for membership only are checked on products of sampled elements of
/// `a^k ⊆ a_k` (with random multipliers).
pub fn check_graded_axiom(family: &GradedFamily, n: u32) -> Result<AxiomReport> {
    let mut pairs_checked = 0;
    let sampled = family.caps.membership_only;
    let mut rng = ChaCha8Rng::seed_from_u64(u64::from(n));
    for s in 2..=n {
        for k in 1..s {
            let l = s - k;
            if k > l && !sampled {
                // the product is symmetric
                continue;
            }
            pairs_checked += 1;
            let witness = if family.caps.monomial {
                let prod = family.monomial_at(k)?.product(&family.monomial_at(l)?)?;
                family
                    .monomial_at(s)?
                    .first_non_member(&prod)?
                    .map(|m| Polynomial::monomial(&family.ring, m.clone()).to_string())
            } else if sampled {
                sampled_product_failure(family, k, l, &mut rng)?
            } else {
                let prod = ideal_ops::product(&family.ideal_at(k)?, &family.ideal_at(l)?)?;
                family.ideal_at(s)?.first_non_member(&prod)?.map(|w| w.to_string())
            };
            if let Some(witness) = witness {
                return Ok(AxiomReport {
                    n,
                    pairs_checked,
                    sampled,
                    failure: Some(AxiomFailure { k, l, witness }),
                });
            }
        }
    }
    Ok(AxiomReport {
        n,
        pairs_checked,
        sampled,
        failure: None,
    })
}

fn sampled_product_failure(family: &GradedFamily, k: u32, l: u32, rng: &mut impl Rng) -> Result<Option<String>> {
    let Source::DiffPowers(a) = &family.source else {
        unreachable!("sampling is only used for membership-only families")
    };
    let pick = |i: &Ideal, rng: &mut ChaCha8Rng| -> Polynomial {
        let g = &i.gens()[rng.gen_range(0..i.gens().len())];
        let m = family
            .ring
            .var(rng.gen_range(0..family.ring.nvars()))
            .expect("in range");
        if rng.gen_bool(0.5) {
            g * &m
        } else {
            g.clone()
        }
    };
    let (ak, al) = (ideal_ops::power(a, k)?, ideal_ops::power(a, l)?);
    if ak.is_zero() || al.is_zero() {
        return Ok(None);
    }
    let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
    for _ in 0..3 {
        let f = &pick(&ak, &mut local) * &pick(&al, &mut local);
        if !family.member_at(k + l, &f)? {
            return Ok(Some(f.to_string()));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Growth {
    Linear,
    Quadratic,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub colengths: Vec<u64>,
    pub growth: Growth,
}

/// Exact finite differences: vanishing second differences with nonzero
/// first differences are linear; constant nonzero second differences are
/// quadratic.
pub fn classify_growth(values: &[u64]) -> Growth {
    let d1: Vec<i128> = values.windows(2).map(|w| w[1] as i128 - w[0] as i128).collect();
    let d2: Vec<i128> = d1.windows(2).map(|w| w[1] - w[0]).collect();
    if d1.is_empty() {
        return Growth::Other;
    }
    if d2.iter().all(|&d| d == 0) {
        return if d1[0] != 0 { Growth::Linear } else { Growth::Other };
    }
    if d2.iter().all(|&d| d == d2[0]) {
        return Growth::Quadratic;
    }
    Growth::Other
}

/// Colengths of `a_1, …, a_{k_max}` and their growth class.
pub fn colength_growth(family: &GradedFamily, k_max: u32) -> Result<GrowthReport> {
    let mut colengths = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        match colength(&family.ideal_at(k)?)? {
            Colength::Finite(c) => colengths.push(c),
            Colength::Infinite => return Err(Error::InfiniteColength),
        }
    }
    let growth = classify_growth(&colengths);
    Ok(GrowthReport { colengths, growth })
}
