//! Asymptotic multiplier ideals of monomial graded families and the
//! containment checks built on multiplier ideals.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use super::ideal::MonomialIdeal;
use super::multiplier::{mixed_multiplier_ideal, multiplier_ideal};
use super::newton::MultiplierQuery;
use crate::error::{Error, Result};
use crate::families::GradedFamily;
use crate::ideal_ops;
use crate::poly::{format_rational, Rational};

/// Largest `p` sampled by [`asymptotic_multiplier_ideal`] by default.
pub const DEFAULT_MAX_P: u32 = 64;

/// `big ⊇ small` for monomial ideals, with the first generator of `small`
/// outside `big` as witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub claim: String,
    pub holds: bool,
    pub witness: Option<Vec<u32>>,
}

impl InclusionCheck {
    fn of(claim: String, big: &MonomialIdeal, small: &MonomialIdeal) -> Result<Self> {
        let witness = big.first_non_member(small)?.map(|m| m.exponents().to_vec());
        Ok(InclusionCheck {
            claim,
            holds: witness.is_none(),
            witness,
        })
    }
}

fn check_positive(c: &Rational) -> Result<()> {
    if c.is_positive() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("coefficient must be positive, got {c}")))
    }
}

fn rational(n: u32) -> Rational {
    Rational::from_integer(n.into())
}

/// `J(c·a)` with the zero-ideal convention `J(c·(0)) = (0)`.
fn j(c: &Rational, a: &MonomialIdeal) -> Result<MonomialIdeal> {
    if a.is_zero() {
        return Ok(MonomialIdeal::zero(a.nvars()));
    }
    multiplier_ideal(&MultiplierQuery::new(c.clone(), a.clone())?)
}

/// `J((c/p)·a_{pℓ})`.
pub fn chain_term(family: &GradedFamily, c: &Rational, l: u32, p: u32) -> Result<MonomialIdeal> {
    check_positive(c)?;
    if l == 0 || p == 0 {
        return Err(Error::Precondition("indices must be positive".into()));
    }
    j(&(c / rational(p)), &family.monomial_at(p * l)?)
}

#[derive(Clone, Debug)]
pub struct Asymptotic {
    pub ideal: MonomialIdeal,
    /// The `p` at which the chain was found to be stable.
    pub stable_p: u32,
    /// Every chain term computed on the way, by `p`.
    pub samples: BTreeMap<u32, MonomialIdeal>,
}

/// `J(c·‖a_ℓ‖)`: the chain `J((c/p)·a_{pℓ})` is computed for `p = 1, 2, 4, …`
/// until `J_p = J_{2p} = J_{4p}`; the candidate is accepted once the chain
/// inclusion `J_p ⊆ J_{3p}` also holds with equality. Every sampled `p` stays
/// at most `max_p`.
pub fn asymptotic_multiplier_ideal_with(family: &GradedFamily, c: &Rational, l: u32, max_p: u32) -> Result<Asymptotic> {
    if !family.capabilities().monomial {
        return Err(Error::Precondition(format!("family {} is not monomial", family.name())));
    }
    check_positive(c)?;
    let mut samples: BTreeMap<u32, MonomialIdeal> = BTreeMap::new();
    let term = |p: u32, samples: &mut BTreeMap<u32, MonomialIdeal>| -> Result<MonomialIdeal> {
        if let Some(t) = samples.get(&p) {
            return Ok(t.clone());
        }
        let t = chain_term(family, c, l, p)?;
        samples.insert(p, t.clone());
        Ok(t)
    };
    let mut p = 1u32;
    while p.checked_mul(4).is_some_and(|q| q <= max_p) {
        let base = term(p, &mut samples)?;
        if term(2 * p, &mut samples)? == base && term(4 * p, &mut samples)? == base {
            let three = term(3 * p, &mut samples)?;
            if !three.contains(&base)? {
                return Err(Error::Precondition(format!(
                    "chain inclusion J_{p} in J_{} fails; the family is not graded",
                    3 * p
                )));
            }
            if three == base {
                return Ok(Asymptotic {
                    ideal: base,
                    stable_p: p,
                    samples,
                });
            }
        }
        p *= 2;
    }
    Err(Error::StabilizationBudget { max_p })
}

pub fn asymptotic_multiplier_ideal(family: &GradedFamily, c: &Rational, l: u32) -> Result<Asymptotic> {
    asymptotic_multiplier_ideal_with(family, c, l, DEFAULT_MAX_P)
}

/// `J((c/p)·a_{pℓ}) ⊆ J((c/pn)·a_{pnℓ})`.
pub fn verify_chain(family: &GradedFamily, c: &Rational, l: u32, p: u32, n: u32) -> Result<InclusionCheck> {
    check_positive(c)?;
    if n == 0 {
        return Err(Error::Precondition("indices must be positive".into()));
    }
    let small = chain_term(family, c, l, p)?;
    let big = chain_term(family, c, l, p * n)?;
    let cs = format_rational(c);
    InclusionCheck::of(
        format!("J(({cs}/{p})*a_{}) in J(({cs}/{})*a_{})", p * l, p * n, p * n * l),
        &big,
        &small,
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct SubadditivityReport {
    /// `J(a^c·b^d) ⊆ J(a^c)·J(b^d)`.
    pub mixed: InclusionCheck,
    /// `J(cm·a) ⊆ J(c·a)^m` for `m = 1, 2, 3`.
    pub powers: Vec<InclusionCheck>,
}

impl SubadditivityReport {
    pub fn all_pass(&self) -> bool {
        self.mixed.holds && self.powers.iter().all(|p| p.holds)
    }
}

pub fn verify_subadditivity(
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    c: &Rational,
    d: &Rational,
) -> Result<SubadditivityReport> {
    check_positive(c)?;
    check_positive(d)?;
    let mixed_ideal = mixed_multiplier_ideal(&[(c.clone(), a.clone()), (d.clone(), b.clone())])?;
    let ja = j(c, a)?;
    let jb = j(d, b)?;
    let (cs, ds) = (format_rational(c), format_rational(d));
    let mixed = InclusionCheck::of(
        format!("J(a^{cs}*b^{ds}) in J(a^{cs})*J(b^{ds})"),
        &ja.product(&jb)?,
        &mixed_ideal,
    )?;
    let mut powers = Vec::new();
    for m in 1..=3u32 {
        let lhs = j(&(c * rational(m)), a)?;
        powers.push(InclusionCheck::of(
            format!("J({}*a) in J({cs}*a)^{m}", format_rational(&(c * rational(m)))),
            &ja.power(m),
            &lhs,
        )?);
    }
    Ok(SubadditivityReport { mixed, powers })
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticContainmentReport {
    pub l: u32,
    pub stable_p: u32,
    /// `a_ℓ ⊆ J(‖a_ℓ‖)`.
    pub contains_family_member: InclusionCheck,
    /// `J(‖a_{mℓ}‖) ⊆ J(‖a_ℓ‖)^m` for `m = 1..=m_max`.
    pub power_checks: Vec<InclusionCheck>,
}

impl AsymptoticContainmentReport {
    pub fn all_pass(&self) -> bool {
        self.contains_family_member.holds && self.power_checks.iter().all(|p| p.holds)
    }
}

pub fn verify_asymptotic_containments(
    family: &GradedFamily,
    l: u32,
    m_max: u32,
) -> Result<AsymptoticContainmentReport> {
    let one = rational(1);
    let base = asymptotic_multiplier_ideal(family, &one, l)?;
    let a_l = family.monomial_at(l)?;
    let contains_family_member = InclusionCheck::of(format!("a_{l} in J(||a_{l}||)"), &base.ideal, &a_l)?;
    let mut power_checks = Vec::new();
    for m in 1..=m_max {
        let lhs = if m == 1 {
            base.ideal.clone()
        } else {
            asymptotic_multiplier_ideal(family, &one, m * l)?.ideal
        };
        power_checks.push(InclusionCheck::of(
            format!("J(||a_{}||) in J(||a_{l}||)^{m}", m * l),
            &base.ideal.power(m),
            &lhs,
        )?);
    }
    Ok(AsymptoticContainmentReport {
        l,
        stable_p: base.stable_p,
        contains_family_member,
        power_checks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionStatus {
    Pass,
    /// `J(‖a_ℓ‖) ⊄ b`: nothing is claimed.
    HypothesisFails,
    /// The hypothesis holds but some `a_{mℓ} ⊄ b^m`. This would mean a bug.
    ConclusionFails,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConclusionCheck {
    pub m: u32,
    pub claim: String,
    pub holds: bool,
    /// A generator of `a_{mℓ}` outside `b^m`, in the canonical grammar.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub l: u32,
    pub stable_p: u32,
    pub hypothesis: InclusionCheck,
    pub conclusion: Vec<ConclusionCheck>,
    pub status: CriterionStatus,
}

/// Checks `J(‖a_ℓ‖) ⊆ b` through the stabilized asymptotic multiplier ideal,
/// then `a_{mℓ} ⊆ b^m` for `m = 1..=m_max` through Gröbner bases of the
/// family's polynomial presentation. The two routes share no intermediate
/// ideals.
pub fn verify_asymptotic_criterion(
    family: &GradedFamily,
    b: &MonomialIdeal,
    l: u32,
    m_max: u32,
) -> Result<CriterionReport> {
    let asym = asymptotic_multiplier_ideal(family, &rational(1), l)?;
    let hypothesis = InclusionCheck::of(format!("J(||a_{l}||) in b"), b, &asym.ideal)?;
    let ring = family.ring();
    let b_poly = b.to_ideal(ring);
    let mut conclusion = Vec::new();
    for m in 1..=m_max {
        let lhs = family.ideal_at(m * l)?;
        let rhs = ideal_ops::power(&b_poly, m)?;
        let witness = rhs.first_non_member(&lhs)?;
        conclusion.push(ConclusionCheck {
            m,
            claim: format!("a_{} in b^{m}", m * l),
            holds: witness.is_none(),
            witness: witness.map(|w| w.to_string()),
        });
    }
    let status = if !hypothesis.holds {
        CriterionStatus::HypothesisFails
    } else if conclusion.iter().all(|c| c.holds) {
        CriterionStatus::Pass
    } else {
        CriterionStatus::ConclusionFails
    };
    Ok(CriterionReport {
        l,
        stable_p: asym.stable_p,
        hypothesis,
        conclusion,
        status,
    })
}

/// `J(Y, c·a_Y) ⊆ J(X, c·a)·O_Y` for the coordinate subspace `Y` of the kept
/// variables.
pub fn verify_restriction(a: &MonomialIdeal, c: &Rational, keep: &[usize]) -> Result<InclusionCheck> {
    check_positive(c)?;
    let a_y = a.restrict(keep)?;
    if a_y.is_zero() {
        return Err(Error::Precondition(
            "the restriction vanishes: the zero set of the ideal contains the subspace".into(),
        ));
    }
    let lhs = j(c, &a_y)?;
    let rhs = j(c, a)?.restrict(keep)?;
    InclusionCheck::of(
        format!("J(Y, {}*a_Y) in J(X, {}*a)|_Y", format_rational(c), format_rational(c)),
        &rhs,
        &lhs,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::{rat, Monomial, Ring};

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect()).unwrap()
    }

    fn cusp_powers() -> GradedFamily {
        let r = Ring::parse("x,y").unwrap();
        GradedFamily::powers(&Ideal::parse(&r, "x^2, y^3").unwrap())
    }

    fn square_symbolic() -> (GradedFamily, MonomialIdeal) {
        let r = Ring::parse("x,y,z,w").unwrap();
        let q = mi(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        (GradedFamily::symbolic_monomial(&r, &q).unwrap(), q)
    }

    #[test]
    fn asymptotic_of_power_family_is_scaled_multiplier_ideal() {
        let fam = cusp_powers();
        let a = mi(2, &[&[2, 0], &[0, 3]]);
        let asym = asymptotic_multiplier_ideal(&fam, &rat(1, 1), 2).unwrap();
        assert_eq!(asym.ideal, j(&rat(2, 1), &a).unwrap());
        for (p, t) in &asym.samples {
            assert!(asym.ideal.contains(t).unwrap(), "p = {p}");
        }
        for p in [5, 6, 7] {
            assert!(asym
                .ideal
                .contains(&chain_term(&fam, &rat(1, 1), 2, p).unwrap())
                .unwrap());
        }
    }

    #[test]
    fn asymptotic_of_symbolic_family() {
        let (fam, q) = square_symbolic();
        let asym = asymptotic_multiplier_ideal(&fam, &rat(1, 1), 2).unwrap();
        assert!(q.contains(&asym.ideal).unwrap());
    }

    #[test]
    fn chain_checks() {
        let (sym, _) = square_symbolic();
        for fam in [cusp_powers(), sym] {
            for (p, n) in [(1, 2), (2, 2), (1, 3)] {
                assert!(verify_chain(&fam, &rat(1, 1), 1, p, n).unwrap().holds);
            }
        }
        assert!(verify_chain(&cusp_powers(), &rat(0, 1), 1, 1, 2).is_err());
    }

    #[test]
    fn subadditivity_examples() {
        let a = mi(2, &[&[2, 0], &[0, 3]]);
        let report = verify_subadditivity(&a, &a, &rat(1, 1), &rat(1, 1)).unwrap();
        assert!(report.all_pass());
        let unit = verify_subadditivity(&a, &MonomialIdeal::unit(2), &rat(1, 2), &rat(3, 2)).unwrap();
        assert!(unit.all_pass());
        let j2 = mixed_multiplier_ideal(&[(rat(1, 1), a.clone()), (rat(1, 1), a.clone())]).unwrap();
        assert_eq!(j2, j(&rat(2, 1), &a).unwrap());
    }

    #[test]
    fn asymptotic_containment_checks() {
        let report = verify_asymptotic_containments(&cusp_powers(), 1, 3).unwrap();
        assert!(report.all_pass(), "{report:?}");
        let (sym, _) = square_symbolic();
        assert!(verify_asymptotic_containments(&sym, 1, 3).unwrap().all_pass());
    }

    #[test]
    fn asymptotic_criterion_examples() {
        let (sym, q) = square_symbolic();
        let report = verify_asymptotic_criterion(&sym, &q, 2, 3).unwrap();
        assert_eq!(report.status, CriterionStatus::Pass, "{report:?}");
        let unit = verify_asymptotic_criterion(&sym, &MonomialIdeal::unit(4), 2, 2).unwrap();
        assert_eq!(unit.status, CriterionStatus::Pass);
        // with l = 1 the hypothesis J(||q||) in q fails
        let weak = verify_asymptotic_criterion(&sym, &q, 1, 1).unwrap();
        assert_eq!(weak.status, CriterionStatus::HypothesisFails);
    }

    #[test]
    fn restriction_examples() {
        let a = mi(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]);
        assert!(verify_restriction(&a, &rat(1, 1), &[0, 1]).unwrap().holds);
        let all = verify_restriction(&a, &rat(3, 2), &[0, 1, 2]).unwrap();
        assert!(all.holds);
        assert!(verify_restriction(&mi(3, &[&[0, 0, 1]]), &rat(1, 1), &[0, 1]).is_err());
    }

    #[test]
    fn stabilization_budget_is_reported() {
        let fam = cusp_powers();
        assert!(matches!(
            asymptotic_multiplier_ideal_with(&fam, &rat(1, 1), 1, 2),
            Err(Error::StabilizationBudget { max_p: 2 })
        ));
    }
}
