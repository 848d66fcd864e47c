use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, Rational, Ring};

/// Order of a power series, or a lower bound when every coefficient below
/// the truncation vanished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValuationOrder {
    Exact(u32),
    AtLeast(u32),
}

impl ValuationOrder {
    /// Whether the order is known to be at least `k`. Inconclusive bounds
    /// answer `None`.
    pub fn at_least(self, k: u32) -> Option<bool> {
        match self {
            ValuationOrder::Exact(v) => Some(v >= k),
            ValuationOrder::AtLeast(n) if n >= k => Some(true),
            ValuationOrder::AtLeast(_) => None,
        }
    }
}

impl std::fmt::Display for ValuationOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValuationOrder::Exact(v) => write!(f, "{v}"),
            ValuationOrder::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

/// The valuation `v(f) = ord_t f(t, e^t − 1)` on `k[x, y]` and the ideals
/// `o_k = (x^k, y − p_k(x))` with `p_k(t) = Σ_{i=1}^k t^i/i!`.
pub struct ValuationFamily {
    ring: Ring,
    /// `1/i!` for `i = 0, 1, …`, grown on demand.
    inverse_factorials: Mutex<Vec<Rational>>,
}

impl ValuationFamily {
    /// Uses the first variable of `ring` as `x` and the second as `y`.
    pub fn new(ring: &Ring) -> Result<Self> {
        if ring.nvars() != 2 {
            return Err(Error::Precondition(format!(
                "the valuation family lives in two variables, got {}",
                ring.nvars()
            )));
        }
        Ok(ValuationFamily {
            ring: ring.clone(),
            inverse_factorials: Mutex::new(vec![Rational::one()]),
        })
    }

    pub fn standard() -> Self {
        ValuationFamily::new(&Ring::parse("x,y").expect("valid ring")).expect("two variables")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn coefficients(&self, k: usize) -> Vec<Rational> {
        let mut table = self.inverse_factorials.lock().unwrap_or_else(|e| e.into_inner());
        while table.len() <= k {
            let i = table.len();
            let next = &table[i - 1] / Rational::from_integer(i.into());
            table.push(next);
        }
        table[..=k].to_vec()
    }

    /// `p_k(x)` as a polynomial in the first variable.
    pub fn taylor(&self, k: u32) -> Polynomial {
        let coeffs = self.coefficients(k as usize);
        let terms = (1..=k as usize).map(|i| (Monomial::new(vec![i as u32, 0]), coeffs[i].clone()));
        Polynomial::from_terms(&self.ring, terms)
    }

    /// `o_k = (x^k, y − p_k(x))`.
    pub fn ideal(&self, k: u32) -> Result<Ideal> {
        let x_k = Polynomial::monomial(&self.ring, Monomial::new(vec![k, 0]));
        let y = self.ring.var(1)?;
        Ok(Ideal::new(&self.ring, vec![x_k, &y - &self.taylor(k)]))
    }

    /// `ord_t f(t, p(t))` computed modulo `t^n`.
    pub fn order(&self, f: &Polynomial, n: u32) -> Result<ValuationOrder> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = n as usize;
        let coeffs = self.coefficients(n);
        let mut p = vec![Rational::zero(); n];
        if n > 1 {
            p[1..n].clone_from_slice(&coeffs[1..n]);
        }
        let mut series = vec![Rational::zero(); n];
        // powers of p(t), truncated, built as needed
        let mut p_powers: Vec<Vec<Rational>> = vec![unit_series(n)];
        for (m, c) in f.terms() {
            let (a, b) = (m.exponents()[0] as usize, m.exponents()[1] as usize);
            if a >= n {
                continue;
            }
            while p_powers.len() <= b {
                let next = mul_truncated(p_powers.last().expect("nonempty"), &p, n);
                p_powers.push(next);
            }
            for (i, v) in p_powers[b].iter().enumerate() {
                if i + a < n && !v.is_zero() {
                    series[i + a] += c * v;
                }
            }
        }
        Ok(match series.iter().position(|v| !v.is_zero()) {
            Some(i) => ValuationOrder::Exact(i as u32),
            None => ValuationOrder::AtLeast(n as u32),
        })
    }

    /// Truncation used when comparing with `o_k`: `k + deg f + 4`.
    pub fn default_truncation(k: u32, f: &Polynomial) -> u32 {
        k + f.total_degree().unwrap_or(0) + 4
    }
}

fn unit_series(n: usize) -> Vec<Rational> {
    let mut s = vec![Rational::zero(); n];
    if n > 0 {
        s[0] = Rational::one();
    }
    s
}

fn mul_truncated(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `v(f)` on `k[x, y]` with truncation `n`; the ring must have two variables.
pub fn valuation_order(f: &Polynomial, n: u32) -> Result<ValuationOrder> {
    ValuationFamily::new(f.ring())?.order(f, n)
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub f: String,
    pub k: u32,
    pub valuation: ValuationOrder,
    pub member: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub k_max: u32,
    pub samples: usize,
    /// Samples with valuation at least one, i.e. not decided by the
    /// constant term.
    pub nontrivial: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Structured seeds with positive valuation; `2y − 2x − x²` has valuation 3.
const SEEDS: &[&str] = &["x", "y", "y - x", "2*y - 2*x - x^2", "x^2", "x*y", "y^2 - 2*x*y + x^2"];

/// A random polynomial of degree at most 4 with integer coefficients in
/// `[-5, 5]`. Half of the draws are multiples of a structured seed, so that
/// positive valuations are well represented.
pub fn sample_polynomial(ring: &Ring, rng: &mut impl Rng) -> Polynomial {
    loop {
        let multiplier = random_poly(ring, rng, 2, 2);
        let f = if rng.gen_bool(0.5) {
            let seed = crate::poly::parse_polynomial(ring, SEEDS[rng.gen_range(0..SEEDS.len())]).expect("seed");
            let tail = if rng.gen_bool(0.5) {
                random_poly(ring, rng, 4, 5)
                    .into_terms()
                    .into_iter()
                    .filter(|(m, _)| m.degree() >= 4)
                    .collect()
            } else {
                Vec::new()
            };
            &(&seed * &multiplier) + &Polynomial::from_terms(ring, tail)
        } else {
            random_poly(ring, rng, 4, 5)
        };
        let in_range = f
            .terms()
            .iter()
            .all(|(_, c)| c.abs() <= Rational::from_integer(5.into()));
        if !f.is_zero() && f.total_degree().unwrap_or(0) <= 4 && in_range {
            return f;
        }
    }
}

fn random_poly(ring: &Ring, rng: &mut impl Rng, degree: u32, bound: i64) -> Polynomial {
    let count = rng.gen_range(1..6);
    let terms = (0..count).map(|_| {
        let a = rng.gen_range(0..=degree);
        let b = rng.gen_range(0..=degree - a);
        (
            Monomial::new(vec![a, b]),
            Rational::from_integer(rng.gen_range(-bound..=bound).into()),
        )
    });
    Polynomial::from_terms(ring, terms)
}

/// Compares `v(f) ≥ k` with `f ∈ o_k` on random samples.
pub fn valuation_membership_equivalence(k_max: u32, samples: usize, rng: &mut impl Rng) -> Result<EquivalenceReport> {
    if k_max == 0 {
        return Err(Error::Precondition("k_max must be at least 1".into()));
    }
    let family = ValuationFamily::standard();
    let ideals = (1..=k_max).map(|k| family.ideal(k)).collect::<Result<Vec<_>>>()?;
    let mut mismatches = Vec::new();
    let mut nontrivial = 0;
    for _ in 0..samples {
        let f = sample_polynomial(family.ring(), rng);
        if family.order(&f, 1)? != ValuationOrder::Exact(0) {
            nontrivial += 1;
        }
        for k in 1..=k_max {
            let valuation = family.order(&f, ValuationFamily::default_truncation(k, &f))?;
            let member = ideals[k as usize - 1].is_member(&f)?;
            if valuation.at_least(k) != Some(member) {
                mismatches.push(Mismatch {
                    f: f.to_string(),
                    k,
                    valuation,
                    member,
                });
            }
        }
    }
    Ok(EquivalenceReport {
        k_max,
        samples,
        nontrivial,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fam() -> ValuationFamily {
        ValuationFamily::standard()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(fam().ring(), s).unwrap()
    }

    #[test]
    fn order_examples() {
        let v = fam();
        assert_eq!(v.order(&p("y - x - 1/2*x^2"), 10).unwrap(), ValuationOrder::Exact(3));
        assert_eq!(v.order(&p("x"), 2).unwrap(), ValuationOrder::Exact(1));
        assert_eq!(v.order(&p("x"), 9).unwrap(), ValuationOrder::Exact(1));
        let y_minus_p6 = &p("y") - &v.taylor(6);
        assert_eq!(v.order(&y_minus_p6, 6).unwrap(), ValuationOrder::AtLeast(6));
        assert_eq!(v.order(&y_minus_p6, 8).unwrap(), ValuationOrder::Exact(7));
        assert_eq!(v.order(&p("1"), 3).unwrap(), ValuationOrder::Exact(0));
        assert!(v.order(&Polynomial::zero(v.ring()), 3).is_err());
    }

    #[test]
    fn taylor_polynomials() {
        let v = fam();
        assert_eq!(v.taylor(3), p("x + 1/2*x^2 + 1/6*x^3"));
        assert_eq!(v.taylor(6).coefficient(&Monomial::new(vec![6, 0])), rat(1, 720));
        // p_k is p_{k+1} truncated at degree k
        for k in 1..12 {
            let next = v.taylor(k + 1);
            let truncated =
                Polynomial::from_terms(v.ring(), next.terms().iter().filter(|(m, _)| m.degree() <= k).cloned());
            assert_eq!(truncated, v.taylor(k));
        }
        let o3 = v.ideal(3).unwrap();
        assert!(o3
            .same_ideal(&Ideal::parse(v.ring(), "x^3, y - x - 1/2*x^2 - 1/6*x^3").unwrap())
            .unwrap());
    }

    #[test]
    fn membership_examples() {
        let v = fam();
        let o3 = v.ideal(3).unwrap();
        let f = p("y - x - 1/2*x^2");
        assert!(o3.is_member(&f).unwrap());
        assert_eq!(v.order(&f, 10).unwrap().at_least(3), Some(true));
        let g = p("x^2");
        assert!(!o3.is_member(&g).unwrap());
        assert_eq!(v.order(&g, 10).unwrap().at_least(3), Some(false));
        assert!(!v.ideal(1).unwrap().is_member(&p("1")).unwrap());
    }

    #[test]
    fn valuation_is_multiplicative_and_ultrametric() {
        let v = fam();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 24;
        let mut checked = 0;
        while checked < 100 {
            let f = sample_polynomial(v.ring(), &mut rng);
            let g = sample_polynomial(v.ring(), &mut rng);
            let (ValuationOrder::Exact(a), ValuationOrder::Exact(b)) =
                (v.order(&f, n).unwrap(), v.order(&g, n).unwrap())
            else {
                continue;
            };
            if a >= n / 2 || b >= n / 2 {
                continue;
            }
            assert_eq!(v.order(&(&f * &g), n).unwrap(), ValuationOrder::Exact(a + b));
            let sum = &f + &g;
            if !sum.is_zero() {
                assert!(v.order(&sum, n).unwrap().at_least(a.min(b)) == Some(true));
            }
            checked += 1;
        }
    }

    #[test]
    fn equivalence_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let report = valuation_membership_equivalence(4, 30, &mut rng).unwrap();
        assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
        assert!(report.nontrivial > 5);
    }
}
