use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::rational::format_rational;
use super::{Monomial, MonomialOrder, Rational, Ring};

/// A sparse polynomial with rational coefficients.
///
/// Terms are kept sorted by descending [`Monomial`] storage order with no
/// zero coefficients, so structural equality is mathematical equality.
///
/// The arithmetic operators panic on a ring mismatch; the `try_*` methods
/// report it as an error instead.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Self {
        Self::term(ring, m, Rational::one())
    }

    pub fn term(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut terms: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_terms(&self.ring, acc)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Multiplying by a monomial preserves the storage order.
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.product(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Divides by the leading coefficient under `order`. Zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.ring.nvars() {
            return Err(Error::VariableIndex {
                index: var,
                nvars: self.ring.nvars(),
            });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            if e == 0 {
                return None;
            }
            let mut d = m.clone();
            d.exponents_mut()[var] = e - 1;
            Some((d, c * Rational::from_integer(e.into())))
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.ring.check_same(&divisor.ring)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        // Storage order is lex, so the first term leads.
        let (lm, lc) = divisor.terms[0].clone();
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            let Some(q) = lm.quotient_of(&m) else {
                return Ok(None);
            };
            let qc = c / &lc;
            rest = rest.merge(&divisor.mul_term(&q, &qc), true);
            quotient.push((q, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quotient)))
    }

    /// Re-homes the polynomial in a ring with the same number of variables.
    pub fn with_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                left: self.ring.nvars(),
                right: ring.nvars(),
            });
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Canonical text, terms in descending `order`.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        let mut terms: Vec<&(Monomial, Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0).then_with(|| b.0.cmp(&a.0)));
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                s.push_str(&m.display_with(self.ring.vars()).to_string());
            } else {
                s.push_str(&format_rational(&abs));
                s.push('*');
                s.push_str(&m.display_with(self.ring.vars()).to_string());
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending grevlex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::grevlex()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::poly::{int, rat};
    use proptest::prelude::*;

    fn ring(v: &str) -> Ring {
        Ring::parse(v).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring("x,y");
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2-y^2"));
        assert_eq!(&p(&r, "x^2*y+3") + &Polynomial::zero(&r), p(&r, "x^2*y+3"));
        assert_eq!(&p(&r, "x^2*y+y") - &p(&r, "y"), p(&r, "x^2*y"));
        assert!((&p(&r, "x") - &p(&r, "x")).is_zero());
    }

    #[test]
    fn ring_mismatch() {
        let (a, b) = (ring("x,y"), ring("x,z"));
        assert!(matches!(
            p(&a, "x").try_add(&p(&b, "x")),
            Err(Error::RingMismatch { .. })
        ));
        assert!(p(&a, "x").try_mul(&p(&b, "x")).is_err());
        assert!(p(&a, "x").try_sub(&p(&b, "x")).is_err());
    }

    #[test]
    fn leading_terms() {
        let r = ring("x,y");
        let f = p(&r, "x^2+y^3");
        assert_eq!(
            f.leading_term(&MonomialOrder::lex()).unwrap(),
            (Monomial::new(vec![2, 0]), int(1))
        );
        assert_eq!(
            f.leading_term(&MonomialOrder::grevlex()).unwrap(),
            (Monomial::new(vec![0, 3]), int(1))
        );
        let g = p(&r, "3*x*y - 2*x*y");
        assert_eq!(
            g.leading_term(&MonomialOrder::grevlex()).unwrap(),
            (Monomial::new(vec![1, 1]), int(1))
        );
        assert_eq!(
            Polynomial::zero(&r).leading_term(&MonomialOrder::lex()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn derivatives() {
        let r = ring("x,y,z");
        assert_eq!(p(&r, "x^2*y+y").partial_derivative(0).unwrap(), p(&r, "2*x*y"));
        assert!(p(&r, "x^3").partial_derivative(1).unwrap().is_zero());
        assert_eq!(p(&r, "x*y*z").partial_derivative(0).unwrap(), p(&r, "y*z"));
        assert!(p(&r, "x").partial_derivative(3).is_err());
    }

    #[test]
    fn exact_division() {
        let r = ring("x,y");
        let f = p(&r, "x^3 - x*y^2 + x^2 - y^2");
        assert_eq!(f.div_exact(&p(&r, "x-y")).unwrap(), Some(p(&r, "x^2 + x*y + x + y")));
        assert_eq!(p(&r, "x^2+1").div_exact(&p(&r, "x")).unwrap(), None);
    }

    #[test]
    fn display_is_canonical() {
        let r = ring("x,y");
        assert_eq!(p(&r, "y - x^2 + 1/2").to_string(), "-x^2 + y + 1/2");
        assert_eq!(p(&r, "-3/4*x*y").to_string(), "-3/4*x*y");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(p(&r, "x^2+y^3").to_string_with(&MonomialOrder::lex()), "x^2 + y^3");
        assert_eq!(p(&r, "2*x").scale(&rat(1, 4)).to_string(), "1/2*x");
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        let r = Ring::new(&["x", "y", "z"][..nvars]).unwrap();
        proptest::collection::vec((proptest::collection::vec(0u32..3, nvars), -4i64..5, 1i64..4), 0..5).prop_map(
            move |ts| Polynomial::from_terms(&r, ts.into_iter().map(|(e, n, d)| (Monomial::new(e), rat(n, d)))),
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(3), g in arb_poly(3), h in arb_poly(3)) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn leading_term_is_multiplicative(f in arb_poly(3), g in arb_poly(3)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            for o in [MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(),
                      MonomialOrder::elimination(1)] {
                let (mf, cf) = f.leading_term(&o).unwrap();
                let (mg, cg) = g.leading_term(&o).unwrap();
                let (mh, ch) = (&f * &g).leading_term(&o).unwrap();
                prop_assert_eq!(mh, mf.mul(&mg));
                prop_assert_eq!(ch, cf * cg);
            }
        }

        #[test]
        fn print_parse_round_trip(f in arb_poly(3)) {
            let text = f.to_string();
            prop_assert_eq!(parse_polynomial(f.ring(), &text).unwrap(), f);
        }
    }
}
