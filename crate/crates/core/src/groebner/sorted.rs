use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// Working representation for reduction: terms ascending under one fixed
/// monomial order, so the leading term sits at the end.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    pub fn from_poly(f: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms = f.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub fn from_ascending(terms: Vec<(Monomial, Rational)>) -> Self {
        SortedPoly { terms }
    }

    pub fn to_poly(&self, ring: &Ring) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial::from_sorted_terms(ring, terms)
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant; the constant monomial is minimal in every order.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> &Monomial {
        &self.terms.last().expect("leading monomial of zero").0
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop()
    }

    pub fn push_leading(&mut self, m: Monomial, c: Rational) {
        self.terms.push((m, c));
    }

    pub fn into_monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for t in &mut self.terms {
                    t.1 *= &inv;
                }
            }
        }
        self
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        SortedPoly {
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    /// `self -= c * q * g`, where the product's leading term is known to
    /// cancel the leading term of `self`.
    pub fn sub_mul_cancel_lead(&mut self, q: &Monomial, c: &Rational, g: &SortedPoly, order: &MonomialOrder) {
        self.terms.pop();
        let tail = &g.terms[..g.terms.len() - 1];
        if tail.is_empty() {
            return;
        }
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + tail.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = tail.iter().map(|(m, d)| (m.mul(q), d * c)).peekable();
        loop {
            let ord = match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match ord {
                Ordering::Less => out.push(ai.next().unwrap()),
                Ordering::Greater => {
                    let (m, d) = bi.next().unwrap();
                    out.push((m, -d));
                }
                Ordering::Equal => {
                    let (m, x) = ai.next().unwrap();
                    let (_, y) = bi.next().unwrap();
                    let v = x - y;
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                }
            }
        }
        self.terms = out;
    }
}
