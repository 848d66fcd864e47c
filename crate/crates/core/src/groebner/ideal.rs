use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::poly::{parse_polynomial_list, MonomialOrder, Polynomial, Ring};

use super::{buchberger, normal_form};

/// A finitely generated ideal with a per-order cache of reduced Gröbner bases.
///
/// Clones share the cache. Concurrent first requests for the same order may
/// both compute the basis; by uniqueness of reduced bases they store the same
/// value.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb_cache: Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>,
}

impl Ideal {
    /// Zero generators are dropped. Panics if a generator lives in another ring.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert!(g.ring() == ring, "generator from a different ring");
        }
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb_cache: Arc::default(),
        }
    }

    pub fn try_new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.check_same(g.ring())?;
        }
        Ok(Ideal::new(ring, gens))
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        Ok(Ideal::new(ring, parse_polynomial_list(ring, text)?))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True if the generator list is empty (the zero ideal).
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    /// Reduced Gröbner basis under `order`, computed once and cached.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.gb_cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.gens, order)?);
        self.gb_cache
            .lock()
            .unwrap()
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    /// Reduced Gröbner basis under grevlex.
    pub fn gb(&self) -> Result<Arc<Vec<Polynomial>>> {
        self.groebner_basis(&MonomialOrder::grevlex())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.iter().any(Polynomial::is_unit))
    }

    pub fn is_member(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let order = MonomialOrder::grevlex();
        Ok(normal_form(f, &self.groebner_basis(&order)?, &order)?.is_zero())
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        Ok(self.first_non_member(other)?.is_none())
    }

    /// A generator of `other` outside `self`, if any.
    pub fn first_non_member(&self, other: &Ideal) -> Result<Option<Polynomial>> {
        self.ring.check_same(&other.ring)?;
        for g in &other.gens {
            if !self.is_member(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// Equality as ideals, decided by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gb()? == other.gb()?)
    }

    /// Builds an ideal whose generators are already its reduced basis under `order`.
    pub(crate) fn from_reduced_basis(ring: &Ring, basis: Vec<Polynomial>, order: MonomialOrder) -> Ideal {
        let ideal = Ideal::new(ring, basis);
        let gb = Arc::new(ideal.gens.clone());
        ideal.gb_cache.lock().unwrap().insert(order, gb);
        ideal
    }

    pub fn with_gens(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(&self.ring, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
