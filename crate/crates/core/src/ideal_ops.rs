//! Ideal arithmetic on top of the Gröbner engine.
//!
//! Operations return fresh [`Ideal`]s. Generator lists are pruned cheaply
//! (zeros, scalar duplicates, monomials divisible by other monomial
//! generators); ideals are always compared through reduced bases, never
//! through generator lists. [`minimize_generators`] performs the expensive
//! membership-based pruning on demand.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Drops zeros, scalar duplicates, and monomial generators divisible by
/// another monomial generator. Keeps first occurrences in order.
fn prune(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
    let order = MonomialOrder::grevlex();
    let mut seen: HashSet<Vec<(Monomial, String)>> = HashSet::new();
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = g.monic(&order);
        if g.is_unit() {
            return Ideal::unit(ring);
        }
        let key: Vec<(Monomial, String)> = g.terms().iter().map(|(m, c)| (m.clone(), c.to_string())).collect();
        if seen.insert(key) {
            out.push(g);
        }
    }
    let monos: Vec<Monomial> = out
        .iter()
        .filter(|g| g.is_monomial())
        .map(|g| g.terms()[0].0.clone())
        .collect();
    out.retain(|g| {
        if !g.is_monomial() {
            return true;
        }
        let m = &g.terms()[0].0;
        !monos.iter().any(|d| d != m && d.divides(m))
    });
    Ideal::new(ring, out)
}

/// Removes generators lying in the ideal of the remaining ones.
pub fn minimize_generators(ideal: &Ideal) -> Result<Ideal> {
    let mut gens = prune(ideal.ring(), ideal.gens().to_vec()).gens().to_vec();
    let mut i = 0;
    while i < gens.len() && gens.len() > 1 {
        let rest: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        if Ideal::new(ideal.ring(), rest.clone()).is_member(&gens[i])? {
            gens = rest;
        } else {
            i += 1;
        }
    }
    Ok(Ideal::new(ideal.ring(), gens))
}

pub fn sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ring().check_same(b.ring())?;
    let gens = a.gens().iter().chain(b.gens()).cloned().collect();
    Ok(prune(a.ring(), gens))
}

pub fn product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ring().check_same(b.ring())?;
    let mut gens = Vec::with_capacity(a.gens().len() * b.gens().len());
    for f in a.gens() {
        for g in b.gens() {
            gens.push(f * g);
        }
    }
    Ok(prune(a.ring(), gens))
}

/// `a^n`, with `a^0 = (1)`.
pub fn power(a: &Ideal, n: u32) -> Result<Ideal> {
    let mut acc = Ideal::unit(a.ring());
    for _ in 0..n {
        acc = product(&acc, a)?;
    }
    Ok(acc)
}

/// `a ∩ b`, by eliminating a tag variable from `t·a^h + (1-t)·b^h`.
///
/// Both ideals are homogenized with a trailing variable `h` first, taking
/// their grevlex bases as generators. With `t` of degree zero every
/// S-polynomial stays homogeneous, which keeps the elimination from wandering
/// into high degrees. Homogenization commutes with intersection, and setting
/// `h = 1` in a grevlex basis with `h` smallest gives a grevlex basis.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ring().check_same(b.ring())?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let (ga, gb) = (a.gb()?, b.gb()?);
    let n = ring.nvars();
    let fresh = |base: &str| {
        let mut name = base.to_string();
        while ring.vars().contains(&name) {
            name.push('_');
        }
        name
    };
    let mut names = vec![fresh("t")];
    names.extend(ring.vars().iter().cloned());
    names.push(fresh("h"));
    let ext = Ring::new(&names)?;
    let homogenize = |f: &Polynomial, tag: u32| {
        let d = f.total_degree().unwrap_or(0);
        let terms = f.terms().iter().map(|(m, c)| {
            let mut e = Vec::with_capacity(n + 2);
            e.push(tag);
            e.extend_from_slice(m.exponents());
            e.push(d - m.degree());
            (Monomial::new(e), c.clone())
        });
        Polynomial::from_terms(&ext, terms)
    };
    let mut gens: Vec<Polynomial> = ga.iter().map(|f| homogenize(f, 1)).collect();
    gens.extend(gb.iter().map(|g| &homogenize(g, 0) - &homogenize(g, 1)));
    let basis = buchberger(&gens, &MonomialOrder::elimination(1))?;
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (Monomial::new(m.exponents()[1..=n].to_vec()), c.clone()));
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    let reduced = buchberger(&kept, &MonomialOrder::grevlex())?;
    Ok(Ideal::from_reduced_basis(ring, reduced, MonomialOrder::grevlex()))
}

/// Intersection of a nonempty list of ideals.
pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals
        .split_first()
        .ok_or_else(|| Error::Precondition("intersection of an empty list".into()))?;
    rest.iter().try_fold(first.clone(), |acc, i| intersect(&acc, i))
}

/// `(a : g)` for a single polynomial `g ≠ 0`.
pub fn quotient_by_element(a: &Ideal, g: &Polynomial) -> Result<Ideal> {
    a.ring().check_same(g.ring())?;
    if g.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if g.is_unit() {
        return Ok(a.clone());
    }
    let meet = intersect(a, &Ideal::new(a.ring(), vec![g.clone()]))?;
    let mut gens = Vec::with_capacity(meet.gens().len());
    for h in meet.gens() {
        let q = h.div_exact(g)?.expect("element of (g) is divisible by g");
        gens.push(q);
    }
    Ok(prune(a.ring(), gens))
}

/// `(a : b) = { f | f·b ⊆ a }`.
pub fn quotient(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ring().check_same(b.ring())?;
    if b.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let parts: Vec<Ideal> = b
        .gens()
        .iter()
        .map(|g| quotient_by_element(a, g))
        .collect::<Result<_>>()?;
    intersect_all(&parts)
}

/// `(a : b^∞)` together with the first `k` such that `(a : b^k) = (a : b^(k+1))`.
pub fn saturate(a: &Ideal, b: &Ideal) -> Result<(Ideal, u32)> {
    let mut current = a.clone();
    let mut k = 0;
    loop {
        let next = quotient(&current, b)?;
        if next.same_ideal(&current)? {
            return Ok((current, k));
        }
        current = next;
        k += 1;
    }
}

/// `a ∩ Q[remaining variables]`, returned in the same ring.
pub fn eliminate(a: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let n = a.ring().nvars();
    if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
        return Err(Error::VariableIndex { index: bad, nvars: n });
    }
    let mut drop: Vec<usize> = drop.to_vec();
    drop.sort_unstable();
    drop.dedup();
    if drop.is_empty() {
        return Ok(a.clone());
    }
    if drop.len() == n {
        return Err(Error::Precondition("cannot eliminate every variable".into()));
    }
    let order = MonomialOrder::eliminating(&drop, n);
    let gb = a.groebner_basis(&order)?;
    let kept = gb
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| drop.iter().all(|&i| m.exponents()[i] == 0))
        })
        .cloned()
        .collect();
    Ok(Ideal::new(a.ring(), kept))
}

/// Whether `f ∈ √a`, via `1 ∈ a + (1 - w·f)` with a fresh variable `w`.
pub fn radical_member(f: &Polynomial, a: &Ideal) -> Result<bool> {
    a.ring().check_same(f.ring())?;
    if f.is_zero() {
        return Ok(true);
    }
    let (ext, emb) = a.ring().extend_front(&["w"]);
    let w = ext.var(0)?;
    let mut gens: Vec<Polynomial> = a.gens().iter().map(|g| emb.embed(g)).collect();
    gens.push(&Polynomial::one(&ext) - &(&w * &emb.embed(f)));
    let gb = buchberger(&gens, &MonomialOrder::grevlex())?;
    Ok(gb.iter().any(Polynomial::is_unit))
}

/// Vector-space dimension of `R / a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

/// Counts standard monomials of a grevlex Gröbner basis.
pub fn colength(a: &Ideal) -> Result<Colength> {
    let order = MonomialOrder::grevlex();
    let gb = a.groebner_basis(&order)?;
    let n = a.ring().nvars();
    if gb.iter().any(Polynomial::is_unit) {
        return Ok(Colength::Finite(0));
    }
    let lms: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading_term(&order).map(|t| t.0))
        .collect::<Result<_>>()?;
    // Finite iff every variable has a pure power among the leading monomials.
    let mut bounds = vec![0u32; n];
    for (i, bound) in bounds.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| m.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|m| m.exponents()[i])
            .min();
        match pure {
            Some(e) => *bound = e,
            None => return Ok(Colength::Infinite),
        }
    }
    let mut count = 0u64;
    let mut e = vec![0u32; n];
    loop {
        let m = Monomial::new(e.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(Colength::Finite(count));
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}
