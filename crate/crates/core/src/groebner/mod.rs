//! Buchberger's algorithm with the Gebauer–Möller pair criteria, full
//! normal forms, and the [`Ideal`] type built on them.

mod ideal;
mod sorted;

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
#[cfg(test)]
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

pub use ideal::Ideal;
use sorted::SortedPoly;

/// Default number of reduction steps one Gröbner computation may take.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

static STEP_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_BUDGET);

/// Sets the per-computation reduction-step budget for the whole process.
pub fn set_step_budget(steps: u64) {
    STEP_BUDGET.store(steps, AtomicOrdering::Relaxed);
}

pub fn step_budget() -> u64 {
    STEP_BUDGET.load(AtomicOrdering::Relaxed)
}

/// Counts reduction steps against a limit.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// A budget with the process-wide limit.
    pub fn standard() -> Self {
        Budget::new(step_budget())
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted { steps: self.limit })
        } else {
            Ok(())
        }
    }
}

fn check_rings(f: &Polynomial, basis: &[Polynomial]) -> Result<()> {
    basis.iter().try_for_each(|g| f.ring().check_same(g.ring()))
}

/// Fully reduces `f` by `basis`: the result differs from `f` by an element of
/// the ideal of `basis`, and none of its terms is divisible by a leading
/// monomial of `basis`. Reducers are tried in list order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    check_rings(f, basis)?;
    let reducers: Vec<SortedPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_poly(g, order))
        .collect();
    let refs: Vec<&SortedPoly> = reducers.iter().collect();
    let r = reduce(SortedPoly::from_poly(f, order), &refs, order, &mut Budget::standard())?;
    Ok(r.to_poly(f.ring()))
}

fn reduce(
    mut p: SortedPoly,
    reducers: &[&SortedPoly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<SortedPoly> {
    // Remainder terms come off in descending order; collect and reverse.
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.leading() {
        match reducers.iter().find(|g| g.leading_monomial().divides(lm)) {
            Some(g) => {
                budget.tick()?;
                let (glm, glc) = g.leading().unwrap();
                let q = glm.quotient_of(lm).unwrap();
                let c = lc / glc;
                p.sub_mul_cancel_lead(&q, &c, g, order);
            }
            None => rem.push(p.pop_leading().unwrap()),
        }
    }
    rem.reverse();
    Ok(SortedPoly::from_ascending(rem))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Working basis: polynomials with their sugar degrees and activity flags.
struct Basis {
    polys: Vec<SortedPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
}

impl Basis {
    fn active_refs(&self) -> Vec<&SortedPoly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter_map(|(p, a)| a.then_some(p))
            .collect()
    }
}

fn degree_of(p: &SortedPoly) -> u32 {
    p.terms().iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// The reduced, monic Gröbner basis of `gens` under `order`, sorted by
/// ascending leading monomial. Empty input (or all zeros) gives the empty
/// basis of the zero ideal; the unit ideal gives `[1]`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    buchberger_with_budget(gens, order, &mut Budget::standard())
}

pub fn buchberger_with_budget(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    check_rings(first, gens)?;

    let mut basis = Basis {
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
    };
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<SortedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_poly(g, order).into_monic())
        .collect();
    // Small leading monomials first keeps early reducers simple.
    input.sort_by(|a, b| order.cmp(a.leading_monomial(), b.leading_monomial()));
    for h in input {
        let sugar = degree_of(&h);
        let h = reduce(h, &basis.active_refs(), order, budget)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        let sugar = sugar.max(degree_of(&h));
        update(&mut basis, &mut pairs, h.into_monic(), sugar);
    }

    // Sugar strategy: least sugar first, then least lcm.
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        budget.tick()?;
        let s = s_polynomial(&basis.polys[pair.i], &basis.polys[pair.j], &pair.lcm, order);
        let h = reduce(s, &basis.active_refs(), order, budget)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        let sugar = pair.sugar.max(degree_of(&h));
        update(&mut basis, &mut pairs, h.into_monic(), sugar);
    }

    let Basis { polys, active, .. } = basis;
    let kept: Vec<SortedPoly> = polys
        .into_iter()
        .zip(active)
        .filter_map(|(p, a)| a.then_some(p))
        .collect();
    interreduce(kept, order, budget).map(|b| b.into_iter().map(|p| p.to_poly(&ring)).collect())
}

fn s_polynomial(f: &SortedPoly, g: &SortedPoly, lcm: &Monomial, order: &MonomialOrder) -> SortedPoly {
    let qf = f.leading_monomial().quotient_of(lcm).unwrap();
    let qg = g.leading_monomial().quotient_of(lcm).unwrap();
    let mut s = f.mul_term(&qf, &Rational::one());
    s.sub_mul_cancel_lead(&qg, &Rational::one(), g, order);
    s
}

/// Gebauer–Möller installation of a new basis element `h`.
fn update(basis: &mut Basis, pairs: &mut Vec<Pair>, h: SortedPoly, h_sugar: u32) {
    let Basis { polys, sugar, active } = basis;
    let k = polys.len();
    let lh = h.leading_monomial().clone();

    let candidates: Vec<Pair> = (0..k)
        .filter(|&g| active[g])
        .map(|g| {
            let lg = polys[g].leading_monomial();
            let lcm = lg.lcm(&lh);
            let s = (sugar[g] + lcm.degree() - lg.degree()).max(h_sugar + lcm.degree() - lh.degree());
            Pair {
                i: g,
                j: k,
                lcm,
                sugar: s,
            }
        })
        .collect();

    // Chain criterion among the new pairs: drop (h, g1) if some other new
    // pair has a properly dividing lcm, or an equal lcm with a smaller index.
    let mut kept: Vec<Pair> = Vec::new();
    for (a, p) in candidates.iter().enumerate() {
        let coprime = lh.is_coprime(polys[p.i].leading_monomial());
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(b, q)| b != a && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || b < a));
        if coprime || !dominated {
            kept.push(p.clone());
        }
    }
    // Product criterion; an equal-lcm class containing a coprime pair is
    // dropped as a whole.
    let coprime_lcms: Vec<Monomial> = kept
        .iter()
        .filter(|p| lh.is_coprime(polys[p.i].leading_monomial()))
        .map(|p| p.lcm.clone())
        .collect();
    kept.retain(|p| !coprime_lcms.contains(&p.lcm));
    // Dedupe equal lcms that survived (keep the first).
    let mut seen: Vec<Monomial> = Vec::new();
    kept.retain(|p| {
        if seen.contains(&p.lcm) {
            false
        } else {
            seen.push(p.lcm.clone());
            true
        }
    });

    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && polys[p.i].leading_monomial().lcm(&lh) != p.lcm
            && polys[p.j].leading_monomial().lcm(&lh) != p.lcm)
    });
    pairs.extend(kept);

    for g in 0..k {
        if active[g] && lh.divides(polys[g].leading_monomial()) {
            active[g] = false;
        }
    }
    polys.push(h);
    sugar.push(h_sugar);
    active.push(true);
}

/// Minimalizes, tail-reduces and normalizes a Gröbner basis.
fn interreduce(mut basis: Vec<SortedPoly>, order: &MonomialOrder, budget: &mut Budget) -> Result<Vec<SortedPoly>> {
    basis.sort_by(|a, b| order.cmp(a.leading_monomial(), b.leading_monomial()));
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for p in basis {
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().divides(p.leading_monomial()))
        {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<&SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, q)| (j != idx).then_some(q))
            .collect();
        let mut p = minimal[idx].clone();
        let (lm, lc) = p.pop_leading().unwrap();
        let tail = reduce(p, &others, order, budget)?;
        let mut full = tail;
        full.push_leading(lm, lc);
        out.push(full.into_monic());
    }
    Ok(out)
}

/// True if every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let sorted: Vec<SortedPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_poly(g, order))
        .collect();
    let refs: Vec<&SortedPoly> = sorted.iter().collect();
    let mut budget = Budget::standard();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let lcm = sorted[i].leading_monomial().lcm(sorted[j].leading_monomial());
            let s = s_polynomial(
                &sorted[i].clone().into_monic(),
                &sorted[j].clone().into_monic(),
                &lcm,
                order,
            );
            if !reduce(s, &refs, order, &mut budget)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `basis` is reduced: monic, and no term of any element is divisible
/// by the leading monomial of another.
pub fn is_reduced(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let lms: Vec<(Monomial, Rational)> = match basis.iter().map(|g| g.leading_term(order)).collect::<Result<Vec<_>>>() {
        Ok(v) => v,
        Err(_) => return false,
    };
    lms.iter().all(|(_, c)| c.is_one())
        && basis.iter().enumerate().all(|(i, g)| {
            g.terms()
                .iter()
                .all(|(m, _)| lms.iter().enumerate().all(|(j, (lm, _))| j == i || !lm.divides(m)))
        })
}
