use num_traits::{One, Signed, Zero};

use super::ideal::MonomialIdeal;
use super::lp::{maximize, LpOutcome};
use crate::error::{Error, Result};
use crate::poly::Rational;

/// `conv(gens) + ℝ^n_{≥0}` for the generators of a nonzero monomial ideal.
/// Generators already inside the hull of the others are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    nvars: usize,
    points: Vec<Vec<u32>>,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut points: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exponents().to_vec()).collect();
        // far points first, so that the kept set reaches the vertices early
        points.sort_by_key(|p| std::cmp::Reverse(p.iter().map(|&e| u64::from(e) * u64::from(e)).sum::<u64>()));
        let mut kept = NewtonPolyhedron {
            nvars: ideal.nvars(),
            points: Vec::with_capacity(points.len()),
        };
        for p in points {
            let target: Vec<Rational> = p.iter().map(|&e| Rational::from_integer(e.into())).collect();
            if kept.points.is_empty() || diagonal_margin(&target, &[(Rational::one(), &kept)]).is_none() {
                kept.points.push(p);
            }
        }
        Ok(kept)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }
}

/// A coefficient `c > 0` paired with a monomial ideal: the data of `J(c·a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierQuery {
    c: Rational,
    ideal: MonomialIdeal,
}

impl MultiplierQuery {
    pub fn new(c: Rational, ideal: MonomialIdeal) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::Precondition(format!("coefficient must be positive, got {c}")));
        }
        Ok(MultiplierQuery { c, ideal })
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }
}

/// Largest `δ ≥ 0` with `target − δ·1 ∈ Σ c_i·P_i`, or `None` when even
/// `δ = 0` is infeasible (the target lies outside the sum).
pub fn diagonal_margin(target: &[Rational], terms: &[(Rational, &NewtonPolyhedron)]) -> Option<Rational> {
    let n = target.len();
    // columns: one weight per generator of each term, n slacks, δ
    let weights: usize = terms.iter().map(|(_, p)| p.points.len()).sum();
    let cols = weights + n + 1;
    let mut a = vec![vec![Rational::zero(); cols]; n + terms.len()];
    let mut b = target.to_vec();
    let mut col = 0;
    for (t, (c, p)) in terms.iter().enumerate() {
        debug_assert_eq!(p.nvars, n);
        for u in &p.points {
            for (j, &e) in u.iter().enumerate() {
                if e != 0 {
                    a[j][col] = c * Rational::from_integer(e.into());
                }
            }
            a[n + t][col] = Rational::one();
            col += 1;
        }
        b.push(Rational::one());
    }
    for j in 0..n {
        a[j][weights + j] = Rational::one();
        a[j][cols - 1] = Rational::one();
    }
    let mut obj = vec![Rational::zero(); cols];
    obj[cols - 1] = Rational::one();
    match maximize(&a, &b, &obj) {
        LpOutcome::Optimal { value, .. } => Some(value),
        LpOutcome::Infeasible => None,
        // the slack equations bound δ by every target coordinate
        LpOutcome::Unbounded => unreachable!("diagonal margin is bounded"),
    }
}

/// Whether `v + 1` lies in the interior of `Σ c_i·P_i`.
pub fn mixed_interior_test(v: &[u32], terms: &[(Rational, &NewtonPolyhedron)]) -> bool {
    let target: Vec<Rational> = v.iter().map(|&e| Rational::from_integer((e + 1).into())).collect();
    diagonal_margin(&target, terms).is_some_and(|d| d.is_positive())
}

/// `x^v ∈ J(c·a)` iff `v + 1` is interior to `c·Newt(a)`.
pub fn newton_interior_test(v: &[u32], q: &MultiplierQuery) -> Result<bool> {
    if v.len() != q.ideal.nvars() {
        return Err(Error::DimensionMismatch {
            left: q.ideal.nvars(),
            right: v.len(),
        });
    }
    if q.ideal.is_zero() {
        return Ok(false);
    }
    let p = NewtonPolyhedron::of(&q.ideal)?;
    Ok(mixed_interior_test(v, &[(q.c.clone(), &p)]))
}

/// The log canonical threshold: `1/t` for the least `t` with `t·1 ∈ Newt(a)`.
pub fn lct(a: &MonomialIdeal) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if a.is_unit() {
        return Err(Error::Precondition(
            "the unit ideal has no log canonical threshold".into(),
        ));
    }
    let p = NewtonPolyhedron::of(a)?;
    let n = a.nvars();
    let k = p.points.len();
    // Σλ_i u_i + s = t·1, Σλ_i = 1; maximize −t
    let cols = k + n + 1;
    let mut rows = vec![vec![Rational::zero(); cols]; n + 1];
    for (i, u) in p.points.iter().enumerate() {
        for (j, &e) in u.iter().enumerate() {
            rows[j][i] = Rational::from_integer(e.into());
        }
        rows[n][i] = Rational::one();
    }
    for j in 0..n {
        rows[j][k + j] = Rational::one();
        rows[j][cols - 1] = -Rational::one();
    }
    let mut b = vec![Rational::zero(); n];
    b.push(Rational::one());
    let mut obj = vec![Rational::zero(); cols];
    obj[cols - 1] = -Rational::one();
    match maximize(&rows, &b, &obj) {
        LpOutcome::Optimal { value, .. } => Ok((-value).recip()),
        other => unreachable!("diagonal hitting time LP: {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::poly::Monomial;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect()).unwrap()
    }

    #[test]
    fn interior_examples() {
        let a = mi(2, &[&[2, 0], &[0, 3]]);
        let q1 = MultiplierQuery::new(rat(1, 1), a.clone()).unwrap();
        assert!(!newton_interior_test(&[0, 0], &q1).unwrap());
        assert!(newton_interior_test(&[1, 0], &q1).unwrap());
        assert!(newton_interior_test(&[0, 1], &q1).unwrap());
        let small = MultiplierQuery::new(rat(1, 4), a.clone()).unwrap();
        assert!(newton_interior_test(&[0, 0], &small).unwrap());
        assert!(MultiplierQuery::new(rat(0, 1), a).is_err());
    }

    #[test]
    fn boundary_points_are_not_interior() {
        // (1,1) sits on the segment from (2,0) to (0,2)
        let a = mi(2, &[&[2, 0], &[0, 2]]);
        let q = MultiplierQuery::new(rat(1, 1), a).unwrap();
        assert!(!newton_interior_test(&[0, 0], &q).unwrap());
        let p = NewtonPolyhedron::of(q.ideal()).unwrap();
        assert_eq!(
            diagonal_margin(&[rat(1, 1), rat(1, 1)], &[(rat(1, 1), &p)]),
            Some(rat(0, 1))
        );
        assert_eq!(diagonal_margin(&[rat(1, 2), rat(1, 2)], &[(rat(1, 1), &p)]), None);
    }

    #[test]
    fn scale_exactness() {
        let a = mi(3, &[&[3, 0, 1], &[0, 2, 2], &[1, 1, 0]]);
        let p = NewtonPolyhedron::of(&a).unwrap();
        for c in [rat(1, 3), rat(1, 2), rat(1, 1), rat(3, 2), rat(5, 2)] {
            for v in [[0, 0, 0], [1, 0, 0], [0, 1, 1], [2, 1, 0], [1, 1, 1]] {
                let scaled: Vec<Rational> = v.iter().map(|&e| rat(e as i64 + 1, 1) / &c).collect();
                let direct = mixed_interior_test(&v, &[(c.clone(), &p)]);
                let rescaled = diagonal_margin(&scaled, &[(rat(1, 1), &p)]).is_some_and(|d| d.is_positive());
                assert_eq!(direct, rescaled);
            }
        }
    }

    #[test]
    fn redundant_points_are_dropped() {
        // x*y lies on the segment from x^2 to y^2
        let p = NewtonPolyhedron::of(&mi(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(p.points().len(), 2);
        let a = mi(2, &[&[4, 0], &[2, 2], &[0, 4]]).power(5);
        assert_eq!(NewtonPolyhedron::of(&a).unwrap().points().len(), 2);
    }

    #[test]
    fn lct_values() {
        assert_eq!(lct(&mi(2, &[&[2, 0], &[0, 3]])).unwrap(), rat(5, 6));
        assert_eq!(lct(&mi(2, &[&[1, 0], &[0, 1]])).unwrap(), rat(2, 1));
        assert_eq!(lct(&mi(3, &[&[1, 1, 1]])).unwrap(), rat(1, 1));
        assert_eq!(lct(&mi(2, &[&[1, 1], &[3, 0], &[0, 3]])).unwrap(), rat(1, 1));
        assert!(lct(&MonomialIdeal::unit(2)).is_err());
        assert!(lct(&MonomialIdeal::zero(2)).is_err());
    }
}
