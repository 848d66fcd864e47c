use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, Rational, Ring};

/// A monomial ideal stored as its minimal generators (an antichain under
/// divisibility), sorted so that equal ideals compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn check_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

/// Keeps the divisibility-minimal elements, sorted and deduplicated.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            check_dim(nvars, g.nvars())?;
        }
        Ok(MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        })
    }

    pub fn from_exponents(nvars: usize, gens: &[Vec<u32>]) -> Result<Self> {
        MonomialIdeal::new(nvars, gens.iter().map(|e| Monomial::new(e.clone())).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The ideal generated by the listed variables.
    pub fn variables(nvars: usize, vars: &[usize]) -> Result<Self> {
        for &v in vars {
            if v >= nvars {
                return Err(Error::VariableIndex { index: v, nvars });
            }
        }
        MonomialIdeal::new(nvars, vars.iter().map(|&v| Monomial::var(nvars, v)).collect())
    }

    /// Reads a polynomial ideal that is generated by monomials. The reduced
    /// Gröbner basis of such an ideal consists of monomials, which is what
    /// is checked.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let n = ideal.ring().nvars();
        let gens: Vec<Polynomial> = if ideal.is_monomial() {
            ideal.gens().to_vec()
        } else {
            ideal.gb()?.to_vec()
        };
        let mut mons = Vec::with_capacity(gens.len());
        for g in &gens {
            match g.terms() {
                [(m, _)] => mons.push(m.clone()),
                _ => {
                    return Err(Error::Precondition(format!(
                        "ideal {ideal} is not generated by monomials"
                    )))
                }
            }
        }
        MonomialIdeal::new(n, mons)
    }

    pub fn to_ideal(&self, ring: &Ring) -> Ideal {
        assert_eq!(ring.nvars(), self.nvars, "ring dimension mismatch");
        let gens = self
            .gens
            .iter()
            .map(|m| Polynomial::term(ring, m.clone(), Rational::one()))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.nvars, m.nvars())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// First generator of `other` outside `self`.
    pub fn first_non_member<'a>(&self, other: &'a MonomialIdeal) -> Result<Option<&'a Monomial>> {
        check_dim(self.nvars, other.nvars)?;
        Ok(other.gens.iter().find(|g| !self.gens.iter().any(|h| h.divides(g))))
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        Ok(self.first_non_member(other)?.is_none())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..n {
            acc = acc.product(self).expect("same dimension");
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `(self : m)`, generated by `u / gcd(u, m)`.
    pub fn quotient_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        check_dim(self.nvars, m.nvars())?;
        let gens = self
            .gens
            .iter()
            .map(|u| {
                Monomial::new(
                    u.exponents()
                        .iter()
                        .zip(m.exponents())
                        .map(|(&a, &b)| a.saturating_sub(b))
                        .collect(),
                )
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `(self : other)` as the intersection of the quotients by each
    /// generator of `other`.
    pub fn quotient(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc = MonomialIdeal::unit(self.nvars);
        for g in &other.gens {
            acc = acc.intersect(&self.quotient_by_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// Sets every variable outside `keep` to zero and returns the result in
    /// the polynomial ring of the kept variables (in the order given).
    pub fn restrict(&self, keep: &[usize]) -> Result<MonomialIdeal> {
        for &k in keep {
            if k >= self.nvars {
                return Err(Error::VariableIndex {
                    index: k,
                    nvars: self.nvars,
                });
            }
        }
        let gens = self
            .gens
            .iter()
            .filter(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| e == 0 || keep.contains(&i))
            })
            .map(|g| Monomial::new(keep.iter().map(|&k| g.exponents()[k]).collect()))
            .collect();
        MonomialIdeal::new(keep.len(), gens)
    }

    /// Minimal primes of a square-free monomial ideal: the ideals generated
    /// by the minimal vertex covers of its generators.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialIdeal>> {
        if !self.is_squarefree() {
            return Err(Error::Precondition(format!("{self} is not square-free")));
        }
        if self.is_zero() || self.is_unit() {
            return Err(Error::Precondition("minimal primes of a zero or unit ideal".into()));
        }
        let mut covers: Vec<Vec<usize>> = vec![Vec::new()];
        for g in &self.gens {
            let support: Vec<usize> = (0..self.nvars).filter(|&i| g.exponents()[i] > 0).collect();
            let mut next = Vec::new();
            for c in covers {
                if support.iter().any(|v| c.contains(v)) {
                    next.push(c);
                } else {
                    for &v in &support {
                        let mut d = c.clone();
                        d.push(v);
                        d.sort_unstable();
                        next.push(d);
                    }
                }
            }
            next.sort();
            next.dedup();
            covers = next
                .iter()
                .filter(|c| !next.iter().any(|d| d != *c && d.iter().all(|v| c.contains(v))))
                .cloned()
                .collect();
        }
        covers.iter().map(|c| MonomialIdeal::variables(self.nvars, c)).collect()
    }

    /// `q^(m) = ⋂ P^m` over the minimal primes of a square-free ideal.
    pub fn symbolic_power(&self, m: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for p in self.minimal_primes()? {
            acc = acc.intersect(&p.power(m))?;
        }
        Ok(acc)
    }

    pub fn display_with<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWith { ideal: self, vars }
    }
}

struct DisplayWith<'a> {
    ideal: &'a MonomialIdeal,
    vars: &'a [String],
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display_with(self.vars))?;
        }
        if self.ideal.is_zero() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Uses `x0, x1, …` as variable names.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let shown = self.display_with(&vars).to_string();
        f.write_str(&shown)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal_ops;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let xy = mi(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let zw = mi(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let meet = xy.intersect(&zw).unwrap();
        assert_eq!(
            meet,
            mi(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]])
        );
        let sq = mi(2, &[&[1, 0], &[0, 1]]).power(2);
        assert_eq!(sq, mi(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let a = mi(2, &[&[2, 0], &[0, 3]]);
        assert!(a.member(&Monomial::new(vec![2, 3])).unwrap());
        assert!(!a.member(&Monomial::new(vec![1, 2])).unwrap());
    }

    #[test]
    fn antichain_and_dimension_checks() {
        let a = mi(2, &[&[1, 0], &[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(a.gens().len(), 2);
        assert!(MonomialIdeal::new(2, vec![Monomial::new(vec![1])]).is_err());
        assert!(a.sum(&MonomialIdeal::unit(3)).is_err());
    }

    #[test]
    fn quotient_and_restriction() {
        let a = mi(2, &[&[2, 0], &[1, 1]]);
        let q = a.quotient(&mi(2, &[&[1, 0]])).unwrap();
        assert_eq!(q, mi(2, &[&[1, 0], &[0, 1]]));
        let b = mi(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]);
        assert_eq!(b.restrict(&[0, 1]).unwrap(), mi(2, &[&[2, 0], &[0, 3]]));
        assert!(mi(3, &[&[0, 0, 1]]).restrict(&[0, 1]).unwrap().is_zero());
    }

    #[test]
    fn minimal_primes_of_squarefree() {
        let q = mi(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let primes = q.minimal_primes().unwrap();
        assert_eq!(primes.len(), 2);
        assert!(primes.contains(&MonomialIdeal::variables(4, &[0, 1]).unwrap()));
        assert!(primes.contains(&MonomialIdeal::variables(4, &[2, 3]).unwrap()));
        let tri = mi(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(tri.minimal_primes().unwrap().len(), 3);
        assert_eq!(tri.symbolic_power(1).unwrap(), tri);
        assert!(tri
            .symbolic_power(2)
            .unwrap()
            .member(&Monomial::new(vec![1, 1, 1]))
            .unwrap());
        assert!(mi(2, &[&[2, 0]]).minimal_primes().is_err());
    }

    fn random_ideal(rng: &mut impl Rng, n: usize) -> MonomialIdeal {
        let k = rng.gen_range(1..4);
        let gens = (0..k)
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..4)).collect()))
            .collect();
        MonomialIdeal::new(n, gens).unwrap()
    }

    #[test]
    fn operations_agree_with_polynomial_ideals() {
        let ring = Ring::parse("x,y,z").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for round in 0..100 {
            let a = random_ideal(&mut rng, 3);
            let b = random_ideal(&mut rng, 3);
            let (pa, pb) = (a.to_ideal(&ring), b.to_ideal(&ring));
            let (mono, poly) = match round % 4 {
                0 => (a.sum(&b).unwrap(), ideal_ops::sum(&pa, &pb).unwrap()),
                1 => (a.product(&b).unwrap(), ideal_ops::product(&pa, &pb).unwrap()),
                2 => (a.intersect(&b).unwrap(), ideal_ops::intersect(&pa, &pb).unwrap()),
                _ => (a.quotient(&b).unwrap(), ideal_ops::quotient(&pa, &pb).unwrap()),
            };
            for w in mono.gens().windows(2) {
                assert!(!w[0].divides(&w[1]) && !w[1].divides(&w[0]));
            }
            assert!(mono.to_ideal(&ring).same_ideal(&poly).unwrap(), "round {round}");
            assert_eq!(MonomialIdeal::from_ideal(&poly).unwrap(), mono);
        }
    }

    #[test]
    fn from_ideal_rejects_non_monomial() {
        let ring = Ring::parse("x,y").unwrap();
        let i = Ideal::parse(&ring, "x+y").unwrap();
        assert!(MonomialIdeal::from_ideal(&i).is_err());
        // generated by monomials even though the generators are not
        let j = Ideal::parse(&ring, "x+y, y").unwrap();
        assert_eq!(MonomialIdeal::from_ideal(&j).unwrap(), mi(2, &[&[1, 0], &[0, 1]]));
    }
}
