use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{MonomialOrder, Term, Universe};
use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn rat(n: i64, d: i64) -> Coeff {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// A sparse polynomial with rational coefficients over a [`Universe`].
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    universe: Arc<Universe>,
    terms: BTreeMap<Term, Coeff>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Universe::same(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        Polynomial {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(universe: &Arc<Universe>) -> Self {
        Self::constant(universe, Coeff::one())
    }

    pub fn constant(universe: &Arc<Universe>, c: Coeff) -> Self {
        Self::monomial(universe, Term::one(universe.len()), c)
    }

    pub fn monomial(universe: &Arc<Universe>, term: Term, c: Coeff) -> Self {
        debug_assert_eq!(term.nvars(), universe.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(term, c);
        }
        Polynomial {
            universe: universe.clone(),
            terms,
        }
    }

    pub fn var(universe: &Arc<Universe>, idx: usize) -> Self {
        Self::monomial(universe, Term::var(universe.len(), idx, 1), Coeff::one())
    }

    pub fn var_named(universe: &Arc<Universe>, name: &str) -> Result<Self> {
        Ok(Self::var(universe, universe.require(name)?))
    }

    /// Sum of `(term, coefficient)` pairs; repeated terms are combined.
    pub fn from_terms(universe: &Arc<Universe>, it: impl IntoIterator<Item = (Term, Coeff)>) -> Self {
        let mut p = Self::zero(universe);
        for (t, c) in it {
            p.add_term(t, c);
        }
        p
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|t| t.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Term) -> Coeff {
        self.terms.get(t).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Term::one(self.universe.len()))
    }

    pub(crate) fn add_term(&mut self, t: Term, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Term::degree).max()
    }

    /// Indices of the variables occurring in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.universe.len()];
        for t in self.terms.keys() {
            for (k, _) in t.support() {
                used[k] = true;
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn uses(&self, idx: usize) -> bool {
        self.terms.keys().any(|t| t.uses(idx))
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if Universe::same(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(format!(
                "{} vs {}",
                self.universe, other.universe
            )))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = self.clone();
        for (t, c) in &other.terms {
            p.add_term(t.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = self.clone();
        for (t, c) in &other.terms {
            p.add_term(t.clone(), -c.clone());
        }
        Ok(p)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = Polynomial::zero(&self.universe);
        for (ta, ca) in &self.terms {
            for (tb, cb) in &other.terms {
                p.add_term(ta.mul(tb), ca * cb);
            }
        }
        Ok(p)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.universe);
        }
        Polynomial {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, term: &Term, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.universe);
        }
        Polynomial {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(term), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.universe);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism replacing each variable in `rules` by a polynomial
    /// over the same universe. Other variables are left alone.
    pub fn substitute(&self, rules: &HashMap<usize, Polynomial>) -> Result<Polynomial> {
        for r in rules.values() {
            self.check(r)?;
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(&self.universe);
        for (t, c) in &self.terms {
            let mut rest = t.clone();
            let mut factor = Polynomial::constant(&self.universe, c.clone());
            for (k, e) in t.support() {
                if let Some(r) = rules.get(&k) {
                    rest.exponents_mut()[k] = 0;
                    let pw = powers.entry((k, e)).or_insert_with(|| r.pow(e));
                    factor = &factor * pw;
                }
            }
            for (ft, fc) in factor.mul_term(&rest, &Coeff::one()).terms {
                out.add_term(ft, fc);
            }
        }
        Ok(out)
    }

    /// Substitute rational values for some variables.
    pub fn specialize(&self, values: &HashMap<usize, Coeff>) -> Polynomial {
        let mut out = Polynomial::zero(&self.universe);
        for (t, c) in &self.terms {
            let mut rest = t.clone();
            let mut coeff = c.clone();
            for (k, e) in t.support() {
                if let Some(v) = values.get(&k) {
                    rest.exponents_mut()[k] = 0;
                    coeff *= num_traits::pow(v.clone(), e as usize);
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Evaluate at a full assignment (missing variables count as 0).
    pub fn evaluate(&self, values: &HashMap<usize, Coeff>) -> Coeff {
        let mut acc = Coeff::zero();
        'terms: for (t, c) in &self.terms {
            let mut v = c.clone();
            for (k, e) in t.support() {
                match values.get(&k) {
                    Some(x) => v *= num_traits::pow(x.clone(), e as usize),
                    None => continue 'terms,
                }
            }
            acc += v;
        }
        acc
    }

    /// Re-express this polynomial over `target`, matching variables by name.
    ///
    /// Fails if a variable that actually occurs is missing from `target`.
    pub fn rebase(&self, target: &Arc<Universe>) -> Result<Polynomial> {
        if Universe::same(&self.universe, target) {
            return Ok(Polynomial {
                universe: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<Option<usize>> = self
            .universe
            .vars()
            .iter()
            .map(|v| target.index_of(&v.name))
            .collect();
        let mut out = Polynomial::zero(target);
        for (t, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (k, x) in t.support() {
                match map[k] {
                    Some(j) => e[j] = x,
                    None => {
                        return Err(Error::UnknownVariable(self.universe.name(k).to_string()))
                    }
                }
            }
            out.add_term(Term::from_exponents(e), c.clone());
        }
        Ok(out)
    }

    /// Common weighted degree of all terms, if there is one.
    ///
    /// `weights` is indexed by universe position. The zero polynomial is
    /// homogeneous of every degree; it reports `Some(0)`.
    pub fn homogeneous_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut it = self.terms.keys().map(|t| t.weighted_degree(weights));
        let first = match it.next() {
            Some(d) => d,
            None => return Some(0),
        };
        it.all(|d| d == first).then_some(first)
    }

    /// Terms sorted in decreasing order under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&Term, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn leading(&self, ord: &MonomialOrder) -> Option<(&Term, &Coeff)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<Term> {
        self.leading(ord).map(|(t, _)| t.clone())
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading(ord) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on universe mismatch; use [`Polynomial::checked_add`] to recover.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("universe mismatch in add")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("universe mismatch in sub")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("universe mismatch in mul")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn xy() -> Arc<Universe> {
        Universe::with_x(&["x", "y"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let u = xy();
        let x = Polynomial::var(&u, 0);
        let y = Polynomial::var(&u, 1);
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = parse_polynomial("x^2 - y^2", &u).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialize_prebasis_element() {
        let u = Universe::with_blocks(&["x", "y"], &[(1, 2), (2, 2), (3, 2)], None).unwrap();
        let g = parse_polynomial("y^2 - c[1,2] - c[2,2]*x - c[3,2]*y", &u).unwrap();
        let mut vals = HashMap::new();
        vals.insert(u.c_index(1, 2).unwrap(), int(1));
        vals.insert(u.c_index(2, 2).unwrap(), int(0));
        vals.insert(u.c_index(3, 2).unwrap(), int(0));
        let s = g.specialize(&vals);
        assert_eq!(s, parse_polynomial("y^2 - 1", &u).unwrap());
    }

    #[test]
    fn substitute_to_zero() {
        let u = xy();
        let f = parse_polynomial("y - x^2", &u).unwrap();
        let mut rules = HashMap::new();
        rules.insert(1, parse_polynomial("x^2", &u).unwrap());
        assert!(f.substitute(&rules).unwrap().is_zero());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Polynomial::one(&xy());
        let b = Polynomial::one(&Universe::with_x(&["x"]).unwrap());
        assert!(matches!(a.checked_add(&b), Err(Error::UniverseMismatch(_))));
    }

    #[test]
    fn homogeneity_with_weights() {
        let u = Universe::with_blocks(&["x"], &[(1, 1)], None).unwrap();
        let f = parse_polynomial("x^2 - c[1,1]", &u).unwrap();
        assert_eq!(f.homogeneous_degree(&[1, 2]), Some(2));
        assert_eq!(f.homogeneous_degree(&[1, 3]), None);
        assert_eq!(Polynomial::zero(&u).homogeneous_degree(&[1, 3]), Some(0));
    }

    #[test]
    fn rebase_drops_unused_and_rejects_missing() {
        let u = xy();
        let small = Universe::with_x(&["x"]).unwrap();
        let f = parse_polynomial("x^3 + 2", &u).unwrap();
        let g = f.rebase(&small).unwrap();
        assert_eq!(g.rebase(&u).unwrap(), f);
        let h = parse_polynomial("y", &u).unwrap();
        assert!(h.rebase(&small).is_err());
    }
}
