use std::fmt;

/// A power product, stored as a dense exponent vector over a [`Universe`].
///
/// Variables outside the support simply carry exponent 0; two terms over the
/// same universe always have vectors of the same length.
///
/// [`Universe`]: super::Universe
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(Vec<u32>);

impl Term {
    pub fn one(nvars: usize) -> Self {
        Term(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = exp;
        Term(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Term(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.0[idx]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Weighted degree `sum w_k e_k`; weights may be any integers.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    /// Nonzero `(index, exponent)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (k, e))
    }

    pub fn uses(&self, idx: usize) -> bool {
        self.0[idx] > 0
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Term) -> Option<Term> {
        if other.divides(self) {
            Some(Term(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Term) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of variables present (index taken mod 64), for quick non-divisibility tests.
    pub fn mask(&self) -> u64 {
        self.support().fold(0u64, |m, (k, _)| m | (1u64 << (k % 64)))
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let a = Term::from_exponents(vec![2, 1]);
        let b = Term::from_exponents(vec![1, 3]);
        assert_eq!(a.mul(&b).exponents(), &[3, 4]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3]);
        assert!(a.div(&b).is_none());
        assert_eq!(a.div(&Term::var(2, 0, 1)).unwrap().exponents(), &[1, 1]);
        assert_eq!(a.weighted_degree(&[3, 2]), 8);
        assert!(!a.is_coprime(&b));
        assert!(Term::var(2, 0, 1).is_coprime(&Term::var(2, 1, 3)));
    }
}
