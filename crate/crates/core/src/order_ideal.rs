//! Order ideals, their borders and corners.
//!
//! Terms of an order ideal are indexed `t_1..t_μ` by increasing degree and,
//! within a degree, decreasingly in Lex with `x_1` largest, so `1, x, y, xy`
//! in two variables. Border terms `b_1..b_ν` list the corners first; each of
//! the two blocks is sorted the same way.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gb::{Complement, MonomialIdeal};
use crate::poly::text::format_term;
use crate::poly::{parse_terms, Term, Universe};

/// Where `x_k · t_i` lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Index into `O` (0-based).
    Interior(usize),
    /// Index into the border (0-based).
    Border(usize),
}

#[derive(Debug, Clone)]
pub struct OrderIdeal {
    universe: Arc<Universe>,
    terms: Vec<Term>,
    border: Vec<Term>,
    eta: usize,
    term_index: HashMap<Term, usize>,
    border_index: HashMap<Term, usize>,
}

fn canonical_sort(v: &mut [Term]) {
    v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
}

impl OrderIdeal {
    /// Validate a finite set of terms over an x-only universe.
    pub fn new(universe: &Arc<Universe>, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let n = universe.len();
        if n == 0 {
            return Err(Error::InvalidUniverse("no variables".into()));
        }
        let set: BTreeSet<Term> = terms.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyOrderIdeal);
        }
        if set.iter().any(|t| t.nvars() != n) {
            return Err(Error::UniverseMismatch("term length differs from the universe".into()));
        }
        let mut terms: Vec<Term> = set.iter().cloned().collect();
        canonical_sort(&mut terms);
        for t in &terms {
            for k in 0..n {
                if t.exp(k) > 0 {
                    let d = t.div(&Term::var(n, k, 1)).unwrap();
                    if !set.contains(&d) {
                        return Err(Error::NotDivisorClosed {
                            term: format_term(universe, t),
                            missing: format_term(universe, &d),
                        });
                    }
                }
            }
        }
        let mut border_set = BTreeSet::new();
        for t in &terms {
            for k in 0..n {
                let m = t.mul(&Term::var(n, k, 1));
                if !set.contains(&m) {
                    border_set.insert(m);
                }
            }
        }
        let (mut corners, mut rest): (Vec<Term>, Vec<Term>) = border_set
            .into_iter()
            .partition(|b| is_corner(b, &set));
        canonical_sort(&mut corners);
        canonical_sort(&mut rest);
        let eta = corners.len();
        let mut border = corners;
        border.extend(rest);
        let term_index = terms.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let border_index = border.iter().cloned().enumerate().map(|(j, t)| (t, j)).collect();
        Ok(OrderIdeal {
            universe: universe.clone(),
            terms,
            border,
            eta,
            term_index,
            border_index,
        })
    }

    /// Parse a comma-separated list of monomials such as `1, x, y, x*y`.
    pub fn parse(s: &str, universe: &Arc<Universe>) -> Result<Self> {
        Self::new(universe, parse_terms(s, universe)?)
    }

    /// `{1, x_k, x_k^2, ..., x_k^(μ-1)}`.
    pub fn segment(universe: &Arc<Universe>, k: usize, mu: u32) -> Result<Self> {
        if k >= universe.len() {
            return Err(Error::UnknownVariable(format!("variable index {k}")));
        }
        Self::new(universe, (0..mu).map(|e| Term::var(universe.len(), k, e)))
    }

    /// The standard monomials of a monomial ideal, or `None` when there are infinitely many.
    pub fn from_complement(m: &MonomialIdeal) -> Result<Option<Self>> {
        match m.complement() {
            Complement::Infinite => Ok(None),
            Complement::Finite(ts) if ts.is_empty() => Err(Error::UnitIdeal),
            Complement::Finite(ts) => Self::new(m.universe(), ts).map(Some),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn mu(&self) -> usize {
        self.terms.len()
    }

    pub fn nu(&self) -> usize {
        self.border.len()
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    /// `t_1..t_μ`.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// `b_1..b_ν`, corners first.
    pub fn border(&self) -> &[Term] {
        &self.border
    }

    /// `b_1..b_η`.
    pub fn corners(&self) -> &[Term] {
        &self.border[..self.eta]
    }

    pub fn term_index(&self, t: &Term) -> Option<usize> {
        self.term_index.get(t).copied()
    }

    pub fn border_position(&self, t: &Term) -> Option<usize> {
        self.border_index.get(t).copied()
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.term_index.contains_key(t)
    }

    pub fn max_degree(&self) -> u64 {
        self.border.iter().map(Term::degree).max().unwrap_or(0)
    }

    /// Location of `x_k · t_i`.
    pub fn target(&self, k: usize, i: usize) -> Target {
        let m = self.terms[i].mul(&Term::var(self.n(), k, 1));
        match self.term_index(&m) {
            Some(i2) => Target::Interior(i2),
            None => Target::Border(self.border_index[&m]),
        }
    }

    pub fn is_segment(&self) -> bool {
        let used: BTreeSet<usize> = self.terms.iter().flat_map(|t| t.support().map(|(k, _)| k)).collect();
        used.len() <= 1
    }

    pub fn format_term(&self, t: &Term) -> String {
        format_term(&self.universe, t)
    }

    pub fn to_json(&self) -> Vec<BTreeMap<String, u32>> {
        self.terms
            .iter()
            .map(|t| crate::poly::json::term_to_json(&self.universe, t))
            .collect()
    }

    pub fn from_json(universe: &Arc<Universe>, js: &[BTreeMap<String, u32>]) -> Result<Self> {
        let terms = js
            .iter()
            .map(|e| crate::poly::json::term_from_json(universe, e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, terms)
    }
}

impl PartialEq for OrderIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.universe.names() == other.universe.names() && self.terms == other.terms
    }
}

impl Eq for OrderIdeal {}

/// A border term is a corner when dividing it by any of its variables lands in `O`.
fn is_corner(b: &Term, o: &BTreeSet<Term>) -> bool {
    let n = b.nvars();
    (0..n)
        .filter(|&k| b.exp(k) > 0)
        .all(|k| o.contains(&b.div(&Term::var(n, k, 1)).unwrap()))
}

pub fn validate_order_ideal(universe: &Arc<Universe>, terms: impl IntoIterator<Item = Term>) -> Result<OrderIdeal> {
    OrderIdeal::new(universe, terms)
}

pub fn border(o: &OrderIdeal) -> Vec<Term> {
    o.border().to_vec()
}

pub fn corners(o: &OrderIdeal) -> Vec<Term> {
    o.corners().to_vec()
}

/// `O_σ` of a monomial ideal, or `None` for an infinite complement.
pub fn complement_order_ideal(m: &MonomialIdeal) -> Result<Option<OrderIdeal>> {
    OrderIdeal::from_complement(m)
}
