use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Term, TermOrdering, Universe};

use super::buchberger::GbConfig;
use super::ideal::Ideal;

/// A monomial ideal stored by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: Arc<Universe>,
    gens: Vec<Term>,
}

/// The standard monomials of a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Complement {
    Finite(Vec<Term>),
    Infinite,
}

impl MonomialIdeal {
    /// Minimalizes `terms`; the result lists generators in increasing (degree, exponent) order.
    pub fn new(universe: &Arc<Universe>, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut all: Vec<Term> = terms.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(t) = all.iter().find(|t| t.nvars() != universe.len()) {
            return Err(Error::UniverseMismatch(format!(
                "term with {} exponents in a universe of {} variables",
                t.nvars(),
                universe.len()
            )));
        }
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        let mut gens: Vec<Term> = Vec::new();
        for t in all {
            if !gens.iter().any(|g| g.divides(&t)) {
                gens.push(t);
            }
        }
        Ok(MonomialIdeal {
            universe: universe.clone(),
            gens,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn generators(&self) -> &[Term] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Term::is_one)
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.gens.iter().any(|g| g.divides(t))
    }

    /// Krull dimension of the quotient ring: the number of variables minus the
    /// smallest set of variables meeting the support of every generator.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.universe.len();
        if n > 128 {
            return Err(Error::InvalidArgument("more than 128 variables".into()));
        }
        let mut edges: Vec<u128> = self
            .gens
            .iter()
            .map(|g| g.support().fold(0u128, |m, (k, _)| m | (1u128 << k)))
            .collect();
        edges.sort_by_key(|e| e.count_ones());
        let mut minimal: Vec<u128> = Vec::new();
        for e in edges {
            if !minimal.iter().any(|m| m & e == *m) {
                minimal.push(e);
            }
        }
        let mut best = n;
        hitting_set(&minimal, 0, 0, &mut best);
        Ok(n - best)
    }

    /// Standard monomials, or `Infinite` when some variable has no pure power among the generators.
    pub fn complement(&self) -> Complement {
        let n = self.universe.len();
        let mut bounds = vec![None; n];
        for g in &self.gens {
            let supp: Vec<_> = g.support().collect();
            if supp.len() == 1 {
                let (k, e) = supp[0];
                bounds[k] = Some(e);
            }
        }
        if self.is_unit() {
            return Complement::Finite(Vec::new());
        }
        let Some(bounds) = bounds.into_iter().collect::<Option<Vec<u32>>>() else {
            return Complement::Infinite;
        };
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let t = Term::from_exponents(exps.clone());
            if !self.contains(&t) {
                out.push(t);
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Complement::Finite(out);
                }
                exps[k] += 1;
                if exps[k] < bounds[k] {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }
}

fn hitting_set(edges: &[u128], chosen: u128, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let open: Vec<u128> = edges.iter().copied().filter(|e| e & chosen == 0).collect();
    let Some(&pick) = open.iter().min_by_key(|e| e.count_ones()) else {
        *best = size;
        return;
    };
    // Disjoint open edges each need their own variable.
    let mut lower = 0;
    let mut used = 0u128;
    for e in &open {
        if e & used == 0 {
            used |= e;
            lower += 1;
        }
    }
    if size + lower >= *best {
        return;
    }
    let mut rest = pick;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        hitting_set(edges, chosen | bit, size + 1, best);
    }
}

/// `LT_ord(I)` from the reduced Gröbner basis.
pub fn leading_term_ideal(ideal: &Ideal, ord: &TermOrdering, cfg: &GbConfig) -> Result<MonomialIdeal> {
    let gb = ideal.groebner_basis(ord, cfg)?;
    MonomialIdeal::new(ideal.universe(), gb.leading_terms())
}
