use std::sync::Arc;

use crate::error::{Error, Result};
use num_traits::One;

use crate::poly::{Coeff, MonomialOrder, Polynomial, Term, TermOrdering, Universe};

use super::buchberger::{gb_rows, GbConfig};
use super::elim::linear_preprocess;
use super::row::{divide_rows, reduce_full, Reducer, ReducerChoice, Row};

/// A reduced Gröbner basis together with the ordering it was computed for.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    rows: Vec<Row>,
}

impl GroebnerBasis {
    pub fn compute(gens: &[Polynomial], ord: &TermOrdering, universe: &Arc<Universe>, cfg: &GbConfig) -> Result<Self> {
        let order = ord.bind_total(universe)?;
        let gens = gens
            .iter()
            .map(|g| {
                if Universe::same(g.universe(), universe) {
                    Ok(g.clone())
                } else {
                    Err(Error::UniverseMismatch("generator outside the ideal's universe".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = gb_rows(&gens, &order, cfg)?;
        let polys = rows.iter().map(|r| r.to_poly(universe)).collect();
        Ok(GroebnerBasis { order, polys, rows })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn ordering(&self) -> &TermOrdering {
        self.order.descriptor()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.order.universe()
    }

    pub fn is_unit(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.rows.iter().map(|r| r.lt().clone()).collect()
    }

    /// Canonical representative of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = f.rebase(self.universe())?;
        let reducers: Vec<Reducer<'_>> = self.rows.iter().map(Reducer::new).collect();
        let row = reduce_full(Row::from_poly(&f, &self.order).terms, &reducers, &self.order, ReducerChoice::First);
        Ok(row.to_poly(self.universe()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ordering() == other.ordering() && self.polys == other.polys
    }
}

/// An ideal given by generators, optionally carrying its reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    universe: Arc<Universe>,
    generators: Vec<Polynomial>,
    basis: Option<GroebnerBasis>,
}

impl Ideal {
    pub fn new(universe: &Arc<Universe>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !Universe::same(g.universe(), universe) {
                return Err(Error::UniverseMismatch(format!("generator {g} is not over {universe}")));
            }
        }
        Ok(Ideal {
            universe: universe.clone(),
            generators,
            basis: None,
        })
    }

    /// Builds an ideal, rebasing every generator onto `universe`.
    pub fn rebased(universe: &Arc<Universe>, generators: &[Polynomial]) -> Result<Self> {
        let gens = generators.iter().map(|g| g.rebase(universe)).collect::<Result<Vec<_>>>()?;
        Self::new(universe, gens)
    }

    pub fn zero(universe: &Arc<Universe>) -> Self {
        Ideal {
            universe: universe.clone(),
            generators: Vec::new(),
            basis: None,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Nonzero generators, duplicates removed, first occurrence kept.
    pub fn nonzero_generators(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in &self.generators {
            if !g.is_zero() && !out.contains(g) {
                out.push(g.clone());
            }
        }
        out
    }

    pub fn has_zero_generators_only(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// Attach a precomputed reduced basis (must be over the same universe).
    pub fn with_basis(mut self, gb: GroebnerBasis) -> Result<Self> {
        if !Universe::same(gb.universe(), &self.universe) {
            return Err(Error::UniverseMismatch("basis universe differs".into()));
        }
        self.basis = Some(gb);
        Ok(self)
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis> {
        self.basis.as_ref()
    }

    /// Reduced Gröbner basis for `ord`, reusing the attached one when it matches.
    pub fn groebner_basis(&self, ord: &TermOrdering, cfg: &GbConfig) -> Result<GroebnerBasis> {
        if let Some(gb) = &self.basis {
            if gb.ordering() == ord {
                return Ok(gb.clone());
            }
        }
        GroebnerBasis::compute(&self.generators, ord, &self.universe, cfg)
    }

    pub fn default_basis(&self, cfg: &GbConfig) -> Result<GroebnerBasis> {
        self.groebner_basis(&TermOrdering::default_for(&self.universe), cfg)
    }

    /// A Gröbner basis suited to membership tests.
    ///
    /// Variables that [`linear_preprocess`] can solve for form a leading block,
    /// so only the residual ideal goes through Buchberger in earnest.
    pub fn membership_basis(&self, cfg: &GbConfig) -> Result<GroebnerBasis> {
        if let Some(gb) = &self.basis {
            return Ok(gb.clone());
        }
        let red = linear_preprocess(self)?;
        if red.eliminated.is_empty() {
            return self.default_basis(cfg);
        }
        let u = &self.universe;
        let block: Vec<String> = red.eliminated.iter().map(|(v, _)| v.clone()).collect();
        let rest = red.residual.universe().names();
        let mut gens = Vec::with_capacity(block.len() + red.residual.generators().len());
        for (v, value) in &red.eliminated {
            let k = u.index_of(v).expect("eliminated variable");
            gens.push(&Polynomial::monomial(u, Term::var(u.len(), k, 1), Coeff::one()) - &value.rebase(u)?);
        }
        for g in red.residual.nonzero_generators() {
            gens.push(g.rebase(u)?);
        }
        let outer = if rest.is_empty() {
            TermOrdering::degrevlex(&block)
        } else {
            TermOrdering::degrevlex(&rest)
        };
        let ord = TermOrdering::Elimination {
            block: block.clone(),
            inner: Box::new(TermOrdering::degrevlex(&block)),
            outer: Box::new(outer),
        };
        GroebnerBasis::compute(&gens, &ord, u, cfg)
    }

    /// Ideal equality, decided by mutual containment of generators.
    ///
    /// The two ideals may live over different universes as long as their
    /// generators rebase onto `self`'s universe.
    pub fn same_ideal(&self, other: &Ideal, cfg: &GbConfig) -> Result<bool> {
        let other = Ideal::rebased(&self.universe, &other.generators)?;
        let within = |a: &Ideal, b: &Ideal| -> Result<bool> {
            let gb = b.membership_basis(cfg)?;
            for g in a.nonzero_generators() {
                if !gb.normal_form(&g)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        Ok(within(self, &other)? && within(&other, self)?)
    }
}

/// `normal_form(f, I, ord)`.
pub fn normal_form(f: &Polynomial, ideal: &Ideal, ord: &TermOrdering, cfg: &GbConfig) -> Result<Polynomial> {
    ideal.groebner_basis(ord, cfg)?.normal_form(f)
}

/// Multivariate division of `f` by an ordered list of divisors.
///
/// Returns `(quotients, remainder)` with `f = sum q_i d_i + r`, where no term of
/// `r` is divisible by a divisor's leading term. At each step the first divisor
/// (in list order) whose leading term divides the current leading term is used.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: &TermOrdering) -> Result<(Vec<Polynomial>, Polynomial)> {
    let u = f.universe().clone();
    if divisors.is_empty() {
        return Ok((Vec::new(), f.clone()));
    }
    let order = ord.bind(&u)?;
    for d in divisors {
        if !Universe::same(d.universe(), &u) {
            return Err(Error::UniverseMismatch("divisor universe differs".into()));
        }
        if d.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
    }
    // Check the ordering ranks everything that occurs.
    let one = Term::one(u.len());
    for p in divisors.iter().chain(std::iter::once(f)) {
        for (t, _) in p.terms() {
            order.compare(t, &one)?;
        }
    }
    let rows: Vec<Row> = divisors.iter().map(|d| Row::from_poly(d, &order)).collect();
    let (qs, r) = divide_rows(&Row::from_poly(f, &order), &rows, &order);
    let quotients = qs
        .into_iter()
        .map(|q| Polynomial::from_terms(&u, q))
        .collect();
    Ok((quotients, r.to_poly(&u)))
}

impl Ideal {
    pub fn is_zero_ideal(&self, cfg: &GbConfig) -> Result<bool> {
        if self.has_zero_generators_only() {
            return Ok(true);
        }
        Ok(self.membership_basis(cfg)?.is_zero_ideal())
    }

    pub fn contains(&self, f: &Polynomial, cfg: &GbConfig) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let gb = self.membership_basis(cfg)?;
        Ok(gb.normal_form(f)?.is_zero())
    }
}
