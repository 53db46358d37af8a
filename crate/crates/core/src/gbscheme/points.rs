use std::collections::HashMap;

use num_traits::Zero;

use crate::border::SchemePoint;
use crate::error::{Error, Result};
use crate::gb::{GbConfig, Ideal, MonomialIdeal};
use crate::order_ideal::OrderIdeal;
use crate::poly::{c_name, Coeff, Polynomial, Term, TermOrdering};

use super::GbScheme;

/// The order ideal `O_σ(I)` and the border-basis coordinates of `I`.
///
/// `ideal` must be zero-dimensional in the x-variables. Every `L` position of
/// the returned point is checked to be zero.
pub fn point_from_ideal(ideal: &Ideal, sigma: &TermOrdering, cfg: &GbConfig) -> Result<(OrderIdeal, SchemePoint)> {
    let u = ideal.universe();
    let gb = ideal.groebner_basis(sigma, cfg)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lt = MonomialIdeal::new(u, gb.leading_terms())?;
    let o = OrderIdeal::from_complement(&lt)?.ok_or(Error::NotZeroDimensional)?;
    let mut p = SchemePoint::zero();
    for (j, b) in o.border().iter().enumerate() {
        let nf = gb.normal_form(&Polynomial::monomial(u, b.clone(), Coeff::from_integer(1.into())))?;
        for (t, c) in nf.terms() {
            let i = o.term_index(t).ok_or_else(|| {
                Error::InvariantViolation(format!("normal form term {} outside the order ideal", o.format_term(t)))
            })?;
            p.set(i + 1, j + 1, c.clone());
        }
    }
    let scheme = GbScheme::new(&o, sigma)?;
    for &(i, j) in &scheme.vars().l_o {
        if !p.get(i, j).is_zero() {
            return Err(Error::InvariantViolation(format!("nonzero coordinate {} on L", c_name(i, j))));
        }
    }
    Ok((o, p))
}

impl GbScheme {
    /// Specialize `g_1*..g_η*` at `p`, sorted by decreasing leading term.
    ///
    /// Only the `S_cO` coordinates of `p` are used; the expanded point must
    /// satisfy the border scheme equations.
    pub fn ideal_from_point(&self, p: &SchemePoint) -> Result<Vec<Polynomial>> {
        let q = p.restrict(|i, j| self.vars().s_co.contains(&(i, j)));
        let full = self.expand_point(&q)?;
        if let Some((k, l, r, c)) = self.border_scheme().commutator_witness(&full)? {
            let ms = self.border_scheme().multiplication_matrices();
            let entry = ms[k].mul(&ms[l]).sub(&ms[l].mul(&ms[k])).entries[r][c].clone();
            return Err(Error::NotAPoint {
                witness: entry.to_string(),
            });
        }
        let o = self.order_ideal();
        let u = o.universe();
        let mut out: Vec<Polynomial> = (0..o.eta())
            .map(|j| {
                let mut g = Polynomial::monomial(u, o.border()[j].clone(), Coeff::from_integer(1.into()));
                for (i, t) in o.terms().iter().enumerate() {
                    let a = full.get(i + 1, j + 1);
                    if !a.is_zero() {
                        g = &g - &Polynomial::monomial(u, t.clone(), a);
                    }
                }
                g
            })
            .collect();
        let ord = self.sigma_order();
        let lead = |g: &Polynomial| -> Term { g.leading_term(ord).expect("nonzero") };
        out.sort_by(|a, b| ord.cmp(&lead(b), &lead(a)));
        Ok(out)
    }

    /// The point values of `p` restricted to `S_cO`, keyed by variable index of the scheme ring.
    pub fn s_values(&self, p: &SchemePoint) -> HashMap<usize, Coeff> {
        p.values_in(self.s_universe())
    }
}

/// Reduced `σ`-Gröbner basis of the ideal parametrized by `p`.
pub fn ideal_from_point(o: &OrderIdeal, sigma: &TermOrdering, p: &SchemePoint) -> Result<Vec<Polynomial>> {
    GbScheme::new(o, sigma)?.ideal_from_point(p)
}
