//! Gröbner basis schemes: variable splits, weights, the defining ideal and its
//! construction routes, cornercuts, affine cells, points and degenerations.

mod cell;
mod deform;
mod homogeneity;
mod points;
mod vars;
mod weights;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::border::BorderScheme;
use crate::error::{Error, Result};
use crate::gb::{eliminate, GbConfig, Ideal, Reducer, ReducerChoice, Row};
use crate::order_ideal::OrderIdeal;
use crate::poly::{c_name, Coeff, MonomialOrder, Polynomial, Term, TermOrdering, Universe};

pub use cell::{affine_cell_detect, has_maxdeg_border, is_sigma_cornercut, is_v_cornercut, AffineCell};
pub use deform::{deform, DeformationFamily};
pub use homogeneity::{verify_homogeneity, ClaimResult, HomogeneityReport};
pub use points::{ideal_from_point, point_from_ideal};
pub use vars::{split_variables, SchemeVars};
pub use weights::{NamedWeights, WeightSystem};

/// How the ideal of the Gröbner basis scheme is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Kill `L`, then replace the non-corner coordinates by their `h` polynomials.
    Substitution,
    /// Collect the `O`-coefficients of the reduced S-polynomials of the corner prebasis.
    Reduction(ReductionPolicy),
    /// Eliminate all non-`S_cO` variables from `I(B_O) + L` directly.
    EliminationOracle,
}

impl Route {
    pub fn reduction() -> Self {
        Route::Reduction(ReductionPolicy::default())
    }
}

/// Tie-breaks for the reduction route.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionPolicy {
    /// Reduce by the largest admissible corner index instead of the smallest.
    pub largest_reducer: bool,
    /// Process S-pairs in reverse order.
    pub reverse_pairs: bool,
}

/// Everything attached to a fixed order ideal and term ordering.
#[derive(Debug, Clone)]
pub struct GbScheme {
    bs: BorderScheme,
    sigma: MonomialOrder,
    vars: SchemeVars,
    weights: WeightSystem,
    /// x + S_O
    xso: Arc<Universe>,
    /// x + S_cO
    xs: Arc<Universe>,
    /// S_O
    so: Arc<Universe>,
    /// S_cO
    s: Arc<Universe>,
    sigma_bar_full: MonomialOrder,
    sigma_bar: MonomialOrder,
    h: BTreeMap<(usize, usize), Polynomial>,
}

fn sigma_bar_descriptor(
    x_names: &[String],
    sigma: &TermOrdering,
    v: &[u64],
    c_weights: &BTreeMap<(usize, usize), u64>,
) -> TermOrdering {
    let mut weights: BTreeMap<String, u64> = x_names.iter().cloned().zip(v.iter().copied()).collect();
    let mut keys: Vec<(usize, usize)> = c_weights.keys().copied().collect();
    keys.sort_by_key(|&(i, j)| (j, i));
    for &(i, j) in &keys {
        weights.insert(c_name(i, j), c_weights[&(i, j)]);
    }
    let c_names: Vec<String> = keys.iter().map(|&(i, j)| c_name(i, j)).collect();
    TermOrdering::SigmaBar {
        weights,
        sigma: Box::new(sigma.clone()),
        c_tiebreak: Box::new(TermOrdering::degrevlex(&c_names)),
    }
}

impl GbScheme {
    /// `sigma` must be a term ordering on the x-variables of `o`.
    pub fn new(o: &OrderIdeal, sigma: &TermOrdering) -> Result<Self> {
        let sigma_order = sigma.bind_total(o.universe())?;
        let bs = BorderScheme::new(o)?;
        let vars = SchemeVars::new(o, &sigma_order);
        let weights = weights::find_weights_for(o, &vars)?;
        let x_names = o.universe().names();
        let xso = Universe::with_blocks(&x_names, &SchemeVars::sorted(&vars.s_o), None)?;
        let xs = Universe::with_blocks(&x_names, &SchemeVars::sorted(&vars.s_co), None)?;
        let so = Universe::with_blocks::<&str>(&[], &SchemeVars::sorted(&vars.s_o), None)?;
        let s = Universe::with_blocks::<&str>(&[], &SchemeVars::sorted(&vars.s_co), None)?;
        let sigma_bar_full = sigma_bar_descriptor(&x_names, sigma, &weights.v, &weights.wbar).bind_total(&xso)?;
        let sigma_bar = sigma_bar_descriptor(&x_names, sigma, &weights.v, &weights.w).bind_total(&xs)?;
        let mut scheme = GbScheme {
            bs,
            sigma: sigma_order,
            vars,
            weights,
            xso,
            xs,
            so,
            s,
            sigma_bar_full,
            sigma_bar,
            h: BTreeMap::new(),
        };
        scheme.h = scheme.compute_h()?;
        Ok(scheme)
    }

    pub fn order_ideal(&self) -> &OrderIdeal {
        self.bs.order_ideal()
    }

    pub fn border_scheme(&self) -> &BorderScheme {
        &self.bs
    }

    pub fn sigma(&self) -> &TermOrdering {
        self.sigma.descriptor()
    }

    pub fn sigma_order(&self) -> &MonomialOrder {
        &self.sigma
    }

    pub fn vars(&self) -> &SchemeVars {
        &self.vars
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    /// The ordering `σ̄` on x and `S_O`.
    pub fn sigma_bar(&self) -> &TermOrdering {
        self.sigma_bar_full.descriptor()
    }

    /// `σ̄` restricted to x and `S_cO`.
    pub fn corner_sigma_bar(&self) -> &TermOrdering {
        self.sigma_bar.descriptor()
    }

    /// x-variables and `S_O`.
    pub fn xso_universe(&self) -> &Arc<Universe> {
        &self.xso
    }

    /// x-variables and `S_cO`.
    pub fn xs_universe(&self) -> &Arc<Universe> {
        &self.xs
    }

    /// `S_O` alone.
    pub fn so_universe(&self) -> &Arc<Universe> {
        &self.so
    }

    /// `S_cO` alone: the ring of the Gröbner basis scheme.
    pub fn s_universe(&self) -> &Arc<Universe> {
        &self.s
    }

    fn x_term(t: &Term, u: &Universe) -> Term {
        let mut e = t.exponents().to_vec();
        e.resize(u.len(), 0);
        Term::from_exponents(e)
    }

    fn star_element(&self, j: usize, u: &Arc<Universe>) -> Polynomial {
        let o = self.order_ideal();
        let mut g = Polynomial::monomial(u, Self::x_term(&o.border()[j], u), Coeff::from_integer(1.into()));
        for (i, t) in o.terms().iter().enumerate() {
            if let Some(cv) = u.c_index(i + 1, j + 1) {
                let term = Self::x_term(t, u).mul(&Term::var(u.len(), cv, 1));
                g = &g - &Polynomial::monomial(u, term, Coeff::from_integer(1.into()));
            }
        }
        g
    }

    /// `g_1*..g_ν*` over x and `S_O`.
    pub fn generic_gb_prebasis(&self) -> Vec<Polynomial> {
        (0..self.order_ideal().nu()).map(|j| self.star_element(j, &self.xso)).collect()
    }

    /// `g_1*..g_η*` over x and `S_cO`.
    pub fn corner_prebasis(&self) -> Vec<Polynomial> {
        (0..self.order_ideal().eta()).map(|j| self.star_element(j, &self.xs)).collect()
    }

    /// Split `r` (over x and `S_cO`, supported on `O` in x) as `Σ r_i t_i`.
    fn o_coefficients(&self, r: &Row) -> Result<Vec<Polynomial>> {
        let o = self.order_ideal();
        let n = o.n();
        let mut out = vec![Polynomial::zero(&self.s); o.mu()];
        for (t, c) in &r.terms {
            let x = Term::from_exponents(t.exponents()[..n].to_vec());
            let Some(i) = o.term_index(&x) else {
                return Err(Error::InvariantViolation(format!(
                    "remainder term {} lies outside the span of the order ideal",
                    o.format_term(&x)
                )));
            };
            let c_part = Term::from_exponents(t.exponents()[n..].to_vec());
            out[i] = &out[i] + &Polynomial::monomial(&self.s, c_part, c.clone());
        }
        Ok(out)
    }

    fn corner_rows(&self) -> Vec<Row> {
        self.corner_prebasis()
            .iter()
            .map(|g| Row::from_poly(g, &self.sigma_bar))
            .collect()
    }

    fn compute_h(&self) -> Result<BTreeMap<(usize, usize), Polynomial>> {
        let o = self.order_ideal();
        let rows = self.corner_rows();
        let reducers: Vec<Reducer<'_>> = rows.iter().map(Reducer::new).collect();
        let mut h = BTreeMap::new();
        for j in o.eta()..o.nu() {
            let b = Self::x_term(&o.border()[j], &self.xs);
            let r = crate::gb::reduce_full(
                vec![(b, Coeff::from_integer(1.into()))],
                &reducers,
                &self.sigma_bar,
                ReducerChoice::First,
            );
            let coeffs = self.o_coefficients(&r)?;
            let wvec = self.weights.vector_for(&self.s, false);
            for (i, hij) in coeffs.into_iter().enumerate() {
                let key = (i + 1, j + 1);
                if !self.vars.in_s(key.0, key.1) {
                    if !hij.is_zero() {
                        return Err(Error::InvariantViolation(format!(
                            "h for {} is nonzero although b_{} does not exceed t_{}",
                            c_name(key.0, key.1),
                            key.1,
                            key.0
                        )));
                    }
                    continue;
                }
                if !hij.is_zero() {
                    let expected = self.weights.wbar[&key] as i64;
                    match hij.homogeneous_degree(&wvec) {
                        Some(d) if d == expected => {}
                        other => {
                            return Err(Error::InvariantViolation(format!(
                                "h for {} has degree {other:?}, expected {expected}",
                                c_name(key.0, key.1)
                            )))
                        }
                    }
                }
                h.insert(key, hij);
            }
        }
        Ok(h)
    }

    /// `h_ij` for the non-corner columns, over `S_cO`.
    pub fn h_polynomials(&self) -> &BTreeMap<(usize, usize), Polynomial> {
        &self.h
    }

    /// Commutator generators of `I(B_O)` with every `L` variable set to zero, over `S_O`.
    pub fn border_ideal_mod_l(&self) -> Result<Vec<Polynomial>> {
        let c = self.bs.c_universe();
        let zeros: HashMap<usize, Coeff> = self
            .vars
            .l_o
            .iter()
            .map(|&(i, j)| (c.c_index(i, j).unwrap(), Coeff::zero()))
            .collect();
        let mut out: Vec<Polynomial> = Vec::new();
        for g in self.bs.commutator_generators() {
            let s = g.specialize(&zeros).rebase(&self.so)?;
            if !s.is_zero() && !out.contains(&s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    fn substitution_generators(&self) -> Result<Vec<Polynomial>> {
        let rules: HashMap<usize, Polynomial> = self
            .h
            .iter()
            .map(|(&(i, j), h)| Ok((self.so.c_index(i, j).unwrap(), h.rebase(&self.so)?)))
            .collect::<Result<_>>()?;
        let mut out: Vec<Polynomial> = Vec::new();
        for g in self.border_ideal_mod_l()? {
            let s = g.substitute(&rules)?.rebase(&self.s)?;
            if !s.is_zero() && !out.contains(&s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    fn reduction_generators(&self, policy: ReductionPolicy) -> Result<Vec<Polynomial>> {
        let rows = self.corner_rows();
        let reducers: Vec<Reducer<'_>> = rows.iter().map(Reducer::new).collect();
        let choice = if policy.largest_reducer {
            ReducerChoice::Last
        } else {
            ReducerChoice::First
        };
        let eta = rows.len();
        let mut pairs: Vec<(usize, usize)> = (0..eta).flat_map(|a| (a + 1..eta).map(move |b| (a, b))).collect();
        if policy.reverse_pairs {
            pairs.reverse();
        }
        let one = Coeff::from_integer(1.into());
        let mut out: Vec<Polynomial> = Vec::new();
        for (a, b) in pairs {
            let (ga, gb) = (&rows[a], &rows[b]);
            let lcm = ga.lt().lcm(gb.lt());
            let ma = lcm.div(ga.lt()).unwrap();
            let mb = lcm.div(gb.lt()).unwrap();
            let fa: Vec<(Term, Coeff)> = ga.terms[1..].iter().map(|(t, c)| (t.mul(&ma), c.clone())).collect();
            let s = Row::sub_tail(&fa, &one, &mb, &gb.terms, &self.sigma_bar);
            let r = crate::gb::reduce_full(s, &reducers, &self.sigma_bar, choice);
            for coeff in self.o_coefficients(&r)? {
                if !coeff.is_zero() && !out.contains(&coeff) {
                    out.push(coeff);
                }
            }
        }
        Ok(out)
    }

    fn elimination_generators(&self, cfg: &GbConfig) -> Result<Vec<Polynomial>> {
        let c = self.bs.c_universe();
        let mut gens = self.bs.commutator_generators();
        for &(i, j) in &self.vars.l_o {
            gens.push(Polynomial::var(c, c.c_index(i, j).unwrap()));
        }
        let keep: Vec<usize> = self
            .vars
            .s_co
            .iter()
            .map(|&(i, j)| c.c_index(i, j).unwrap())
            .collect();
        let elim = eliminate(&Ideal::new(c, gens)?, &keep, cfg)?;
        elim.generators().iter().map(|g| g.rebase(&self.s)).collect()
    }

    /// `I(G_{O,σ})` in `K[S_cO]` by the chosen route.
    pub fn ideal(&self, route: Route, cfg: &GbConfig) -> Result<Ideal> {
        let gens = match route {
            Route::Substitution => self.substitution_generators()?,
            Route::Reduction(p) => self.reduction_generators(p)?,
            Route::EliminationOracle => self.elimination_generators(cfg)?,
        };
        Ideal::new(&self.s, gens)
    }

    /// Expand coordinates on `S_cO` to the whole grid: `h` values on the other
    /// `S_O` positions, zeros on `L`. Coordinates of `p` outside `S_cO` must be
    /// zero or agree with the expansion.
    pub fn expand_point(&self, p: &SchemePoint) -> Result<SchemePoint> {
        let o = self.order_ideal();
        p.check_grid(o.mu(), o.nu())?;
        let mut full = p.restrict(|i, j| self.vars.s_co.contains(&(i, j)));
        let vals = full.values_in(&self.s);
        for (&(i, j), h) in &self.h {
            full.set(i, j, h.evaluate(&vals));
        }
        for (&(i, j), v) in p.nonzero() {
            if full.get(i, j) != *v {
                return Err(Error::NotAPoint {
                    witness: format!(
                        "coordinate {} = {} but the scheme forces {}",
                        c_name(i, j),
                        crate::poly::text::format_coeff(v),
                        crate::poly::text::format_coeff(&full.get(i, j))
                    ),
                });
            }
        }
        Ok(full)
    }

    /// Whether the restriction of `p` to `S_cO` is a point of the scheme.
    pub fn contains_point(&self, p: &SchemePoint) -> Result<bool> {
        let q = p.restrict(|i, j| self.vars.s_co.contains(&(i, j)));
        let full = self.expand_point(&q)?;
        self.bs.is_point(&full)
    }
}

pub use crate::border::SchemePoint;

/// Convenience wrapper building a [`GbScheme`] and returning `g_1*..g_ν*`.
pub fn generic_gb_prebasis(o: &OrderIdeal, sigma: &TermOrdering) -> Result<Vec<Polynomial>> {
    Ok(GbScheme::new(o, sigma)?.generic_gb_prebasis())
}

pub fn find_weights(o: &OrderIdeal, sigma: &TermOrdering) -> Result<WeightSystem> {
    Ok(GbScheme::new(o, sigma)?.weights().clone())
}

pub fn h_polynomials(o: &OrderIdeal, sigma: &TermOrdering) -> Result<BTreeMap<(usize, usize), Polynomial>> {
    Ok(GbScheme::new(o, sigma)?.h_polynomials().clone())
}

pub fn gb_scheme_ideal(o: &OrderIdeal, sigma: &TermOrdering, route: Route, cfg: &GbConfig) -> Result<Ideal> {
    GbScheme::new(o, sigma)?.ideal(route, cfg)
}
