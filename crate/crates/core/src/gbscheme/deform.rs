use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::border::SchemePoint;
use crate::error::Result;
use crate::gb::Ideal;
use crate::poly::{Coeff, Polynomial, Term, TermOrdering, Universe, Variable};

use super::GbScheme;

/// The one-parameter family `b_j − Σ t^{w_ij} a_ij t_i` over the corners.
#[derive(Debug, Clone)]
pub struct DeformationFamily {
    /// The expanded base point.
    pub point: SchemePoint,
    /// x-variables and the parameter `t`.
    pub universe: Arc<Universe>,
    pub generators: Vec<Polynomial>,
    x_universe: Arc<Universe>,
    sigma: TermOrdering,
}

impl DeformationFamily {
    pub fn parameter_index(&self) -> usize {
        self.universe.param_index().expect("family has a parameter")
    }

    /// Generators with `t = t0`, over the x-variables.
    pub fn fiber_generators(&self, t0: &Coeff) -> Result<Vec<Polynomial>> {
        let vals: HashMap<usize, Coeff> = [(self.parameter_index(), t0.clone())].into_iter().collect();
        self.generators
            .iter()
            .map(|g| g.specialize(&vals).rebase(&self.x_universe))
            .collect()
    }

    pub fn fiber(&self, t0: &Coeff) -> Result<Ideal> {
        Ideal::new(&self.x_universe, self.fiber_generators(t0)?)
    }

    pub fn sigma(&self) -> &TermOrdering {
        &self.sigma
    }
}

impl GbScheme {
    /// Flat family through `p` (a point of the scheme) degenerating to the corner monomials.
    pub fn deform(&self, p: &SchemePoint, param: &str) -> Result<DeformationFamily> {
        // Validates the point and fills in the non-corner coordinates.
        self.ideal_from_point(p)?;
        let q = p.restrict(|i, j| self.vars().s_co.contains(&(i, j)));
        let point = self.expand_point(&q)?;
        let o = self.order_ideal();
        let x_universe = o.universe().clone();
        let universe = x_universe.extend(vec![Variable::param(param)])?;
        let tp = universe.param_index().expect("parameter");
        let n = universe.len();
        let lift = |t: &Term| {
            let mut e = t.exponents().to_vec();
            e.resize(n, 0);
            Term::from_exponents(e)
        };
        let one = Coeff::from_integer(1.into());
        let mut generators = Vec::with_capacity(o.eta());
        for j in 0..o.eta() {
            let mut g = Polynomial::monomial(&universe, lift(&o.border()[j]), one.clone());
            for (i, t) in o.terms().iter().enumerate() {
                let a = point.get(i + 1, j + 1);
                if a.is_zero() {
                    continue;
                }
                let w = self.weights().w[&(i + 1, j + 1)] as u32;
                let term = lift(t).mul(&Term::var(n, tp, w));
                g = &g - &Polynomial::monomial(&universe, term, a);
            }
            generators.push(g);
        }
        Ok(DeformationFamily {
            point,
            universe,
            generators,
            x_universe,
            sigma: self.sigma().clone(),
        })
    }
}

/// Flat degeneration of the ideal parametrized by `p`, with parameter `t`.
pub fn deform(scheme: &GbScheme, p: &SchemePoint) -> Result<DeformationFamily> {
    scheme.deform(p, "t")
}
