use crate::error::{Error, Result};
use crate::gb::{linear_preprocess, Ideal};
use crate::order_ideal::OrderIdeal;
use crate::poly::TermOrdering;

/// Every corner exceeds every element of `O` under `σ`.
pub fn is_sigma_cornercut(o: &OrderIdeal, sigma: &TermOrdering) -> Result<bool> {
    let ord = sigma.bind_total(o.universe())?;
    Ok(o.corners().iter().all(|b| o.terms().iter().all(|t| ord.cmp(b, t).is_gt())))
}

fn v_degree(t: &crate::poly::Term, v: &[u64]) -> Result<i64> {
    if v.len() != t.nvars() || v.contains(&0) {
        return Err(Error::InvalidArgument("V needs one positive weight per variable".into()));
    }
    Ok(t.weighted_degree(&v.iter().map(|&w| w as i64).collect::<Vec<_>>()))
}

fn corner_gaps(o: &OrderIdeal, v: &[u64]) -> Result<Vec<i64>> {
    let mut gaps = Vec::new();
    for b in o.corners() {
        for t in o.terms() {
            gaps.push(v_degree(b, v)? - v_degree(t, v)?);
        }
    }
    Ok(gaps)
}

/// `deg_V(b) > deg_V(t)` for every corner `b` and `t ∈ O`.
pub fn is_v_cornercut(o: &OrderIdeal, v: &[u64]) -> Result<bool> {
    Ok(corner_gaps(o, v)?.iter().all(|&g| g > 0))
}

/// `deg_V(b) ≥ deg_V(t)` for every corner `b` and `t ∈ O`.
pub fn has_maxdeg_border(o: &OrderIdeal, v: &[u64]) -> Result<bool> {
    Ok(corner_gaps(o, v)?.iter().all(|&g| g >= 0))
}

/// Result of eliminating linearly solvable variables from a homogeneous ideal.
#[derive(Debug, Clone)]
pub enum AffineCell {
    /// The ideal collapses to zero; the surviving variables are free.
    AffineSpace(Vec<String>),
    /// Generators remain after every possible linear elimination.
    Residual(Ideal),
}

impl AffineCell {
    pub fn is_affine(&self) -> bool {
        matches!(self, AffineCell::AffineSpace(_))
    }
}

/// Check homogeneity for positive `weights` (one per variable of `j`), then
/// solve away generators `c − g` with `c` absent from `g` until none remain.
pub fn affine_cell_detect(j: &Ideal, weights: &[i64]) -> Result<AffineCell> {
    let u = j.universe();
    if weights.len() != u.len() || weights.iter().any(|&w| w <= 0) {
        return Err(Error::InvalidArgument("one positive weight per variable is required".into()));
    }
    for g in j.generators() {
        if g.homogeneous_degree(weights).is_none() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    let red = linear_preprocess(j)?;
    if red.residual.has_zero_generators_only() {
        Ok(AffineCell::AffineSpace(red.residual.universe().names()))
    } else {
        Ok(AffineCell::Residual(red.residual))
    }
}
