use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::gb::GbConfig;
use crate::poly::{Polynomial, Universe};

use super::weights::WeightSystem;
use super::{GbScheme, Route};

/// Outcome of one homogeneity claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: char,
    pub description: String,
    pub passed: bool,
    /// A generator that is not homogeneous, when the claim fails.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub claims: Vec<ClaimResult>,
}

impl HomogeneityReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, id: char) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim == id)
    }
}

fn check(claim: char, description: &str, gens: &[Polynomial], u: &Arc<Universe>, weights: &[i64]) -> Result<ClaimResult> {
    for g in gens {
        let g = g.rebase(u)?;
        if g.homogeneous_degree(weights).is_none() {
            return Ok(ClaimResult {
                claim,
                description: description.into(),
                passed: false,
                witness: Some(g.to_string()),
            });
        }
    }
    Ok(ClaimResult {
        claim,
        description: description.into(),
        passed: true,
        witness: None,
    })
}

/// Check the four homogeneity claims generator by generator:
///
/// * `b`: the scheme ideal is `W`-homogeneous;
/// * `c`: adding `g_1*..g_η*` keeps it `(V,W)`-homogeneous;
/// * `d`: `I(B_O)` with `L` set to zero is `W̄`-homogeneous;
/// * `e`: adding `g_1*..g_ν*` keeps it `(V,W̄)`-homogeneous.
pub fn verify_homogeneity(scheme: &GbScheme, ws: &WeightSystem) -> Result<HomogeneityReport> {
    let cfg = GbConfig::default();
    let ig = scheme.ideal(Route::Substitution, &cfg)?;
    let ig_gens = ig.generators().to_vec();
    let mod_l = scheme.border_ideal_mod_l()?;

    let s = scheme.s_universe();
    let xs = scheme.xs_universe();
    let so = scheme.so_universe();
    let xso = scheme.xso_universe();

    let mut c_gens = ig_gens.clone();
    c_gens.extend(scheme.corner_prebasis());
    let mut e_gens = mod_l.clone();
    e_gens.extend(scheme.generic_gb_prebasis());

    let claims = vec![
        check('b', "scheme ideal is W-homogeneous", &ig_gens, s, &ws.vector_for(s, false))?,
        check('c', "scheme ideal plus corner prebasis is (V,W)-homogeneous", &c_gens, xs, &ws.vector_for(xs, false))?,
        check('d', "border scheme ideal modulo L is Wbar-homogeneous", &mod_l, so, &ws.vector_for(so, true))?,
        check('e', "border scheme ideal modulo L plus full prebasis is (V,Wbar)-homogeneous", &e_gens, xso, &ws.vector_for(xso, true))?,
    ];
    Ok(HomogeneityReport { claims })
}
