//! JSON encodings: a polynomial is a list of `{exponents: {var: int}, coeff: "p/q"}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::text::{format_coeff, parse_coeff};
use super::{Polynomial, Term, Universe};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: BTreeMap<String, u32>,
    pub coeff: String,
}

pub type PolynomialJson = Vec<TermJson>;

pub fn term_to_json(u: &Universe, t: &Term) -> BTreeMap<String, u32> {
    t.support().map(|(k, e)| (u.name(k).to_string(), e)).collect()
}

pub fn term_from_json(u: &Arc<Universe>, exps: &BTreeMap<String, u32>) -> Result<Term> {
    let mut e = vec![0; u.len()];
    for (name, &x) in exps {
        e[u.require(name)?] += x;
    }
    Ok(Term::from_exponents(e))
}

/// Terms are emitted in the canonical (exponent-vector) order, so equal
/// polynomials serialize to identical JSON.
pub fn to_json(p: &Polynomial) -> PolynomialJson {
    p.terms()
        .map(|(t, c)| TermJson {
            exponents: term_to_json(p.universe(), t),
            coeff: format_coeff(c),
        })
        .collect()
}

pub fn from_json(u: &Arc<Universe>, js: &[TermJson]) -> Result<Polynomial> {
    let mut out = Polynomial::zero(u);
    for tj in js {
        out.add_term(term_from_json(u, &tj.exponents)?, parse_coeff(&tj.coeff)?);
    }
    Ok(out)
}
