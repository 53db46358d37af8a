//! Gröbner basis engine.

mod buchberger;
mod elim;
mod ideal;
mod monomial;
mod row;
mod split;

pub use buchberger::{reduced_groebner_basis, GbConfig, Selection};
pub use elim::{eliminate, linear_preprocess, substitution_eliminate, LinearReduction};
pub use ideal::{divide, normal_form, GroebnerBasis, Ideal};
pub use monomial::{leading_term_ideal, Complement, MonomialIdeal};
pub use row::ReducerChoice;
pub use split::krull_dimension_split;

#[allow(unused_imports)]
pub(crate) use row::{reduce_full, Reducer, Row};

use crate::error::{Error, Result};
use crate::poly::TermOrdering;

/// Krull dimension of `P/I`, read off the leading-term ideal under DegRevLex.
pub fn krull_dimension(ideal: &Ideal, cfg: &GbConfig) -> Result<usize> {
    krull_dimension_with(ideal, &TermOrdering::default_for(ideal.universe()), cfg)
}

/// Krull dimension computed through the leading-term ideal for `ord`.
pub fn krull_dimension_with(ideal: &Ideal, ord: &TermOrdering, cfg: &GbConfig) -> Result<usize> {
    let lt = leading_term_ideal(ideal, ord, cfg)?;
    if lt.is_unit() {
        return Err(Error::UnitIdeal);
    }
    lt.krull_dimension()
}
