//! Sparse multivariate polynomials over exact rationals.

pub mod json;
mod ordering;
mod polynomial;
mod term;
pub mod text;
mod universe;

pub use ordering::{compare, MonomialOrder, TermOrdering};
pub use polynomial::{int, rat, Coeff, Polynomial};
pub use term::Term;
pub use text::{parse_polynomial, parse_polynomial_list, parse_terms};
pub use universe::{c_name, standard_x_names, Universe, VarKind, Variable};
