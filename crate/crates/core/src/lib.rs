//! Exact construction and analysis of border basis schemes and Gröbner basis
//! schemes of zero-dimensional polynomial ideals.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: variable universes, terms, rational polynomials, term orderings,
//!   text and JSON formats.
//! * [`gb`]: Buchberger's algorithm, normal forms, elimination, leading-term
//!   ideals and Krull dimension.
//! * [`order_ideal`]: order ideals, borders, corners and their indexing.
//! * [`border`]: the generic border prebasis, formal multiplication matrices,
//!   the border basis scheme ideal and point checks.
//! * [`gbscheme`]: variable splits, weight systems, the Gröbner basis scheme
//!   ideal (three construction routes), cornercuts, affine-cell detection,
//!   point/ideal round trips and flat degenerations.

pub mod border;
pub mod error;
pub mod gb;
pub mod gbscheme;
pub mod linalg;
pub mod order_ideal;
pub mod poly;

pub use error::{Error, ErrorKind, Result};
