//! Rational curve-fitting list decoders for Reed-Solomon and narrow-sense
//! binary BCH codes.
//!
//! The pipeline runs the Berlekamp-Massey (or Berlekamp) key-equation engine
//! once, turns its (Lambda, B) output into n rational interpolation points,
//! fits a weighted-degree bivariate polynomial through all points with
//! multiplicity, and factors out candidate error locators of the form
//! lambda(x) Lambda(x) + b(x) x B(x). The planner computes every decoding
//! parameter (multiplicity, y-degree, list bounds) in exact integer
//! arithmetic.

pub mod bch;
pub mod factor;
pub mod fixtures;
pub mod gf;
pub mod interp;
pub mod io;
pub mod listdec;
pub mod planner;
pub mod poly;
pub mod rs;

pub use gf::{Felt, FieldCtx};
pub use poly::Poly;
