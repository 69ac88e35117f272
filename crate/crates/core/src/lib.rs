//! Exact point counting and zeta function toolkit for explicit projective
//! curves over finite fields.
//!
//! The crate is organized around the pipeline
//! `model file -> reduction mod ell -> point counts -> L-polynomial -> bounds`:
//!
//! * [`ff`] — finite field arithmetic `F_{p^k}` (optionally Zech-table backed)
//! * [`poly`] — sparse multivariate / dense univariate polynomials, root
//!   extraction and Macaulay eliminants
//! * [`model`] — curve model files, reduction, Jacobians, coordinate changes
//! * [`engines`] — naive and fibered exact point counting
//! * [`zeta`] — L-polynomial recovery, count prediction, Weil/Serre bounds

pub mod engines;
pub mod ff;
pub mod model;
pub mod poly;
pub mod zeta;
