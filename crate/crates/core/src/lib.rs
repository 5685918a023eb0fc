//! Exact computational algebra for Kalman varieties: the matrices A in
//! K^{n×n} having an invariant subspace of dimension at least s inside the
//! coordinate subspace L = span(e_1, ..., e_d).
//!
//! The crate builds the Kalman matrices and their minor ideals, decides
//! membership by exact rank computations (with brute-force finite-field
//! oracles), certifies the explicit Gröbner basis and Hilbert data of the
//! d = 2 family, and computes degrees of every stratum by several
//! independent routes.

pub mod arith;
pub mod degrees;
pub mod error;
pub mod groebner_d2;
pub mod kalman;
pub mod matrix;
pub mod polyring;

pub use error::{Error, Result};
