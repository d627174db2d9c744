//! Core of the ln-kit toolkit: exact polynomial algebra over Q(i),
//! log-Noetherian chains and cells, effective zero-count bounds with
//! certificates, Taylor/Laurent domination, the constructive chain
//! calculus, and a length-one cellular parametrization engine.

pub mod audit;
pub mod bounds;
pub mod calculus;
pub mod cell;
pub mod chain;
pub mod config;
pub mod cpt;
pub mod domination;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod scalar;

pub use config::ToolConfig;
pub use poly::{CPolynomial, Derivation, Monomial, Polynomial, QiPolynomial};
pub use scalar::{ConstVal, GaussianRational, Scalar, Value};

/// Complex double-precision number used throughout the numeric layer.
pub type C64 = num_complex::Complex64;
