//! Exact construction and verification of extended Clausen product formulas
//! for squares and perturbed products of Gauss hypergeometric series.
//!
//! Everything is computed over the rationals; identities are checked by
//! exact coefficient equality, never by tolerance.

pub mod clausen;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod poly;
pub mod rational;
pub mod sampling;
pub mod series;
pub mod suite;
pub mod verify;

pub use clausen::{ClausenParams, HatPoly, PerturbationInput, RecurrenceCoeffs};
pub use error::{Error, Result};
pub use poly::RatPoly;
pub use rational::Rational;
pub use series::{PerturbedSpec, SeriesSpec, TruncatedSeries};
pub use verify::{Identity, Status, VerifyReport};

