//! Character degree graphs of finite groups.
//!
//! Computes irreducible character degrees of small permutation groups, builds
//! the prime graph on those degrees and evaluates known structural
//! constraints on such graphs.

pub mod catalog;
pub mod chargraph;
pub mod degrees;
pub mod error;
pub mod graphkit;
pub mod permgroup;
pub mod spectrum;
pub mod theorems;

pub use error::{Error, Result};
