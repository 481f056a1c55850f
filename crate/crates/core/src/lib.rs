//! Rank-one momentum polytopes of compact connected Lie groups.
//!
//! The crate enumerates the genuine rank-one quasi-Hamiltonian momentum
//! polytopes of an affine root system and the Hamiltonian ones of a finite
//! root system. All arithmetic is exact.

pub mod alcove;
pub mod cartan;
pub mod catalog;
pub mod classifier;
mod error;
mod linalg;
pub mod rational;
pub mod report;

pub use error::Error;
pub use rational::Q;
