//! Infinitesimal rigidity of bar-joint, spherical, and point-hyperplane
//! frameworks.
//!
//! The crate decides rigidity questions three ways and keeps them in
//! agreement:
//!
//! * **Matrices** ([`matrices`]): exact (or float) constraint matrices for
//!   seven models, with rank/nullity verdicts.
//! * **Transfer** ([`transfer`]): the rigidity-preserving projective maps
//!   between point-hyperplane frameworks, spherical frameworks, and
//!   bar-joint frameworks with a designated hyperplane of joints — in
//!   exact rational closed form.
//! * **Counts** ([`counts`]): the combinatorial characterizations of
//!   realizability, decided by exhaustive enumeration with explicit
//!   violation certificates.
//!
//! [`matroidlab`] carries the subspace-family machinery (cycle, loop-span,
//! bicircular, and intercept families) behind the fixed-intercept model,
//! including the transversal-hyperplane experiment and a realization
//! synthesizer. [`scenes`] links parallel drawing to fixed-normal
//! rigidity. [`constructions`] holds the graph surgeries that reduce
//! constrained models to the unconstrained one.

pub mod constructions;
pub mod counts;
pub mod error;
pub mod exactla;
pub mod gallery;
pub mod matrices;
pub mod matroidlab;
pub mod phgraph;
pub mod scenes;
pub mod transfer;

pub use error::{Error, Result};
