//! Exact computer algebra for quiver representations.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`], [`linalg`], [`frac`]: rational polynomials, dense matrices,
//!   and polynomials localized at differences of variables.
//! * [`quiver`]: quivers, pathways, Euler form, reflections of dimension vectors.
//! * [`repspace`]: filtrations, sparsity patterns, general representations.
//! * [`action`]: unipotent and torus actions, invariance checks, and
//!   bounded-degree invariant spaces.
//! * [`semiinv`]: Derksen-Weyman and Domokos-Zubkov determinants, bideterminants.
//! * [`reflect`]: reflection functors, associated graded, Rees and Filt.
//! * [`springer`]: the Borel moment map and its spectral projectors.
//! * [`format`] and [`cli`]: the quiver text format and the command line front end.

pub mod action;
pub mod cli;
pub mod error;
pub mod format;
pub mod frac;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod reflect;
pub mod repspace;
pub mod semiinv;
pub mod springer;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Ring};
pub use poly::{poly, Monomial, Polynomial, Rational, SymbolicMatrix, Variable};
pub use quiver::{DimVector, DynkinFamily, Path, Quiver};
