//! Solver library for the doubly nonlinear parabolic problem
//!
//! ```text
//!     d/dt (u^(2q-1)) - div(|grad u|^(p-2) grad u) = f(x,u) + h(t,x) u^(q-1)
//! ```
//!
//! on a bounded interval or rectangle with homogeneous Dirichlet boundary,
//! for exponents 1 < q <= p. Each implicit Euler step in the rescaled time
//! tau = q/(2q-1) * t is realized as a convex minimization over the
//! nonnegative cone in the variable w = u^q; the minimizer is the resolvent
//! of the hidden-convexity energy and selects a unique branch among the
//! possibly many nonnegative solutions of the stationary Euler-Lagrange
//! equation.
//!
//! The crate is organized as:
//!
//! * [`mesh`] - structured 1D/2D grids with implicit Dirichlet zeros,
//! * [`field`] - nodal scalar functions and the norms/power maps used by
//!   the contraction estimates,
//! * [`plap`] - discrete p-Dirichlet energy, its gradient and the
//!   p-Laplacian stencil,
//! * [`reaction`] - the catalog of admissible forcing splittings
//!   f = f1 + f2 and their structural validation,
//! * [`energy`] - the per-step objective in both coordinate systems plus
//!   convexity and Picone probes,
//! * [`resolvent`] - the projected-gradient resolvent solver and its
//!   brute-force oracle,
//! * [`evolve`] - the implicit Euler time stepper, extinction detection
//!   and trajectory comparison,
//! * [`verify`] - randomized suites asserting contraction, homogeneity,
//!   convexity and the parabolic scenario matrix,
//! * [`cli`] - the `subflow` command line front end.

pub mod cli;
pub mod energy;
mod error;
pub mod evolve;
pub mod field;
pub mod mesh;
pub mod plap;
pub mod profile;
pub mod reaction;
pub mod resolvent;
pub mod verify;

pub use error::{Error, Result};
pub use field::Field;
pub use mesh::Mesh;
pub use plap::PExponent;
