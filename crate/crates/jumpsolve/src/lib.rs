//! Mesh-free neural solver for variable-coefficient elliptic problems with
//! sharp interface jumps.
//!
//! The solver represents the solution of
//!
//! ```text
//! k u - div(mu grad u) = f      on each side of an implicit interface,
//! [u] = alpha,  [mu du/dn] = beta   across the interface,
//! u = g                         on the boundary of a cubic domain,
//! ```
//!
//! by a pair of small sine-activated MLPs (one per subdomain). Training
//! minimizes diagonally preconditioned residuals of a sharp finite-difference
//! discretization that is assembled on the fly on implicit compute cells
//! centered at collocation points, so no global mesh or matrix is ever
//! materialized. Interface jumps enter the stencil right-hand side through a
//! ghost-fluid style flux correction, keeping the discontinuity sharp.
//!
//! Module map:
//! - [`expr`]: scalar math expressions of (x, y, z); coefficients are data.
//! - [`geometry`]: level-set interface representation and crossing queries.
//! - [`surrogate`]: the sine MLP pair with hand-rolled reverse-mode gradients.
//! - [`kernel`]: per-point stencil assembly, jump corrections, residuals.
//! - [`training`]: collocation sampling, loss aggregation, Adam.
//! - [`evalmetrics`]: error norms against exact solutions, field export.
//! - [`verify`]: self-contained correctness oracles (exactness, truncation,
//!   gradient, determinism) used by the `check` subcommand.
//! - [`cli`]: JSON-config driven front end (feature `cli`).

pub mod evalmetrics;
pub mod expr;
pub mod geometry;
pub mod kernel;
pub mod surrogate;
pub mod training;
pub mod verify;

#[cfg(feature = "cli")]
pub mod cli;

/// A point in the 3D computational domain.
pub type Point3 = [f64; 3];
