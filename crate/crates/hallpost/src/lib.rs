//! Exact ground-state energies of three solvable N-body quantum models and
//! the Hall-Post lower-bound machinery built on top of them: coupling
//! rescalings, saturation ratios, asymptotic limits, grid audits, and
//! independent numerical oracles for the closed forms.
//!
//! The three families (units hbar = m = 1):
//!
//! * the one-dimensional inverse-square model with pairwise harmonic
//!   confinement ([`models::energy_calogero_1d`]),
//! * the hypercentral Coulomb model ([`models::energy_hyper_coulomb`]),
//! * the D-dimensional analogue with constrained two- and three-body
//!   couplings ([`models::energy_calogero_d`]).
//!
//! [`bounds`] carries the Hall-Post transforms and per-model saturation
//! reports, [`oracle`] the independent checks (local-energy constancy, a
//! two-body radial eigensolver, convexity and subset-decomposition probes),
//! and [`cli`] the `hallpost` command-line front end.
//!
//! Every operation is a pure function of its arguments; the whole crate is
//! safe for unrestricted concurrent use. Runnable walkthroughs live in
//! `examples/`.

// Domain validations are written `!(x >= lo)` so that NaN fails them too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod couplings;
pub mod error;
pub mod models;
pub mod oracle;

pub use error::{Error, Result};
