//! Exponential concentration bounds for observables of reversible Markov
//! chains on finite state spaces.
//!
//! The method assembles a tail bound for `P(f - E[f] >= a)` from two
//! quantities of an auxiliary chain that leaves the measure of interest
//! invariant: the spectral gap of the transition kernel and a one-step
//! Lipschitz constant of the observable. [`bound`] evaluates the special
//! functions behind the bound, [`markov`] computes the ingredients (gaps,
//! Dirichlet forms, Lipschitz constants) together with exact small-instance
//! oracles, and two worked examples exercise the machinery end to end:
//!
//! * [`lis`] — the longest strictly increasing subsequence of a uniform
//!   random sequence under a coordinate-replacement chain;
//! * [`glauber`] — band-integrated power spectra ("target frequency
//!   analysis") of reversible 1d chain paths under heat-bath dynamics.
//!
//! [`report`] defines the machine-readable experiment records emitted by the
//! `gapbound` CLI, and [`verify`] bundles the library's invariant battery
//! behind a single entry point.

pub mod bound;
pub mod error;
pub mod glauber;
pub mod linalg;
pub mod lis;
pub mod markov;
pub mod report;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
