//! Lower and upper bounds on the quantum capacity of thermal attenuator
//! channels.
//!
//! Two channel families are covered:
//!
//! * the qubit thermal attenuator (generalized amplitude damping), handled
//!   through an explicit 8-dimensional unitary dilation with a purified
//!   environment ([`qubit`]);
//! * the single-mode bosonic Gaussian thermal attenuator, handled through
//!   first and second moments ([`gaussian`]).
//!
//! [`bounds`] collects the capacity bounds for both families and
//! [`cli`] drives the `tacap` binary. All entropies are in bits.

// NaN has to fail range checks, so `!(x >= lo)` is used on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod error;
pub mod gaussian;
pub mod linalg;
pub mod optimize;
pub mod qubit;

pub use error::{Error, Result};
