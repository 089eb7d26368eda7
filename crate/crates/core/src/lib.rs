//! Teleportation fidelity under noisy classical communication.
//!
//! This crate models the standard qubit teleportation protocol when the two
//! classical bits of Alice's Bell measurement cross a noisy channel, either
//! a joint 2-bit channel or two independent binary symmetric channels. It
//! provides:
//!
//! - [`qstate`]: fixed-size complex linear algebra for one- and two-qubit
//!   density matrices, Pauli maps, eigenvalues and von Neumann entropy;
//! - [`cchannel`]: the two noisy channel families, their sampling and
//!   information measures;
//! - [`teleport`]: exact output maps and fidelities, a quadrature oracle,
//!   a seeded end-to-end Monte Carlo simulator, and the classical
//!   (no-entanglement) baselines 1/2 and 2/3;
//! - [`bounds`]: the sufficiency thresholds (about 0.208 bits for a joint
//!   2-bit channel, about 0.255 bits for two 1-bit channels), the Holevo
//!   quantity of the dense-coding ensemble, and the Werner-state cost
//!   curves.
//!
//! All stochastic operations take explicit seeded streams and are
//! reproducible bit-for-bit.
//!
//! ```
//! use qteleport::cchannel::TwoBitChannel;
//! use qteleport::teleport::{fidelity_exact, fidelity_monte_carlo, Resource, TeleportScenario};
//!
//! // The channel at the non-classicality boundary: fidelity exactly 2/3.
//! let channel = TwoBitChannel::new(0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0)?;
//! assert_eq!(fidelity_exact(&channel), 2.0 / 3.0);
//! // Its communication cost is the 0.2075-bit sufficiency threshold.
//! assert!((channel.mutual_information() - 0.207519).abs() < 1e-6);
//!
//! // A seeded end-to-end simulation agrees within a few standard errors.
//! let scenario = TeleportScenario::new(Resource::PureSinglet, channel)?;
//! let estimate = fidelity_monte_carlo(&scenario, 100_000, 42);
//! assert!((estimate.mean - 2.0 / 3.0).abs() < 4.0 * estimate.std_error);
//! # Ok::<(), qteleport::Error>(())
//! ```

// Fixed-size 2x2/4x4 kernels read better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod cchannel;
mod error;
pub mod qstate;
pub mod stream;
pub mod teleport;

pub use bounds::{SweepKind, SweepTable, ThresholdResult};
pub use cchannel::{BitPair, FlipPattern, OneBitChannel, TwoBitChannel};
pub use error::{Error, Result};
pub use qstate::{BlochVector, DensityMatrix, PauliAxis, TwoQubitMatrix};
pub use stream::RandomStream;
pub use teleport::{FidelityEstimate, Resource, TeleportScenario};
