//! Simulation of the Magic Square pseudo-telepathy game for inertial and
//! uniformly accelerated players.
//!
//! - [`game`]: rules, winning sets and the exhaustive classical optimum (8/9).
//! - [`strategy`]: the entangled four-qubit strategy that wins with certainty.
//! - [`rindler`]: the Unruh transformation of the shared state and the
//!   resulting win probability `p(r)`, together with its closed form and the
//!   acceleration at which it falls to the classical bound.
//! - [`linalg`]: the small dense complex linear algebra underneath.
//! - [`sweep`] and [`report`]: data and text output for the `telepathy` binary.
//!
//! ```
//! use telepathy::rindler::{simulated_p, closed_form_p, AccelerationParameter};
//!
//! let r = AccelerationParameter::new(0.5)?;
//! assert!((simulated_p(r) - closed_form_p(r)).abs() < 1e-10);
//! # Ok::<(), telepathy::Error>(())
//! ```

pub mod error;
pub mod game;
pub mod linalg;
pub mod report;
pub mod rindler;
pub mod strategy;
pub mod sweep;

pub use error::{Error, Result};
