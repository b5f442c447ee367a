//! Quantum speed limit times for open qubit systems.
//!
//! The crate evaluates the unified Margolus–Levitin / Mandelstam–Tamm bound
//! on the time needed for a qubit to evolve from `ρ_τ` to `ρ_{τ+τ_D}`, measured
//! with the relative purity, for arbitrary mixed or pure initial states.
//!
//! Two exactly solvable channels are provided: the damped Jaynes–Cummings
//! model (amplitude damping through a Lorentzian reservoir) and pure dephasing
//! with an Ohmic-family spectral density. [`unruh`] maps initial states into
//! the frame of a uniformly accelerated observer.
//!
//! ```
//! use qslt::models::{ChannelModel, MarkovJCParams};
//! use qslt::numerics::QuadratureSpec;
//! use qslt::qslt::qsl_unified;
//! use qslt::qubit::BlochVector;
//!
//! let model = ChannelModel::from(MarkovJCParams::new(0.1).unwrap());
//! let report = qsl_unified(&model, &BlochVector::excited(), 0.0, 1.0, &QuadratureSpec::default()).unwrap();
//! assert!((report.tau_qsl - 1.0).abs() < 1e-9);
//! ```

pub mod error;
pub mod models;
pub mod numerics;
pub mod qslt;
pub mod qubit;
pub mod scan;
pub mod unruh;
pub mod verify;

pub use error::{Error, Result};
pub use models::ChannelModel;
pub use numerics::QuadratureSpec;
pub use qslt::{qsl_unified, Bound, SpeedLimitReport};
pub use qubit::{BlochVector, DensityMatrix2, Operator2};
