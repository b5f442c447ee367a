//! Exactly solvable qubit decoherence channels.

pub mod dephasing;
pub mod jc;

pub use dephasing::{
    dephasing_coherence_derivative, dephasing_coherence_factor, dephasing_exponent,
    dephasing_generator, dephasing_rate, dephasing_state, dephasing_velocity,
    ohmic_spectral_density, OhmicParams,
};
pub use jc::{
    jc_decay_rate, jc_generator, jc_population, jc_population_derivative, jc_state, jc_velocity,
    CouplingRegime, DampedJCParams, MarkovJCParams,
};

use crate::error::Result;
use crate::qubit::{BlochVector, DensityMatrix2, Operator2};

/// Dynamics consumed by the speed-limit engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    /// Damped Jaynes–Cummings with the exact Lorentzian decay rate.
    DampedJC(DampedJCParams),
    /// Damped Jaynes–Cummings with the rate frozen at `γ₀`.
    MarkovJC(MarkovJCParams),
    OhmicDephasing(OhmicParams),
}

impl ChannelModel {
    pub fn state(&self, v0: &BlochVector, t: f64) -> Result<DensityMatrix2> {
        match self {
            Self::DampedJC(p) => jc_state(p, v0, t),
            Self::MarkovJC(p) => jc::markov_jc_state(p, v0, t),
            Self::OhmicDephasing(p) => dephasing_state(p, v0, t),
        }
    }

    /// `dρ_t/dt` from finite closed forms. Equal to `L_t(ρ_t)` wherever the
    /// generator's rate is finite, and finite everywhere.
    pub fn velocity(&self, v0: &BlochVector, t: f64) -> Operator2 {
        match self {
            Self::DampedJC(p) => jc_velocity(p, v0, t),
            Self::MarkovJC(p) => jc::markov_jc_velocity(p, v0, t),
            Self::OhmicDephasing(p) => dephasing_velocity(p, v0, t),
        }
    }

    /// `L_t(ρ)`. For the exact JC model this fails at rate poles.
    pub fn generator(&self, rho: &DensityMatrix2, t: f64) -> Result<Operator2> {
        match self {
            Self::DampedJC(p) => jc_generator(p, rho, t),
            Self::MarkovJC(p) => Ok(jc::amplitude_damping_generator(p.gamma0(), rho)),
            Self::OhmicDephasing(p) => Ok(dephasing_generator(p, rho, t)),
        }
    }

    /// The scalar decay signal: `p_t` for JC models, `q_t` for dephasing.
    pub fn signal(&self, t: f64) -> f64 {
        match self {
            Self::DampedJC(p) => jc_population(p, t),
            Self::MarkovJC(p) => p.population(t),
            Self::OhmicDephasing(p) => dephasing_coherence_factor(p, t),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::DampedJC(_) => "damped-jc",
            Self::MarkovJC(_) => "damped-jc-markov",
            Self::OhmicDephasing(_) => "ohmic-dephasing",
        }
    }
}

impl From<DampedJCParams> for ChannelModel {
    fn from(p: DampedJCParams) -> Self {
        Self::DampedJC(p)
    }
}

impl From<MarkovJCParams> for ChannelModel {
    fn from(p: MarkovJCParams) -> Self {
        Self::MarkovJC(p)
    }
}

impl From<OhmicParams> for ChannelModel {
    fn from(p: OhmicParams) -> Self {
        Self::OhmicDephasing(p)
    }
}
