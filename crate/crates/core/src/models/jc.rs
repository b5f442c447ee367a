//! Damped Jaynes–Cummings model: a qubit resonantly coupled to a leaky
//! cavity mode with a Lorentzian spectrum, one excitation at most.
//!
//! Everything is written through the envelope
//!
//! ```text
//! u(t) = C(t) + λ S(t),  p_t = e^{-λt} u(t)²
//! ```
//!
//! with `C = cosh(dt/2)`, `S = sinh(dt/2)/d` for `d² = λ² − 2γ₀λ > 0`, the
//! trigonometric analogue for `d² < 0`, and `C = 1`, `S = t/2` at critical
//! coupling. Then `ṗ_t = −2γ₀λ e^{-λt} u S` and `γ_t = 2γ₀λ S/u`, so the
//! population and its derivative stay finite where the rate has poles.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::qubit::{BlochVector, DensityMatrix2, Operator2};

/// Below this `|d|/λ` the critical-coupling branch is used.
const CRITICAL_BAND: f64 = 1e-9;

/// Rate denominators smaller than this are reported as poles.
const POLE_THRESHOLD: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingRegime {
    /// `λ > 2γ₀`: Markovian, monotone decay.
    Weak,
    /// `λ = 2γ₀`.
    Critical,
    /// `λ < 2γ₀`: oscillatory, non-Markovian decay.
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DampedJCParams {
    gamma0: f64,
    lambda: f64,
    omega0: f64,
}

impl DampedJCParams {
    /// `omega0` is kept for reference only; the resonant reduced dynamics do
    /// not depend on it.
    pub fn new(gamma0: f64, lambda: f64, omega0: f64) -> Result<Self> {
        if !(gamma0 > 0.0 && gamma0.is_finite()) {
            return Err(invalid(format!("gamma0 must be positive, got {gamma0}")));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(invalid(format!("lambda must be positive, got {lambda}")));
        }
        if !omega0.is_finite() {
            return Err(invalid("omega0 must be finite"));
        }
        Ok(Self {
            gamma0,
            lambda,
            omega0,
        })
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// `λ² − 2γ₀λ`, signed.
    fn d_squared(&self) -> f64 {
        self.lambda * self.lambda - 2.0 * self.gamma0 * self.lambda
    }

    fn d_abs(&self) -> f64 {
        self.d_squared().abs().sqrt()
    }

    pub fn regime(&self) -> CouplingRegime {
        let d = self.d_abs();
        if d < CRITICAL_BAND * self.lambda {
            CouplingRegime::Critical
        } else if self.d_squared() > 0.0 {
            CouplingRegime::Weak
        } else {
            CouplingRegime::Strong
        }
    }

    /// Angular frequency of the population oscillation in the strong
    /// coupling regime, `√(2γ₀λ − λ²)`; zeros of `p_t` are `2π/ω` apart.
    pub fn oscillation_frequency(&self) -> Option<f64> {
        (self.regime() == CouplingRegime::Strong).then(|| self.d_abs())
    }

    /// `C` and `S`, both multiplied by `e^{-λt/2}`.
    fn envelope(&self, t: f64) -> (f64, f64) {
        let half_decay = 0.5 * self.lambda * t;
        let d = self.d_abs();
        let x = 0.5 * d * t;
        match self.regime() {
            CouplingRegime::Critical => {
                let e = (-half_decay).exp();
                (e, 0.5 * t * e)
            }
            CouplingRegime::Strong => {
                let e = (-half_decay).exp();
                (x.cos() * e, x.sin() / d * e)
            }
            CouplingRegime::Weak if x.abs() < 350.0 => {
                let e = (-half_decay).exp();
                (x.cosh() * e, x.sinh() / d * e)
            }
            CouplingRegime::Weak => {
                let grow = (x - half_decay).exp();
                let shrink = (-x - half_decay).exp();
                (0.5 * (grow + shrink), 0.5 * (grow - shrink) / d)
            }
        }
    }

    /// `e^{-λt/2} u(t)`, whose square is `p_t`.
    fn scaled_u(&self, t: f64) -> (f64, f64) {
        let (c, s) = self.envelope(t);
        (c + self.lambda * s, s)
    }
}

/// `γ_t = 2γ₀λ sinh(dt/2) / (d cosh(dt/2) + λ sinh(dt/2))` and its
/// trigonometric and critical analogues.
pub fn jc_decay_rate(p: &DampedJCParams, t: f64) -> Result<f64> {
    let k = 2.0 * p.gamma0 * p.lambda;
    let d = p.d_abs();
    let x = 0.5 * d * t;
    match p.regime() {
        CouplingRegime::Critical => Ok(k * 0.5 * t / (1.0 + 0.5 * p.lambda * t)),
        CouplingRegime::Weak => {
            let th = x.tanh();
            Ok(k * th / (d + p.lambda * th))
        }
        CouplingRegime::Strong => {
            let den = d * x.cos() + p.lambda * x.sin();
            if den.abs() < POLE_THRESHOLD {
                return Err(Error::Pole { t });
            }
            Ok(k * x.sin() / den)
        }
    }
}

/// `p_t = e^{-∫₀ᵗ γ}`, the excited-state survival probability.
pub fn jc_population(p: &DampedJCParams, t: f64) -> f64 {
    let (u, _) = p.scaled_u(t);
    u * u
}

/// `ṗ_t`, finite at the zeros of `p_t`.
pub fn jc_population_derivative(p: &DampedJCParams, t: f64) -> f64 {
    let (u, s) = p.scaled_u(t);
    -2.0 * p.gamma0 * p.lambda * u * s
}

/// `√p_t`, the coherence amplitude.
fn sqrt_population(p: &DampedJCParams, t: f64) -> f64 {
    p.scaled_u(t).0.abs()
}

/// `d√p_t/dt`. One-sided at the zeros of `p_t`, where `√p_t` has a kink.
fn sqrt_population_derivative(p: &DampedJCParams, t: f64) -> f64 {
    let (u, s) = p.scaled_u(t);
    let sign = if u < 0.0 { -1.0 } else { 1.0 };
    -sign * p.gamma0 * p.lambda * s
}

/// The ideal Markovian limit of the model, `γ_t ≡ γ₀` and `p_t = e^{-γ₀t}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarkovJCParams {
    gamma0: f64,
}

impl MarkovJCParams {
    pub fn new(gamma0: f64) -> Result<Self> {
        if !(gamma0 > 0.0 && gamma0.is_finite()) {
            return Err(invalid(format!("gamma0 must be positive, got {gamma0}")));
        }
        Ok(Self { gamma0 })
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    pub fn population(&self, t: f64) -> f64 {
        (-self.gamma0 * t).exp()
    }

    pub fn population_derivative(&self, t: f64) -> f64 {
        -self.gamma0 * self.population(t)
    }

    /// `ln 2 / γ₀`, where `1 − 2p_τ` changes sign.
    pub fn critical_time(&self) -> f64 {
        std::f64::consts::LN_2 / self.gamma0
    }

    fn sqrt_population(&self, t: f64) -> f64 {
        (-0.5 * self.gamma0 * t).exp()
    }

    fn sqrt_population_derivative(&self, t: f64) -> f64 {
        -0.5 * self.gamma0 * self.sqrt_population(t)
    }
}

/// Amplitude-damped state for survival probability `p` and amplitude `√p`:
/// excited population `(1 − v_z)p/2`, coherence `(v_x − i v_y)√p/2`.
pub(crate) fn amplitude_damped_state(
    v0: &BlochVector,
    population: f64,
    amplitude: f64,
) -> Result<DensityMatrix2> {
    let excited = v0.excited_population() * population;
    let off = Complex64::new(v0.x(), -v0.y()) * (0.5 * amplitude);
    DensityMatrix2::from_parts(1.0 - excited, off, excited)
}

/// Time derivative of [`amplitude_damped_state`].
pub(crate) fn amplitude_damped_velocity(
    v0: &BlochVector,
    population_rate: f64,
    amplitude_rate: f64,
) -> Operator2 {
    let excited_rate = v0.excited_population() * population_rate;
    let off = Complex64::new(v0.x(), -v0.y()) * (0.5 * amplitude_rate);
    Operator2::new((-excited_rate).into(), off, off.conj(), excited_rate.into())
}

/// `ρ_t` for initial Bloch vector `v0`.
pub fn jc_state(p: &DampedJCParams, v0: &BlochVector, t: f64) -> Result<DensityMatrix2> {
    amplitude_damped_state(v0, jc_population(p, t), sqrt_population(p, t))
}

/// `dρ_t/dt` from the closed forms; agrees with [`jc_generator`] applied to
/// [`jc_state`] wherever `γ_t` is finite.
pub fn jc_velocity(p: &DampedJCParams, v0: &BlochVector, t: f64) -> Operator2 {
    amplitude_damped_velocity(
        v0,
        jc_population_derivative(p, t),
        sqrt_population_derivative(p, t),
    )
}

pub fn markov_jc_state(p: &MarkovJCParams, v0: &BlochVector, t: f64) -> Result<DensityMatrix2> {
    amplitude_damped_state(v0, p.population(t), p.sqrt_population(t))
}

pub fn markov_jc_velocity(p: &MarkovJCParams, v0: &BlochVector, t: f64) -> Operator2 {
    amplitude_damped_velocity(
        v0,
        p.population_derivative(t),
        p.sqrt_population_derivative(t),
    )
}

/// `L(ρ) = γ (σ₋ρσ₊ − ½{σ₊σ₋, ρ})` with unit-normalized ladder operators.
pub fn amplitude_damping_generator(rate: f64, rho: &DensityMatrix2) -> Operator2 {
    let lower = Operator2::lowering();
    let raise = Operator2::raising();
    let number = raise * lower;
    let r = *rho.as_operator();
    let jump = lower * r * raise;
    let anti = (number * r + r * number).scale(0.5);
    (jump - anti).scale(rate)
}

/// The generator at time `t`; fails with [`Error::Pole`] where `γ_t` diverges.
pub fn jc_generator(p: &DampedJCParams, rho: &DensityMatrix2, t: f64) -> Result<Operator2> {
    let rate = jc_decay_rate(p, t)?;
    Ok(amplitude_damping_generator(rate, rho))
}
