//! Zero-temperature pure dephasing by an Ohmic-family bosonic bath,
//! `J(ω) = η ω^s ω_c^{1−s} e^{−ω/ω_c}`.
//!
//! The decoherence exponent is
//!
//! ```text
//! Γ(t) = ηκ Φ(t, s),   Φ = Γ(s−1) [1 − cos((s−1)θ) (1+ω_c²t²)^{(1−s)/2}],   θ = atan(ω_c t)
//! ```
//!
//! with `Φ(t, 1) = ½ ln(1+ω_c²t²)`. With `κ = 1` this is exactly
//! `∫₀^∞ J(ω)(1 − cos ωt)/ω² dω`. Setting `κ = 2` reproduces the printed
//! `η ln(1+ω_c²t²)` convention for `s = 1`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{invalid, Result};
use crate::qubit::{BlochVector, DensityMatrix2, Operator2};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OhmicParams {
    eta: f64,
    s: f64,
    omega_c: f64,
    kappa: f64,
}

impl OhmicParams {
    /// Parameters with the integral normalization `κ = 1`.
    pub fn new(eta: f64, s: f64, omega_c: f64) -> Result<Self> {
        Self::with_kappa(eta, s, omega_c, 1.0)
    }

    pub fn with_kappa(eta: f64, s: f64, omega_c: f64, kappa: f64) -> Result<Self> {
        for (name, value) in [
            ("eta", eta),
            ("s", s),
            ("omega_c", omega_c),
            ("kappa", kappa),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(invalid(format!("{name} must be positive, got {value}")));
            }
        }
        Ok(Self {
            eta,
            s,
            omega_c,
            kappa,
        })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `lim_{t→∞} Φ(t, s) = Γ(s−1)` for `s > 1`; `None` when coherence decays
    /// to zero (`s ≤ 1`).
    pub fn trapped_exponent(&self) -> Option<f64> {
        (self.s > 1.0).then(|| self.eta * self.kappa * gamma(self.s - 1.0))
    }
}

/// `J(ω) = η ω^s / ω_c^{s−1} e^{−ω/ω_c}`; peaks at `ω = s ω_c`.
pub fn ohmic_spectral_density(p: &OhmicParams, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    let x = omega / p.omega_c;
    p.eta * p.omega_c * x.powf(p.s) * (-x).exp()
}

/// `Φ(t, s)` evaluated as
/// `Γ(s)/(s−1) · [−expm1(−(s−1)L) + 2e^{−(s−1)L} sin²((s−1)θ/2)]`,
/// `L = ½ ln(1+ω_c²t²)`, which has no cancellation near `s = 1`.
fn phi(p: &OhmicParams, t: f64) -> f64 {
    let b = p.omega_c * t;
    let log_r = 0.5 * (b * b).ln_1p();
    let eps = p.s - 1.0;
    if eps == 0.0 {
        return log_r;
    }
    let theta = b.atan();
    let half = (0.5 * eps * theta).sin();
    let bracket = -(-eps * log_r).exp_m1() + 2.0 * (-eps * log_r).exp() * half * half;
    gamma(p.s) / eps * bracket
}

/// Decoherence exponent `Γ(t) = ηκΦ(t, s)`, with `Γ(0) = 0`.
pub fn dephasing_exponent(p: &OhmicParams, t: f64) -> f64 {
    p.eta * p.kappa * phi(p, t)
}

/// `q_t = e^{−Γ(t)}`, the factor multiplying the initial coherence.
pub fn dephasing_coherence_factor(p: &OhmicParams, t: f64) -> f64 {
    (-dephasing_exponent(p, t)).exp()
}

/// `dΓ/dt = ηκω_c Γ(s) sin(s·atan(ω_c t)) (1+ω_c²t²)^{−s/2}`, the
/// instantaneous rate in `L_t(ρ) = rate·(σ_z ρ σ_z − ρ)/2`.
pub fn dephasing_rate(p: &OhmicParams, t: f64) -> f64 {
    let b = p.omega_c * t;
    let log_r = 0.5 * (b * b).ln_1p();
    p.eta * p.kappa * p.omega_c * gamma(p.s) * (p.s * b.atan()).sin() * (-p.s * log_r).exp()
}

/// `q̇_t = −rate·q_t`.
pub fn dephasing_coherence_derivative(p: &OhmicParams, t: f64) -> f64 {
    -dephasing_rate(p, t) * dephasing_coherence_factor(p, t)
}

/// `ρ_t`: frozen populations, coherence `(v_x − i v_y) q_t / 2`.
pub fn dephasing_state(p: &OhmicParams, v0: &BlochVector, t: f64) -> Result<DensityMatrix2> {
    let q = dephasing_coherence_factor(p, t);
    let off = Complex64::new(v0.x(), -v0.y()) * (0.5 * q);
    DensityMatrix2::from_parts(0.5 * (1.0 + v0.z()), off, 0.5 * (1.0 - v0.z()))
}

/// `dρ_t/dt` from the closed forms.
pub fn dephasing_velocity(p: &OhmicParams, v0: &BlochVector, t: f64) -> Operator2 {
    let off = Complex64::new(v0.x(), -v0.y()) * (0.5 * dephasing_coherence_derivative(p, t));
    Operator2::new(0.0.into(), off, off.conj(), 0.0.into())
}

/// `L(ρ) = rate·(σ_z ρ σ_z − ρ)/2` for an explicit rate.
pub fn pure_dephasing_generator(rate: f64, rho: &DensityMatrix2) -> Operator2 {
    let z = Operator2::pauli_z();
    let r = *rho.as_operator();
    (z * r * z - r).scale(0.5 * rate)
}

pub fn dephasing_generator(p: &OhmicParams, rho: &DensityMatrix2, t: f64) -> Operator2 {
    pure_dephasing_generator(dephasing_rate(p, t), rho)
}
