//! Quantum speed limit time for an arbitrary (generally mixed) state.
//!
//! For the window `[τ, τ+τ_D]` the engine bounds the time needed to go
//! from `ρ_τ` to `ρ_{τ+τ_D}` using relative purity as the distance:
//!
//! ```text
//! τ_QSL = max{ 1/avg(Σ σᵢ ϱᵢ), 1/avg(√Σ σᵢ²) } · |f(τ+τ_D) − 1| tr ρ_τ²
//! ```
//!
//! where `σᵢ` are the singular values of `L_t(ρ_t)`, `ϱᵢ` those of `ρ_τ`
//! (both descending) and `avg` is the time average over the window. The
//! first term is the Margolus–Levitin type bound, the second the
//! Mandelstam–Tamm type bound.

use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::models::{
    dephasing_coherence_derivative, dephasing_coherence_factor, jc_population,
    jc_population_derivative, ChannelModel, DampedJCParams, OhmicParams,
};
use crate::numerics::{time_average, QuadratureSpec};
use crate::qubit::{overlap, purity, singular_values, BlochVector};

/// Numerators and denominators below this are treated as zero.
pub const DEGENERACY_THRESHOLD: f64 = 1e-14;

/// Which branch of the unified bound is the larger (tighter) one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bound {
    #[serde(rename = "ML")]
    MargolusLevitin,
    #[serde(rename = "MT")]
    MandelstamTamm,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::MargolusLevitin => "ML",
            Self::MandelstamTamm => "MT",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpeedLimitReport {
    pub tau: f64,
    pub tau_d: f64,
    /// `|f(τ+τ_D) − 1| · tr ρ_τ²`.
    pub numerator: f64,
    /// Time average of `Σ σᵢ ϱᵢ`.
    pub d_ml: f64,
    /// Time average of `Σ σᵢ` (the trace norm of the generator).
    pub d_ml_loose: f64,
    /// Time average of `√Σ σᵢ²` (the Hilbert–Schmidt norm of the generator).
    pub d_mt: f64,
    pub tau_qsl: f64,
    pub dominant: Bound,
    /// Nothing evolves over the window; `tau_qsl` is reported as 0.
    pub degenerate: bool,
}

fn check_window(tau: f64, tau_d: f64) -> Result<()> {
    if !(tau >= 0.0 && tau.is_finite()) {
        return Err(invalid(format!("tau must be non-negative, got {tau}")));
    }
    if !(tau_d > 0.0 && tau_d.is_finite()) {
        return Err(invalid(format!("tau_d must be positive, got {tau_d}")));
    }
    Ok(())
}

/// The unified bound for `model` started from Bloch vector `v0`.
///
/// The generator's singular values are taken from
/// [`ChannelModel::velocity`], so poles of the JC decay rate never reach
/// the quadrature.
pub fn qsl_unified(
    model: &ChannelModel,
    v0: &BlochVector,
    tau: f64,
    tau_d: f64,
    spec: &QuadratureSpec,
) -> Result<SpeedLimitReport> {
    check_window(tau, tau_d)?;
    let start = model.state(v0, tau)?;
    let end = model.state(v0, tau + tau_d)?;
    let (rho1, rho2) = start.eigenvalues();
    let p_start = purity(&start);
    let numerator = (overlap(&end, &start) - p_start).abs();

    let sigmas = |t: f64| singular_values(&model.velocity(v0, t));
    let (a, b) = (tau, tau + tau_d);
    let d_ml = time_average(
        |t| sigmas(t).map(|(s1, s2)| s1 * rho1 + s2 * rho2),
        a,
        b,
        spec,
    )?;
    let d_ml_loose = time_average(|t| sigmas(t).map(|(s1, s2)| s1 + s2), a, b, spec)?;
    let d_mt = time_average(|t| sigmas(t).map(|(s1, s2)| s1.hypot(s2)), a, b, spec)?;

    let degenerate = numerator < DEGENERACY_THRESHOLD && d_ml < DEGENERACY_THRESHOLD;
    let dominant = if d_ml <= d_mt {
        Bound::MargolusLevitin
    } else {
        Bound::MandelstamTamm
    };
    let tau_qsl = if degenerate {
        0.0
    } else {
        numerator * (1.0 / d_ml).max(1.0 / d_mt)
    };

    Ok(SpeedLimitReport {
        tau,
        tau_d,
        numerator,
        d_ml,
        d_ml_loose,
        d_mt,
        tau_qsl,
        dominant,
        degenerate,
    })
}

/// Both Margolus–Levitin candidates, `(N/avg Σσϱ, N/avg Σσ)`. The first is
/// never smaller and is the one entering [`qsl_unified`].
pub fn qsl_ml_variant(
    model: &ChannelModel,
    v0: &BlochVector,
    tau: f64,
    tau_d: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let r = qsl_unified(model, v0, tau, tau_d, spec)?;
    if r.degenerate {
        return Ok((0.0, 0.0));
    }
    Ok((r.numerator / r.d_ml, r.numerator / r.d_ml_loose))
}

/// Closed form for the excited initial state of the damped JC model:
/// `|(p_τ − p_{τ+τ_D})(1 − 2p_τ)| / avg|ṗ|`.
pub fn qsl_jc_closed(
    p: &DampedJCParams,
    tau: f64,
    tau_d: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_window(tau, tau_d)?;
    let p_start = jc_population(p, tau);
    let p_end = jc_population(p, tau + tau_d);
    let numerator = ((p_start - p_end) * (1.0 - 2.0 * p_start)).abs();
    let speed = time_average(
        |t| Ok(jc_population_derivative(p, t).abs()),
        tau,
        tau + tau_d,
        spec,
    )?;
    Ok(ratio_or_zero(numerator, speed))
}

/// Constant-rate limit of [`qsl_jc_closed`]: `τ_D |1 − 2e^{−γ₀τ}|`.
pub fn qsl_markov_jc(gamma0: f64, tau: f64, tau_d: f64) -> f64 {
    tau_d * (1.0 - 2.0 * (-gamma0 * tau).exp()).abs()
}

/// Closed form for dephasing from any initial state with coherence `coh`:
/// `√C |q_τ q_{τ+τ_D} − q_τ²| / avg|q̇|`. Independent of `v_z`.
pub fn qsl_dephasing_closed(
    p: &OhmicParams,
    coh: f64,
    tau: f64,
    tau_d: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_window(tau, tau_d)?;
    if !(0.0..=1.0).contains(&coh) {
        return Err(invalid(format!("coherence must lie in [0, 1], got {coh}")));
    }
    if coh == 0.0 {
        return Ok(0.0);
    }
    let q_start = dephasing_coherence_factor(p, tau);
    let q_end = dephasing_coherence_factor(p, tau + tau_d);
    let numerator = coh.sqrt() * (q_start * q_end - q_start * q_start).abs();
    let speed = time_average(
        |t| Ok(dephasing_coherence_derivative(p, t).abs()),
        tau,
        tau + tau_d,
        spec,
    )?;
    Ok(ratio_or_zero(numerator, speed))
}

fn ratio_or_zero(numerator: f64, speed: f64) -> f64 {
    if numerator < DEGENERACY_THRESHOLD && speed < DEGENERACY_THRESHOLD {
        0.0
    } else {
        numerator / speed
    }
}
