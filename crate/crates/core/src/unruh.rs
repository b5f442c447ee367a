//! Initial-state map seen by a uniformly accelerated observer.
//!
//! The observer sees the coherence reduced to `cos²r (v_x² + v_y²)` and the
//! excited population raised to `1 − (1 + v_z) cos²r / 2`, with
//! `cos r = (e^{−2πϖc/a} + 1)^{−1/2}`. The Bloch map used here scales
//! `v_x, v_y` by the common factor `cos r` (no phase rotation) and sets
//! `v_z' = (1 + v_z) cos²r − 1`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::models::ChannelModel;
use crate::numerics::QuadratureSpec;
use crate::qslt::{qsl_unified, SpeedLimitReport};
use crate::qubit::BlochVector;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnruhParams {
    acceleration: f64,
    varpi: f64,
    c: f64,
}

impl UnruhParams {
    /// `acceleration = 0` is accepted as the inertial limit (`cos r = 1`).
    pub fn new(acceleration: f64, varpi: f64, c: f64) -> Result<Self> {
        if !(acceleration >= 0.0 && acceleration.is_finite()) {
            return Err(invalid(format!(
                "acceleration must be non-negative, got {acceleration}"
            )));
        }
        if !(varpi > 0.0 && varpi.is_finite()) {
            return Err(invalid(format!("varpi must be positive, got {varpi}")));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(invalid(format!("c must be positive, got {c}")));
        }
        Ok(Self {
            acceleration,
            varpi,
            c,
        })
    }

    /// Natural units, `c = 1`.
    pub fn natural(acceleration: f64, varpi: f64) -> Result<Self> {
        Self::new(acceleration, varpi, 1.0)
    }

    pub fn acceleration(&self) -> f64 {
        self.acceleration
    }

    pub fn varpi(&self) -> f64 {
        self.varpi
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// `cos r = (e^{−2πϖc/a} + 1)^{−1/2}`, in `(1/√2, 1]`.
pub fn cos_r(p: &UnruhParams) -> f64 {
    cos_sq_r(p).0.sqrt()
}

// (cos²r, sin²r), each computed without cancellation.
fn cos_sq_r(p: &UnruhParams) -> (f64, f64) {
    let e = (-2.0 * std::f64::consts::PI * p.varpi * p.c / p.acceleration).exp();
    (1.0 / (1.0 + e), e / (1.0 + e))
}

pub fn transform_initial_state(v: &BlochVector, p: &UnruhParams) -> BlochVector {
    let (c2, s2) = cos_sq_r(p);
    let cr = c2.sqrt();
    // norm² becomes 1 − cos²r·(1+v_z)²·sin²r ≤ 1
    BlochVector::new_unchecked(v.x() * cr, v.y() * cr, v.z() * c2 - s2)
}

/// [`qsl_unified`] evaluated on the transformed initial state.
pub fn qsl_in_accelerated_frame(
    model: &ChannelModel,
    v0: &BlochVector,
    p: &UnruhParams,
    tau: f64,
    tau_d: f64,
    spec: &QuadratureSpec,
) -> Result<SpeedLimitReport> {
    qsl_unified(model, &transform_initial_state(v0, p), tau, tau_d, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{DampedJCParams, OhmicParams};
    use crate::qubit::coherence;

    #[test]
    fn cos_r_limits() {
        assert_eq!(cos_r(&UnruhParams::natural(1e-3, 1.0).unwrap()), 1.0);
        assert_eq!(cos_r(&UnruhParams::natural(0.0, 1.0).unwrap()), 1.0);
        let huge = cos_r(&UnruhParams::natural(1e12, 1.0).unwrap());
        assert!((huge - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-10);
        // mpmath: (e^{-1} + 1)^{-1/2}
        let v = cos_r(&UnruhParams::natural(2.0 * std::f64::consts::PI, 1.0).unwrap());
        assert!((v - 0.855_019_636_400_243_7).abs() < 1e-15);
    }

    #[test]
    fn params_are_validated() {
        assert!(UnruhParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(UnruhParams::new(1.0, 0.0, 1.0).is_err());
        assert!(UnruhParams::new(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn transform_examples() {
        let v = BlochVector::new(0.3, -0.5, 0.2).unwrap();
        let inertial = UnruhParams::natural(1e-3, 1.0).unwrap();
        assert_eq!(transform_initial_state(&v, &inertial), v);

        for a in [0.5, 3.0, 100.0] {
            let p = UnruhParams::natural(a, 1.0).unwrap();
            assert_eq!(
                transform_initial_state(&BlochVector::excited(), &p),
                BlochVector::excited()
            );
            let w = transform_initial_state(&v, &p);
            let c2 = cos_r(&p).powi(2);
            assert!((coherence(&w) - c2 * coherence(&v)).abs() < 1e-15);
            assert!((w.excited_population() - (1.0 - (1.0 + v.z()) * c2 / 2.0)).abs() < 1e-15);
        }

        let far = UnruhParams::natural(1e15, 1.0).unwrap();
        let g = transform_initial_state(&BlochVector::ground(), &far);
        assert!(g.norm() < 1e-12);
    }

    #[test]
    fn dephasing_bound_shrinks_with_acceleration() {
        let model = ChannelModel::from(OhmicParams::new(1.0, 1.0, 1.0).unwrap());
        let v0 = BlochVector::new(0.8, 0.0, 0.0).unwrap();
        let spec = QuadratureSpec::default();
        let mut last = f64::INFINITY;
        for a in [1e-3, 1.0, 3.0, 10.0, 100.0] {
            let p = UnruhParams::natural(a, 1.0).unwrap();
            let r = qsl_in_accelerated_frame(&model, &v0, &p, 1.0, 1.0, &spec).unwrap();
            assert!(r.tau_qsl <= last);
            last = r.tau_qsl;
        }
    }

    #[test]
    fn jc_frame_report_is_computed() {
        let model = ChannelModel::from(DampedJCParams::new(0.1, 1.0, 1.0).unwrap());
        let p = UnruhParams::natural(5.0, 1.0).unwrap();
        let r = qsl_in_accelerated_frame(
            &model,
            &BlochVector::ground(),
            &p,
            0.5,
            1.0,
            &QuadratureSpec::default(),
        )
        .unwrap();
        assert!(r.tau_qsl.is_finite() && r.tau_qsl <= 1.0 + 1e-9);
    }
}
