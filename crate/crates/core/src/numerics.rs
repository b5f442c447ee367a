//! Deterministic adaptive quadrature and finite differences.
//!
//! [`integrate`] is a globally adaptive 15-point Gauss–Kronrod scheme: the
//! segment with the largest error estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol·|I|)`. A segment that would have to be
//! split beyond `max_depth` bisections, or a partition grown past
//! [`MAX_SEGMENTS`] pieces, is reported as non-convergence.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Tolerances and subdivision limit for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            max_depth: 40,
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_depth: u32) -> Result<Self> {
        let spec = Self {
            abs_tol,
            rel_tol,
            max_depth,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(invalid(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(invalid(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if self.max_depth < 1 {
            return Err(invalid("max_depth must be at least 1"));
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Upper bound on the number of pieces in one adaptive partition.
pub const MAX_SEGMENTS: usize = 2000;

/// An integral estimate with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

// Kronrod abscissae on [0, 1]; odd indices are shared with the 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

fn gauss_kronrod_15<F>(f: &F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64> {
        let y = f(x)?;
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite)
        }
    };

    let f_center = eval(center)?;
    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    let mut abs_sum = kronrod.abs();
    let mut fv = [(0.0, 0.0); 7];
    for (j, slot) in fv.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let (lo, hi) = (eval(center - dx)?, eval(center + dx)?);
        *slot = (lo, hi);
        kronrod += WGK[j] * (lo + hi);
        abs_sum += WGK[j] * (lo.abs() + hi.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (lo + hi);
        }
    }

    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (f_center - mean).abs();
    for (j, (lo, hi)) in fv.iter().enumerate() {
        asc += WGK[j] * ((lo - mean).abs() + (hi - mean).abs());
    }

    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((value, err))
}

/// Adaptive integral of a fallible integrand over `[a, b]`.
pub fn try_integrate<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Estimate>
where
    F: Fn(f64) -> Result<f64>,
{
    spec.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::NonFinite);
    }
    if a > b {
        return Err(invalid(format!(
            "integration bounds out of order: {a} > {b}"
        )));
    }
    if a == b {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
        });
    }

    let (value, error) = gauss_kronrod_15(&f, a, b)?;
    let mut segments = vec![Segment {
        a,
        b,
        value,
        error,
        depth: 0,
    }];

    loop {
        let total: f64 = segments.iter().map(|s| s.value).sum();
        let total_err: f64 = segments.iter().map(|s| s.error).sum();
        if total_err <= spec.target(total) {
            break;
        }
        // First segment with the largest error; ties resolve by position.
        let worst = segments.iter().enumerate().fold(0, |best, (i, s)| {
            if s.error > segments[best].error {
                i
            } else {
                best
            }
        });
        let seg = segments[worst];
        let mid = 0.5 * (seg.a + seg.b);
        if seg.depth >= spec.max_depth
            || segments.len() >= MAX_SEGMENTS
            || mid <= seg.a
            || mid >= seg.b
        {
            return Err(Error::NoConvergence {
                a,
                b,
                estimate: total_err,
            });
        }
        let (lv, le) = gauss_kronrod_15(&f, seg.a, mid)?;
        let (rv, re) = gauss_kronrod_15(&f, mid, seg.b)?;
        let depth = seg.depth + 1;
        segments[worst] = Segment {
            a: seg.a,
            b: mid,
            value: lv,
            error: le,
            depth,
        };
        segments.insert(
            worst + 1,
            Segment {
                a: mid,
                b: seg.b,
                value: rv,
                error: re,
                depth,
            },
        );
    }

    Ok(Estimate {
        value: segments.iter().map(|s| s.value).sum(),
        error: segments.iter().map(|s| s.error).sum(),
    })
}

/// `∫_a^b f(t) dt` within `spec`.
pub fn integrate<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    try_integrate(|t| Ok(f(t)), a, b, spec).map(|e| e.value)
}

/// `∫_a^b f(t) dt / (b - a)`.
pub fn time_average<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if b <= a {
        return Err(invalid(format!("averaging window [{a}, {b}] is empty")));
    }
    try_integrate(f, a, b, spec).map(|e| e.value / (b - a))
}

// Hard cap on the truncation point, in units of the decay scale.
const MAX_DECAY_SCALES: f64 = 700.0;

/// `∫_0^∞ f(ω) dω` for integrands with `|f(ω)| ≤ M e^{-ω/decay_scale}`.
///
/// The range is covered by panels `[0, 1], [1, 2], [2, 4], ...` in units of
/// `decay_scale`. After each panel ending at `X` the tail is bounded by
/// `decay_scale · M̂ · e^{-X}`, where `M̂` is the largest sampled value of
/// `|f(ω)| e^{ω/decay_scale}` on that panel; integration stops once the bound
/// drops below a tenth of the requested tolerance. The returned error
/// includes the tail bound.
pub fn integrate_semi_infinite_estimate<F>(
    f: F,
    decay_scale: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    if !(decay_scale > 0.0 && decay_scale.is_finite()) {
        return Err(invalid(format!(
            "decay scale must be positive, got {decay_scale}"
        )));
    }
    let g = |x: f64| f(decay_scale * x) * decay_scale;
    let panel_spec = QuadratureSpec {
        abs_tol: spec.abs_tol / 16.0,
        ..*spec
    };

    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    let mut value = 0.0;
    let mut error = 0.0;
    loop {
        let est = try_integrate(|x| Ok(g(x)), lo, hi, &panel_spec)?;
        value += est.value;
        error += est.error;

        let envelope = (0..=8)
            .map(|k| {
                let x = lo + (hi - lo) * f64::from(k) / 8.0;
                g(x).abs() * x.exp()
            })
            .fold(0.0, f64::max);
        let tail = envelope * (-hi).exp();
        if !tail.is_finite() {
            return Err(Error::NonFinite);
        }
        if tail <= 0.1 * spec.target(value) {
            return Ok(Estimate {
                value,
                error: error + tail,
            });
        }
        if hi >= MAX_DECAY_SCALES {
            return Err(Error::NoConvergence {
                a: 0.0,
                b: decay_scale * hi,
                estimate: error + tail,
            });
        }
        lo = hi;
        hi = (2.0 * hi).min(MAX_DECAY_SCALES);
    }
}

/// `∫_0^∞ f(ω) dω`; see [`integrate_semi_infinite_estimate`].
pub fn integrate_semi_infinite<F>(f: F, decay_scale: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate_semi_infinite_estimate(f, decay_scale, spec).map(|e| e.value)
}

/// `(f(t + h) - f(t - h)) / 2h`.
pub fn central_derivative<F>(f: F, t: f64, h: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    (f(t + h) - f(t - h)) / (2.0 * h)
}
