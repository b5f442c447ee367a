//! Sweeps of the speed limit over the initial time `τ`, with CSV and
//! plot-data rendering.
//!
//! Grid points are independent and may be evaluated on the rayon pool.
//! Results are always gathered in grid order, so serial and parallel runs
//! produce identical output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::models::{ChannelModel, DampedJCParams, MarkovJCParams, OhmicParams};
use crate::numerics::QuadratureSpec;
use crate::qslt::{qsl_unified, SpeedLimitReport};
use crate::qubit::{coherence, BlochVector};
use crate::unruh::{cos_r, transform_initial_state, UnruhParams};

/// Fixed leading columns of every scan table.
pub const COLUMNS: [&str; 9] = [
    "tau",
    "tau_qsl",
    "tau_qsl_over_tau_d",
    "signal",
    "numerator",
    "d_ml",
    "d_mt",
    "dominant",
    "degenerate",
];

const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numerical failure at tau = {tau}: {source}")]
    Numerical {
        tau: f64,
        #[source]
        source: Error,
    },
}

impl ScanError {
    /// 1 for configuration errors, 2 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => 1,
            Self::Numerical { .. } => 2,
        }
    }
}

fn config_err(msg: impl Into<String>) -> ScanError {
    ScanError::Config(msg.into())
}

impl From<Error> for ScanError {
    fn from(e: Error) -> Self {
        Self::Config(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Jc,
    Dephasing,
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "jc" => Ok(Self::Jc),
            "dephasing" => Ok(Self::Dephasing),
            _ => Err(format!("unknown model `{s}` (expected jc or dephasing)")),
        }
    }
}

/// How the JC decay rate is treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JcMode {
    #[default]
    Exact,
    /// Rate frozen at `γ₀`.
    #[serde(alias = "ideal_markov")]
    IdealMarkov,
}

impl FromStr for JcMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Self::Exact),
            "ideal-markov" | "ideal_markov" => Ok(Self::IdealMarkov),
            _ => Err(format!(
                "unknown mode `{s}` (expected exact or ideal-markov)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    /// Whitespace-separated columns with a `#` header.
    Plotdata,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Self::Csv),
            "plotdata" => Ok(Self::Plotdata),
            _ => Err(format!("unknown format `{s}` (expected csv or plotdata)")),
        }
    }
}

/// `start:stop:step`, inclusive of `stop` when it lies on the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauGrid {
    start: f64,
    stop: f64,
    step: f64,
}

impl TauGrid {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, ScanError> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(config_err("grid bounds must be finite"));
        }
        if step <= 0.0 {
            return Err(config_err(format!(
                "grid step must be positive, got {step}"
            )));
        }
        if start > stop {
            return Err(config_err(format!(
                "grid start {start} exceeds stop {stop}"
            )));
        }
        if start < 0.0 {
            return Err(config_err(format!(
                "grid start must be non-negative, got {start}"
            )));
        }
        Ok(Self { start, stop, step })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// `start + i·step`; computed from the index so no error accumulates.
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step * (1.0 + 1e-12) + 1e-9).floor() as usize;
        (0..=n).map(|i| self.start + i as f64 * self.step).collect()
    }
}

impl FromStr for TauGrid {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, ScanError> {
        let parts = parse_floats(s, ':')?;
        match parts[..] {
            [start, stop, step] => Self::new(start, stop, step),
            _ => Err(config_err(format!(
                "grid `{s}` is not of the form start:stop:step"
            ))),
        }
    }
}

fn parse_floats(s: &str, sep: char) -> Result<Vec<f64>, ScanError> {
    s.split(sep)
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| config_err(format!("`{x}` is not a number")))
        })
        .collect()
}

/// Acceleration values: either `start:stop:step` or a comma-separated list.
pub fn parse_acceleration_grid(s: &str) -> Result<Vec<f64>, ScanError> {
    let values = if s.contains(':') {
        s.parse::<TauGrid>()?.points()
    } else {
        parse_floats(s, ',')?
    };
    if let Some(a) = values.iter().find(|a| !(**a >= 0.0 && a.is_finite())) {
        return Err(config_err(format!(
            "acceleration must be non-negative, got {a}"
        )));
    }
    Ok(values)
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelConfig {
    Jc {
        gamma0: f64,
        lambda: f64,
        /// Accepted for completeness; the resonant dynamics do not use it.
        omega0: f64,
        mode: JcMode,
    },
    Dephasing {
        eta: f64,
        s: Vec<f64>,
        omega_c: f64,
        kappa: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum InitialStates {
    Bloch(BlochVector),
    /// One curve per coherence `C`, each started from `(√C, 0, 0)`.
    Coherence(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub model: ModelConfig,
    pub initial: InitialStates,
    pub tau_grid: TauGrid,
    pub tau_d: f64,
    pub quadrature: QuadratureSpec,
    pub format: OutputFormat,
    pub parallel: bool,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), ScanError> {
        if !(self.tau_d > 0.0 && self.tau_d.is_finite()) {
            return Err(config_err(format!(
                "tau_d must be positive, got {}",
                self.tau_d
            )));
        }
        self.quadrature.validate()?;
        if let ModelConfig::Dephasing { s, .. } = &self.model {
            if s.is_empty() {
                return Err(config_err("at least one s value is required"));
            }
        }
        if let InitialStates::Coherence(c) = &self.initial {
            if c.is_empty() {
                return Err(config_err("at least one coherence value is required"));
            }
            if let Some(bad) = c.iter().find(|c| !(0.0..=1.0).contains(*c)) {
                return Err(config_err(format!(
                    "coherence must lie in [0, 1], got {bad}"
                )));
            }
        }
        curve_specs(self).map(|_| ())
    }
}

/// Acceleration sweep applied on top of a [`ScanConfig`].
#[derive(Debug, Clone, PartialEq)]
pub struct UnruhSweep {
    pub accelerations: Vec<f64>,
    pub varpi: f64,
    pub c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub report: SpeedLimitReport,
    /// `p_τ` for JC models, `q_τ` for dephasing.
    pub signal: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Curve {
    /// Extra column values shared by every row of the curve.
    pub labels: Vec<(&'static str, f64)>,
    pub rows: Vec<ScanRow>,
    /// Analytic `τ_c = ln 2/γ₀` for the ideal-Markov JC mode.
    pub critical_time: Option<f64>,
}

impl Curve {
    /// First grid point with the smallest `τ_QSL`.
    pub fn argmin(&self) -> Option<&ScanRow> {
        let mut best: Option<&ScanRow> = None;
        for row in &self.rows {
            if best.is_none_or(|b| row.report.tau_qsl < b.report.tau_qsl) {
                best = Some(row);
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanOutput {
    pub curves: Vec<Curve>,
}

struct CurveSpec {
    model: ChannelModel,
    v0: BlochVector,
    labels: Vec<(&'static str, f64)>,
    critical_time: Option<f64>,
}

fn initial_vectors(initial: &InitialStates) -> Result<Vec<(BlochVector, f64)>, ScanError> {
    match initial {
        InitialStates::Bloch(v) => Ok(vec![(*v, coherence(v))]),
        InitialStates::Coherence(cs) => cs
            .iter()
            .map(|&c| Ok((BlochVector::new(c.sqrt(), 0.0, 0.0)?, c)))
            .collect(),
    }
}

fn curve_specs(cfg: &ScanConfig) -> Result<Vec<CurveSpec>, ScanError> {
    let states = initial_vectors(&cfg.initial)?;
    let mut specs = Vec::new();
    match &cfg.model {
        ModelConfig::Jc {
            gamma0,
            lambda,
            omega0,
            mode,
        } => {
            let (model, critical_time) = match mode {
                JcMode::Exact => (DampedJCParams::new(*gamma0, *lambda, *omega0)?.into(), None),
                JcMode::IdealMarkov => {
                    let p = MarkovJCParams::new(*gamma0)?;
                    (p.into(), Some(p.critical_time()))
                }
            };
            for &(v0, coh) in &states {
                let labels = if states.len() > 1 {
                    vec![("coh", coh)]
                } else {
                    Vec::new()
                };
                specs.push(CurveSpec {
                    model,
                    v0,
                    labels,
                    critical_time,
                });
            }
        }
        ModelConfig::Dephasing {
            eta,
            s,
            omega_c,
            kappa,
        } => {
            let family = s.len() * states.len() > 1;
            for &s in s {
                let model = OhmicParams::with_kappa(*eta, s, *omega_c, *kappa)?.into();
                for &(v0, coh) in &states {
                    let labels = if family {
                        vec![("s", s), ("coh", coh)]
                    } else {
                        Vec::new()
                    };
                    specs.push(CurveSpec {
                        model,
                        v0,
                        labels,
                        critical_time: None,
                    });
                }
            }
        }
    }
    Ok(specs)
}

fn evaluate(specs: &[CurveSpec], cfg: &ScanConfig) -> Result<Vec<Curve>, ScanError> {
    let taus = cfg.tau_grid.points();
    let tasks: Vec<(usize, f64)> = (0..specs.len())
        .flat_map(|c| taus.iter().map(move |&t| (c, t)))
        .collect();
    let run = |&(c, tau): &(usize, f64)| -> Result<ScanRow, ScanError> {
        let spec = &specs[c];
        let report = qsl_unified(&spec.model, &spec.v0, tau, cfg.tau_d, &cfg.quadrature)
            .map_err(|source| ScanError::Numerical { tau, source })?;
        Ok(ScanRow {
            report,
            signal: spec.model.signal(tau),
        })
    };
    let results: Vec<Result<ScanRow, ScanError>> = if cfg.parallel {
        tasks.par_iter().map(run).collect()
    } else {
        tasks.iter().map(run).collect()
    };
    let mut rows = results.into_iter();
    let mut curves = Vec::with_capacity(specs.len());
    for spec in specs {
        let curve_rows = rows
            .by_ref()
            .take(taus.len())
            .collect::<Result<Vec<_>, _>>()?;
        curves.push(Curve {
            labels: spec.labels.clone(),
            rows: curve_rows,
            critical_time: spec.critical_time,
        });
    }
    Ok(curves)
}

pub fn run_scan(cfg: &ScanConfig) -> Result<ScanOutput, ScanError> {
    cfg.validate()?;
    let specs = curve_specs(cfg)?;
    Ok(ScanOutput {
        curves: evaluate(&specs, cfg)?,
    })
}

/// The scan of `cfg` repeated for each acceleration, with the initial state
/// replaced by its accelerated-frame image. Curves are ordered by
/// acceleration first.
pub fn run_unruh_sweep(cfg: &ScanConfig, sweep: &UnruhSweep) -> Result<ScanOutput, ScanError> {
    cfg.validate()?;
    if sweep.accelerations.is_empty() {
        return Err(config_err("acceleration grid is empty"));
    }
    let base = curve_specs(cfg)?;
    let mut specs = Vec::with_capacity(base.len() * sweep.accelerations.len());
    for &a in &sweep.accelerations {
        let params = UnruhParams::new(a, sweep.varpi, sweep.c)?;
        let cr = cos_r(&params);
        for b in &base {
            let mut labels = vec![("a", a), ("cos_r", cr)];
            labels.extend(b.labels.iter().copied());
            specs.push(CurveSpec {
                model: b.model,
                v0: transform_initial_state(&b.v0, &params),
                labels,
                critical_time: b.critical_time,
            });
        }
    }
    Ok(ScanOutput {
        curves: evaluate(&specs, cfg)?,
    })
}

/// `%.12g`-style formatting: 12 significant digits, trailing zeros removed,
/// exponent form outside `[1e-4, 1e12)`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn row_fields(row: &ScanRow) -> [String; 9] {
    let r = &row.report;
    [
        format_float(r.tau),
        format_float(r.tau_qsl),
        format_float(r.tau_qsl / r.tau_d),
        format_float(row.signal),
        format_float(r.numerator),
        format_float(r.d_ml),
        format_float(r.d_mt),
        r.dominant.to_string(),
        u8::from(r.degenerate).to_string(),
    ]
}

fn label_text(labels: &[(&str, f64)]) -> String {
    labels
        .iter()
        .map(|(k, v)| format!(" {k}={}", format_float(*v)))
        .collect()
}

/// Renders the table with a header row and one `#` footer line per curve.
pub fn render(out: &ScanOutput, format: OutputFormat) -> String {
    let sep = match format {
        OutputFormat::Csv => ",",
        OutputFormat::Plotdata => " ",
    };
    let extra: Vec<&str> = out
        .curves
        .first()
        .map(|c| c.labels.iter().map(|(k, _)| *k).collect())
        .unwrap_or_default();
    let header: Vec<&str> = COLUMNS
        .iter()
        .copied()
        .chain(extra.iter().copied())
        .collect();

    let mut text = String::new();
    if format == OutputFormat::Plotdata {
        text.push_str("# ");
    }
    text.push_str(&header.join(sep));
    text.push('\n');
    for curve in &out.curves {
        let labels: Vec<String> = curve.labels.iter().map(|(_, v)| format_float(*v)).collect();
        for row in &curve.rows {
            let fields = row_fields(row);
            let line: Vec<&str> = fields
                .iter()
                .map(String::as_str)
                .chain(labels.iter().map(String::as_str))
                .collect();
            text.push_str(&line.join(sep));
            text.push('\n');
        }
    }
    for curve in &out.curves {
        text.push('#');
        text.push_str(&label_text(&curve.labels));
        if let Some(best) = curve.argmin() {
            let _ = write!(
                text,
                " argmin tau={} tau_qsl={}",
                format_float(best.report.tau),
                format_float(best.report.tau_qsl)
            );
        }
        if let Some(tc) = curve.critical_time {
            let _ = write!(text, " tau_c={}", format_float(tc));
        }
        text.push('\n');
    }
    text
}

/// Figure reproductions with the paper's parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Damped JC, `γ₀ = 0.1λ`.
    Fig1a,
    /// Damped JC, `γ₀ = 10λ`.
    Fig1b,
    /// Ohmic-family dephasing, `s ∈ {0.5, 1, 3}`, `C ∈ {0.25, 0.5, 1}`.
    Fig2,
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fig1a" => Ok(Self::Fig1a),
            "fig1b" => Ok(Self::Fig1b),
            "fig2" => Ok(Self::Fig2),
            _ => Err(format!(
                "unknown preset `{s}` (expected fig1a, fig1b or fig2)"
            )),
        }
    }
}

impl Preset {
    pub fn config(self) -> ScanConfig {
        let jc = |gamma0| ModelConfig::Jc {
            gamma0,
            lambda: 1.0,
            omega0: 1.0,
            mode: JcMode::Exact,
        };
        let (model, initial, stop) = match self {
            Self::Fig1a => (jc(0.1), InitialStates::Bloch(BlochVector::excited()), 20.0),
            Self::Fig1b => (jc(10.0), InitialStates::Bloch(BlochVector::excited()), 20.0),
            Self::Fig2 => (
                ModelConfig::Dephasing {
                    eta: 1.0,
                    s: vec![0.5, 1.0, 3.0],
                    omega_c: 1.0,
                    kappa: 1.0,
                },
                InitialStates::Coherence(vec![0.25, 0.5, 1.0]),
                30.0,
            ),
        };
        ScanConfig {
            model,
            initial,
            tau_grid: TauGrid::new(0.0, stop, 0.02).expect("preset grid is valid"),
            tau_d: 1.0,
            quadrature: QuadratureSpec::default(),
            format: OutputFormat::Csv,
            parallel: true,
        }
    }
}

/// Flag / JSON-file view of a scan. Every field is optional so a file and
/// the command line can be layered with [`ScanOptions::overridden_by`].
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScanOptions {
    pub model: Option<ModelKind>,
    pub gamma0: Option<f64>,
    pub lambda: Option<f64>,
    pub omega0: Option<f64>,
    pub eta: Option<f64>,
    pub s: Option<Vec<f64>>,
    pub omega_c: Option<f64>,
    pub kappa: Option<f64>,
    pub coh: Option<Vec<f64>>,
    pub bloch: Option<[f64; 3]>,
    pub tau_grid: Option<String>,
    pub tau_d: Option<f64>,
    pub mode: Option<JcMode>,
    pub a_grid: Option<String>,
    pub varpi: Option<f64>,
    pub c: Option<f64>,
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub max_depth: Option<u32>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub serial: Option<bool>,
}

impl ScanOptions {
    pub fn from_json_file(path: &Path) -> Result<Self, ScanError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_err(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| config_err(format!("bad config file {}: {e}", path.display())))
    }

    /// Field-wise merge; values present in `other` win.
    pub fn overridden_by(self, other: Self) -> Self {
        Self {
            model: other.model.or(self.model),
            gamma0: other.gamma0.or(self.gamma0),
            lambda: other.lambda.or(self.lambda),
            omega0: other.omega0.or(self.omega0),
            eta: other.eta.or(self.eta),
            s: other.s.or(self.s),
            omega_c: other.omega_c.or(self.omega_c),
            kappa: other.kappa.or(self.kappa),
            coh: other.coh.or(self.coh),
            bloch: other.bloch.or(self.bloch),
            tau_grid: other.tau_grid.or(self.tau_grid),
            tau_d: other.tau_d.or(self.tau_d),
            mode: other.mode.or(self.mode),
            a_grid: other.a_grid.or(self.a_grid),
            varpi: other.varpi.or(self.varpi),
            c: other.c.or(self.c),
            abs_tol: other.abs_tol.or(self.abs_tol),
            rel_tol: other.rel_tol.or(self.rel_tol),
            max_depth: other.max_depth.or(self.max_depth),
            out: other.out.or(self.out),
            format: other.format.or(self.format),
            serial: other.serial.or(self.serial),
        }
    }

    pub fn quadrature(&self) -> Result<QuadratureSpec, ScanError> {
        let d = QuadratureSpec::default();
        Ok(QuadratureSpec::new(
            self.abs_tol.unwrap_or(d.abs_tol),
            self.rel_tol.unwrap_or(d.rel_tol),
            self.max_depth.unwrap_or(d.max_depth),
        )?)
    }

    pub fn to_scan_config(&self) -> Result<ScanConfig, ScanError> {
        let kind = self
            .model
            .ok_or_else(|| config_err("a model is required (jc or dephasing)"))?;
        let reject = |present: bool, flag: &str| {
            if present {
                Err(config_err(format!(
                    "{flag} does not apply to the {kind:?} model"
                )))
            } else {
                Ok(())
            }
        };
        let model = match kind {
            ModelKind::Jc => {
                reject(self.eta.is_some(), "eta")?;
                reject(self.s.is_some(), "s")?;
                reject(self.omega_c.is_some(), "omega_c")?;
                reject(self.kappa.is_some(), "kappa")?;
                ModelConfig::Jc {
                    gamma0: self.gamma0.unwrap_or(0.1),
                    lambda: self.lambda.unwrap_or(1.0),
                    omega0: self.omega0.unwrap_or(1.0),
                    mode: self.mode.unwrap_or_default(),
                }
            }
            ModelKind::Dephasing => {
                reject(self.gamma0.is_some(), "gamma0")?;
                reject(self.lambda.is_some(), "lambda")?;
                reject(self.omega0.is_some(), "omega0")?;
                reject(self.mode == Some(JcMode::IdealMarkov), "ideal-markov mode")?;
                ModelConfig::Dephasing {
                    eta: self.eta.unwrap_or(1.0),
                    s: self.s.clone().unwrap_or_else(|| vec![1.0]),
                    omega_c: self.omega_c.unwrap_or(1.0),
                    kappa: self.kappa.unwrap_or(1.0),
                }
            }
        };
        let initial = match (&self.coh, self.bloch) {
            (Some(_), Some(_)) => return Err(config_err("give either coh or bloch, not both")),
            (Some(c), None) => InitialStates::Coherence(c.clone()),
            (None, Some([x, y, z])) => InitialStates::Bloch(BlochVector::new(x, y, z)?),
            (None, None) => match kind {
                ModelKind::Jc => InitialStates::Bloch(BlochVector::excited()),
                ModelKind::Dephasing => InitialStates::Coherence(vec![1.0]),
            },
        };
        let tau_grid = match &self.tau_grid {
            Some(g) => g.parse()?,
            None => TauGrid::new(0.0, 20.0, 0.02)?,
        };
        let cfg = ScanConfig {
            model,
            initial,
            tau_grid,
            tau_d: self.tau_d.unwrap_or(1.0),
            quadrature: self.quadrature()?,
            format: self.format.unwrap_or_default(),
            parallel: !self.serial.unwrap_or(false),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_unruh_sweep(&self) -> Result<UnruhSweep, ScanError> {
        let grid = self
            .a_grid
            .as_deref()
            .ok_or_else(|| config_err("an acceleration grid is required"))?;
        let sweep = UnruhSweep {
            accelerations: parse_acceleration_grid(grid)?,
            varpi: self.varpi.unwrap_or(1.0),
            c: self.c.unwrap_or(1.0),
        };
        if sweep.accelerations.is_empty() {
            return Err(config_err("acceleration grid is empty"));
        }
        UnruhParams::new(0.0, sweep.varpi, sweep.c)?;
        Ok(sweep)
    }
}
