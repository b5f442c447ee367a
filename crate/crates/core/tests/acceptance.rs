//! One PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qslt::models::{
    dephasing_coherence_factor, dephasing_exponent, jc_population, ohmic_spectral_density,
    ChannelModel, DampedJCParams, MarkovJCParams, OhmicParams,
};
use qslt::numerics::integrate_semi_infinite;
use qslt::qslt::{qsl_dephasing_closed, qsl_jc_closed, qsl_unified};
use qslt::qubit::{coherence, singular_values};
use qslt::scan::{render, run_scan, OutputFormat, Preset};
use qslt::unruh::{cos_r, transform_initial_state, UnruhParams};
use qslt::{BlochVector, Operator2, QuadratureSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn grid(start: f64, step: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| start + i as f64 * step).collect()
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn random_bloch(rng: &mut impl Rng) -> BlochVector {
    loop {
        let v = BlochVector::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        if let Ok(v) = v {
            return v;
        }
    }
}

fn ac1_ideal_markov_formula() -> Outcome {
    let start = Instant::now();
    let model = ChannelModel::from(MarkovJCParams::new(0.1).unwrap());
    let taus = grid(0.0, 0.01, 3001);
    let mut max_err = 0.0_f64;
    let mut best = (f64::INFINITY, 0.0);
    for &tau in &taus {
        let r = qsl_unified(&model, &BlochVector::excited(), tau, 1.0, &spec())
            .map_err(|e| e.to_string())?;
        let formula = (1.0 - 2.0 * (-0.1 * tau).exp()).abs();
        max_err = max_err.max((r.tau_qsl - formula).abs());
        if r.tau_qsl < best.0 {
            best = (r.tau_qsl, tau);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let tau_c = 10.0 * 2f64.ln();
    ensure(
        max_err <= 1e-6 && (best.1 - tau_c).abs() <= 0.01 + 1e-12 && elapsed < 5.0,
        format!(
            "max err {max_err:.2e}, argmin {:.2} vs tau_c {tau_c:.4}, {elapsed:.2}s",
            best.1
        ),
    )
}

fn ac2_pure_state_endpoint() -> Outcome {
    let model = ChannelModel::from(MarkovJCParams::new(0.1).unwrap());
    let r = qsl_unified(&model, &BlochVector::excited(), 0.0, 1.0, &spec())
        .map_err(|e| e.to_string())?;
    ensure(
        (r.tau_qsl - 1.0).abs() <= 1e-9,
        format!("tau_qsl = {:.15}", r.tau_qsl),
    )
}

fn relative(engine: f64, closed: f64) -> f64 {
    if closed == 0.0 {
        engine.abs()
    } else {
        (engine - closed).abs() / closed.abs()
    }
}

fn ac3_engine_vs_closed_forms() -> Outcome {
    let taus = grid(0.0, 0.02, 500);
    let mut max_jc = 0.0_f64;
    for gamma0 in [0.1, 10.0] {
        let p = DampedJCParams::new(gamma0, 1.0, 1.0).unwrap();
        for &tau in &taus {
            let engine = qsl_unified(&p.into(), &BlochVector::excited(), tau, 1.0, &spec())
                .map_err(|e| e.to_string())?;
            let closed = qsl_jc_closed(&p, tau, 1.0, &spec()).map_err(|e| e.to_string())?;
            max_jc = max_jc.max(relative(engine.tau_qsl, closed));
        }
    }
    let mut max_deph = 0.0_f64;
    for s in [0.5, 1.0, 3.0] {
        let p = OhmicParams::new(1.0, s, 1.0).unwrap();
        for coh in [0.25_f64, 1.0] {
            let v0 = BlochVector::new(coh.sqrt(), 0.0, 0.0).unwrap();
            for &tau in &taus {
                let engine =
                    qsl_unified(&p.into(), &v0, tau, 1.0, &spec()).map_err(|e| e.to_string())?;
                let closed =
                    qsl_dephasing_closed(&p, coh, tau, 1.0, &spec()).map_err(|e| e.to_string())?;
                max_deph = max_deph.max(relative(engine.tau_qsl, closed));
            }
        }
    }
    ensure(
        max_jc <= 1e-6 && max_deph <= 1e-6,
        format!("max relative deviation JC {max_jc:.2e}, dephasing {max_deph:.2e}"),
    )
}

// Minimizer of a unimodal function on [lo, hi].
fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if f(a) < f(b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    0.5 * (lo + hi)
}

fn ac4_non_markovian_oscillation() -> Outcome {
    let p = DampedJCParams::new(10.0, 1.0, 1.0).unwrap();
    let taus = grid(0.0, 0.01, 501);
    let bound = taus
        .iter()
        .map(|&t| {
            qsl_unified(&p.into(), &BlochVector::excited(), t, 1.0, &spec()).map(|r| r.tau_qsl)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let maxima = (1..bound.len() - 1)
        .filter(|&i| bound[i] > bound[i - 1] && bound[i] > bound[i + 1])
        .count();

    let fine = grid(0.0, 0.005, 1001);
    let mut zeros = Vec::new();
    for i in 1..fine.len() - 1 {
        let (a, b, c) = (
            jc_population(&p, fine[i - 1]),
            jc_population(&p, fine[i]),
            jc_population(&p, fine[i + 1]),
        );
        if b < a && b <= c && b < 1e-3 {
            zeros.push(golden_min(
                |t| jc_population(&p, t),
                fine[i - 1],
                fine[i + 1],
            ));
        }
    }
    let expected = 2.0 * PI / 19f64.sqrt();
    let spacing_ok = zeros.len() >= 2
        && zeros
            .windows(2)
            .all(|w| ((w[1] - w[0]) - expected).abs() <= 0.02 * expected);
    let spacing = zeros
        .windows(2)
        .map(|w| w[1] - w[0])
        .next()
        .unwrap_or(f64::NAN);
    ensure(
        maxima >= 3 && spacing_ok,
        format!(
            "{maxima} local maxima, {} zeros, spacing {spacing:.5} vs {expected:.5}",
            zeros.len()
        ),
    )
}

fn ac5_dephasing_oracle() -> Outcome {
    let mut max_rel = 0.0_f64;
    for s in [0.5, 1.0, 2.0, 3.0] {
        let p = OhmicParams::new(1.0, s, 1.0).unwrap();
        for t in [0.1, 1.0, 5.0, 10.0] {
            let integrand =
                |w: f64| ohmic_spectral_density(&p, w) * (1.0 - (w * t).cos()) / (w * w);
            let oracle =
                integrate_semi_infinite(integrand, 1.0, &spec()).map_err(|e| e.to_string())?;
            max_rel = max_rel.max(((dephasing_exponent(&p, t) - oracle) / oracle).abs());
        }
    }
    let ohmic = OhmicParams::new(1.0, 1.0, 1.0).unwrap();
    let max_s1 = [0.1_f64, 1.0, 5.0, 10.0]
        .iter()
        .map(|&b| (dephasing_exponent(&ohmic, b) - 0.5 * (1.0 + b * b).ln()).abs())
        .fold(0.0, f64::max);
    ensure(
        max_rel <= 1e-6 && max_s1 <= 1e-9,
        format!("max relative deviation {max_rel:.2e}, s=1 closed form {max_s1:.2e}"),
    )
}

fn ac6_coherence_trapping() -> Outcome {
    let p = OhmicParams::new(1.0, 3.0, 1.0).unwrap();
    let target = (-1.0f64).exp();
    let q_dev = grid(20.0, 0.5, 361)
        .iter()
        .map(|&t| (dephasing_coherence_factor(&p, t) - target).abs() / target)
        .fold(0.0, f64::max);
    let mut spread = 0.0_f64;
    for coh in [0.25_f64, 0.5, 1.0] {
        let v0 = BlochVector::new(coh.sqrt(), 0.0, 0.0).unwrap();
        let values = grid(20.0, 0.1, 201)
            .iter()
            .map(|&t| qsl_unified(&p.into(), &v0, t, 1.0, &spec()).map(|r| r.tau_qsl))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let hi = values.iter().copied().fold(f64::MIN, f64::max);
        let lo = values.iter().copied().fold(f64::MAX, f64::min);
        spread = spread.max((hi - lo) / hi);
    }
    ensure(
        q_dev <= 0.01 && spread < 0.01,
        format!("max |q - 1/e|/(1/e) {q_dev:.2e}, tau_qsl spread {spread:.2e}"),
    )
}

fn random_model(rng: &mut impl Rng, kind: usize) -> ChannelModel {
    match kind {
        0 => DampedJCParams::new(
            rng.random_range(0.05..10.0),
            rng.random_range(0.5..2.0),
            1.0,
        )
        .unwrap()
        .into(),
        1 => MarkovJCParams::new(rng.random_range(0.01..5.0))
            .unwrap()
            .into(),
        _ => OhmicParams::new(
            rng.random_range(0.1..2.0),
            rng.random_range(0.2..4.0),
            rng.random_range(0.5..2.0),
        )
        .unwrap()
        .into(),
    }
}

fn ac7_bound_validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_bound = f64::MIN;
    let mut worst_order = f64::MIN;
    let cases = 1200;
    for _ in 0..cases {
        let kind = rng.random_range(0..3);
        let model = random_model(&mut rng, kind);
        let v0 = random_bloch(&mut rng);
        let tau = rng.random_range(0.0..10.0);
        let tau_d = rng.random_range(0.05..3.0);
        let r = qsl_unified(&model, &v0, tau, tau_d, &spec()).map_err(|e| e.to_string())?;
        worst_bound = worst_bound.max(r.tau_qsl - r.tau_d);
        worst_order = worst_order.max(r.d_ml - r.d_mt);
    }
    ensure(
        worst_bound <= 1e-9 && worst_order <= 0.0,
        format!("{cases} cases, max tau_qsl - tau_D {worst_bound:.2e}, max d_ml - d_mt {worst_order:.2e}"),
    )
}

fn ac8_generator_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let h = 1e-5;
    let mut worst = [0.0_f64; 3];
    for (kind, w) in worst.iter_mut().enumerate() {
        let mut checked = 0;
        while checked < 100 {
            let model = random_model(&mut rng, kind);
            let t = rng.random_range(0.01..6.0);
            if let ChannelModel::DampedJC(p) = model {
                // rate poles sit where p_t touches zero
                if jc_population(&p, t) < 0.0025 * (-2.0 * p.lambda() * t).exp() {
                    continue;
                }
            }
            let v0 = random_bloch(&mut rng);
            let rho = model.state(&v0, t).map_err(|e| e.to_string())?;
            let generated = model.generator(&rho, t).map_err(|e| e.to_string())?;
            let fwd = *model
                .state(&v0, t + h)
                .map_err(|e| e.to_string())?
                .as_operator();
            let bwd = *model
                .state(&v0, t - h)
                .map_err(|e| e.to_string())?
                .as_operator();
            *w = w.max(generated.max_abs_diff(&(fwd - bwd).scale(0.5 / h)));
            checked += 1;
        }
    }
    ensure(
        worst.iter().all(|&w| w <= 1e-7),
        format!(
            "max entrywise deviation JC {:.2e}, Markov JC {:.2e}, dephasing {:.2e}",
            worst[0], worst[1], worst[2]
        ),
    )
}

fn random_operator(rng: &mut impl Rng) -> Operator2 {
    let mut c = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    Operator2::new(c(), c(), c(), c())
}

fn ac9_inequalities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut violations = 0;
    for _ in 0..10_000 {
        let (a, b) = (random_operator(&mut rng), random_operator(&mut rng));
        let (a1, a2) = singular_values(&a).map_err(|e| e.to_string())?;
        let (b1, b2) = singular_values(&b).map_err(|e| e.to_string())?;
        if (a * b).trace().norm() > a1 * b1 + a2 * b2 + 1e-12 {
            violations += 1;
        }
        let hs = |m: &Operator2| m.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (a.adjoint() * b).trace().norm() > hs(&a) * hs(&b) + 1e-12 {
            violations += 1;
        }
    }
    ensure(
        violations == 0,
        format!("10000 pairs, {violations} violations"),
    )
}

fn ac10_unruh() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut identity = 0.0_f64;
    let mut expressions = 0.0_f64;
    for _ in 0..1000 {
        let v = random_bloch(&mut rng);
        for a in [0.0, 1e-3] {
            let w = transform_initial_state(&v, &UnruhParams::natural(a, 1.0).unwrap());
            identity = identity.max(
                (w.x() - v.x())
                    .abs()
                    .max((w.y() - v.y()).abs())
                    .max((w.z() - v.z()).abs()),
            );
        }
        let p =
            UnruhParams::natural(rng.random_range(0.0..100.0), rng.random_range(0.1..3.0)).unwrap();
        let c2 = cos_r(&p).powi(2);
        let w = transform_initial_state(&v, &p);
        expressions = expressions
            .max((coherence(&w) - c2 * coherence(&v)).abs())
            .max((w.excited_population() - (1.0 - 0.5 * (1.0 + v.z()) * c2)).abs());
    }

    let model = ChannelModel::from(OhmicParams::new(1.0, 1.0, 1.0).unwrap());
    let v0 = BlochVector::new(0.7, 0.2, 0.4).unwrap();
    let accelerations = grid(0.0, 2.5, 20);
    let mut monotone = true;
    for tau in [0.0, 0.5, 2.0, 5.0] {
        let mut last = f64::INFINITY;
        for &a in &accelerations {
            let w = transform_initial_state(&v0, &UnruhParams::natural(a, 1.0).unwrap());
            let r = qsl_unified(&model, &w, tau, 1.0, &spec()).map_err(|e| e.to_string())?;
            monotone &= r.tau_qsl <= last;
            last = r.tau_qsl;
        }
    }
    ensure(
        identity <= 1e-12 && expressions <= 1e-12 && monotone,
        format!("identity {identity:.2e}, expressions {expressions:.2e}, nonincreasing in a: {monotone}"),
    )
}

fn ac11_reproducibility() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .map_err(|e| e.to_string())?;
    for preset in [Preset::Fig1a, Preset::Fig1b, Preset::Fig2] {
        let mut cfg = preset.config();
        let run = |cfg: &qslt::scan::ScanConfig| {
            run_scan(cfg)
                .map(|o| render(&o, OutputFormat::Csv))
                .map_err(|e| e.to_string())
        };
        let first = pool.install(|| run(&cfg))?;
        let second = pool.install(|| run(&cfg))?;
        cfg.parallel = false;
        let serial = run(&cfg)?;
        if first != second || first != serial {
            return Err(format!("{preset:?} output differs between runs"));
        }
    }
    Ok("fig1a, fig1b, fig2 identical across repeats and serial/parallel".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1 ideal-Markov JC formula", ac1_ideal_markov_formula),
        ("AC2 pure-state Markovian endpoint", ac2_pure_state_endpoint),
        ("AC3 engine vs closed forms", ac3_engine_vs_closed_forms),
        (
            "AC4 non-Markovian oscillation",
            ac4_non_markovian_oscillation,
        ),
        ("AC5 dephasing exponent oracle", ac5_dephasing_oracle),
        ("AC6 coherence trapping", ac6_coherence_trapping),
        ("AC7 bound validity and ML dominance", ac7_bound_validity),
        ("AC8 generator consistency", ac8_generator_consistency),
        ("AC9 inequality suites", ac9_inequalities),
        ("AC10 Unruh checks", ac10_unruh),
        ("AC11 reproducibility", ac11_reproducibility),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
