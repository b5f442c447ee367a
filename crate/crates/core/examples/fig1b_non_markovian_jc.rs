//! Strong coupling (γ₀ = 10λ): the population revives, so the bound
//! oscillates with the period 2π/√(2γ₀λ − λ²) of the population zeros.

use qslt::models::{jc_population, DampedJCParams};
use qslt::qslt::qsl_unified;
use qslt::{BlochVector, QuadratureSpec};

fn main() -> qslt::Result<()> {
    let p = DampedJCParams::new(10.0, 1.0, 1.0)?;
    let spec = QuadratureSpec::default();
    let taus: Vec<f64> = (0..=250).map(|i| 0.02 * f64::from(i)).collect();
    let bound = taus
        .iter()
        .map(|&t| qsl_unified(&p.into(), &BlochVector::excited(), t, 1.0, &spec).map(|r| r.tau_qsl))
        .collect::<qslt::Result<Vec<_>>>()?;

    for i in 1..taus.len() - 1 {
        if bound[i] > bound[i - 1] && bound[i] >= bound[i + 1] {
            println!(
                "local max at tau = {:.2}: tau_qsl = {:.6}",
                taus[i], bound[i]
            );
        }
    }
    let period = 2.0 * std::f64::consts::PI / p.oscillation_frequency().expect("strong coupling");
    println!("population zeros are {period:.6} apart");
    let dips = taus
        .iter()
        .filter(|&&t| jc_population(&p, t) < 1e-3)
        .count();
    println!("{dips} grid points with p_tau < 1e-3");
    Ok(())
}
