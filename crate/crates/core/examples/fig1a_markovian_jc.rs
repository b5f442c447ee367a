//! Weak coupling (γ₀ = 0.1λ): the bound dips to zero where the excited
//! population crosses ½ and climbs back toward τ_D.

use qslt::models::{jc_population, ChannelModel, DampedJCParams, MarkovJCParams};
use qslt::qslt::{qsl_markov_jc, qsl_unified};
use qslt::{BlochVector, QuadratureSpec};

fn main() -> qslt::Result<()> {
    let spec = QuadratureSpec::default();
    let exact = DampedJCParams::new(0.1, 1.0, 1.0)?;
    let markov = MarkovJCParams::new(0.1)?;
    let v0 = BlochVector::excited();

    println!(
        "{:>5} {:>12} {:>12} {:>12} {:>10}",
        "tau", "exact", "markov", "formula", "p_tau"
    );
    for i in 0..=10 {
        let tau = 2.0 * f64::from(i);
        let e = qsl_unified(&exact.into(), &v0, tau, 1.0, &spec)?;
        let m = qsl_unified(&ChannelModel::from(markov), &v0, tau, 1.0, &spec)?;
        println!(
            "{tau:>5} {:>12.8} {:>12.8} {:>12.8} {:>10.6}",
            e.tau_qsl,
            m.tau_qsl,
            qsl_markov_jc(0.1, tau, 1.0),
            jc_population(&exact, tau)
        );
    }
    println!(
        "ideal-Markov critical time ln2/γ₀ = {:.6}",
        markov.critical_time()
    );
    Ok(())
}
