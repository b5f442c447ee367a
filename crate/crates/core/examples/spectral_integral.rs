//! The closed-form dephasing exponent against direct quadrature of
//! ∫ J(ω)(1 − cos ωt)/ω² dω over the half line.

use qslt::models::{dephasing_exponent, ohmic_spectral_density, OhmicParams};
use qslt::numerics::integrate_semi_infinite_estimate;
use qslt::QuadratureSpec;

fn main() -> qslt::Result<()> {
    let spec = QuadratureSpec::default();
    for s in [0.5, 1.0, 2.0, 3.0] {
        let p = OhmicParams::new(1.0, s, 1.0)?;
        for t in [0.1, 1.0, 5.0, 10.0] {
            let integrand =
                |w: f64| ohmic_spectral_density(&p, w) * (1.0 - (w * t).cos()) / (w * w);
            let est = integrate_semi_infinite_estimate(integrand, 1.0, &spec)?;
            let closed = dephasing_exponent(&p, t);
            println!(
                "s={s:<3} t={t:<4} closed={closed:.12} quadrature={:.12} (±{:.1e})",
                est.value, est.error
            );
        }
    }
    Ok(())
}
