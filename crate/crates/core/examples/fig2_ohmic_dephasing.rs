//! Ohmic-family dephasing: larger initial coherence means a longer bound,
//! and for s = 3 the coherence freezes at e^{-1}.

use qslt::models::{dephasing_coherence_factor, OhmicParams};
use qslt::qslt::qsl_unified;
use qslt::{BlochVector, QuadratureSpec};

fn main() -> qslt::Result<()> {
    let spec = QuadratureSpec::default();
    for s in [0.5, 1.0, 3.0] {
        let p = OhmicParams::new(1.0, s, 1.0)?;
        for coh in [0.25_f64, 0.5, 1.0] {
            let v0 = BlochVector::new(coh.sqrt(), 0.0, 0.0)?;
            let row = [0.0, 2.0, 10.0, 25.0]
                .iter()
                .map(|&tau| {
                    qsl_unified(&p.into(), &v0, tau, 1.0, &spec)
                        .map(|r| format!("{:.6}", r.tau_qsl))
                })
                .collect::<qslt::Result<Vec<_>>>()?;
            println!(
                "s={s:<3} C={coh:<4} tau_qsl at 0, 2, 10, 25: {}",
                row.join(" ")
            );
        }
        println!(
            "        q(30) = {:.6}",
            dephasing_coherence_factor(&p, 30.0)
        );
    }
    Ok(())
}
