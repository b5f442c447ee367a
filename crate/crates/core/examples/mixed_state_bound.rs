//! Full report of the unified bound for a generic mixed state, including
//! the looser trace-norm Margolus–Levitin variant.

use qslt::models::DampedJCParams;
use qslt::qslt::{qsl_ml_variant, qsl_unified};
use qslt::qubit::{from_bloch, purity};
use qslt::{BlochVector, ChannelModel, QuadratureSpec};

fn main() -> qslt::Result<()> {
    let spec = QuadratureSpec::default();
    let model = ChannelModel::from(DampedJCParams::new(2.0, 1.0, 1.0)?);
    let v0 = BlochVector::new(0.4, -0.3, -0.6)?;
    println!("initial purity {:.4}", purity(&from_bloch(v0)));

    let report = qsl_unified(&model, &v0, 1.5, 0.8, &spec)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    let (tight, loose) = qsl_ml_variant(&model, &v0, 1.5, 0.8, &spec)?;
    println!("ML with eigenvalue weights {tight:.6}, with trace norm {loose:.6}");
    Ok(())
}
