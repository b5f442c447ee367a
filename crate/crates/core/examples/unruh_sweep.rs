//! Dephasing seen by a uniformly accelerated observer: the bound shrinks as
//! the acceleration grows.

use qslt::models::OhmicParams;
use qslt::unruh::{cos_r, qsl_in_accelerated_frame, transform_initial_state, UnruhParams};
use qslt::{BlochVector, ChannelModel, QuadratureSpec};

fn main() -> qslt::Result<()> {
    let model = ChannelModel::from(OhmicParams::new(1.0, 1.0, 1.0)?);
    let v0 = BlochVector::new(0.8, 0.0, 0.5)?;
    for a in [0.0, 1.0, 2.0, 5.0, 10.0, 50.0] {
        let frame = UnruhParams::natural(a, 1.0)?;
        let seen = transform_initial_state(&v0, &frame);
        let r =
            qsl_in_accelerated_frame(&model, &v0, &frame, 1.0, 1.0, &QuadratureSpec::default())?;
        println!(
            "a={a:<5} cos r={:.6} v'=({:.4}, {:.4}, {:.4}) tau_qsl={:.6}",
            cos_r(&frame),
            seen.x(),
            seen.y(),
            seen.z(),
            r.tau_qsl
        );
    }
    Ok(())
}
