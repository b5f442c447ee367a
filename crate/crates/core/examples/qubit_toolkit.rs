use num_complex::Complex64;
use qslt::qubit::{from_bloch, relative_purity, singular_values, to_bloch, trace_norm, Operator2};
use qslt::BlochVector;

fn main() -> qslt::Result<()> {
    let v = BlochVector::new(0.3, 0.4, -0.5)?;
    let rho = from_bloch(v);
    println!("rho = {:?}", rho.as_operator().entries());
    println!(
        "eigenvalues {:?}, back to Bloch {:?}",
        rho.eigenvalues(),
        to_bloch(&rho)
    );

    let sigma = from_bloch(BlochVector::new(0.0, 0.0, 0.2)?);
    println!(
        "relative purity f(rho, sigma) = {:.6}",
        relative_purity(&rho, &sigma)
    );

    let m = Operator2::new(
        Complex64::new(0.0, 1.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(-1.0, 0.5),
    );
    println!(
        "singular values {:?}, trace norm {:.6}",
        singular_values(&m)?,
        trace_norm(&m)?
    );
    Ok(())
}
