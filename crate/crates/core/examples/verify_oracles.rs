use qslt::verify::{run_verify, VerifyOptions};

fn main() {
    let report = run_verify(&VerifyOptions::default());
    println!("{report}");
    std::process::exit(report.exit_code());
}
