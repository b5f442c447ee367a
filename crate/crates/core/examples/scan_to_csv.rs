//! Builds a scan in code and prints it in the CLI's CSV format.

use qslt::scan::{
    render, run_scan, InitialStates, JcMode, ModelConfig, OutputFormat, ScanConfig, TauGrid,
};
use qslt::{BlochVector, QuadratureSpec};

fn main() {
    let cfg = ScanConfig {
        model: ModelConfig::Jc {
            gamma0: 0.1,
            lambda: 1.0,
            omega0: 1.0,
            mode: JcMode::IdealMarkov,
        },
        initial: InitialStates::Bloch(BlochVector::excited()),
        tau_grid: TauGrid::new(6.0, 8.0, 0.25).expect("valid grid"),
        tau_d: 1.0,
        quadrature: QuadratureSpec::default(),
        format: OutputFormat::Csv,
        parallel: true,
    };
    match run_scan(&cfg) {
        Ok(out) => print!("{}", render(&out, cfg.format)),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
