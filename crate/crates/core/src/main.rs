use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qslt::numerics::QuadratureSpec;
use qslt::scan::{
    render, run_scan, run_unruh_sweep, JcMode, ModelKind, OutputFormat, Preset, ScanError,
    ScanOptions,
};
use qslt::verify::{run_verify, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "qslt",
    version,
    about = "Quantum speed limit times for open qubit systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the speed limit over the initial time tau.
    Scan(ScanArgs),
    /// Repeat a scan in the frame of uniformly accelerated observers.
    Unruh(ScanArgs),
    /// Reproduce a figure: fig1a, fig1b or fig2.
    Preset {
        name: Preset,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        format: Option<OutputFormat>,
        /// Evaluate grid points on a single thread.
        #[arg(long)]
        serial: bool,
    },
    /// Run the oracle cross-checks.
    Verify {
        /// Dephasing prefactor; the spectral integral corresponds to 1.
        #[arg(long, default_value_t = 1.0)]
        kappa: f64,
        #[arg(long)]
        abs_tol: Option<f64>,
        #[arg(long)]
        rel_tol: Option<f64>,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// JSON file with the same keys as the flags (snake_case); flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    model: Option<ModelKind>,
    #[arg(long)]
    gamma0: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    omega0: Option<f64>,
    #[arg(long)]
    eta: Option<f64>,
    /// Comma-separated Ohmicity values.
    #[arg(long, value_delimiter = ',')]
    s: Option<Vec<f64>>,
    #[arg(long)]
    omega_c: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    /// Comma-separated initial coherences, each started from (sqrt(C), 0, 0).
    #[arg(long, value_delimiter = ',', conflicts_with = "bloch")]
    coh: Option<Vec<f64>>,
    /// Initial Bloch vector vx,vy,vz.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    bloch: Option<Vec<f64>>,
    /// start:stop:step
    #[arg(long)]
    tau_grid: Option<String>,
    #[arg(long)]
    tau_d: Option<f64>,
    #[arg(long)]
    mode: Option<JcMode>,
    /// Accelerations as start:stop:step or a comma list.
    #[arg(long)]
    a_grid: Option<String>,
    #[arg(long)]
    varpi: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    abs_tol: Option<f64>,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Evaluate grid points on a single thread.
    #[arg(long)]
    serial: bool,
}

impl ScanArgs {
    fn options(self) -> Result<ScanOptions, ScanError> {
        let bloch = match self.bloch.as_deref() {
            None => None,
            Some(&[x, y, z]) => Some([x, y, z]),
            Some(_) => return Err(ScanError::Config("--bloch takes vx,vy,vz".into())),
        };
        let flags = ScanOptions {
            model: self.model,
            gamma0: self.gamma0,
            lambda: self.lambda,
            omega0: self.omega0,
            eta: self.eta,
            s: self.s,
            omega_c: self.omega_c,
            kappa: self.kappa,
            coh: self.coh,
            bloch,
            tau_grid: self.tau_grid,
            tau_d: self.tau_d,
            mode: self.mode,
            a_grid: self.a_grid,
            varpi: self.varpi,
            c: self.c,
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_depth: None,
            out: self.out,
            format: self.format,
            serial: self.serial.then_some(true),
        };
        let file = match &self.config {
            Some(path) => ScanOptions::from_json_file(path)?,
            None => ScanOptions::default(),
        };
        Ok(file.overridden_by(flags))
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), ScanError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| ScanError::Config(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| ScanError::Config(format!("cannot write to stdout: {e}"))),
    }
}

fn run(command: Command) -> Result<i32, ScanError> {
    match command {
        Command::Scan(args) => {
            let opts = args.options()?;
            let cfg = opts.to_scan_config()?;
            emit(&render(&run_scan(&cfg)?, cfg.format), opts.out.as_ref())?;
        }
        Command::Unruh(args) => {
            let opts = args.options()?;
            let cfg = opts.to_scan_config()?;
            let sweep = opts.to_unruh_sweep()?;
            emit(
                &render(&run_unruh_sweep(&cfg, &sweep)?, cfg.format),
                opts.out.as_ref(),
            )?;
        }
        Command::Preset {
            name,
            out,
            format,
            serial,
        } => {
            let mut cfg = name.config();
            cfg.parallel = !serial;
            emit(
                &render(&run_scan(&cfg)?, format.unwrap_or(cfg.format)),
                out.as_ref(),
            )?;
        }
        Command::Verify {
            kappa,
            abs_tol,
            rel_tol,
        } => {
            let d = QuadratureSpec::default();
            let quadrature = QuadratureSpec::new(
                abs_tol.unwrap_or(d.abs_tol),
                rel_tol.unwrap_or(d.rel_tol),
                d.max_depth,
            )?;
            if !(kappa > 0.0 && kappa.is_finite()) {
                return Err(ScanError::Config(format!(
                    "kappa must be positive, got {kappa}"
                )));
            }
            let report = run_verify(&VerifyOptions {
                kappa,
                quadrature,
                ..Default::default()
            });
            println!("{report}");
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("qslt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
