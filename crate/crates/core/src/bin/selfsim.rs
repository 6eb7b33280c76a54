use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use selfsim::electrodynamics::{
    build_field_strength, check_equivalence, maxwell_homogeneous_residuals, maxwell_inhomogeneous_residuals,
    parse_field_spec, Calibration,
};
use selfsim::kinematics::{evaluate, KinematicsConfig, Mode, Worldline};
use selfsim::polytopes::table;
use selfsim::verify::{emit_report, run_filtered, run_suite, Format, Suite, VerifyConfig};
use selfsim::Error;

#[derive(Parser)]
#[command(name = "selfsim", version, about = "Exact checks of 3D/4D exterior calculus and electrodynamics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock duration (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Proper time, velocity and force along a `t,x1,x2,x3` CSV worldline.
    Worldline {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::D4)]
        mode: ModeArg,
        /// Print every n-th sample.
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// 3+1 and 4D Maxwell residuals of a field-specification file.
    Maxwell {
        #[arg(long)]
        field: PathBuf,
    },
    /// Regular polytope counts per dimension.
    Polytopes {
        #[arg(long, default_value_t = 10)]
        max_dim: u64,
    },
    /// Exact Stokes checks on random forms and boxes.
    Stokes {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    D3,
    D4,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Verify { suite, seed, trials, degree, format, out, timing } => {
            let report = run_suite(suite, &VerifyConfig { seed, trials, degree, timing })?;
            emit_report(&report, format, out.as_deref())?;
            Ok(report.passed())
        }
        Command::Stokes { seed, trials, degree, format } => {
            let cfg = VerifyConfig { seed, trials, degree, timing: false };
            let report = run_filtered("stokes", &cfg, |name| name.contains("stokes"))?;
            emit_report(&report, format, None)?;
            Ok(report.passed())
        }
        Command::Worldline { input, c, mass, mode, stride } => {
            let mode = match mode {
                ModeArg::D3 => Mode::D3,
                ModeArg::D4 => Mode::D4,
            };
            let cfg = KinematicsConfig::new(c, mass, 1.0)?;
            let w = Worldline::from_csv_path(&input, mode)?;
            print_worldline(&w, &cfg, stride.max(1))?;
            Ok(true)
        }
        Command::Maxwell { field } => {
            let text = std::fs::read_to_string(&field)
                .map_err(|e| Error::Io(format!("{}: {e}", field.display())))?;
            print_maxwell(&parse_field_spec(&text)?)
        }
        Command::Polytopes { max_dim } => {
            println!("{:>3}  {:>9}  {:>14}", "D", "platonic", "incl. star");
            for row in table(max_dim) {
                println!("{:>3}  {:>9}  {:>14}", row.dim, row.platonic.to_string(), row.star_inclusive.to_string());
            }
            Ok(true)
        }
    }
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.9}", z.re)
    } else if z.re == 0.0 {
        format!("{:.9}i", z.im)
    } else {
        format!("{:.9}{:+.9}i", z.re, z.im)
    }
}

fn print_worldline(w: &Worldline, cfg: &KinematicsConfig, stride: usize) -> Result<(), Error> {
    let k = evaluate(w, cfg)?;
    let dim = w.mode().dim();
    let ic = Complex64::new(0.0, cfg.c);
    let mut header = vec!["t".to_string(), "T".to_string()];
    header.extend((1..=dim).map(|a| format!("V{a}")));
    header.extend((1..=dim).map(|a| format!("F{a}")));
    if dim == 4 {
        header.push("|L(V)-ic|".into());
    }
    println!("{}", header.join("\t"));
    let mut worst: f64 = 0.0;
    for i in 0..k.t.len() {
        let dev = (k.velocity[i].length() - ic).norm();
        if dim == 4 {
            worst = worst.max(dev);
        }
        if i % stride != 0 && i + 1 != k.t.len() {
            continue;
        }
        let mut row = vec![format!("{:.9}", k.t[i]), format!("{:.12}", k.proper_time[i])];
        row.extend(k.velocity[i].components().iter().map(|&z| fmt_c(z)));
        row.extend(k.force[i].components().iter().map(|&z| fmt_c(z)));
        if dim == 4 {
            row.push(format!("{dev:.3e}"));
        }
        println!("{}", row.join("\t"));
    }
    eprintln!(
        "{} samples, proper time {:.12} over coordinate time {:.12}",
        k.t.len(),
        k.proper_time.last().copied().unwrap_or(0.0),
        k.t.last().unwrap_or(&0.0) - k.t[0]
    );
    if dim == 4 {
        eprintln!("max |L(V) - ic| = {worst:.3e}");
    }
    Ok(())
}

fn print_maxwell(field: &selfsim::electrodynamics::EMField3) -> Result<bool, Error> {
    let cal = Calibration::compute()?;
    let h = maxwell_homogeneous_residuals(field);
    let inh = maxwell_inhomogeneous_residuals(field);
    let f = build_field_strength(field);
    println!("dictionary: F_jk = eps_jkm B_m, F_k4 = {}i E_k, x4 = i t", if cal.e_sign.value() < 0 { "-" } else { "" });
    println!();
    println!("field strength F (upper triangle):");
    for mu in 1..=4 {
        for nu in mu + 1..=4 {
            println!("  F{mu}{nu} = {}", f.get(mu, nu)?);
        }
    }
    println!();
    let names_h = ["div B", "(curl E + dB/dt)_1", "(curl E + dB/dt)_2", "(curl E + dB/dt)_3"];
    let names_i = ["(curl B - dE/dt - j)_1", "(curl B - dE/dt - j)_2", "(curl B - dE/dt - j)_3", "div E - rho"];
    for (title, names, three, four, ratios) in [
        ("homogeneous", names_h, h.three_plus_one(), &h.four_d, &cal.homogeneous_ratios),
        ("inhomogeneous", names_i, inh.three_plus_one(), &inh.four_d, &cal.inhomogeneous_ratios),
    ] {
        println!("{title} residuals (3+1 | 4D slot, ratio):");
        for a in 0..4 {
            println!(
                "  {:<24} = {}  |  slot {} = {}  (ratio {})",
                names[a],
                three[a],
                a + 1,
                four.component(a + 1)?,
                ratios[a]
            );
        }
        println!();
    }
    let eq = check_equivalence(field, &cal);
    let maxwell = h.three_plus_one_zero() && inh.three_plus_one_zero();
    println!("Maxwell equations satisfied: {}", if maxwell { "yes" } else { "no" });
    println!("4D and 3+1 residuals agree: {}", if eq.holds() { "yes" } else { "NO" });
    Ok(eq.holds())
}
