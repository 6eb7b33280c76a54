//! Running a verification suite from code and reading the report.
//!
//! cargo run --example verify_report -- [suite]

use selfsim::verify::{render_json, render_text, run_suite, Suite, VerifyConfig};

fn main() -> selfsim::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("maxwell").parse()?;
    let cfg = VerifyConfig { seed: 1, trials: 20, degree: 3, timing: false };
    let report = run_suite(suite, &cfg)?;
    print!("{}", render_text(&report));
    let json = render_json(&report)?;
    println!("\nJSON report: {} bytes, all passed: {}", json.len(), report.passed());
    Ok(())
}
