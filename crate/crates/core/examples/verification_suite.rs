// Runs a reduced verification suite and prints one line per identity.

use harmsum::verify::{run_verification, VerificationConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = VerificationConfig::from_json(
        r#"{"max_n": 8, "max_M": 6, "max_p": 2, "z_samples": ["-1/2", "1"], "exclude": ["quadrature"]}"#,
    )?;
    let run = run_verification(&config)?;
    for r in &run.reports {
        println!(
            "{:<36} {:>4} points  {} mismatches",
            r.identity,
            r.points.len(),
            r.mismatches()
        );
    }
    if run.failed {
        return Err("verification failed".into());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
