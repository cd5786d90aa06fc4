//! A seeded sweep over every forward claim, reported as JSON.
//!
//! ```bash
//! cargo run --example verify_sweep -- 4 5
//! ```

use orthomeans::theorems::{verify_all, SweepConfig};

fn main() -> orthomeans::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().ok());
    let s = args.next().flatten().unwrap_or(3);
    let n = args.next().flatten().unwrap_or(4);
    let cfg = SweepConfig::new(s, n, 200, 42);

    let reports = verify_all(&cfg, None)?;
    for r in &reports {
        println!("{:<14} trials {:>5}  max residual {:.2e}  tolerance {:.0e}  {:?}", r.claim_id.as_str(), r.trials, r.max_residual, r.tolerance, r.verdict);
    }
    let all = reports.iter().all(|r| r.passed);
    println!("\nall passed: {all}");
    println!("{}", serde_json::to_string_pretty(&reports[0]).expect("serializable"));
    Ok(())
}
