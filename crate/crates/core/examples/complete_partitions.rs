//! Complete partitions of `s` and the weight vectors they induce.
//!
//! ```bash
//! cargo run --example complete_partitions -- 6
//! ```

use orthomeans::partitions::{enumerate_complete, is_complete};

fn main() -> orthomeans::Result<()> {
    let s: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);

    println!("is (1, 2, 4) complete for 7? {}", is_complete(&[1, 2, 4], 7)?);
    println!("is (1, 3, 3) complete for 7? {}", is_complete(&[1, 3, 3], 7)?);

    let all = enumerate_complete(s)?;
    println!("\n{} complete partitions of {s}:", all.len());
    for cp in &all {
        let weights: Vec<String> = cp.weights().weights().iter().map(|w| w.to_string()).collect();
        println!("  {:?}  weights [{}]", cp.parts(), weights.join(", "));
    }

    println!("\ncounts for s = 1..=20:");
    let counts: Vec<usize> = (1..=20).map(|s| enumerate_complete(s).map(|v| v.len())).collect::<Result<_, _>>()?;
    println!("  {:?}", counts);
    Ok(())
}
