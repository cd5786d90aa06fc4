//! Searching for a witness that a polynomial with mixed terms breaks each
//! mean identity, which is the converse direction of the characterization.
//!
//! ```bash
//! cargo run --example falsify_converse
//! ```

use orthomeans::partitions::CompletePartition;
use orthomeans::theorems::{falsify, Claim, DEFAULT_FALSIFY_BUDGET};
use orthomeans::{HomogeneousPolynomial, Tolerances};

fn main() -> orthomeans::Result<()> {
    let tol = Tolerances::default();
    // f1² + f2² + 0.1 f1 f2: one small mixed term
    let p = HomogeneousPolynomial::from_monomials(
        2,
        2,
        1,
        [(vec![0, 0], vec![1.0]), (vec![1, 1], vec![1.0]), (vec![0, 1], vec![0.1])],
    )?;
    let claims = [Claim::Rmp, Claim::Gm, Claim::Hm, Claim::Wgm(CompletePartition::new(vec![1, 1])?)];
    for claim in &claims {
        let report = falsify(&p, claim, DEFAULT_FALSIFY_BUDGET, 0, &tol)?;
        let witness = report.counterexample.as_ref().expect("mixed term is detectable");
        println!(
            "{:<4} witness after {} inputs: {:?}, residual {:.3}, via {}",
            claim.id().as_str(),
            report.trials,
            witness.inputs,
            witness.residual,
            witness.note.as_deref().unwrap_or("-"),
        );
    }

    // a three-index term that unit pairs cannot see
    let q = HomogeneousPolynomial::from_tensor_entries(3, 3, 1, [(vec![0, 1, 2], vec![1.0])])?;
    let report = falsify(&q, &Claim::Gm, DEFAULT_FALSIFY_BUDGET, 0, &tol)?;
    let note = report.counterexample.and_then(|c| c.note);
    println!("\nf1 f2 f3 under GM: witness found {} via {}", report.passed, note.as_deref().unwrap_or("-"));

    // an orthogonally additive polynomial is rejected up front
    let diag = HomogeneousPolynomial::diagonal(vec![vec![1.0], vec![2.0]], 2)?;
    match falsify(&diag, &Claim::Hm, 100, 0, &tol) {
        Ok(r) => println!("unexpected: {:?}", r.verdict),
        Err(e) => println!("diagonal polynomial: {e}"),
    }
    Ok(())
}
