//! Homogeneous polynomials, their symmetric multilinear maps, and recovery
//! of the multilinear map from polynomial values alone.
//!
//! ```bash
//! cargo run --example polynomial_polarization
//! ```

use orthomeans::polynomial::{is_orthogonally_additive, polarize_blackbox};
use orthomeans::{HomogeneousPolynomial, Vector};

fn main() -> orthomeans::Result<()> {
    // P(f) = (f1 + f2)², stored as symmetric tensor entries
    let p = HomogeneousPolynomial::from_tensor_entries(
        2,
        2,
        1,
        [(vec![0, 0], vec![1.0]), (vec![0, 1], vec![1.0]), (vec![1, 1], vec![1.0])],
    )?;
    let f = Vector::from_slice(&[1.0, 0.0])?;
    let g = Vector::from_slice(&[0.0, 2.0])?;

    println!("P(f)        = {:?}", p.eval(&f)?);
    println!("P(g)        = {:?}", p.eval(&g)?);
    println!("P(f + g)    = {:?}", p.eval(&f.add(&g)?)?);
    println!("P̌(f, g)     = {:?}", p.multilinear().eval(&[&f, &g])?);

    let recovered = polarize_blackbox(|x| p.eval(x), 2, &[f.clone(), g.clone()])?;
    println!("polarized   = {:?}", recovered);

    let report = is_orthogonally_additive(&p, 200, 7);
    println!("orthogonally additive: {} (witness {:?})", report.passed, report.counterexample.map(|c| c.inputs));

    // f1³ - 2 f2³ + 5 f3³ has no mixed terms
    let q = HomogeneousPolynomial::diagonal(vec![vec![1.0], vec![-2.0], vec![5.0]], 3)?;
    println!("\nQ structurally OA: {}", q.is_structurally_oa());
    println!("Q sampled OA:      {}", is_orthogonally_additive(&q, 200, 7).passed);
    println!("Q as JSON: {}", q.to_json_value());
    Ok(())
}
