//! Harmonic and weighted geometric means computed three ways: closed form,
//! Lagrange route to the infimum of tangents, and the grid search whose
//! error shrinks as the resolution doubles.
//!
//! ```bash
//! cargo run --example means_two_routes
//! ```

use orthomeans::means::{harmonic_mean, harmonic_mean_via_infimum, weighted_geometric_mean, wgm_via_infimum};
use orthomeans::partitions::CompletePartition;
use orthomeans::{InfimumSpec, Method, PositiveVector};

fn max_gap(a: &PositiveVector, b: &PositiveVector) -> f64 {
    a.entries().iter().zip(b.entries()).map(|(x, y)| ((x - y) / x).abs()).fold(0.0, f64::max)
}

fn main() -> orthomeans::Result<()> {
    let fs = vec![
        PositiveVector::from_slice(&[1.0, 4.0, 0.25])?,
        PositiveVector::from_slice(&[2.0, 0.5, 8.0])?,
        PositiveVector::from_slice(&[3.0, 1.0, 0.0])?,
    ];

    let closed = harmonic_mean(&fs)?;
    println!("harmonic, closed form: {:?}", closed);
    let spec = InfimumSpec::harmonic(fs.len(), 128)?;
    let lagrange = harmonic_mean_via_infimum(&fs, &spec, Method::Lagrange)?;
    println!("harmonic, Lagrange:    {:?}  (rel gap {:.1e})", lagrange.value, max_gap(&closed, &lagrange.value));
    for m in [8, 16, 32, 64, 128] {
        let spec = InfimumSpec::harmonic(fs.len(), m)?;
        let grid = harmonic_mean_via_infimum(&fs, &spec, Method::Grid)?;
        println!("harmonic, grid m = {m:>3}: rel gap {:.2e}", max_gap(&closed, &grid.value));
    }

    let cp = CompletePartition::new(vec![1, 1, 2])?;
    let w = cp.weights();
    let closed = weighted_geometric_mean(&w, &fs)?;
    println!("\nweighted geometric {:?}, closed form: {:?}", cp.parts(), closed);
    let spec = InfimumSpec::weighted_geometric(w.clone(), 128)?;
    let lagrange = wgm_via_infimum(&w, &fs, &spec, Method::Lagrange)?;
    println!("weighted geometric, Lagrange:    {:?}", lagrange.value);
    for m in [8, 32, 128] {
        let spec = InfimumSpec::weighted_geometric(w.clone(), m)?;
        let grid = wgm_via_infimum(&w, &fs, &spec, Method::Grid)?;
        println!("weighted geometric, grid m = {m:>3}: rel gap {:.2e}", max_gap(&closed, &grid.value));
    }
    Ok(())
}
