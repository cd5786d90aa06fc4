//! The identities that hold for orthogonally additive polynomials, checked
//! on one random input in float mode and replayed exactly over rationals.
//!
//! ```bash
//! cargo run --example mean_identities
//! ```

use num::BigRational;
use orthomeans::partitions::CompletePartition;
use orthomeans::theorems::{
    check_cross_terms, check_gm, check_hm_identity, check_rmp, check_schur_bounds, check_wgm_identity,
};
use orthomeans::{sampling, HomogeneousPolynomial, PositiveVector, Tolerances};

fn show(name: &str, report: &orthomeans::VerificationReport) {
    println!("  {name:<20} residual {:.2e}  passed {}", report.max_residual, report.passed);
}

fn main() -> orthomeans::Result<()> {
    let tol = Tolerances::default();
    let mut rng = sampling::rng(2024);
    let p = HomogeneousPolynomial::diagonal(vec![vec![1.0], vec![-0.5], vec![2.0], vec![0.25]], 3)?;
    let fs = sampling::positive_tuple(&mut rng, 3, 4);
    let cp = CompletePartition::new(vec![1, 2])?;

    println!("float mode, P(f) = f1³ - 0.5 f2³ + 2 f3³ + 0.25 f4³:");
    show("root mean power", &check_rmp(&p, &fs[..2], &tol)?);
    show("geometric", &check_gm(&p, &fs, &tol)?);
    show("harmonic", &check_hm_identity(&p, &fs, &tol)?);
    show("weighted geometric", &check_wgm_identity(&p, &cp, &fs[..2], &tol)?);
    show("harmonic bounds", &check_schur_bounds(&fs, &tol)?);
    let (f, g) = sampling::disjoint_pair(&mut rng, 4);
    show("disjoint cross terms", &check_cross_terms(&p, &f, &g, &tol)?);

    println!("\nexact mode, same polynomial over rationals:");
    let q = HomogeneousPolynomial::<BigRational>::from_tensor_entries(
        3,
        4,
        1,
        [(0, 1, 1), (1, -1, 2), (2, 2, 1), (3, 1, 4)].map(|(i, a, b)| (vec![i; 3], vec![BigRational::new(a.into(), b.into())])),
    )?;
    let rs: Vec<PositiveVector<BigRational>> = [[(1, 2), (3, 1), (2, 3), (5, 4)], [(2, 1), (1, 5), (7, 3), (1, 1)], [(4, 1), (1, 1), (1, 9), (3, 2)]]
        .iter()
        .map(|row| PositiveVector::from_entries(row.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect()))
        .collect::<Result<_, _>>()?;
    show("harmonic", &check_hm_identity(&q, &rs, &tol)?);
    show("harmonic bounds", &check_schur_bounds(&rs, &tol)?);
    // squares make the root mean power and geometric mean rational
    let squares: Vec<PositiveVector<BigRational>> = rs[..2]
        .iter()
        .map(|v| PositiveVector::from_entries(v.entries().iter().map(|x| x * x).collect()))
        .collect::<Result<_, _>>()?;
    show("geometric (s = 2)", &check_gm(&HomogeneousPolynomial::<BigRational>::diagonal(vec![vec![BigRational::from_integer(3.into())]; 4], 2)?, &squares, &tol)?);
    Ok(())
}
