//! Coordinatewise lattice operations in float and exact rational mode.
//!
//! ```bash
//! cargo run --example lattice_ops
//! ```

use orthomeans::{PositiveVector, RationalVector, Vector};

fn main() -> orthomeans::Result<()> {
    let f = Vector::from_slice(&[1.5, -2.0, 0.0, 4.0])?;
    let g = Vector::from_slice(&[0.5, 3.0, -1.0, 4.0])?;

    println!("f         = {:?}", f);
    println!("g         = {:?}", g);
    println!("f ∨ g     = {:?}", f.sup(&g)?);
    println!("f ∧ g     = {:?}", f.inf(&g)?);
    println!("|f|       = {:?}", f.abs());
    println!("f⁺, f⁻    = {:?}, {:?}", f.positive_part(), f.negative_part());
    println!("f = f⁺ - f⁻: {}", f.positive_part().sub(&f.negative_part())? == f);

    let a = PositiveVector::from_slice(&[2.0, 0.0, 0.0])?;
    let b = PositiveVector::from_slice(&[0.0, 1.0, 3.0])?;
    println!("supp a = {:?}, supp b = {:?}, disjoint: {}", a.support(), b.support(), a.is_disjoint(&b)?);

    // exact mode: entries are rationals, serialized as "p/q"
    let r = RationalVector::from_ratios(&[(1, 3), (-2, 7), (5, 1)])?;
    let s = RationalVector::from_ratios(&[(1, 2), (1, 7), (-5, 1)])?;
    println!("r ∨ s     = {}", serde_json::to_string(&r.sup(&s)?).expect("serializable"));
    println!("r + s     = {}", serde_json::to_string(&r.add(&s)?).expect("serializable"));
    println!("r as f64  = {:?}", r.to_f64());
    Ok(())
}
