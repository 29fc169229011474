// Minimal coset representatives of W / W_P and the Bruhat cell count of G/P.
//
// cargo run --example weyl_cosets

use std::sync::Arc;

use roofcalc::weyl::length_histogram;
use roofcalc::{CartanType, ParabolicSubgroup, Result, RootSystem};

pub fn run_example() -> Result<()> {
    let f4 = Arc::new(RootSystem::build(CartanType::F4, 4)?);
    for node in [2, 3] {
        let p = ParabolicSubgroup::new(f4.clone(), &[node])?;
        let lengths = p.coset_lengths(roofcalc::DEFAULT_CAP)?;
        println!(
            "F4/P{node}: {} cells, dim {}, cells per dimension {:?}",
            lengths.len(),
            p.quotient_dimension(),
            length_histogram(&lengths)
        );
        assert_eq!(lengths.len(), 96);
    }

    // a few explicit representatives of the Lagrangian Grassmannian LG(2, 4)
    let c2 = Arc::new(RootSystem::build(CartanType::C, 2)?);
    let p = ParabolicSubgroup::new(c2, &[2])?;
    for (w, len) in p.minimal_coset_reps(100)? {
        println!("  length {len}: {w}");
    }

    // orbit of a weight under the Levi Weyl group
    let p1 = ParabolicSubgroup::new(f4, &[2])?;
    let orbit = p1.orbit(&"0,-2,1,0".parse()?, 1000)?;
    println!(
        "W_P orbit of -2w2+w3: {}",
        orbit
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
