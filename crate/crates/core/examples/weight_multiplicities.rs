// Weyl dimensions and Freudenthal weight multiplicities.
//
// cargo run --example weight_multiplicities

use std::sync::Arc;

use roofcalc::reps::{weight_multiset, weyl_dimension, LeviIrrep};
use roofcalc::{CartanType, ParabolicSubgroup, Result, RootSystem, Weight};

pub fn run_example() -> Result<()> {
    let f4 = Arc::new(RootSystem::build(CartanType::F4, 4)?);
    let g = ParabolicSubgroup::full(f4.clone());
    for node in 1..=4 {
        let w = Weight::fundamental(4, node);
        println!("dim V_F4(w{node}) = {}", weyl_dimension(&g, &w)?);
    }

    // the 26-dimensional representation: 24 short roots plus a doubled zero weight
    let v = LeviIrrep::new(g, Weight::fundamental(4, 4))?;
    for (w, m) in v.dominant_character(1000)? {
        println!("  dominant weight {w:<10} multiplicity {m}");
    }
    let all = v.weights(1000)?;
    assert_eq!(all.total(), 26);
    assert_eq!(all.multiplicity(&Weight::zero(4)), 2);

    // the same machinery over a Levi factor: V_P(w2+w3) for P crossed at node 2
    let p1 = ParabolicSubgroup::new(f4, &[2])?;
    let ws = weight_multiset(&p1, &"0,1,1,0".parse()?, 1000)?;
    println!(
        "weights of V_P1(w2+w3): {:?}",
        ws.weights().map(|w| w.to_string()).collect::<Vec<_>>()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
