// Cohomology of homogeneous bundles with Borel-Weil-Bott.
//
// cargo run --example borel_weil_bott

use std::sync::Arc;

use roofcalc::bwb::{bundle_cohomology, bwb, straighten};
use roofcalc::{CartanType, ParabolicSubgroup, Result, RootSystem, Weight};

pub fn run_example() -> Result<()> {
    // line bundles on P^2
    let a2 = Arc::new(RootSystem::build(CartanType::A, 2)?);
    let p2 = ParabolicSubgroup::new(a2.clone(), &[1])?;
    for k in -5..=2 {
        let chi = Weight::new(vec![k, 0]);
        println!("H*(P^2, O({k:>2})): {:?}", bwb(&p2, &chi)?);
    }

    // the straightening trace shows which reflections were used
    println!(
        "trace for O(-5): {:?}",
        straighten(&a2, &Weight::new(vec![-5, 0]))
    );

    // a rank-2 bundle on F4/P2: the tangent-like summands of a Koszul column
    let f4 = Arc::new(RootSystem::build(CartanType::F4, 4)?);
    let p = ParabolicSubgroup::new(f4, &[2])?;
    let summands: Vec<Weight> = ["0,1,0,0", "0,-1,0,1", "0,-3,1,0", "0,-4,0,0"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let h = bundle_cohomology(&p, &summands)?;
    println!("F4/P2 direct sum: {:?}", h.dimensions());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
