// The F4 roof: equal base classes, different Calabi-Yau zero loci.
//
// cargo run --release --example f4_roof

use roofcalc::roofs::{verify_roof, RoofLabel};
use roofcalc::{Result, DEFAULT_CAP};

pub fn run_example() -> Result<()> {
    let report = verify_roof(RoofLabel::F4, None, DEFAULT_CAP)?;
    println!("{report}");
    assert!(report.nontrivial);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
