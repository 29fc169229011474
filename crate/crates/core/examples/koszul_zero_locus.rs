// First page of the Koszul spectral sequence for a zero locus on G/P.
//
// cargo run --example koszul_zero_locus

use roofcalc::roofs::{koszul_zero_locus_cohomology, roof_data, RoofLabel};
use roofcalc::{Result, DEFAULT_CAP};

pub fn run_example() -> Result<()> {
    let fam = roof_data(RoofLabel::F4, None)?;
    for side in 1..=2 {
        let p = fam.base(side);
        let z =
            koszul_zero_locus_cohomology(&p, &fam.bundle_weight, &fam.twist(side), DEFAULT_CAP)?;
        println!("Z{side} in F4/P{:?}: {:?}", p.crossed(), z.status);
        for col in &z.columns {
            let terms: Vec<String> = col
                .summands
                .iter()
                .map(|(w, m)| {
                    if *m == 1 {
                        w.to_string()
                    } else {
                        format!("{m}x({w})")
                    }
                })
                .collect();
            println!(
                "  p = {}: [{}] -> {:?}",
                col.p,
                terms.join(", "),
                col.cohomology.dimensions()
            );
        }
        println!("  h^0(Z{side}, O(1)) = {:?}", z.h0());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
