// Classes of homogeneous spaces in Z[L], checked against point counts.
//
// cargo run --example grothendieck_classes

use std::sync::Arc;

use num_bigint::BigInt;
use roofcalc::motive::{class_of_quotient, igr_class, igr_point_count, roof_identity_residual};
use roofcalc::{CartanType, ParabolicSubgroup, Result, RootSystem, DEFAULT_CAP};

pub fn run_example() -> Result<()> {
    // IGr(d, 2n) = C_n / P_d, counted two ways
    for (d, n) in [(1, 2), (2, 3), (3, 5)] {
        let cn = Arc::new(RootSystem::build(CartanType::C, n)?);
        let cells = class_of_quotient(&ParabolicSubgroup::new(cn, &[d])?, DEFAULT_CAP)?;
        let counted = igr_class(d, n)?;
        println!("[IGr({d}, {})] = {cells}", 2 * n);
        assert_eq!(cells, counted);
        for q in [2u64, 3, 5] {
            let pts = igr_point_count(d, n, q)?;
            assert_eq!(BigInt::from(pts.clone()), cells.eval(&BigInt::from(q)));
            println!("  #IGr({d}, {})(F_{q}) = {pts}", 2 * n);
        }
    }

    // the two bases of the C5 roof have the same class
    let c5 = Arc::new(RootSystem::build(CartanType::C, 5)?);
    let f1 = class_of_quotient(&ParabolicSubgroup::new(c5.clone(), &[3])?, DEFAULT_CAP)?;
    let f2 = class_of_quotient(&ParabolicSubgroup::new(c5, &[4])?, DEFAULT_CAP)?;
    println!(
        "[P^2]([F2] - [F1]) = {}",
        roof_identity_residual(&f1, &f2, 4)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
