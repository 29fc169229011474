// Build every supported root system and print its basic invariants.
//
// cargo run --example root_systems

use roofcalc::{CartanType, Result, RootSystem};

pub fn run_example() -> Result<()> {
    let cases = [
        (CartanType::A, 3),
        (CartanType::C, 3),
        (CartanType::D, 4),
        (CartanType::F4, 4),
        (CartanType::G2, 2),
    ];
    for (ty, rank) in cases {
        let sys = RootSystem::build(ty, rank)?;
        println!(
            "{:<3} |Phi+| = {:<3} |W| = {:<5} rho = {}",
            sys.label(),
            sys.positive_roots().len(),
            sys.weyl_group_order(),
            sys.rho()
        );
    }

    // the highest root of F4 is the adjoint weight w1
    let f4 = RootSystem::build(CartanType::F4, 4)?;
    let top = f4
        .positive_roots()
        .iter()
        .max_by_key(|r| r.height())
        .unwrap();
    println!("F4 highest root {:?} = {}", top.coeffs, top.weight);
    assert_eq!(top.coeffs, vec![2, 3, 4, 2]);

    // orthogonal coordinates for the classical types
    let c3 = RootSystem::build(CartanType::C, 3)?;
    let v = c3.to_orthogonal(c3.rho())?;
    println!(
        "C3 rho in the L_i basis: {}",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    assert_eq!(c3.from_orthogonal(&v)?, *c3.rho());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
