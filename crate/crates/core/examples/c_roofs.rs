// Roofs of type C_{3r-1} for small r, with the closed form for h^0.
//
// cargo run --release --example c_roofs

use num_bigint::BigUint;
use roofcalc::roofs::{verify_roof, RoofLabel};
use roofcalc::{Result, DEFAULT_CAP};

fn binom(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

// sections of O(1) on IGr(k, 6r-2): binom(6r-2, k) - binom(6r-2, k-2)
fn closed_form(r: u64, k: u64) -> BigUint {
    binom(6 * r - 2, k) - binom(6 * r - 2, k - 2)
}

pub fn run_example() -> Result<()> {
    for r in 2..=3usize {
        let rep = verify_roof(RoofLabel::C, Some(r), DEFAULT_CAP)?;
        let r64 = r as u64;
        let expected = (closed_form(r64, 2 * r64 - 1), closed_form(r64, 2 * r64));
        println!(
            "C{}: classes equal {}, h0 = ({}, {}), closed form = ({}, {}), {}",
            3 * r - 1,
            rep.classes_equal,
            rep.h0_z1.as_ref().unwrap(),
            rep.h0_z2.as_ref().unwrap(),
            expected.0,
            expected.1,
            rep.certificate.as_deref().unwrap_or("no certificate"),
        );
        assert_eq!(rep.h0_z1.as_ref(), Some(&expected.0));
        assert_eq!(rep.h0_z2.as_ref(), Some(&expected.1));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
