// Driving the command line in-process and reading its JSON.
//
// cargo run --example cli_session

use roofcalc::cli::run_with_env_cap;

pub fn run_example() -> Result<(), String> {
    let out = run_with_env_cap(["roofcalc", "count", "igr", "2", "3", "2"], None);
    println!("#IGr(2, 6)(F_2) = {}", out.stdout.trim());

    let out = run_with_env_cap(
        ["roofcalc", "--format", "json", "roof", "verify", "G2"],
        None,
    );
    let report: serde_json::Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    println!(
        "G2 roof: h0 = ({}, {}), exit code {}",
        report["h0_z1"], report["h0_z2"], out.code
    );

    let out = run_with_env_cap(["roofcalc", "roof", "verify", "A_M", "--r", "3"], None);
    println!(
        "A_M roof exit code {} (no non-trivial certificate)",
        out.code
    );

    let out = run_with_env_cap(
        ["roofcalc", "weyl", "cosets", "F4", "4", "--cross", "2"],
        Some("50"),
    );
    println!(
        "capped enumeration exit code {}: {}",
        out.code,
        out.stderr.trim()
    );
    if out.code != 3 {
        return Err("expected the resource cap to trip".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), String> {
    run_example()
}
