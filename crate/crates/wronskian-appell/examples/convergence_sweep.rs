//! Full convergence run: growing cores with a fixed quotient, exact rescaled
//! coefficients against the limit, and root drift toward the attractors.
//! Writes the CSV/JSON reports next to the target directory.
//!
//! Run with: cargo run --release --example convergence_sweep

use std::fs;

use wronskian_appell::coeff_asymptotics::{run_convergence, GrowthSpec, RunOptions};
use wronskian_appell::core_quotient::PQuotient;

fn main() {
    let mu: PQuotient = "2;2,1;1,1".parse().unwrap();
    let growth = GrowthSpec::linear(vec![-2, -1, 3]).unwrap();
    let k_list = [5, 10, 20, 40];

    let report = run_convergence(&mu, &growth, &k_list, &RunOptions::default()).unwrap();
    println!(
        "quotient ({}), attractors {:?}, multiplicities {:?}",
        report.quotient, report.attractors, report.component_sizes
    );
    for row in &report.rows {
        println!("k = {:>3}: sup coefficient error {:.3}", row.k, row.sup_error);
        for root in &row.roots {
            println!(
                "    root {:+10.4} {:+8.4}i  ->  {:>3}  (distance {:.3})",
                root.re, root.im, root.nearest_attractor, root.distance
            );
        }
    }

    let dir = std::env::temp_dir().join("wronskian-appell-sweep");
    fs::create_dir_all(&dir).unwrap();
    fs::write(dir.join("coeffs.csv"), report.coefficients_csv()).unwrap();
    fs::write(dir.join("roots.csv"), report.roots_csv()).unwrap();
    fs::write(dir.join("report.json"), report.to_json()).unwrap();
    println!("reports written under {}", dir.display());
}
