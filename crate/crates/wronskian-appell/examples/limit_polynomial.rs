//! Attractors and the limit polynomial of the rescaled quotient factor for a
//! fixed quotient and linear growth rates.
//!
//! Run with: cargo run --example limit_polynomial

use wronskian_appell::coeff_asymptotics::{limit_coefficients_exact, limit_polynomial};
use wronskian_appell::core_quotient::PQuotient;
use wronskian_appell::hook_products::attractors;
use wronskian_appell::roots::numeric_roots;

fn main() {
    let mu: PQuotient = "2;2,1;1,1".parse().unwrap();
    let a = [-2i64, -1, 3];

    let att = attractors(&a.map(|x| x as f64));
    println!("quotient ({}) with growth rates {:?}", mu, a);
    println!("attractors: {:?}", att.alphas);
    println!("multiplicities: {:?}", mu.component_sizes());

    let limit = limit_coefficients_exact(&mu, &a).unwrap();
    for (j, l) in limit.iter().enumerate() {
        println!("L_{} = {}", j, l);
    }

    let poly = limit_polynomial(&mu, &a.map(|x| x as f64)).unwrap();
    let roots = numeric_roots(&poly, 1e-12).unwrap();
    println!("roots of the limit polynomial (clusters at the attractors):");
    for z in roots {
        println!("  {:+.6} {:+.6}i", z.re, z.im);
    }
}
