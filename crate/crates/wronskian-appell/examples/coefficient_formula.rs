//! The combinatorial coefficient formula for R: alternating sums of path
//! counts and hook ratios over nested subquotients, cross-checked against
//! the Wronskian determinant route.
//!
//! Run with: cargo run --example coefficient_formula

use wronskian_appell::coeff_asymptotics::r_coefficients;
use wronskian_appell::core_quotient::decompose;
use wronskian_appell::partitions::Partition;
use wronskian_appell::wronskian_poly::factorize_q;

fn main() {
    let lambda: Partition = "8,8,6,6,2,2,1".parse().unwrap();
    let p = 3;
    let (mu, c) = decompose(&lambda, p).unwrap();
    println!(
        "lambda = ({}), p = {}, quotient ({}), charvec ({})",
        lambda, p, mu, c
    );

    let by_formula = r_coefficients(&mu, &c).unwrap();
    let f = factorize_q(&lambda, p).unwrap();
    println!("{:>3}  {:>20}  {:>20}", "j", "formula", "wronskian");
    for (j, coeff) in by_formula.iter().enumerate() {
        let other = f.r.coeff(mu.size() - j);
        println!("{:>3}  {:>20}  {:>20}", j, coeff, other);
        assert_eq!(*coeff, other);
    }
    println!("both routes agree exactly");
}
