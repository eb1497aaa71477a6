//! Wronskian polynomials labeled by partitions and their factorization
//! through the origin: q_lambda(x) = x^|core| * R(x^p).
//!
//! Run with: cargo run --example wronskian_factorization

use wronskian_appell::partitions::Partition;
use wronskian_appell::wronskian_poly::factorize_q;

fn main() {
    for (text, p) in [("1,1", 2), ("3", 2), ("2,1", 1), ("4,4,4,1,1", 3), ("8,8,6,6,2,2,1", 3)] {
        let lambda: Partition = text.parse().unwrap();
        let f = factorize_q(&lambda, p).unwrap();
        println!("lambda = ({}), p = {}", lambda, p);
        println!("  q_lambda = {}", f.q);
        println!("  origin multiplicity (core size) = {}", f.core_size);
        println!("  R = {}", f.r);
    }
}
