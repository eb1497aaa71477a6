//! The Appell sequence generated by exp(t*x - t^p/p): recurrence vs series
//! construction, and the derivative identity q_n' = n q_{n-1}.
//!
//! Run with: cargo run --example appell_table

use num_bigint::BigInt;
use wronskian_appell::wronskian_poly::{appell_sequence, appell_sequence_from_series};

fn main() {
    let p = 3;
    let table = appell_sequence(p, 9).unwrap();
    println!("p = {}", p);
    for n in 0..=9 {
        println!("q_{} = {}", n, table.q(n));
    }

    let by_series = appell_sequence_from_series(p, 9).unwrap();
    for n in 0..=9 {
        assert_eq!(table.q(n), by_series.q(n));
    }
    println!("series construction agrees with the recurrence up to n = 9");

    for n in 1..=9usize {
        assert_eq!(
            table.q(n).derivative(),
            table.q(n - 1).scale(&BigInt::from(n))
        );
    }
    println!("derivative identity q_n' = n q_(n-1) holds");
}
