//! Growth of the non-p-fold hook ratio against its predicted leading
//! coefficient: the exact ratio divided by k^((p-1)|mu|) approaches
//! p^((p-1)|mu|) times the attractor powers, with the strip-height parity
//! fixing the sign.
//!
//! Run with: cargo run --release --example hook_ratio_growth

use num_traits::ToPrimitive;
use wronskian_appell::core_quotient::PQuotient;
use wronskian_appell::hook_products::{hook_ratio_growth_coefficient_exact, hook_ratio_growth_samples};

fn main() {
    let mu: PQuotient = "2;2,1;1,1".parse().unwrap();
    let a = [-2i64, -1, 3];
    let samples = hook_ratio_growth_samples(&mu, &a, &[5, 10, 20, 40]).unwrap();

    println!("quotient ({}), growth rates {:?}", mu, a);
    for sample in &samples {
        let coefficient = hook_ratio_growth_coefficient_exact(&mu, &a, sample.ht_parity)
            .unwrap()
            .to_f64()
            .unwrap();
        println!(
            "k = {:>3}: ratio / k^{} = {:.6e}   predicted {:.6e}   rel. deviation {:.4}",
            sample.k,
            (mu.p() - 1) * mu.size(),
            sample.scaled_ratio,
            coefficient,
            (sample.scaled_ratio - coefficient).abs() / coefficient.abs()
        );
    }
}
