//! Hook products from Maya-diagram pairings: the p-fold / non-p-fold split
//! and the exact integer ratio against the core's hook product.
//!
//! Run with: cargo run --example hook_products

use wronskian_appell::core_quotient::{core_by_strip_removal, decompose};
use wronskian_appell::hook_products::{hook_product, hook_split, nonpfold_core_ratio};
use wronskian_appell::partitions::Partition;

fn main() {
    let lambda: Partition = "4,4,4,1,1".parse().unwrap();
    let p = 3;

    let mut hooks = lambda.hook_lengths();
    hooks.sort_unstable();
    println!("lambda = ({}), hook lengths {:?}", lambda, hooks);
    println!("H(lambda) = {}", hook_product(&lambda));

    let split = hook_split(&lambda, p).unwrap();
    println!(
        "split by divisibility by {}: non-{}-fold {} x {}-fold {}",
        p, p, split.non_p_fold, p, split.p_fold
    );
    assert_eq!(&split.non_p_fold * &split.p_fold, hook_product(&lambda));

    let removal = core_by_strip_removal(&lambda, p).unwrap();
    println!(
        "{}-core by strip removal = ({}), removed {} strips, height parity {}",
        p, removal.core, removal.strips_removed, removal.ht_parity
    );
    println!("H(core) = {}", hook_product(&removal.core));

    let ratio = nonpfold_core_ratio(&lambda, p).unwrap();
    let (quotient, _) = decompose(&lambda, p).unwrap();
    println!(
        "H_non-{}-fold / H(core) = {} ({} factors = (p-1)|quotient| = {})",
        p,
        ratio.ratio,
        ratio.factor_count,
        (p - 1) * quotient.size()
    );
}
