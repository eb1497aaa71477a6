//! Decompose a partition into its p-core and p-quotient via Maya diagrams,
//! then rebuild it from the parts.
//!
//! Run with: cargo run --example decompose_roundtrip

use wronskian_appell::core_quotient::{
    compose, core_from_charvec, core_size_from_charvec, decompose,
};
use wronskian_appell::maya::MayaDiagram;
use wronskian_appell::partitions::Partition;

fn main() {
    let lambda: Partition = "8,8,6,6,2,2,1".parse().unwrap();
    let p = 3;

    println!("lambda = ({}), |lambda| = {}", lambda, lambda.size());
    println!("degree vector = ({})", lambda.degree_vector());

    let m = MayaDiagram::from_partition(&lambda);
    let hat = m.canonical();
    println!("maya diagram        {}", m.render_auto());
    println!("charge-zero form    {}", hat.render_auto());

    let (quotient, charvec) = decompose(&lambda, p).unwrap();
    println!("{}-quotient = ({})", p, quotient);
    println!("characteristic vector = ({})", charvec);
    for (i, comp) in hat.p_decompose(p).unwrap().iter().enumerate() {
        println!(
            "component {} (charge {:+}) {}",
            i,
            comp.charge(),
            comp.render_auto()
        );
    }

    let core = core_from_charvec(&charvec).unwrap();
    println!(
        "{}-core = ({}), size {} (formula gives {})",
        p,
        core,
        core.size(),
        core_size_from_charvec(&charvec).unwrap()
    );
    println!(
        "size identity: {} = {} + {} * {}",
        lambda.size(),
        core.size(),
        p,
        quotient.size()
    );

    let rebuilt = compose(&quotient, &charvec).unwrap();
    assert_eq!(rebuilt, lambda);
    println!("compose(quotient, charvec) = ({}) -- roundtrip exact", rebuilt);
}
