//! Exact counts of contingency tables, binary tables and pyramids.
//!
//! `cargo run --example tables`

use kronbound::partitions::Partition;
use kronbound::tables::{
    count_binary_2d, count_binary_3d, count_pyramids, count_tables_2d, count_tables_3d, count_tables_weights, enumerate_pyramids,
};

fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn main() -> kronbound::Result<()> {
    for k in 1..=4 {
        let r = Partition::rectangle(k, 2);
        println!("T(({k},{k}), ({k},{k})) = {}", count_tables_2d(&r, &r)?);
    }
    println!("T((4,3,2,1), (5,5)) = {}", count_tables_2d(&p("4,3,2,1"), &p("5,5"))?);
    println!("T with unsorted margins [1,3,2] × [2,4] = {}", count_tables_weights(&[1, 3, 2], &[2, 4]));
    println!("B((3,2,1), (3,2,1)) = {}", count_binary_2d(&p("3,2,1"), &p("3,2,1"))?);

    let m = p("4,4");
    println!("T((4,4)³) = {}, B((4,4)³) = {}", count_tables_3d(&m, &m, &m)?, count_binary_3d(&m, &m, &m)?);
    let m = p("3,2,1");
    println!("T((3,2,1)³) = {}, B((3,2,1)³) = {}", count_tables_3d(&m, &m, &m)?, count_binary_3d(&m, &m, &m)?);

    let m = p("7,4,2");
    println!("Pyr((7,4,2)³) = {}", count_pyramids(&m, &m, &m)?);
    for (i, pyr) in enumerate_pyramids(&m, &m, &m)?.iter().enumerate() {
        println!("  pyramid {}: heights {:?}", i + 1, pyr.heights());
    }
    Ok(())
}
