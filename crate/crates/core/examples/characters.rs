//! Characters, Kronecker, Kostka and Littlewood–Richardson numbers, and the
//! inverse-Kostka formula for g.
//!
//! `cargo run --example characters -- 3,2,1 4,1,1 3,3`

use kronbound::partitions::{generate_partitions, Partition};
use kronbound::symfun::{character, dim_irrep, inverse_kostka, kostka, kronecker, kronecker_via_vallejo, lr_coefficient};

fn main() -> kronbound::Result<()> {
    let args: Vec<Partition> = std::env::args().skip(1).map(|s| s.parse()).collect::<kronbound::Result<_>>()?;
    let [l, m, n] = match <[Partition; 3]>::try_from(args) {
        Ok(t) => t,
        Err(_) => ["3,2,1".parse()?, "4,1,1".parse()?, "3,3".parse()?],
    };
    let size = l.size();
    println!("dimensions: f^{l:?} = {}, f^{m:?} = {}, f^{n:?} = {}", dim_irrep(&l), dim_irrep(&m), dim_irrep(&n));
    println!("character table row χ^{l:?}:");
    for c in generate_partitions(size, None, None) {
        println!("  class {c:<14?} {}", character(&l, &c)?);
    }
    println!("g({l:?}, {m:?}, {n:?}) = {}", kronecker(&l, &m, &n)?);
    if size <= 8 {
        println!("  via inverse Kostka: {}", kronecker_via_vallejo(&l, &m, &n)?);
    }
    println!("K({l:?}, {m:?}) = {}", kostka(&l, &m));
    println!("K({l:?}, (2,1,2,1)) = {}", kostka(&l, &[2usize, 1, 2, 1][..]));
    let (a, b): (Partition, Partition) = ("2,1".parse()?, "2,1".parse()?);
    println!("c^{l:?}_{{{a:?},{b:?}}} = {}", lr_coefficient(&l, &a, &b)?);

    let inv = inverse_kostka(4)?;
    println!("inverse Kostka matrix, n = 4, rows and columns {:?}:", inv.partitions());
    for row in inv.rows() {
        println!("  {}", row.iter().map(|v| format!("{v:>3}")).collect::<Vec<_>>().join(" "));
    }
    Ok(())
}
