//! p₂(N) against p(N)³, the count behind the pigeonhole construction.
//!
//! `cargo run --example plane_partition_numerics -- 2100`

use kronbound::barvinok::count_approx;
use kronbound::partitions::{partition_numbers, plane_partition_numbers};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2100);
    let top = n.max(2200);
    let (p, p2) = (partition_numbers(top), plane_partition_numbers(top));
    let cube = |k: usize| &p[k] * &p[k] * &p[k];
    println!("p({n}) = {}", p[n]);
    println!("p₂({n}) ≈ {} ({} digits)", count_approx(&p2[n]), p2[n].to_string().len());
    println!("p({n})³ ≈ {} ({} digits)", count_approx(&cube(n)), cube(n).to_string().len());
    println!("p₂({n}) > p({n})³: {}", p2[n] > cube(n));
    match (1..=top).find(|&k| p2[k] > cube(k)) {
        Some(k) => println!("smallest N with p₂(N) > p(N)³: {k}"),
        None => println!("p₂(N) ≤ p(N)³ for all N ≤ {top}"),
    }
}
