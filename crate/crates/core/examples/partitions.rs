//! Partitions, conjugates, dominance, and the counts p(n) and p₂(n).
//!
//! `cargo run --example partitions -- 6`

use kronbound::partitions::{count_partitions, count_plane_partitions, generate_partitions, staircase};

fn main() -> kronbound::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let ps = generate_partitions(n, None, None);
    println!("{} partitions of {n} (reverse lexicographic):", ps.len());
    for p in &ps {
        let below = ps.iter().filter(|q| q.dominated_by(p).unwrap_or(false)).count();
        println!("  {p:<14?} conjugate {:<14?} dominates {below}", p.conjugate());
    }
    println!("at most 2 parts: {:?}", generate_partitions(n, Some(2), None));
    println!("staircase ρ_4 = {:?}", staircase(4)?);
    for m in [10, 100, 1000] {
        println!("p({m}) = {}, p₂({m}) = {}", count_partitions(m), count_plane_partitions(m));
    }
    Ok(())
}
