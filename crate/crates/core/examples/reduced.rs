//! Reduced Kronecker coefficients, their stabilization, and their bound.
//!
//! `cargo run --example reduced`

use kronbound::bounds::bound_reduced;
use kronbound::partitions::{pad_first_row, Partition};
use kronbound::symfun::{kronecker, lr_coefficient, reduced_kronecker, reduced_kronecker_size};

fn main() -> kronbound::Result<()> {
    let triples = [("2,1", "2,1", "1"), ("2,1", "1", "1,1"), ("2,2", "2,1", "1,1"), ("3,1", "2,1", "2,1"), ("2,1", "2,1", "2,1")];
    for (a, b, c) in triples {
        let (a, b, c): (Partition, Partition, Partition) = (a.parse()?, b.parse()?, c.parse()?);
        let stable = reduced_kronecker_size(&a, &b, &c);
        let walk: Vec<String> = (a.size() + a.first()..=stable + 1)
            .filter_map(|n| {
                let pad = |x: &Partition| pad_first_row(x, n).ok();
                Some(kronecker(&pad(&a)?, &pad(&b)?, &pad(&c)?).ok()?.to_string())
            })
            .collect();
        let g = reduced_kronecker(&a, &b, &c)?;
        let bound = bound_reduced(&a, &b, &c);
        print!("ḡ({a:?}, {b:?}, {c:?}) = {g}   g(α[n],β[n],γ[n]) up to n = {}: {}", stable + 1, walk.join(" "));
        if a.size() == b.size() + c.size() {
            print!("   LR = {}", lr_coefficient(&a, &b, &c)?);
        }
        println!("   bound ≈ {} from {} terms", bound.bound.approx(), bound.terms.len());
    }
    Ok(())
}
