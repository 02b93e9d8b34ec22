//! Equal-margin pyramids: the (7,4,2) pair, the staircase family and
//! symmetric plane partitions.
//!
//! `cargo run --example constructions`

use kronbound::constructions::{
    cyclic_not_total_pair, equal_margin_pyramids_search, seven_four_two_pair, staircase_family_with, totally_symmetric_count,
};
use kronbound::limits::Limits;
use kronbound::symfun::kronecker;

fn main() -> kronbound::Result<()> {
    let limits = Limits::default();
    let search = equal_margin_pyramids_search(13, &limits)?;
    for hit in &search.hits {
        println!("n = {}: margins {:?} carry {} pyramids", hit.n, hit.margins, hit.count);
    }
    for p in seven_four_two_pair() {
        println!("(7,4,2)³ pyramid: {:?}", p.heights());
    }
    let m = seven_four_two_pair()[0].margins().0.conjugate();
    println!("g({m:?}³) = {}", kronecker(&m, &m, &m)?);

    for s in 1..=4 {
        let fam = staircase_family_with(s, false)?;
        println!("staircase family s = {s}: {} members of size {}, margins {:?}", fam.member_count, fam.size, fam.margins[0]);
    }

    for n in [4, 7, 10] {
        let ts = totally_symmetric_count(n, &limits)?;
        let margins: Vec<String> = ts.members.iter().map(|m| format!("{:?}", m.margin)).collect();
        println!("totally symmetric plane partitions of {n}: {} (margins {})", ts.count, margins.join(", "));
    }
    if let Some(w) = cyclic_not_total_pair(15, &limits)? {
        println!("cyclically symmetric, not totally symmetric: n = {}, margin {:?}", w.n, w.margin);
        println!("  {:?}\n  {:?}", w.first, w.second);
    }
    Ok(())
}
