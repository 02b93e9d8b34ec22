//! The concave maximization bound on table counts and its closed form.
//!
//! `cargo run --example barvinok -- 6,3,1 5,5`

use kronbound::barvinok::{closed_form_e, maximize_g_2d, maximize_g_3d, maximize_h_binary, DEFAULT_TOL};
use kronbound::partitions::Partition;
use kronbound::tables::{count_binary_3d, count_tables_2d, count_tables_3d};

fn main() -> kronbound::Result<()> {
    let args: Vec<Partition> = std::env::args().skip(1).map(|s| s.parse()).collect::<kronbound::Result<_>>()?;
    let (l, m) = match args.as_slice() {
        [a, b] => (a.clone(), b.clone()),
        _ => ("6,3,1".parse()?, "5,5".parse()?),
    };
    let (point, bound) = maximize_g_2d(&l, &m, DEFAULT_TOL)?;
    println!("P({l:?}, {m:?}): maximizer (rows of {} × {})", l.len(), m.len());
    for row in point.entries.chunks(m.len()) {
        println!("  {}", row.iter().map(|z| format!("{z:8.4}")).collect::<Vec<_>>().join(" "));
    }
    let t = count_tables_2d(&l, &m)?;
    println!("T = {t} ≤ exp g(Z) ≈ {} (log {:.6})", bound.approx(), bound.log_value);
    let e = closed_form_e((l.len() * m.len()) as f64, l.size() as f64)?;
    println!("uniform-margin closed form E(ℓm, n) ≈ {}", e.approx());

    for l in [2usize, 3] {
        let r = Partition::rectangle(l * l, l);
        let (_, g) = maximize_g_2d(&r, &r, DEFAULT_TOL)?;
        println!("λ = µ = ({}^{l}): log G = {:.10}", l * l, g.log_value);
    }

    let c: Partition = "3,3,2".parse()?;
    let (_, g3) = maximize_g_3d(&c, &c, &c, DEFAULT_TOL)?;
    println!("T((3,3,2)³) = {} ≤ exp g ≈ {}", count_tables_3d(&c, &c, &c)?, g3.approx());
    let (_, h3) = maximize_h_binary(&c, &c, &c, DEFAULT_TOL)?;
    println!("B((3,3,2)³) = {} ≤ exp h ≈ {}", count_binary_3d(&c, &c, &c)?, h3.approx());
    match maximize_h_binary(&"5,1".parse()?, &"5,1".parse()?, &"2,2,2".parse()?, DEFAULT_TOL) {
        Err(e) => println!("B((5,1),(5,1),(2,2,2)): {e}"),
        Ok((_, h)) => println!("B((5,1),(5,1),(2,2,2)) ≤ {}", h.approx()),
    }
    Ok(())
}
