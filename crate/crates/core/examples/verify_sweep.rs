//! Exhaustive invariant sweeps over all partitions of n.
//!
//! `cargo run --release --example verify_sweep -- 6 4`

use kronbound::cli::{run_verify, Suite};
use kronbound::limits::Limits;

fn main() -> kronbound::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let n = args.next().flatten().unwrap_or(6);
    let workers = args.next().flatten().unwrap_or(2);
    let result = run_verify(n, &Suite::ALL, workers, &Limits::from_env()?)?;
    for s in &result.suites {
        println!("{:<12} {:>10} checks {:>4} violations", format!("{:?}", s.suite), s.checked, s.violations);
    }
    for (name, t) in &result.tightness {
        println!("{name:<16} tightest {:>5} / {:<5} equal to g {:>5}", t.tightest, t.available, t.equal_to_exact);
    }
    println!("{:.2}s", result.wall_time.as_secs_f64());
    Ok(())
}
