//! Every bound on one Kronecker coefficient, as JSON and CSV.
//!
//! `cargo run --example bound_report -- 4,3,2,1 4,3,2,1 5,3,2`

use kronbound::bounds::{bound_multi_lr, compare_all};
use kronbound::limits::Limits;
use kronbound::partitions::Partition;

fn main() -> kronbound::Result<()> {
    let args: Vec<Partition> = std::env::args().skip(1).map(|s| s.parse()).collect::<kronbound::Result<_>>()?;
    let [l, m, n] = match <[Partition; 3]>::try_from(args) {
        Ok(t) => t,
        Err(_) => ["4,3,2,1".parse()?, "4,3,2,1".parse()?, "5,3,2".parse()?],
    };
    let report = compare_all(&l, &m, &n, &Limits::from_env()?)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    print!("{}", report.to_csv());
    let v = report.violations();
    println!("violations: {}", v.len());
    let multi = bound_multi_lr(&l, &m, &n)?;
    println!("multi-LR bound uses roles {:?}", multi.order);
    Ok(())
}
