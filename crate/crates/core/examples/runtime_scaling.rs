//! Times tree-pattern counting on sparse random graphs of doubling size.
//! Linear-time counting shows up as a time ratio near 2 per doubling.
//!
//! cargo run --release --example runtime_scaling -- [base_vertices] [doublings]

use homcount::eval::tree_scaling;

fn main() -> homcount::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("integer argument"));
    let base = args.next().unwrap_or(20_000);
    let doublings = args.next().unwrap_or(4);
    let report = tree_scaling(base, doublings, 4.0, 6, 3, 0)?;
    println!("{:>10} {:>10} {:>10} {:>8}", "|V|", "|E|", "seconds", "ratio");
    for (i, p) in report.points.iter().enumerate() {
        let ratio = i
            .checked_sub(1)
            .map_or(String::new(), |j| format!("{:.2}", report.normalised_ratios[j]));
        println!(
            "{:>10} {:>10} {:>10.4} {:>8}",
            p.num_vertices, p.num_edges, p.seconds, ratio
        );
    }
    Ok(())
}
