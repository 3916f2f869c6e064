//! Loads a dataset in the TU benchmark format and prints its shape. With no
//! argument it reads the small fixture shipped with the tests.
//!
//! cargo run --example tu_dataset -- [path/to/MUTAG]

use std::path::PathBuf;

use homcount::dataset::{find_tud_name, parse_tud};

fn main() -> homcount::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/TOY"));
    let name = find_tud_name(&dir)?;
    let bundle = parse_tud(&dir, &name)?;
    println!("{name}: {} graphs, {} classes", bundle.len(), bundle.num_classes());
    println!(
        "mean |V| {:.2}, feature dimension {}",
        bundle.mean_vertices(),
        bundle.feature_dim()
    );
    let mut per_class = vec![0usize; bundle.num_classes()];
    for &y in bundle.labels() {
        per_class[y] += 1;
    }
    println!("class sizes {per_class:?}");
    if let Some(x) = bundle.featured(0) {
        println!("first graph features:");
        for row in x.features() {
            println!("  {row:?}");
        }
    }
    Ok(())
}
