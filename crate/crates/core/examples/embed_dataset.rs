//! Embeds the CSL dataset with cycle patterns, writes the matrix as CSV with
//! a JSON sidecar, and reads it back.
//!
//! cargo run --example embed_dataset -- [out.csv]

use std::path::PathBuf;

use homcount::dataset::{gen_csl, CslConfig};
use homcount::embed::{embed_dataset, read_embedding, write_embedding, EmbedConfig, FamilySpec};

fn main() -> homcount::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("csl_cycle8.csv"));
    let bundle = gen_csl(&CslConfig::default(), 0)?;
    let config = EmbedConfig {
        family: FamilySpec::Cycle { max_size: 8 },
        ..EmbedConfig::default()
    };
    let matrix = embed_dataset(&bundle, &config)?;
    let names: Vec<String> = matrix.columns().iter().map(|c| c.name()).collect();
    println!(
        "{} rows x {} columns: {}",
        matrix.num_rows(),
        matrix.num_cols(),
        names.join(" ")
    );
    // One row per class; copies of a class share their row.
    for class in 0..bundle.num_classes() {
        let i = bundle.labels().iter().position(|&y| y == class).unwrap();
        println!("class {class}: {:?}", matrix.rows()[i]);
    }
    let sidecar = write_embedding(&matrix, bundle.labels(), &out, &config)?;
    let (rows, labels) = read_embedding(&out)?;
    assert_eq!(rows, matrix.rows());
    assert_eq!(labels, bundle.labels());
    println!("wrote {} and {}", out.display(), sidecar.display());
    Ok(())
}
