//! Runs the three synthetic classification experiments (CSL, bipartite vs.
//! Erdős–Rényi, strongly regular graphs) with tree and cycle embeddings.
//!
//! cargo run --release --example synthetic_experiments -- [repeats]

use std::path::Path;

use homcount::dataset::{
    gen_bipartite_er, gen_csl, paulus_from_str, BipartiteConfig, CslConfig, PaulusConfig, PAULUS_FIXTURE,
};
use homcount::embed::{EmbedConfig, FamilySpec};
use homcount::eval::{cross_validate, CvConfig};

fn main() -> homcount::Result<()> {
    let repeats = std::env::args()
        .nth(1)
        .map_or(Ok(10), |s| s.parse())
        .expect("repeats must be an integer");
    let seed = 0;
    let bundles = [
        gen_csl(&CslConfig::default(), seed)?,
        gen_bipartite_er(&BipartiteConfig::default(), seed)?,
        paulus_from_str(
            PAULUS_FIXTURE,
            Path::new("paulus25.txt"),
            &PaulusConfig::default(),
            seed,
        )?,
    ];
    let families = [FamilySpec::Tree { max_size: 6 }, FamilySpec::Cycle { max_size: 8 }];
    let cv = CvConfig {
        repeats,
        ..CvConfig::default()
    };
    println!(
        "{:<14} {:<8} {:>8} {:>8} {:>8}",
        "dataset", "family", "mean", "std", "secs"
    );
    for bundle in &bundles {
        for family in &families {
            let embed = EmbedConfig {
                family: family.clone(),
                ..EmbedConfig::default()
            };
            let report = cross_validate(bundle, &embed, &cv, seed)?;
            println!(
                "{:<14} {:<8} {:>8.4} {:>8.4} {:>8.2}",
                bundle.name(),
                family.to_string(),
                report.mean,
                report.stddev,
                report.wall_time_seconds
            );
        }
    }
    Ok(())
}
