//! Writes one SVG per maximal family of (4,4) curves on P1 x P1.
//!
//! ```text
//! cargo run --example centroid_plot -- /tmp/plots
//! ```

use std::path::PathBuf;

use polystab::cli::svg;
use polystab::lattice::SpaceSignature;
use polystab::pipeline::{classify, ClassifyOptions};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "plots".into()));
    std::fs::create_dir_all(&dir)?;
    let sig = SpaceSignature::new(vec![1, 1], vec![4, 4]).expect("valid signature");
    let report = classify(&sig, ClassifyOptions::default());

    let families = report
        .semistable
        .iter()
        .map(|f| ("oplus", &f.family))
        .chain(report.unstable.iter().map(|f| ("plus", f)));
    for (i, (kind, f)) in families.enumerate() {
        let l = f.representative().expect("families come from subgroups");
        let body = svg::render(&sig, f.support(), &format!("{kind} {l}")).expect("planar lattice");
        let path = dir.join(format!("{i}-{kind}.svg"));
        std::fs::write(&path, body)?;
        println!("{} ({} hull vertices)", path.display(), svg::hull_2d(f.support()).len());
    }
    Ok(())
}
