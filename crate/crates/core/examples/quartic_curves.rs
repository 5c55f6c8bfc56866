//! Bidegree (4,4) curves on P1 x P1: the maximal families and which of
//! them the centroid criterion keeps.

use polystab::cli::text::monomial_name;
use polystab::lattice::SpaceSignature;
use polystab::pipeline::{classify, ClassifyOptions};

fn main() {
    let sig = SpaceSignature::new(vec![1, 1], vec![4, 4]).expect("valid signature");
    let report = classify(&sig, ClassifyOptions::default());

    println!("{} subgroups in the fundamental set", report.fundamental_count());
    println!("\nsemi-destabilised families (centroid on the boundary):");
    for f in &report.semistable {
        println!("  lambda = {}  {}  [{} monomials]", f.subgroup(), f.verdict.stability(), f.family.len());
        if let Some(a) = &f.annihilator {
            let names: Vec<String> = a.support().iter().map(monomial_name).collect();
            println!("    Ann: {}", names.join(" "));
        }
    }
    println!("\ndestabilised families:");
    for f in &report.unstable {
        let origins: Vec<String> = f.origins().iter().filter_map(|o| o.subgroup()).map(ToString::to_string).collect();
        println!("  {} [{} monomials]", origins.join(" = "), f.len());
    }
}
