//! Checks a monomial support two ways: the centroid criterion and a direct
//! search over permuted fundamental subgroups.
//!
//! With no argument it checks a few (4,4) supports; otherwise it reads a
//! support file `{"dims": [...], "degrees": [...], "support": [[...], ...]}`.

use polystab::cli::document::SupportFile;
use polystab::cli::text::monomial_name;
use polystab::lattice::{ExponentVector, SpaceSignature};
use polystab::pipeline::check_support;

fn report(sig: &SpaceSignature, support: &[ExponentVector]) {
    let names: Vec<String> = support.iter().map(monomial_name).collect();
    let check = check_support(support, sig).expect("valid support");
    println!("{}", names.join(" "));
    println!("  centroid verdict: {}", check.verdict.stability());
    match check.best_witness() {
        Some(w) => println!(
            "  {} destabilising witnesses; best lambda = {} (permutation {:?}), mu = {}",
            check.destabilising().count(),
            w.subgroup,
            w.permutation,
            w.mu
        ),
        None => println!("  no subgroup has mu >= 0"),
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable support file");
        let (sig, support) = SupportFile::parse(&text).unwrap_or_else(|e| {
            eprintln!("{path}: {e}");
            std::process::exit(2)
        });
        report(&sig, &support);
        return;
    }

    let sig = SpaceSignature::new(vec![1, 1], vec![4, 4]).expect("valid signature");
    let mono = |e: [u32; 4]| ExponentVector::from_concat(&sig, &e).expect("degree (4,4)");
    // x0^4 times two terms, a symmetric three-term curve, x0^2x1^2 times a binary quartic.
    let examples = [
        vec![mono([4, 0, 4, 0]), mono([4, 0, 0, 4])],
        vec![mono([4, 0, 0, 4]), mono([0, 4, 4, 0]), mono([2, 2, 2, 2])],
        (0..=4).map(|j| mono([2, 2, 4 - j, j])).collect(),
    ];
    for support in &examples {
        report(&sig, support);
    }
}
