//! Divisors of bidegree (1,2) in P1 x P3. The projected lattice is
//! four-dimensional, so hulls are reported as exact vertex lists.

use polystab::cli::text::monomial_name;
use polystab::lattice::{xi_project, RationalPoint, SpaceSignature};
use polystab::pipeline::{classify, ClassifyOptions};
use polystab::polytope::hull_vertices;

fn main() {
    let sig = SpaceSignature::new(vec![1, 3], vec![1, 2]).expect("valid signature");
    let report = classify(&sig, ClassifyOptions::default());
    println!("{sig}: {} subgroups", report.fundamental_count());

    for f in &report.semistable {
        let points: Vec<RationalPoint> = f.family.support().iter().map(|e| xi_project(e).to_rational()).collect();
        let vertices = hull_vertices(&points).expect("non-empty support");
        println!("\nN⊕{}: {} monomials, {} hull vertices", f.subgroup(), f.family.len(), vertices.len());
        println!("  verdict: {}", f.verdict.stability());
        if let Some(a) = &f.annihilator {
            println!("  Ann = {}", a.support().iter().map(monomial_name).collect::<Vec<_>>().join(" "));
        }
    }
    println!("\n{} maximal destabilised families", report.unstable.len());
}
