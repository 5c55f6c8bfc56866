//! Moves between affine functionals on the projected lattice and weight
//! vectors of one-parameter subgroups.

use polystab::lattice::{enumerate_monomials, mu, SpaceSignature};
use polystab::oneps::OneParamSubgroup;
use polystab::polytope::{centroid_classify, functional_to_oneps, functional_to_weights, oneps_to_functional};

fn main() {
    let sig = SpaceSignature::new(vec![1, 1], vec![4, 4]).expect("valid signature");

    let l = OneParamSubgroup::from_i64(&sig, &[2, -2, 1, -1]).expect("normalised");
    let psi = oneps_to_functional(&l, &sig).expect("matching signature");
    println!("lambda = {l}  ->  Psi(x) = {psi}");
    println!("back again: {}", functional_to_oneps(&psi, &sig).expect("centred functional"));

    // An unstable support: its separator is a destabilising direction.
    let support: Vec<_> = enumerate_monomials(&sig).into_iter().filter(|e| e.blocks()[0][0] >= 3).collect();
    let verdict = centroid_classify(&support, &sig).expect("valid support");
    let phi = verdict.separator().expect("centroid lies outside");
    let w = functional_to_weights(phi, &sig).expect("centred functional");
    let lambda = functional_to_oneps(phi, &sig).expect("centred functional");
    println!("\nseparator {phi}");
    println!("  weights {w}, mu = {}", mu(&support, &w).expect("matching signature"));
    println!("  normalised subgroup {lambda}");
}
