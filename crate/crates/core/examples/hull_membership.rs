//! Exact convex-hull membership with certificates, independent of any
//! stability question.

use num_rational::BigRational;
use num_traits::Zero;
use polystab::polytope::{contains, interior_contains, Membership};
use polystab::RationalPoint;

fn main() {
    let cube: Vec<RationalPoint> = (0..8)
        .map(|i| RationalPoint::from_integers(&[i & 1, (i >> 1) & 1, (i >> 2) & 1]))
        .collect();
    let probes = [[1, 1, 1], [2, 1, 1], [3, 1, 1], [0, 1, -1]];

    for p in probes {
        // Probes are in half units.
        let q = RationalPoint::new(p.iter().map(|&x| BigRational::new(x.into(), 2.into())).collect());
        let interior = interior_contains(&cube, &q, 3).expect("same dimension");
        match contains(&cube, &q).expect("same dimension") {
            Membership::Inside { weights } => {
                let used = weights.iter().filter(|w| !w.is_zero()).count();
                println!("{q}: inside (interior: {interior}), combination of {used} vertices");
            }
            Membership::Outside { separator } => println!("{q}: outside, separated by {separator}"),
        }
    }
}
