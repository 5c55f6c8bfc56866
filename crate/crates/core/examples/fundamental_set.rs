//! Lists the fundamental set of a signature.
//!
//! ```text
//! cargo run --example fundamental_set -- 1,1 4,4
//! cargo run --example fundamental_set -- 1,3 1,2
//! ```

use polystab::lattice::SpaceSignature;
use polystab::oneps::fundamental_set;

fn parse(arg: Option<String>, default: &str) -> Vec<i64> {
    arg.as_deref().unwrap_or(default).split(',').map(|x| x.trim().parse().expect("integer list")).collect()
}

fn main() {
    let mut args = std::env::args().skip(1);
    let dims = parse(args.next(), "1,1");
    let degrees = parse(args.next(), "4,4");
    let sig = match SpaceSignature::from_signed(&dims, &degrees) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };

    let set = fundamental_set(&sig, true);
    println!("{sig}: {} normalised one-parameter subgroups", set.len());
    for l in &set {
        println!("  {l}");
    }
}
