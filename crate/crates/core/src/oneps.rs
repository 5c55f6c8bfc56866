//! Normalised one-parameter subgroups of the diagonal torus and the finite
//! fundamental set that suffices to detect instability.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_monomials, SpaceSignature, WeightVector};
use crate::linalg::Rref;

/// A normalised one-parameter subgroup: every block sums to zero and is
/// non-increasing, the vector is nonzero and primitive.
///
/// The `Ord` impl is the canonical listing order: smaller L1 norm first,
/// ties broken by descending lexicographic order of the concatenated weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneParamSubgroup {
    weights: WeightVector,
}

impl OneParamSubgroup {
    /// Validates an already-normalised weight vector.
    pub fn new(sig: &SpaceSignature, weights: WeightVector) -> Result<Self> {
        sig.check_blocks(weights.blocks())?;
        if weights.is_zero() {
            return Err(Error::TrivialSubgroup);
        }
        for (t, block) in weights.blocks().iter().enumerate() {
            let sum: BigInt = block.iter().sum();
            if !sum.is_zero() {
                return Err(Error::NonZeroBlockSum { block: t, sum: sum.to_string() });
            }
            if block.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::ShapeMismatch(format!("block {t} of {weights} is not non-increasing")));
            }
        }
        let g = weights.blocks().iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_one() {
            return Err(Error::ShapeMismatch(format!("{weights} is not primitive")));
        }
        Ok(Self { weights })
    }

    pub fn from_i64(sig: &SpaceSignature, flat: &[i64]) -> Result<Self> {
        Self::new(sig, WeightVector::from_i64(sig, flat)?)
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn concat(&self) -> Vec<BigInt> {
        self.weights.concat()
    }

    fn l1(&self) -> BigInt {
        self.weights.blocks().iter().flatten().map(|x| x.abs()).sum()
    }
}

impl AsRef<WeightVector> for OneParamSubgroup {
    fn as_ref(&self) -> &WeightVector {
        &self.weights
    }
}

impl Ord for OneParamSubgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.l1().cmp(&other.l1()).then_with(|| other.concat().cmp(&self.concat()))
    }
}

impl PartialOrd for OneParamSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.weights.fmt(f)
    }
}

/// Weyl-sorts each block, clears denominators and divides out the content.
pub fn normalize(sig: &SpaceSignature, raw: &[Vec<BigRational>]) -> Result<OneParamSubgroup> {
    sig.check_blocks(raw)?;
    for (t, block) in raw.iter().enumerate() {
        let sum: BigRational = block.iter().sum();
        if !sum.is_zero() {
            return Err(Error::NonZeroBlockSum { block: t, sum: sum.to_string() });
        }
    }
    if raw.iter().flatten().all(Zero::is_zero) {
        return Err(Error::TrivialSubgroup);
    }
    let blocks = raw
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_by(|x, y| y.cmp(x));
            b
        })
        .collect::<Vec<_>>();
    OneParamSubgroup::new(sig, WeightVector::from_blocks_unchecked(primitive_integer(&blocks)))
}

/// Scales a rational block vector to the primitive integer vector with the
/// same direction.
pub(crate) fn primitive_integer(blocks: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    let lcm = blocks.iter().flatten().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Vec<BigInt>> =
        blocks.iter().map(|b| b.iter().map(|x| (x * &lcm).to_integer()).collect()).collect();
    let g = scaled.iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return scaled;
    }
    scaled.into_iter().map(|b| b.into_iter().map(|x| x / &g).collect()).collect()
}

/// Normal vector `I - I'` of a wall where two monomials have equal weight.
/// Primitive, blockwise zero-sum, first nonzero entry positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperplaneNormal {
    coeffs: Vec<Vec<i64>>,
}

impl HyperplaneNormal {
    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.coeffs
    }

    pub fn concat(&self) -> Vec<i64> {
        self.coeffs.concat()
    }

    /// `n . w` against a weight vector of the same shape.
    pub fn dot(&self, w: &WeightVector) -> BigInt {
        self.coeffs.iter().flatten().zip(w.blocks().iter().flatten()).map(|(a, b)| b * BigInt::from(*a)).sum()
    }

    /// Coordinates of the wall in the parametrisation of the zero-sum
    /// space by all but the last weight of each block: `n_i - n_last`.
    fn reduced(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .flat_map(|b| {
                let last = b[b.len() - 1];
                b[..b.len() - 1].iter().map(move |&x| BigRational::from_integer((x - last).into()))
            })
            .collect()
    }
}

impl fmt::Display for HyperplaneNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coeffs.iter().map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "({})", parts.join("|"))
    }
}

/// All walls `<I - I', lambda> = 0` over unordered pairs of distinct
/// monomials, deduplicated up to scaling.
pub fn hyperplane_normals(sig: &SpaceSignature) -> BTreeSet<HyperplaneNormal> {
    let monos: Vec<Vec<i64>> =
        enumerate_monomials(sig).iter().map(|e| e.concat().into_iter().map(i64::from).collect()).collect();
    let mut out = BTreeSet::new();
    for (i, a) in monos.iter().enumerate() {
        for b in &monos[i + 1..] {
            let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            let g = diff.iter().fold(0i64, |g, x| g.gcd(x));
            let sign = diff.iter().find(|x| **x != 0).map_or(1, |x| x.signum());
            let flat: Vec<i64> = diff.iter().map(|x| sign * x / g).collect();
            let coeffs = sig.split(&flat).expect("difference has ambient length");
            out.insert(HyperplaneNormal { coeffs });
        }
    }
    out
}

/// The fundamental set of normalised one-parameter subgroups.
///
/// Every rank `d - 1` intersection of walls (where `d` is the projected
/// dimension) cuts a line out of the zero-sum weight space. Each line
/// contributes those of its two directions whose blocks are non-increasing;
/// scaling such a direction so that the leading weight of some nonzero
/// block equals one, then clearing denominators, gives the same primitive
/// vector for every block choice, so one representative per line direction
/// is kept.
///
/// Flats are enumerated rank by rank as canonical echelon bases, so systems
/// with the same span are solved once. The result is sorted canonically and
/// does not depend on `parallel`.
pub fn fundamental_set(sig: &SpaceSignature, parallel: bool) -> Vec<OneParamSubgroup> {
    let d = sig.projected_dim();
    let normals: Vec<Vec<BigRational>> = hyperplane_normals(sig).iter().map(HyperplaneNormal::reduced).collect();

    let mut level: Vec<Rref> = vec![Rref::empty(d)];
    for _ in 1..d {
        let extend = |flat: &Rref| normals.iter().filter_map(|n| flat.with_row(n)).collect::<Vec<_>>();
        let next: BTreeSet<Rref> = if parallel {
            level.par_iter().map(extend).collect::<Vec<_>>().into_iter().flatten().collect()
        } else {
            level.iter().flat_map(extend).collect()
        };
        level = next.into_iter().collect();
    }

    let directions = |flat: &Rref| -> Vec<OneParamSubgroup> {
        let ker = flat.kernel();
        debug_assert_eq!(ker.len(), 1);
        let line = &ker[0];
        let mut found = Vec::new();
        for sign in [1, -1] {
            let dir: Vec<BigRational> = line.iter().map(|x| x * BigInt::from(sign)).collect();
            let blocks = expand_reduced(sig, &dir);
            if blocks.iter().all(|b| b.windows(2).all(|w| w[0] >= w[1])) {
                let weights = WeightVector::from_blocks_unchecked(primitive_integer(&blocks));
                found.push(OneParamSubgroup::new(sig, weights).expect("ordered primitive direction"));
            }
        }
        found
    };
    let set: BTreeSet<OneParamSubgroup> = if parallel {
        level.par_iter().map(directions).collect::<Vec<_>>().into_iter().flatten().collect()
    } else {
        level.iter().flat_map(directions).collect()
    };
    set.into_iter().collect()
}

/// Rebuilds full weight blocks from the reduced parametrisation by
/// appending minus the block sum to each block.
fn expand_reduced(sig: &SpaceSignature, reduced: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut out = Vec::with_capacity(sig.factors());
    let mut at = 0;
    for &m in sig.dims() {
        let mut block = reduced[at..at + m].to_vec();
        let s: BigRational = block.iter().sum();
        block.push(-s);
        out.push(block);
        at += m;
    }
    out
}
