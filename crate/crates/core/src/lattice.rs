//! The monomial universe of a multidegree, its projection to the integer
//! lattice, the weight pairing and the centroid.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Factor dimensions `m_i` and multidegree `k_i` of a product of projective
/// spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceSignature {
    dims: Vec<usize>,
    degrees: Vec<u32>,
}

impl SpaceSignature {
    pub fn new(dims: Vec<usize>, degrees: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidSignature("at least one factor is required".into()));
        }
        if dims.len() != degrees.len() {
            return Err(Error::InvalidSignature(format!(
                "{} dimensions but {} degrees",
                dims.len(),
                degrees.len()
            )));
        }
        if dims.contains(&0) {
            return Err(Error::InvalidSignature("dimensions must be positive".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidSignature("degrees must be positive".into()));
        }
        Ok(Self { dims, degrees })
    }

    /// Builds a signature from signed input, rejecting non-positive entries.
    pub fn from_signed(dims: &[i64], degrees: &[i64]) -> Result<Self> {
        let to_pos = |what: &str, x: i64| {
            if x <= 0 {
                Err(Error::InvalidSignature(format!("{what} must be positive, got {x}")))
            } else {
                Ok(x)
            }
        };
        let dims = dims
            .iter()
            .map(|&m| to_pos("dimensions", m).map(|m| m as usize))
            .collect::<Result<Vec<_>>>()?;
        let degrees = degrees
            .iter()
            .map(|&k| {
                to_pos("degrees", k).and_then(|k| {
                    u32::try_from(k).map_err(|_| Error::InvalidSignature(format!("degree {k} too large")))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dims, degrees)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of projective factors `r`.
    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    /// `D = sum(m_i + 1)`, the length of an exponent or weight vector.
    pub fn ambient_dim(&self) -> usize {
        self.dims.iter().map(|m| m + 1).sum()
    }

    /// `d = sum(m_i)`, the dimension of the projected lattice.
    pub fn projected_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Block lengths `m_i + 1`.
    pub fn block_lens(&self) -> impl Iterator<Item = usize> + '_ {
        self.dims.iter().map(|m| m + 1)
    }

    /// `prod binom(m_i + k_i, k_i)`.
    pub fn lattice_size(&self) -> usize {
        self.dims
            .iter()
            .zip(&self.degrees)
            .map(|(&m, &k)| binomial(m + k as usize, k as usize))
            .product()
    }

    /// Factor permutations that fix both dims and degrees, identity included.
    pub fn factor_symmetries(&self) -> Vec<Vec<usize>> {
        permutations(self.factors())
            .into_iter()
            .filter(|p| {
                p.iter()
                    .enumerate()
                    .all(|(i, &j)| self.dims[i] == self.dims[j] && self.degrees[i] == self.degrees[j])
            })
            .collect()
    }

    pub(crate) fn check_blocks<T>(&self, blocks: &[Vec<T>]) -> Result<()> {
        if blocks.len() != self.factors() || blocks.iter().zip(self.block_lens()).any(|(b, n)| b.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "expected blocks of lengths {:?}, got {:?}",
                self.block_lens().collect::<Vec<_>>(),
                blocks.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }

    /// Splits a flat vector of length `D` into per-factor blocks.
    pub fn split<T: Clone>(&self, flat: &[T]) -> Result<Vec<Vec<T>>> {
        if flat.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), got: flat.len() });
        }
        let mut out = Vec::with_capacity(self.factors());
        let mut at = 0;
        for n in self.block_lens() {
            out.push(flat[at..at + n].to_vec());
            at += n;
        }
        Ok(out)
    }
}

impl fmt::Display for SpaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        write!(
            f,
            "dims ({}) degrees ({})",
            join(self.dims.iter().map(|m| m.to_string()).collect()),
            join(self.degrees.iter().map(|k| k.to_string()).collect())
        )
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// One monomial of the multidegree, as per-factor exponent blocks.
///
/// The derived order is lexicographic on the concatenated exponents; the
/// canonical listing order of the crate is the *descending* one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    blocks: Vec<Vec<u32>>,
}

impl ExponentVector {
    pub fn new(sig: &SpaceSignature, blocks: Vec<Vec<u32>>) -> Result<Self> {
        sig.check_blocks(&blocks)?;
        for (block, &k) in blocks.iter().zip(sig.degrees()) {
            if block.iter().sum::<u32>() != k {
                return Err(Error::OutsideLattice(format!("{}", Self { blocks })));
            }
        }
        Ok(Self { blocks })
    }

    pub fn from_concat(sig: &SpaceSignature, flat: &[u32]) -> Result<Self> {
        Self::new(sig, sig.split(flat)?)
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn concat(&self) -> Vec<u32> {
        self.blocks.concat()
    }

    /// Applies a per-block coordinate permutation: entry `j` of block `t`
    /// becomes entry `perm[t][j]` of the original block.
    pub fn permuted(&self, perm: &[Vec<usize>]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .zip(perm)
            .map(|(b, p)| p.iter().map(|&j| b[j]).collect())
            .collect();
        Self { blocks }
    }

    /// Relabels factors: block `t` of the result is block `perm[t]` of `self`.
    pub fn with_factors_permuted(&self, perm: &[usize]) -> Self {
        Self { blocks: perm.iter().map(|&t| self.blocks[t].clone()).collect() }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

fn write_blocks<T: fmt::Display>(f: &mut fmt::Formatter<'_>, blocks: &[Vec<T>]) -> fmt::Result {
    write!(f, "(")?;
    for (t, block) in blocks.iter().enumerate() {
        if t > 0 {
            write!(f, "|")?;
        }
        for (i, x) in block.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
    }
    write!(f, ")")
}

/// An integer weight vector in per-factor blocks, with no normalisation
/// assumed. Normalised subgroups live in [`crate::oneps::OneParamSubgroup`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    blocks: Vec<Vec<BigInt>>,
}

impl WeightVector {
    pub fn new(sig: &SpaceSignature, blocks: Vec<Vec<BigInt>>) -> Result<Self> {
        sig.check_blocks(&blocks)?;
        Ok(Self { blocks })
    }

    pub fn from_i64(sig: &SpaceSignature, flat: &[i64]) -> Result<Self> {
        let flat: Vec<BigInt> = flat.iter().map(|&x| BigInt::from(x)).collect();
        Self::new(sig, sig.split(&flat)?)
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Vec<BigInt>>) -> Self {
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Vec<BigInt>] {
        &self.blocks
    }

    pub fn concat(&self) -> Vec<BigInt> {
        self.blocks.concat()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().all(Zero::is_zero)
    }

    /// Blockwise sum, for weight vectors of the same shape.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.block_lens() != other.block_lens() {
            return Err(Error::ShapeMismatch("weight vectors of different shapes".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Self { blocks })
    }

    pub fn neg(&self) -> Self {
        Self { blocks: self.blocks.iter().map(|b| b.iter().map(|x| -x).collect()).collect() }
    }

    fn block_lens(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

/// A projected exponent: each block with its last entry dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub coords: Vec<u32>,
}

impl LatticePoint {
    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint { coords: self.coords.iter().map(|&x| BigRational::from_integer(x.into())).collect() }
    }
}

/// An exact rational point of the projected lattice space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&x| BigRational::from_integer(x.into())).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Every exponent vector of the multidegree, in descending lexicographic
/// order of the concatenated tuple.
pub fn enumerate_monomials(sig: &SpaceSignature) -> Vec<ExponentVector> {
    let per_block: Vec<Vec<Vec<u32>>> =
        sig.dims().iter().zip(sig.degrees()).map(|(&m, &k)| compositions(m + 1, k)).collect();
    let mut out = vec![Vec::new()];
    for options in &per_block {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for block in options {
                let mut v: Vec<Vec<u32>> = prefix.clone();
                v.push(block.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(|blocks| ExponentVector { blocks }).collect()
}

/// Compositions of `total` into `parts` nonnegative parts, descending.
fn compositions(parts: usize, total: u32) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `<I, lambda>`, the exact inner product of exponents and weights.
pub fn pairing(exponents: &ExponentVector, weights: &WeightVector) -> Result<BigInt> {
    let (eb, wb) = (exponents.blocks(), weights.blocks());
    if eb.len() != wb.len() || eb.iter().zip(wb).any(|(a, b)| a.len() != b.len()) {
        return Err(Error::ShapeMismatch(format!("monomial {exponents} vs weights {weights}")));
    }
    let mut acc = BigInt::zero();
    for (e, w) in eb.iter().flatten().zip(wb.iter().flatten()) {
        if *e != 0 {
            acc += w * BigInt::from(*e);
        }
    }
    Ok(acc)
}

/// The Hilbert–Mumford function: the minimum pairing over a support.
pub fn mu<'a, I>(support: I, weights: &WeightVector) -> Result<BigInt>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut best: Option<BigInt> = None;
    for e in support {
        let p = pairing(e, weights)?;
        best = Some(match best {
            Some(b) if b <= p => b,
            _ => p,
        });
    }
    best.ok_or(Error::EmptySupport)
}

/// Drops the last exponent of each block.
pub fn xi_project(exponents: &ExponentVector) -> LatticePoint {
    let coords = exponents.blocks().iter().flat_map(|b| b[..b.len() - 1].iter().copied()).collect();
    LatticePoint { coords }
}

/// The centroid: `k_i / (m_i + 1)` repeated `m_i` times for each factor.
pub fn centroid(sig: &SpaceSignature) -> RationalPoint {
    let coords = sig
        .dims()
        .iter()
        .zip(sig.degrees())
        .flat_map(|(&m, &k)| {
            let c = BigRational::new(BigInt::from(k), BigInt::from(m + 1));
            std::iter::repeat_n(c, m)
        })
        .collect();
    RationalPoint { coords }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(d: &[usize], k: &[u32]) -> SpaceSignature {
        SpaceSignature::new(d.to_vec(), k.to_vec()).unwrap()
    }

    fn ev(s: &SpaceSignature, flat: &[u32]) -> ExponentVector {
        ExponentVector::from_concat(s, flat).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(enumerate_monomials(&sig(&[1, 1], &[4, 4])).len(), 25);
        assert_eq!(enumerate_monomials(&sig(&[1, 3], &[1, 2])).len(), 20);
        assert_eq!(sig(&[1, 3], &[1, 2]).lattice_size(), 20);
    }

    #[test]
    fn bilinear_monomials_in_order() {
        let s = sig(&[1, 1], &[1, 1]);
        let got: Vec<Vec<u32>> = enumerate_monomials(&s).iter().map(|e| e.concat()).collect();
        assert_eq!(got, vec![vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]]);
    }

    #[test]
    fn rejects_bad_signatures() {
        assert!(SpaceSignature::new(vec![], vec![]).is_err());
        assert!(SpaceSignature::new(vec![1, 0], vec![1, 1]).is_err());
        assert!(SpaceSignature::new(vec![1], vec![0]).is_err());
        assert!(SpaceSignature::new(vec![1, 1], vec![1]).is_err());
        assert!(SpaceSignature::from_signed(&[1, -1], &[2, 2]).is_err());
    }

    #[test]
    fn pairing_examples() {
        let s = sig(&[1, 1], &[4, 4]);
        let l3 = WeightVector::from_i64(&s, &[3, -3, 1, -1]).unwrap();
        let l1 = WeightVector::from_i64(&s, &[1, -1, 1, -1]).unwrap();
        assert_eq!(pairing(&ev(&s, &[4, 0, 4, 0]), &l3).unwrap(), 16.into());
        assert_eq!(pairing(&ev(&s, &[2, 2, 2, 2]), &l1).unwrap(), 0.into());
        assert_eq!(pairing(&ev(&s, &[3, 1, 1, 3]), &l3).unwrap(), 4.into());
    }

    #[test]
    fn pairing_shape_mismatch() {
        let s = sig(&[1, 1], &[4, 4]);
        let t = sig(&[1, 3], &[1, 2]);
        let w = WeightVector::from_i64(&t, &[1, -1, 1, 0, 0, -1]).unwrap();
        assert!(matches!(pairing(&ev(&s, &[4, 0, 4, 0]), &w), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn mu_single_and_empty() {
        let s = sig(&[1, 1], &[4, 4]);
        let l0 = WeightVector::from_i64(&s, &[1, -1, 0, 0]).unwrap();
        assert_eq!(mu([&ev(&s, &[4, 0, 4, 0])], &l0).unwrap(), 4.into());
        assert_eq!(mu(std::iter::empty(), &l0), Err(Error::EmptySupport));
    }

    #[test]
    fn xi_examples() {
        let s = sig(&[1, 1], &[4, 4]);
        assert_eq!(xi_project(&ev(&s, &[3, 1, 1, 3])).coords, vec![3, 1]);
        assert_eq!(xi_project(&ev(&s, &[0, 4, 0, 4])).coords, vec![0, 0]);
        let t = sig(&[1, 3], &[1, 2]);
        assert_eq!(xi_project(&ev(&t, &[1, 0, 0, 1, 1, 0])).coords, vec![1, 0, 1, 1]);
    }

    #[test]
    fn centroid_examples() {
        assert_eq!(centroid(&sig(&[1, 1], &[4, 4])).coords, vec![rat(2, 1), rat(2, 1)]);
        assert_eq!(centroid(&sig(&[1, 3], &[1, 2])).coords, vec![rat(1, 2); 4]);
        assert_eq!(centroid(&sig(&[2, 1], &[3, 1])).coords, vec![rat(1, 1), rat(1, 1), rat(1, 2)]);
    }

    #[test]
    fn exponent_vector_validation() {
        let s = sig(&[1, 1], &[4, 4]);
        assert!(ExponentVector::from_concat(&s, &[3, 0, 4, 0]).is_err());
        assert!(ExponentVector::from_concat(&s, &[4, 0, 4]).is_err());
    }

    #[test]
    fn factor_symmetries() {
        assert_eq!(sig(&[1, 1], &[4, 4]).factor_symmetries().len(), 2);
        assert_eq!(sig(&[1, 3], &[1, 2]).factor_symmetries(), vec![vec![0, 1]]);
        assert_eq!(sig(&[1, 1], &[1, 2]).factor_symmetries().len(), 1);
    }
}
