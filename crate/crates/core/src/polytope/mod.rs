//! Exact convex geometry of projected supports: hull membership with
//! certificates, relative-interior and interior tests, and the passage
//! between separating functionals and one-parameter subgroups.

mod hull2d;
mod simplex;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{centroid, xi_project, ExponentVector, RationalPoint, SpaceSignature, WeightVector};
use crate::oneps::{normalize, OneParamSubgroup};
use simplex::{solve, LpOutcome};

pub use hull2d::convex_hull_2d;

type Q = BigRational;

/// `Phi(x) = linear . x + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineFunctional {
    pub linear: Vec<Q>,
    pub constant: Q,
}

impl AffineFunctional {
    pub fn new(linear: Vec<Q>, constant: Q) -> Self {
        Self { linear, constant }
    }

    pub fn from_integers(linear: &[i64], constant: i64) -> Self {
        Self {
            linear: linear.iter().map(|&a| Q::from_integer(a.into())).collect(),
            constant: Q::from_integer(constant.into()),
        }
    }

    pub fn dim(&self) -> usize {
        self.linear.len()
    }

    pub fn eval(&self, p: &RationalPoint) -> Result<Q> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: p.dim() });
        }
        Ok(self.linear.iter().zip(&p.coords).map(|(a, x)| a * x).sum::<Q>() + &self.constant)
    }

    /// Whether this is a separator for `(points, q)`: zero at `q` and
    /// strictly positive on every point.
    pub fn separates(&self, points: &[RationalPoint], q: &RationalPoint) -> bool {
        matches!(self.eval(q), Ok(v) if v.is_zero())
            && points.iter().all(|p| matches!(self.eval(p), Ok(v) if v.is_positive()))
    }

    /// The positive multiple with coprime integer coefficients.
    pub fn to_integral(&self) -> Self {
        let all = || self.linear.iter().chain(std::iter::once(&self.constant));
        let lcm = all().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = all().map(|x| (x * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let g = if g.is_zero() { BigInt::one() } else { g };
        let mut coeffs: Vec<Q> = ints.into_iter().map(|x| Q::from_integer(x / &g)).collect();
        let constant = coeffs.pop().expect("constant term");
        Self { linear: coeffs, constant }
    }
}

impl fmt::Display for AffineFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.linear.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = a.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{mag}*") };
            let sep = if first { "" } else { " " };
            let space = if first || sign.is_empty() { "" } else { " " };
            write!(f, "{sep}{sign}{space}{coeff}x{i}")?;
            first = false;
        }
        if first {
            return write!(f, "{}", self.constant);
        }
        if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { "-" } else { "+" };
            write!(f, " {sign} {}", self.constant.abs())?;
        }
        Ok(())
    }
}

/// Outcome of a hull-membership test, with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Convex weights, aligned with the input points, reproducing the query.
    Inside { weights: Vec<Q> },
    /// A separator: zero at the query, positive on every point.
    Outside { separator: AffineFunctional },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside { .. })
    }
}

/// The torus-level stability status of a fixed support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stability {
    Unstable,
    StrictlySemistable,
    Stable,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stability::Unstable => "unstable",
            Stability::StrictlySemistable => "strictly semistable (boundary)",
            Stability::Stable => "stable",
        })
    }
}

/// Centroid criterion applied to one support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidVerdict {
    pub contains: bool,
    pub interior: bool,
    /// Weights are aligned with the support in canonical order.
    pub certificate: Membership,
}

impl CentroidVerdict {
    pub fn stability(&self) -> Stability {
        match (self.contains, self.interior) {
            (false, _) => Stability::Unstable,
            (true, false) => Stability::StrictlySemistable,
            (true, true) => Stability::Stable,
        }
    }

    pub fn separator(&self) -> Option<&AffineFunctional> {
        match &self.certificate {
            Membership::Outside { separator } => Some(separator),
            Membership::Inside { .. } => None,
        }
    }
}

fn check_dims(points: &[RationalPoint], q: &RationalPoint) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    for p in points {
        if p.dim() != q.dim() {
            return Err(Error::DimensionMismatch { expected: q.dim(), got: p.dim() });
        }
    }
    Ok(())
}

/// Rank of the differences `p_i - p_0`.
pub fn affine_rank(points: &[RationalPoint]) -> Result<usize> {
    let (p0, rest) = points.split_first().ok_or(Error::EmptyPointSet)?;
    for p in rest {
        if p.dim() != p0.dim() {
            return Err(Error::DimensionMismatch { expected: p0.dim(), got: p.dim() });
        }
    }
    let diffs = rest.iter().map(|p| p.coords.iter().zip(&p0.coords).map(|(a, b)| a - b).collect());
    Ok(crate::linalg::rank(p0.dim(), diffs))
}

/// Constraint rows `[p_i ; 1]` and right-hand side `[q ; 1]`.
fn combination_system(points: &[RationalPoint], q: &RationalPoint) -> (Vec<Vec<Q>>, Vec<Q>) {
    let mut a: Vec<Vec<Q>> = (0..q.dim()).map(|j| points.iter().map(|p| p.coords[j].clone()).collect()).collect();
    a.push(vec![Q::one(); points.len()]);
    let mut b = q.coords.clone();
    b.push(Q::one());
    (a, b)
}

/// Decides `q in Conv(points)` and returns a certificate either way.
pub fn contains(points: &[RationalPoint], q: &RationalPoint) -> Result<Membership> {
    check_dims(points, q)?;
    let (a, b) = combination_system(points, q);
    match solve(&a, &b, &vec![Q::zero(); points.len()]) {
        LpOutcome::Optimal { x, .. } => Ok(Membership::Inside { weights: x }),
        LpOutcome::Infeasible { ray } => {
            // a^T y <= 0 on every column [p; 1] and [q; 1] . y > 0 give
            // y_lin . p < y_lin . q, so Phi(x) = y_lin . (q - x) separates.
            let linear: Vec<Q> = ray[..q.dim()].iter().map(|y| -y).collect();
            let constant: Q = ray[..q.dim()].iter().zip(&q.coords).map(|(y, c)| y * c).sum();
            let separator = AffineFunctional { linear, constant }.to_integral();
            if !separator.separates(points, q) {
                return Err(Error::Inconsistency(format!("LP dual does not separate {q} from the points")));
            }
            Ok(Membership::Outside { separator })
        }
        LpOutcome::Unbounded => unreachable!("feasibility problem has a zero objective"),
    }
}

/// Whether `q` is a combination of the (deduplicated) points with every
/// weight strictly positive.
pub fn relint_contains(points: &[RationalPoint], q: &RationalPoint) -> Result<bool> {
    check_dims(points, q)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    // Weights w_i = eps + u_i with u_i, eps >= 0; maximise eps.
    let n = pts.len();
    let (mut a, b) = combination_system(&pts, q);
    for row in a.iter_mut() {
        let s: Q = row.iter().sum();
        row.push(s);
    }
    let mut c = vec![Q::zero(); n];
    c.push(Q::one());
    match solve(&a, &b, &c) {
        LpOutcome::Optimal { value, .. } => Ok(value.is_positive()),
        LpOutcome::Infeasible { .. } => Ok(false),
        LpOutcome::Unbounded => unreachable!("eps is bounded by 1/n"),
    }
}

/// Interior in the ambient `d`-space: relative interior of a full-rank hull.
pub fn interior_contains(points: &[RationalPoint], q: &RationalPoint, d: usize) -> Result<bool> {
    check_dims(points, q)?;
    if q.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: q.dim() });
    }
    Ok(affine_rank(points)? == d && relint_contains(points, q)?)
}

/// The centroid criterion on a fixed support.
pub fn centroid_classify<'a, I>(support: I, sig: &SpaceSignature) -> Result<CentroidVerdict>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut support: Vec<&ExponentVector> = support.into_iter().collect();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    support.sort_by(|a, b| b.cmp(a));
    support.dedup();
    for e in &support {
        ExponentVector::new(sig, e.blocks().to_vec())?;
    }
    let points: Vec<RationalPoint> = support.iter().map(|e| xi_project(e).to_rational()).collect();
    let o = centroid(sig);
    let certificate = contains(&points, &o)?;
    let interior = certificate.is_inside() && interior_contains(&points, &o, sig.projected_dim())?;
    Ok(CentroidVerdict { contains: certificate.is_inside(), interior, certificate })
}

fn block_ranges(sig: &SpaceSignature) -> Vec<std::ops::Range<usize>> {
    let mut at = 0;
    sig.dims()
        .iter()
        .map(|&m| {
            at += m;
            at - m..at
        })
        .collect()
}

/// The raw integer weights attached to a functional vanishing at the
/// centroid, satisfying `<I, r> = C * Phi'(xi(I))` for every monomial, where
/// `C = prod(m_u + 1)` and `Phi'` is `phi` with denominators cleared.
pub fn functional_to_weights(phi: &AffineFunctional, sig: &SpaceSignature) -> Result<WeightVector> {
    let d = sig.projected_dim();
    if phi.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: phi.dim() });
    }
    let at_o = phi.eval(&centroid(sig))?;
    if !at_o.is_zero() {
        return Err(Error::NotCentred(at_o.to_string()));
    }
    let lcm = phi.linear.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let alpha: Vec<BigInt> = phi.linear.iter().map(|x| (x * &lcm).to_integer()).collect();
    let c: BigInt = sig.dims().iter().map(|&m| BigInt::from(m + 1)).product();
    let blocks = sig
        .dims()
        .iter()
        .zip(block_ranges(sig))
        .map(|(&m, range)| {
            let a_t: BigInt = alpha[range.clone()].iter().sum();
            let shift = &c / BigInt::from(m + 1) * a_t;
            let mut block: Vec<BigInt> = alpha[range].iter().map(|x| &c * x - &shift).collect();
            block.push(-shift);
            block
        })
        .collect();
    let w = WeightVector::new(sig, blocks)?;
    if w.is_zero() {
        return Err(Error::TrivialSubgroup);
    }
    Ok(w)
}

/// Normalised subgroup in the direction of [`functional_to_weights`].
pub fn functional_to_oneps(phi: &AffineFunctional, sig: &SpaceSignature) -> Result<OneParamSubgroup> {
    let w = functional_to_weights(phi, sig)?;
    let raw: Vec<Vec<Q>> = w.blocks().iter().map(|b| b.iter().cloned().map(Q::from_integer).collect()).collect();
    normalize(sig, &raw)
}

/// The affine function `Psi` on the projected lattice with
/// `Psi(xi(I)) = <I, w>` for every monomial. It vanishes at the centroid
/// whenever every block of `w` sums to zero.
pub fn oneps_to_functional(w: &impl AsRef<WeightVector>, sig: &SpaceSignature) -> Result<AffineFunctional> {
    let w = w.as_ref();
    sig.check_blocks(w.blocks())?;
    let mut linear = Vec::with_capacity(sig.projected_dim());
    let mut constant = BigInt::zero();
    for (block, &k) in w.blocks().iter().zip(sig.degrees()) {
        let last = &block[block.len() - 1];
        linear.extend(block[..block.len() - 1].iter().map(|r| Q::from_integer(r - last)));
        constant += last * BigInt::from(k);
    }
    Ok(AffineFunctional { linear, constant: Q::from_integer(constant) })
}

impl AsRef<WeightVector> for WeightVector {
    fn as_ref(&self) -> &WeightVector {
        self
    }
}

/// Vertices of `Conv(points)` in any dimension, in sorted order: the
/// distinct points not in the hull of the others.
pub fn hull_vertices(points: &[RationalPoint]) -> Result<Vec<RationalPoint>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut out = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<RationalPoint> =
            pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
        if others.is_empty() || !contains(&others, p)?.is_inside() {
            out.push(p.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::destab::{n_oplus, n_plus};
    use crate::lattice::enumerate_monomials;

    fn pts(v: &[&[i64]]) -> Vec<RationalPoint> {
        v.iter().map(|x| RationalPoint::from_integers(x)).collect()
    }

    fn half(n: i64) -> Q {
        Q::new(n.into(), 2.into())
    }

    fn sig44() -> SpaceSignature {
        SpaceSignature::new(vec![1, 1], vec![4, 4]).unwrap()
    }

    #[test]
    fn affine_ranks() {
        assert_eq!(affine_rank(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap(), 2);
        assert_eq!(affine_rank(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap(), 1);
        assert_eq!(affine_rank(&pts(&[&[3, 3]])).unwrap(), 0);
        assert_eq!(affine_rank(&[]), Err(Error::EmptyPointSet));
    }

    #[test]
    fn membership_certificates() {
        let p = pts(&[&[0, 0], &[2, 0], &[0, 2]]);
        let q = RationalPoint::new(vec![half(1), half(1)]);
        let Membership::Inside { weights } = contains(&p, &q).unwrap() else { panic!() };
        assert_eq!(weights.iter().sum::<Q>(), Q::one());
        assert!(weights.iter().all(|w| !w.is_negative()));
        let far = RationalPoint::from_integers(&[2, 2]);
        let Membership::Outside { separator } = contains(&p, &far).unwrap() else { panic!() };
        assert!(separator.separates(&p, &far));
    }

    #[test]
    fn single_point_membership() {
        let p = pts(&[&[1, 3]]);
        assert!(contains(&p, &p[0]).unwrap().is_inside());
        assert!(!contains(&p, &RationalPoint::from_integers(&[1, 2])).unwrap().is_inside());
        assert!(relint_contains(&p, &p[0]).unwrap());
    }

    #[test]
    fn relint_examples() {
        let p = pts(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert!(relint_contains(&p, &RationalPoint::new(vec![half(1), half(1)])).unwrap());
        assert!(!relint_contains(&p, &RationalPoint::from_integers(&[1, 0])).unwrap());
        let dup = pts(&[&[0, 0], &[0, 0], &[2, 0]]);
        assert!(relint_contains(&dup, &RationalPoint::from_integers(&[1, 0])).unwrap());
    }

    #[test]
    fn interior_examples() {
        let s = sig44();
        let all: Vec<RationalPoint> = enumerate_monomials(&s).iter().map(|e| xi_project(e).to_rational()).collect();
        let o = centroid(&s);
        assert!(interior_contains(&all, &o, 2).unwrap());
        let line = pts(&[&[0, 0], &[4, 4]]);
        assert!(!interior_contains(&line, &o, 2).unwrap());
        assert!(contains(&line, &o).unwrap().is_inside());
    }

    #[test]
    fn dimension_mismatch() {
        let p = pts(&[&[0, 0], &[1, 0, 0]]);
        assert!(matches!(
            contains(&p, &RationalPoint::from_integers(&[0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn figure_verdicts() {
        let s = sig44();
        let l0 = OneParamSubgroup::from_i64(&s, &[1, -1, 0, 0]).unwrap();
        let l4 = OneParamSubgroup::from_i64(&s, &[4, -4, 3, -3]).unwrap();
        let v0 = centroid_classify(n_oplus(&l0, &s).unwrap().support(), &s).unwrap();
        assert!(v0.contains && !v0.interior);
        let v4 = centroid_classify(n_plus(&l4, &s).unwrap().support(), &s).unwrap();
        assert_eq!(v4.stability(), Stability::Unstable);
        let full = enumerate_monomials(&s);
        assert_eq!(centroid_classify(&full, &s).unwrap().stability(), Stability::Stable);
    }

    #[test]
    fn functional_to_oneps_examples() {
        let s = sig44();
        let phi0 = AffineFunctional::from_integers(&[1, 0], -2);
        let w = functional_to_weights(&phi0, &s).unwrap();
        assert_eq!(w, WeightVector::from_i64(&s, &[2, -2, 0, 0]).unwrap());
        let phi1 = AffineFunctional::from_integers(&[1, 1], -4);
        let l1 = functional_to_oneps(&phi1, &s).unwrap();
        assert_eq!(l1, OneParamSubgroup::from_i64(&s, &[1, -1, 1, -1]).unwrap());
        assert_eq!(functional_to_oneps(&AffineFunctional::from_integers(&[0, 0], 0), &s), Err(Error::TrivialSubgroup));
        assert!(matches!(
            functional_to_oneps(&AffineFunctional::from_integers(&[1, 0], 0), &s),
            Err(Error::NotCentred(_))
        ));
    }

    #[test]
    fn oneps_to_functional_examples() {
        let s = sig44();
        let l1 = OneParamSubgroup::from_i64(&s, &[1, -1, 1, -1]).unwrap();
        assert_eq!(oneps_to_functional(&l1, &s).unwrap(), AffineFunctional::from_integers(&[2, 2], -8));
        let l0 = OneParamSubgroup::from_i64(&s, &[1, -1, 0, 0]).unwrap();
        assert_eq!(oneps_to_functional(&l0, &s).unwrap(), AffineFunctional::from_integers(&[2, 0], -4));
    }

    #[test]
    fn hull_vertices_of_a_block() {
        let mut p = Vec::new();
        for x in 2..=4 {
            for y in 0..=4 {
                p.push(RationalPoint::from_integers(&[x, y]));
            }
        }
        assert_eq!(hull_vertices(&p).unwrap(), pts(&[&[2, 0], &[2, 4], &[4, 0], &[4, 4]]));
    }

    #[test]
    fn functional_display() {
        assert_eq!(AffineFunctional::from_integers(&[2, 2], -8).to_string(), "2*x0 + 2*x1 - 8");
        assert_eq!(AffineFunctional::from_integers(&[-1, 0, 1], 0).to_string(), "-x0 + x2");
        assert_eq!(AffineFunctional::from_integers(&[0], 3).to_string(), "3");
    }
}
