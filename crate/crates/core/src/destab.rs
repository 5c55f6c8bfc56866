//! Destabilised monomial families: `N+`, `N⊕`, the annihilator, maximality
//! under containment and deduplication under factor-swap symmetry.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_monomials, pairing, ExponentVector, SpaceSignature};
use crate::oneps::OneParamSubgroup;

/// Where a family came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// `N+(λ)`: monomials of strictly positive weight.
    NPlus(OneParamSubgroup),
    /// `N⊕(λ)`: monomials of nonnegative weight.
    NOplus(OneParamSubgroup),
    /// `Ann(λ)`: monomials of zero weight.
    Ann(OneParamSubgroup),
    UserSupplied,
}

impl Origin {
    pub fn subgroup(&self) -> Option<&OneParamSubgroup> {
        match self {
            Origin::NPlus(l) | Origin::NOplus(l) | Origin::Ann(l) => Some(l),
            Origin::UserSupplied => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Origin::NPlus(_) => "plus",
            Origin::NOplus(_) => "oplus",
            Origin::Ann(_) => "ann",
            Origin::UserSupplied => "user",
        }
    }
}

impl Ord for Origin {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.subgroup(), other.subgroup()) {
            (Some(a), Some(b)) => a.cmp(b).then_with(|| self.kind().cmp(other.kind())),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Origin {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A set of monomials of one signature, tagged with the subgroups that
/// produced it. The support is kept in canonical (descending) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialFamily {
    sig: SpaceSignature,
    support: Vec<ExponentVector>,
    origins: Vec<Origin>,
}

impl MonomialFamily {
    /// A user-supplied support. Every monomial must belong to the signature.
    pub fn user(sig: &SpaceSignature, support: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let support = canonical_support(support);
        for e in &support {
            ExponentVector::new(sig, e.blocks().to_vec())?;
        }
        Ok(Self { sig: sig.clone(), support, origins: vec![Origin::UserSupplied] })
    }

    pub fn sig(&self) -> &SpaceSignature {
        &self.sig
    }

    pub fn support(&self) -> &[ExponentVector] {
        &self.support
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }

    /// The first subgroup among the origins in canonical order.
    pub fn representative(&self) -> Option<&OneParamSubgroup> {
        self.origins.iter().find_map(Origin::subgroup)
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.support.binary_search_by(|x| e.cmp(x)).is_ok()
    }
}

fn canonical_support(support: impl IntoIterator<Item = ExponentVector>) -> Vec<ExponentVector> {
    let mut v: Vec<ExponentVector> = support.into_iter().collect();
    v.sort_by(|a, b| b.cmp(a));
    v.dedup();
    v
}

/// Orders supports by the canonical ranks of their monomials, so the
/// support richer in leading-coordinate monomials sorts first.
pub fn support_order(a: &[ExponentVector], b: &[ExponentVector]) -> Ordering {
    a.iter().map(Reverse).cmp(b.iter().map(Reverse))
}

fn filter_family(
    lambda: &OneParamSubgroup,
    sig: &SpaceSignature,
    keep: impl Fn(&num_bigint::BigInt) -> bool,
    origin: Origin,
) -> Result<MonomialFamily> {
    let mut support = Vec::new();
    for e in enumerate_monomials(sig) {
        if keep(&pairing(&e, lambda.weights())?) {
            support.push(e);
        }
    }
    Ok(MonomialFamily { sig: sig.clone(), support, origins: vec![origin] })
}

/// `N+(λ) = {I : <I, λ> > 0}`.
pub fn n_plus(lambda: &OneParamSubgroup, sig: &SpaceSignature) -> Result<MonomialFamily> {
    filter_family(lambda, sig, |p| p.is_positive(), Origin::NPlus(lambda.clone()))
}

/// `N⊕(λ) = {I : <I, λ> >= 0}`.
pub fn n_oplus(lambda: &OneParamSubgroup, sig: &SpaceSignature) -> Result<MonomialFamily> {
    filter_family(lambda, sig, |p| !p.is_negative(), Origin::NOplus(lambda.clone()))
}

/// `Ann(λ) = {I : <I, λ> = 0}`.
pub fn ann(lambda: &OneParamSubgroup, sig: &SpaceSignature) -> Result<MonomialFamily> {
    filter_family(lambda, sig, |p| p.is_zero(), Origin::Ann(lambda.clone()))
}

/// Whether `support` is contained in the family's support.
pub fn is_subset_of_family(support: &[ExponentVector], family: &MonomialFamily) -> bool {
    is_sorted_subset(&canonical_support(support.iter().cloned()), &family.support)
}

/// Merge scan over two supports in canonical order.
fn is_sorted_subset(small: &[ExponentVector], big: &[ExponentVector]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    'outer: for e in small {
        for x in it.by_ref() {
            match e.cmp(x) {
                Ordering::Equal => continue 'outer,
                Ordering::Less => continue,
                Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

fn sort_families(families: &mut [MonomialFamily]) {
    families.sort_by(|a, b| a.origins.cmp(&b.origins).then_with(|| support_order(&a.support, &b.support)));
}

/// Keeps the families whose support is not strictly contained in another
/// one. Equal supports collapse into one family carrying all origins.
pub fn maximal_families(families: Vec<MonomialFamily>) -> Result<Vec<MonomialFamily>> {
    let Some(sig) = families.first().map(|f| f.sig.clone()) else {
        return Ok(Vec::new());
    };
    if families.iter().any(|f| f.sig != sig) {
        return Err(Error::MixedSignatures);
    }
    let mut merged: BTreeMap<Vec<ExponentVector>, Vec<Origin>> = BTreeMap::new();
    for f in families {
        merged.entry(f.support).or_default().extend(f.origins);
    }
    let supports: Vec<&Vec<ExponentVector>> = merged.keys().collect();
    let mut out: Vec<MonomialFamily> = merged
        .iter()
        .filter(|(s, _)| !supports.iter().any(|o| o.len() > s.len() && is_sorted_subset(s, o)))
        .map(|(s, origins)| {
            let mut origins = origins.clone();
            origins.sort();
            origins.dedup();
            MonomialFamily { sig: sig.clone(), support: s.clone(), origins }
        })
        .collect();
    sort_families(&mut out);
    Ok(out)
}

/// Collapses families that are images of each other under a permutation of
/// isomorphic factors, keeping the member with the least support.
pub fn factor_swap_dedup(families: Vec<MonomialFamily>, sig: &SpaceSignature) -> Vec<MonomialFamily> {
    let syms = sig.factor_symmetries();
    if syms.len() <= 1 {
        return families;
    }
    let orbit_key = |support: &[ExponentVector]| -> Vec<ExponentVector> {
        syms.iter()
            .map(|p| canonical_support(support.iter().map(|e| e.with_factors_permuted(p))))
            .min_by(|a, b| support_order(a, b))
            .expect("identity is always a symmetry")
    };
    let mut orbits: BTreeMap<Vec<ExponentVector>, MonomialFamily> = BTreeMap::new();
    for f in families {
        let key = orbit_key(&f.support);
        match orbits.get(&key) {
            Some(best) if support_order(&best.support, &f.support) != Ordering::Greater => {}
            _ => {
                orbits.insert(key, f);
            }
        }
    }
    let mut out: Vec<MonomialFamily> = orbits.into_values().collect();
    sort_families(&mut out);
    out
}
