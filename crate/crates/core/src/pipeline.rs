//! End-to-end classification of a signature and the per-support checker.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::destab::{ann, factor_swap_dedup, maximal_families, n_oplus, n_plus, MonomialFamily};
use crate::error::{Error, Result};
use crate::lattice::{mu, permutations, ExponentVector, SpaceSignature};
use crate::oneps::{fundamental_set, OneParamSubgroup};
use crate::polytope::{centroid_classify, CentroidVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Collapse families related by swapping isomorphic factors.
    pub dedup_symmetry: bool,
    pub parallel: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { dedup_symmetry: true, parallel: true }
    }
}

/// A maximal semi-destabilised family with its centroid verdict and, when
/// the centroid lies in its hull, the annihilator of its subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistableFamily {
    pub family: MonomialFamily,
    pub verdict: CentroidVerdict,
    pub annihilator: Option<MonomialFamily>,
}

impl SemistableFamily {
    pub fn subgroup(&self) -> &OneParamSubgroup {
        self.family.representative().expect("pipeline families carry a subgroup")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub sig: SpaceSignature,
    pub fundamental: Vec<OneParamSubgroup>,
    pub semistable: Vec<SemistableFamily>,
    pub unstable: Vec<MonomialFamily>,
    pub symmetry_deduped: bool,
    /// Numbers of maximal `N⊕` and `N+` families before symmetry dedup.
    pub pre_dedup_counts: (usize, usize),
}

impl StabilityReport {
    pub fn fundamental_count(&self) -> usize {
        self.fundamental.len()
    }

    pub fn annihilators(&self) -> impl Iterator<Item = &MonomialFamily> {
        self.semistable.iter().filter_map(|f| f.annihilator.as_ref())
    }
}

fn map_maybe_par<T: Sync, U: Send>(items: &[T], parallel: bool, f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

/// Fundamental set, maximal `N⊕` and `N+` families, optional symmetry
/// dedup, centroid verdicts and annihilators.
pub fn classify(sig: &SpaceSignature, options: ClassifyOptions) -> StabilityReport {
    let fundamental = fundamental_set(sig, options.parallel);
    let families = |f: fn(&OneParamSubgroup, &SpaceSignature) -> Result<MonomialFamily>| {
        let all = map_maybe_par(&fundamental, options.parallel, |l| f(l, sig).expect("subgroup matches signature"));
        maximal_families(all).expect("one signature")
    };
    let mut oplus = families(n_oplus);
    let mut plus = families(n_plus);
    let pre_dedup_counts = (oplus.len(), plus.len());
    if options.dedup_symmetry {
        oplus = factor_swap_dedup(oplus, sig);
        plus = factor_swap_dedup(plus, sig);
    }
    let semistable = map_maybe_par(&oplus, options.parallel, |family| {
        let verdict = centroid_classify(family.support(), sig).expect("maximal families are nonempty");
        let annihilator = verdict.contains.then(|| {
            let l = family.representative().expect("pipeline families carry a subgroup");
            ann(l, sig).expect("subgroup matches signature")
        });
        SemistableFamily { family: family.clone(), verdict, annihilator }
    });
    StabilityReport {
        sig: sig.clone(),
        fundamental,
        semistable,
        unstable: plus,
        symmetry_deduped: options.dedup_symmetry,
        pre_dedup_counts,
    }
}

/// A permuted subgroup with `mu(pi . S, lambda) >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Per-block coordinate permutation applied to the support.
    pub permutation: Vec<Vec<usize>>,
    pub subgroup: OneParamSubgroup,
    pub mu: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCheck {
    pub support: Vec<ExponentVector>,
    pub verdict: CentroidVerdict,
    /// Sorted by `mu` descending, then permutation, then subgroup.
    pub witnesses: Vec<Witness>,
}

pub fn block_permutations(sig: &SpaceSignature) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for n in sig.block_lens() {
        let perms = permutations(n);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<usize>>| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Torus-level check of one support: the centroid verdict and the finite
/// search over permutations and the fundamental set must agree.
pub fn check_support(support: &[ExponentVector], sig: &SpaceSignature) -> Result<SupportCheck> {
    check_support_with(support, sig, &fundamental_set(sig, true))
}

/// As [`check_support`], reusing a precomputed fundamental set.
pub fn check_support_with(
    support: &[ExponentVector],
    sig: &SpaceSignature,
    fundamental: &[OneParamSubgroup],
) -> Result<SupportCheck> {
    let verdict = centroid_classify(support, sig)?;
    let mut support = support.to_vec();
    support.sort_by(|a, b| b.cmp(a));
    support.dedup();

    let mut witnesses = Vec::new();
    for perm in block_permutations(sig) {
        let moved: Vec<ExponentVector> = support.iter().map(|e| e.permuted(&perm)).collect();
        for l in fundamental {
            let m = mu(&moved, l.weights())?;
            if !m.is_negative() {
                witnesses.push(Witness { permutation: perm.clone(), subgroup: l.clone(), mu: m });
            }
        }
    }
    witnesses.sort_by(|a, b| {
        b.mu.cmp(&a.mu).then_with(|| a.permutation.cmp(&b.permutation)).then_with(|| a.subgroup.cmp(&b.subgroup))
    });

    let any_positive = witnesses.first().is_some_and(|w| w.mu.is_positive());
    let any_nonneg = !witnesses.is_empty();
    if verdict.contains == any_positive || verdict.interior == any_nonneg {
        let mut dump = String::new();
        let _ = write!(
            dump,
            "centroid view contains={} interior={}, search view has mu>0: {}, mu>=0: {}; support:",
            verdict.contains, verdict.interior, any_positive, any_nonneg
        );
        for e in &support {
            let _ = write!(dump, " {e}");
        }
        if let Some(w) = witnesses.first() {
            let _ = write!(dump, "; best witness {} under {:?} with mu {}", w.subgroup, w.permutation, w.mu);
        }
        return Err(Error::Inconsistency(dump));
    }
    Ok(SupportCheck { support, verdict, witnesses })
}

impl SupportCheck {
    /// The witnesses with `mu = 0` or `mu > 0`, whichever decide the verdict.
    pub fn best_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn destabilising(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.mu.is_positive())
    }

    pub fn boundary(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.mu.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_monomials;
    use crate::polytope::Stability;

    fn sig(d: &[usize], k: &[u32]) -> SpaceSignature {
        SpaceSignature::new(d.to_vec(), k.to_vec()).unwrap()
    }

    #[test]
    fn quartic_curves_report_shape() {
        let s = sig(&[1, 1], &[4, 4]);
        let r = classify(&s, ClassifyOptions::default());
        assert_eq!(r.fundamental_count(), 13);
        assert_eq!(r.semistable.len(), 3);
        assert_eq!(r.unstable.len(), 2);
        assert!(r.semistable.iter().all(|f| f.verdict.stability() == Stability::StrictlySemistable));
        assert_eq!(r.annihilators().map(|a| a.len()).collect::<Vec<_>>(), vec![5, 5, 3]);
        assert_eq!(r.pre_dedup_counts, (5, 4));
    }

    #[test]
    fn parallel_and_serial_agree() {
        let s = sig(&[1, 1], &[3, 2]);
        let a = classify(&s, ClassifyOptions { dedup_symmetry: true, parallel: true });
        let b = classify(&s, ClassifyOptions { dedup_symmetry: true, parallel: false });
        assert_eq!(a, b);
    }

    #[test]
    fn x_only_support_is_destabilised() {
        let s = sig(&[1, 1], &[4, 4]);
        let support: Vec<ExponentVector> =
            enumerate_monomials(&s).into_iter().filter(|e| e.blocks()[0][0] == 4).collect();
        let c = check_support(&support, &s).unwrap();
        assert!(!c.verdict.contains);
        let l0 = OneParamSubgroup::from_i64(&s, &[1, -1, 0, 0]).unwrap();
        let w = c.destabilising().find(|w| w.subgroup == l0 && w.permutation == [[0, 1], [0, 1]]).unwrap();
        assert_eq!(w.mu, BigInt::from(4));
    }

    #[test]
    fn full_support_is_stable() {
        let s = sig(&[1, 1], &[2, 2]);
        let c = check_support(&enumerate_monomials(&s), &s).unwrap();
        assert_eq!(c.verdict.stability(), Stability::Stable);
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn empty_and_foreign_supports_rejected() {
        let s = sig(&[1, 1], &[2, 2]);
        assert_eq!(check_support(&[], &s).unwrap_err(), Error::EmptySupport);
        let t = sig(&[1, 1], &[1, 1]);
        let foreign = enumerate_monomials(&t);
        assert!(matches!(check_support(&foreign, &s), Err(Error::OutsideLattice(_))));
    }

    #[test]
    fn block_permutation_count() {
        assert_eq!(block_permutations(&sig(&[1, 3], &[1, 2])).len(), 48);
    }
}
