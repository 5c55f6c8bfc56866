//! Serialised forms of reports and support files.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::destab::{MonomialFamily, Origin};
use crate::error::{Error, Result};
use crate::lattice::{xi_project, ExponentVector, RationalPoint, SpaceSignature};
use crate::oneps::OneParamSubgroup;
use crate::pipeline::{StabilityReport, SupportCheck, Witness};
use crate::polytope::{hull_vertices, AffineFunctional, CentroidVerdict, Membership};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureDoc {
    pub dims: Vec<usize>,
    pub degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FundamentalDoc {
    pub count: usize,
    pub subgroups: Vec<Vec<Number>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OriginDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<Number>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalDoc {
    pub linear: Vec<String>,
    pub constant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub contains: bool,
    pub interior: bool,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separator: Option<FunctionalDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub id: String,
    pub lambda: Vec<Number>,
    pub origins: Vec<OriginDoc>,
    pub size: usize,
    pub monomials: Vec<Vec<u32>>,
    pub hull_vertices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnihilatorDoc {
    pub family: String,
    pub lambda: Vec<Number>,
    pub size: usize,
    pub monomials: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsDoc {
    pub semistable: usize,
    pub unstable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedupDoc {
    pub symmetry: bool,
    pub before: CountsDoc,
    pub after: CountsDoc,
}

/// A classification report in its interchange form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub signature: SignatureDoc,
    pub fundamental: FundamentalDoc,
    pub semistable_families: Vec<FamilyDoc>,
    pub unstable_families: Vec<FamilyDoc>,
    pub annihilators: Vec<AnnihilatorDoc>,
    pub dedup: DedupDoc,
}

/// `{"dims": [...], "degrees": [...], "support": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportFile {
    pub dims: Vec<i64>,
    pub degrees: Vec<i64>,
    pub support: Vec<Vec<u32>>,
}

impl SupportFile {
    pub fn new(sig: &SpaceSignature, support: &[ExponentVector]) -> Self {
        Self {
            dims: sig.dims().iter().map(|&m| m as i64).collect(),
            degrees: sig.degrees().iter().map(|&k| i64::from(k)).collect(),
            support: support.iter().map(ExponentVector::concat).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<(SpaceSignature, Vec<ExponentVector>)> {
        let file: SupportFile =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(format!("support file: {e}")))?;
        file.resolve()
    }

    pub fn resolve(&self) -> Result<(SpaceSignature, Vec<ExponentVector>)> {
        let sig = SpaceSignature::from_signed(&self.dims, &self.degrees)?;
        let support = self
            .support
            .iter()
            .map(|flat| ExponentVector::from_concat(&sig, flat))
            .collect::<Result<Vec<_>>>()?;
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok((sig, support))
    }
}

pub fn rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    BigRational::from_str(s).ok()
}

pub fn integer(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

pub fn weights(l: &OneParamSubgroup) -> Vec<Number> {
    l.concat().iter().map(integer).collect()
}

pub fn point(p: &RationalPoint) -> Vec<String> {
    p.coords.iter().map(rational).collect()
}

pub fn functional(phi: &AffineFunctional) -> FunctionalDoc {
    FunctionalDoc { linear: phi.linear.iter().map(rational).collect(), constant: rational(&phi.constant) }
}

pub fn verdict(v: &CentroidVerdict) -> VerdictDoc {
    let (weights, separator) = match &v.certificate {
        Membership::Inside { weights } => (Some(weights.iter().map(rational).collect()), None),
        Membership::Outside { separator } => (None, Some(functional(separator))),
    };
    VerdictDoc { contains: v.contains, interior: v.interior, status: v.stability().to_string(), weights, separator }
}

fn origin(o: &Origin) -> OriginDoc {
    OriginDoc { kind: o.kind().to_string(), lambda: o.subgroup().map(weights) }
}

fn monomials(f: &MonomialFamily) -> Vec<Vec<u32>> {
    f.support().iter().map(ExponentVector::concat).collect()
}

fn family(id: String, f: &MonomialFamily, v: Option<&CentroidVerdict>) -> FamilyDoc {
    let points: Vec<RationalPoint> = f.support().iter().map(|e| xi_project(e).to_rational()).collect();
    let hull = hull_vertices(&points).expect("family points share a dimension");
    FamilyDoc {
        id,
        lambda: f.representative().map(weights).unwrap_or_default(),
        origins: f.origins().iter().map(origin).collect(),
        size: f.len(),
        monomials: monomials(f),
        hull_vertices: hull.iter().map(point).collect(),
        verdict: v.map(verdict),
    }
}

pub fn semistable_id(i: usize) -> String {
    format!("oplus-{i}")
}

pub fn unstable_id(i: usize) -> String {
    format!("plus-{i}")
}

impl ReportDocument {
    pub fn from_report(r: &StabilityReport) -> Self {
        let semistable_families = r
            .semistable
            .iter()
            .enumerate()
            .map(|(i, s)| family(semistable_id(i), &s.family, Some(&s.verdict)))
            .collect();
        let unstable_families =
            r.unstable.iter().enumerate().map(|(i, f)| family(unstable_id(i), f, None)).collect();
        let annihilators = r
            .semistable
            .iter()
            .enumerate()
            .filter_map(|(i, s)| {
                s.annihilator.as_ref().map(|a| AnnihilatorDoc {
                    family: semistable_id(i),
                    lambda: weights(s.subgroup()),
                    size: a.len(),
                    monomials: monomials(a),
                })
            })
            .collect();
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            signature: SignatureDoc { dims: r.sig.dims().to_vec(), degrees: r.sig.degrees().to_vec() },
            fundamental: FundamentalDoc {
                count: r.fundamental_count(),
                subgroups: r.fundamental.iter().map(weights).collect(),
            },
            semistable_families,
            unstable_families,
            annihilators,
            dedup: DedupDoc {
                symmetry: r.symmetry_deduped,
                before: CountsDoc { semistable: r.pre_dedup_counts.0, unstable: r.pre_dedup_counts.1 },
                after: CountsDoc { semistable: r.semistable.len(), unstable: r.unstable.len() },
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub permutation: Vec<Vec<usize>>,
    pub lambda: Vec<Number>,
    pub mu: Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub schema_version: u32,
    pub signature: SignatureDoc,
    pub support: Vec<Vec<u32>>,
    pub verdict: VerdictDoc,
    pub witnesses: Vec<WitnessDoc>,
}

fn witness(w: &Witness) -> WitnessDoc {
    WitnessDoc { permutation: w.permutation.clone(), lambda: weights(&w.subgroup), mu: integer(&w.mu) }
}

impl CheckDoc {
    pub fn from_check(sig: &SpaceSignature, c: &SupportCheck) -> Self {
        CheckDoc {
            schema_version: SCHEMA_VERSION,
            signature: SignatureDoc { dims: sig.dims().to_vec(), degrees: sig.degrees().to_vec() },
            support: c.support.iter().map(ExponentVector::concat).collect(),
            verdict: verdict(&c.verdict),
            witnesses: c.witnesses.iter().map(witness).collect(),
        }
    }
}

/// Canonical JSON: sorted keys, two-space indent, trailing LF.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialise");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialise");
    s.push('\n');
    s
}
