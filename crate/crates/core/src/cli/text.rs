//! Human-readable tables and CSV rows.

use std::fmt::Write as _;

use crate::destab::MonomialFamily;
use crate::error::{Error, Result};
use crate::lattice::{centroid, ExponentVector, SpaceSignature};
use crate::oneps::OneParamSubgroup;
use crate::pipeline::{StabilityReport, SupportCheck};
use crate::polytope::{CentroidVerdict, Membership};

use super::document::{semistable_id, unstable_id};

const LETTERS: [&str; 4] = ["x", "y", "z", "w"];

/// Name of a monomial: factor variables `x, y, z, w`, then `t4_i`, ...
pub fn monomial_name(e: &ExponentVector) -> String {
    let mut s = String::new();
    for (t, block) in e.blocks().iter().enumerate() {
        for (i, &p) in block.iter().enumerate() {
            if p == 0 {
                continue;
            }
            match LETTERS.get(t) {
                Some(l) => write!(s, "{l}{i}"),
                None => write!(s, "t{t}_{i}"),
            }
            .expect("writing to a string");
            if p > 1 {
                write!(s, "^{p}").expect("writing to a string");
            }
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

fn names(support: &[ExponentVector]) -> String {
    support.iter().map(monomial_name).collect::<Vec<_>>().join(" ")
}

pub fn fundamental_text(sig: &SpaceSignature, set: &[OneParamSubgroup]) -> String {
    let mut s = format!("signature: {sig}\nfundamental set: {} subgroups\n", set.len());
    for (i, l) in set.iter().enumerate() {
        writeln!(s, "  {i:>4}  {l}").expect("writing to a string");
    }
    s
}

fn verdict_line(v: &CentroidVerdict) -> String {
    format!("{} (contains={}, interior={})", v.stability(), v.contains, v.interior)
}

fn family_block(s: &mut String, id: &str, f: &MonomialFamily, extra: &str) {
    let lambda = f.representative().map_or_else(|| "-".to_string(), ToString::to_string);
    writeln!(s, "  [{id}] lambda = {lambda}, {} monomials{extra}", f.len()).expect("writing to a string");
    let others: Vec<String> = f.origins().iter().skip(1).filter_map(|o| o.subgroup()).map(|l| l.to_string()).collect();
    if !others.is_empty() {
        writeln!(s, "      also from {}", others.join(", ")).expect("writing to a string");
    }
    writeln!(s, "      {}", names(f.support())).expect("writing to a string");
}

fn header(r: &StabilityReport) -> String {
    let dedup = if r.symmetry_deduped { "on" } else { "off" };
    format!(
        "signature: {}\nfundamental set: {} subgroups\nsymmetry dedup: {dedup} ({} semistable, {} unstable maximal families before dedup)\n",
        r.sig,
        r.fundamental_count(),
        r.pre_dedup_counts.0,
        r.pre_dedup_counts.1
    )
}

fn families_section(s: &mut String, r: &StabilityReport) {
    writeln!(s, "\nmaximal semi-destabilised families N⊕ ({}):", r.semistable.len()).expect("writing to a string");
    for (i, f) in r.semistable.iter().enumerate() {
        family_block(s, &semistable_id(i), &f.family, &format!(", {}", verdict_line(&f.verdict)));
    }
    writeln!(s, "\nmaximal destabilised families N+ ({}):", r.unstable.len()).expect("writing to a string");
    for (i, f) in r.unstable.iter().enumerate() {
        family_block(s, &unstable_id(i), f, "");
    }
}

fn annihilators_section(s: &mut String, r: &StabilityReport) {
    writeln!(s, "\nannihilators Ann(lambda) of the semistable families:").expect("writing to a string");
    for (i, f) in r.semistable.iter().enumerate() {
        if let Some(a) = &f.annihilator {
            writeln!(s, "  [{}] lambda = {}, {} monomials", semistable_id(i), f.subgroup(), a.len())
                .expect("writing to a string");
            writeln!(s, "      {}", names(a.support())).expect("writing to a string");
        }
    }
}

pub fn families_text(r: &StabilityReport) -> String {
    let mut s = header(r);
    families_section(&mut s, r);
    s
}

pub fn annihilators_text(r: &StabilityReport) -> String {
    let mut s = header(r);
    annihilators_section(&mut s, r);
    s
}

pub fn report_text(r: &StabilityReport) -> String {
    let mut s = header(r);
    families_section(&mut s, r);
    annihilators_section(&mut s, r);
    s
}

pub fn centroid_text(sig: &SpaceSignature) -> String {
    format!("signature: {sig}\ncentroid: {}\n", centroid(sig))
}

fn certificate_lines(s: &mut String, support: &[ExponentVector], v: &CentroidVerdict) {
    match &v.certificate {
        Membership::Inside { weights } => {
            writeln!(s, "convex combination:").expect("writing to a string");
            for (e, w) in support.iter().zip(weights) {
                if !num_traits::Zero::is_zero(w) {
                    writeln!(s, "  {w} * {}", monomial_name(e)).expect("writing to a string");
                }
            }
        }
        Membership::Outside { separator } => {
            writeln!(s, "separating functional: {separator}").expect("writing to a string");
        }
    }
}

pub fn verdict_text(sig: &SpaceSignature, support: &[ExponentVector], v: &CentroidVerdict) -> String {
    let mut s = centroid_text(sig);
    writeln!(s, "support: {}", names(support)).expect("writing to a string");
    writeln!(s, "verdict: {}", verdict_line(v)).expect("writing to a string");
    certificate_lines(&mut s, support, v);
    s
}

pub fn check_text(sig: &SpaceSignature, c: &SupportCheck) -> String {
    let mut s = verdict_text(sig, &c.support, &c.verdict);
    match c.best_witness() {
        None => writeln!(s, "witnesses: none (mu < 0 for every permutation and subgroup)"),
        Some(w) => writeln!(
            s,
            "witnesses: {} with mu > 0, {} with mu = 0\nbest witness: lambda = {} under permutation {:?}, mu = {}",
            c.destabilising().count(),
            c.boundary().count(),
            w.subgroup,
            w.permutation,
            w.mu
        ),
    }
    .expect("writing to a string");
    s
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::MalformedInput(format!("csv: {e}"))
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

pub fn fundamental_csv(set: &[OneParamSubgroup]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["index", "lambda"]).map_err(csv_error)?;
    for (i, l) in set.iter().enumerate() {
        w.write_record([i.to_string(), l.to_string()]).map_err(csv_error)?;
    }
    csv_finish(w)
}

/// One row per monomial: `family, kind, lambda, monomial, exponents`.
pub fn families_csv<'a>(families: impl IntoIterator<Item = (String, &'a str, &'a MonomialFamily)>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["family", "kind", "lambda", "monomial", "exponents"]).map_err(csv_error)?;
    for (id, kind, f) in families {
        let lambda = f.representative().map_or_else(String::new, ToString::to_string);
        for e in f.support() {
            w.write_record([id.as_str(), kind, &lambda, &monomial_name(e), &e.to_string()]).map_err(csv_error)?;
        }
    }
    csv_finish(w)
}

pub fn report_families(r: &StabilityReport, with_ann: bool) -> Vec<(String, &'static str, &MonomialFamily)> {
    let mut out = Vec::new();
    for (i, f) in r.semistable.iter().enumerate() {
        out.push((semistable_id(i), "oplus", &f.family));
    }
    for (i, f) in r.unstable.iter().enumerate() {
        out.push((unstable_id(i), "plus", f));
    }
    if with_ann {
        for (i, f) in r.semistable.iter().enumerate() {
            if let Some(a) = &f.annihilator {
                out.push((semistable_id(i), "ann", a));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_names() {
        let s = SpaceSignature::new(vec![1, 3], vec![1, 2]).unwrap();
        let e = ExponentVector::from_concat(&s, &[1, 0, 2, 0, 0, 0]).unwrap();
        assert_eq!(monomial_name(&e), "x0y0^2");
        let e = ExponentVector::from_concat(&s, &[0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(monomial_name(&e), "x1y1y3");
        let many = SpaceSignature::new(vec![1; 5], vec![1; 5]).unwrap();
        let e = ExponentVector::from_concat(&many, &[1, 0, 1, 0, 1, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(monomial_name(&e), "x0y0z0w0t4_1");
    }
}
