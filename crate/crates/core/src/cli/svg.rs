//! Newton-polygon plots for two-dimensional projected lattices.
//!
//! All geometry stays exact; rationals become decimal strings only when
//! written into the SVG attributes below.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{centroid, xi_project, ExponentVector, RationalPoint, SpaceSignature};
use crate::polytope::convex_hull_2d;

/// Screen units per lattice step.
const SCALE: i64 = 100;
const PLACES: usize = 4;

/// `q` rounded half away from zero to `places` decimals, trailing zeros
/// trimmed.
fn decimal(q: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = q.abs() * BigRational::from_integer(scale.clone());
    let (whole, rem) = scaled.numer().div_rem(scaled.denom());
    let rounded = if rem * BigInt::from(2) >= *scaled.denom() { whole + 1 } else { whole };
    let sign = if q.is_negative() && !rounded.is_zero() { "-" } else { "" };
    let (int_part, frac) = rounded.div_rem(&scale);
    let frac = format!("{:0>width$}", frac.to_string(), width = places);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Screen position of a lattice-space coordinate pair; `y` is flipped.
fn screen(p: &RationalPoint, top: u32) -> (String, String) {
    let s = BigRational::from_integer(SCALE.into());
    let x = &p.coords[0] * &s;
    let y = (BigRational::from_integer(top.into()) - &p.coords[1]) * &s;
    (decimal(&x, PLACES), decimal(&y, PLACES))
}

/// Exact hull vertices of the projected support, counter-clockwise.
pub fn hull_2d(support: &[ExponentVector]) -> Vec<RationalPoint> {
    let points: Vec<RationalPoint> = support.iter().map(|e| xi_project(e).to_rational()).collect();
    convex_hull_2d(&points)
}

/// SVG of `xi(support)`, its hull and the centroid. The exact hull vertices
/// are recorded in the root element's `data-vertices` attribute.
pub fn render(sig: &SpaceSignature, support: &[ExponentVector], title: &str) -> Result<String> {
    if sig.projected_dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: sig.projected_dim() });
    }
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let (kx, ky) = match sig.dims() {
        [2] => (sig.degrees()[0], sig.degrees()[0]),
        _ => (sig.degrees()[0], sig.degrees()[1]),
    };
    let hull = hull_2d(support);
    let o = centroid(sig);
    let int = |x: i64| x.to_string();

    let mut s = String::new();
    let (w, h) = ((i64::from(kx) + 2) * SCALE, (i64::from(ky) + 2) * SCALE);
    let vertices: Vec<String> =
        hull.iter().map(|p| p.coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}" data-vertices="{}">"#,
        int(-SCALE),
        int(-SCALE),
        w,
        h,
        w,
        h,
        vertices.join(" ")
    )
    .expect("writing to a string");
    writeln!(s, "  <title>{}</title>", escape(title)).expect("writing to a string");
    writeln!(s, r#"  <rect x="{}" y="{}" width="{w}" height="{h}" fill="white"/>"#, -SCALE, -SCALE)
        .expect("writing to a string");

    writeln!(s, r##"  <g class="lattice" fill="#c8c8c8">"##).expect("writing to a string");
    for x in 0..=kx {
        for y in 0..=ky {
            let (sx, sy) = screen(&RationalPoint::from_integers(&[x.into(), y.into()]), ky);
            writeln!(s, r#"    <circle cx="{sx}" cy="{sy}" r="6"/>"#).expect("writing to a string");
        }
    }
    writeln!(s, "  </g>").expect("writing to a string");

    let pts: Vec<String> = hull
        .iter()
        .map(|p| {
            let (x, y) = screen(p, ky);
            format!("{x},{y}")
        })
        .collect();
    let shape = if hull.len() >= 3 { "polygon" } else { "polyline" };
    writeln!(
        s,
        r##"  <{shape} class="hull" points="{}" fill="#9ecae1" fill-opacity="0.5" stroke="#3182bd" stroke-width="4"/>"##,
        pts.join(" ")
    )
    .expect("writing to a string");

    writeln!(s, r#"  <g class="support" fill="black">"#).expect("writing to a string");
    let mut seen: Vec<RationalPoint> = support.iter().map(|e| xi_project(e).to_rational()).collect();
    seen.sort();
    seen.dedup();
    for p in &seen {
        let (x, y) = screen(p, ky);
        writeln!(s, r#"    <circle cx="{x}" cy="{y}" r="10"/>"#).expect("writing to a string");
    }
    writeln!(s, "  </g>").expect("writing to a string");

    let (cx, cy) = screen(&o, ky);
    writeln!(s, r#"  <circle class="centroid" cx="{cx}" cy="{cy}" r="14" fill="red" data-point="{o}"/>"#)
        .expect("writing to a string");
    writeln!(s, "</svg>").expect("writing to a string");
    Ok(s)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Reads the `data-vertices` attribute back into exact points.
pub fn parse_vertices(svg: &str) -> Option<Vec<RationalPoint>> {
    let start = svg.find("data-vertices=\"")? + "data-vertices=\"".len();
    let end = start + svg[start..].find('"')?;
    svg[start..end]
        .split_whitespace()
        .map(|v| v.split(',').map(|x| x.parse::<BigRational>().ok()).collect::<Option<Vec<_>>>().map(RationalPoint::new))
        .collect()
}
