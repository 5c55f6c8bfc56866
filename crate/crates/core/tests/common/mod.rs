//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use polystab::lattice::{enumerate_monomials, ExponentVector, SpaceSignature};
use polystab::oneps::OneParamSubgroup;

pub fn sig(dims: &[usize], degrees: &[u32]) -> SpaceSignature {
    SpaceSignature::new(dims.to_vec(), degrees.to_vec()).unwrap()
}

pub fn quartic() -> SpaceSignature {
    sig(&[1, 1], &[4, 4])
}

pub fn divisor12() -> SpaceSignature {
    sig(&[1, 3], &[1, 2])
}

pub fn lam(s: &SpaceSignature, w: &[i64]) -> OneParamSubgroup {
    OneParamSubgroup::from_i64(s, w).unwrap()
}

pub fn flat(l: &OneParamSubgroup) -> Vec<i64> {
    l.concat().iter().map(|x| i64::try_from(x).unwrap()).collect()
}

/// Parses fixture monomial names. Upper case `X, Y | Z, W` are the two
/// coordinates of each factor of P1 x P1; lower case `x0, y2, ...` name
/// factor `x, y, z, w` and coordinate index.
pub fn parse_monomial(s: &SpaceSignature, name: &str) -> ExponentVector {
    let mut blocks: Vec<Vec<u32>> = s.dims().iter().map(|&m| vec![0; m + 1]).collect();
    let chars: Vec<char> = name.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        let (t, j) = match c {
            'X' => (0, 0),
            'Y' => (0, 1),
            'Z' => (1, 0),
            'W' => (1, 1),
            'x' | 'y' | 'z' | 'w' => {
                let t = "xyzw".find(c).unwrap();
                let mut j = 0;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    j = j * 10 + chars[i].to_digit(10).unwrap() as usize;
                    i += 1;
                }
                (t, j)
            }
            _ => panic!("bad monomial name {name}"),
        };
        let mut p = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            p = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                p = p * 10 + chars[i].to_digit(10).unwrap();
                i += 1;
            }
        }
        blocks[t][j] += p;
    }
    ExponentVector::new(s, blocks).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn parse_set(s: &SpaceSignature, names: &[&str]) -> BTreeSet<ExponentVector> {
    let set: BTreeSet<ExponentVector> = names.iter().map(|n| parse_monomial(s, n)).collect();
    assert_eq!(set.len(), names.len(), "duplicate monomial in fixture");
    set
}

pub fn as_set(support: &[ExponentVector]) -> BTreeSet<ExponentVector> {
    support.iter().cloned().collect()
}

/// Subgroups named in the quartic curve discussion.
pub const QUARTIC_LAMBDAS: [[i64; 4]; 5] = [[1, -1, 0, 0], [1, -1, 1, -1], [2, -2, 1, -1], [3, -3, 1, -1], [3, -3, 2, -2]];

/// Maximal families for bidegree (4,4): three `N⊕` then two `N+`.
pub const QUARTIC_FAMILIES: [&[&str]; 5] = [
    &[
        "X^4Z^4", "X^4Z^3W", "X^4Z^2W^2", "X^4ZW^3", "X^4W^4", "X^3YZ^4", "X^3YZ^3W", "X^3YZ^2W^2", "X^3YZW^3",
        "X^3YW^4", "X^2Y^2Z^4", "X^2Y^2Z^3W", "X^2Y^2Z^2W^2", "X^2Y^2ZW^3", "X^2Y^2W^4",
    ],
    &[
        "X^4Z^4", "X^4Z^3W", "X^4Z^2W^2", "X^4ZW^3", "X^4W^4", "X^3YZ^4", "X^3YZ^3W", "X^3YZ^2W^2", "X^3YZW^3",
        "X^2Y^2Z^4", "X^2Y^2Z^3W", "X^2Y^2Z^2W^2", "XY^3Z^4", "XY^3Z^3W", "Y^4Z^4",
    ],
    &[
        "X^4Z^4", "X^4Z^3W", "X^4Z^2W^2", "X^4ZW^3", "X^4W^4", "X^3YZ^4", "X^3YZ^3W", "X^3YZ^2W^2", "X^3YZW^3",
        "X^3YW^4", "X^2Y^2Z^4", "X^2Y^2Z^3W", "X^2Y^2Z^2W^2", "XY^3Z^4",
    ],
    &[
        "X^4Z^4", "X^4Z^3W", "X^4Z^2W^2", "X^4ZW^3", "X^4W^4", "X^3YZ^4", "X^3YZ^3W", "X^3YZ^2W^2", "X^3YZW^3",
        "X^3YW^4", "X^2Y^2Z^4", "X^2Y^2Z^3W",
    ],
    &[
        "X^4Z^4", "X^4Z^3W", "X^4Z^2W^2", "X^4ZW^3", "X^4W^4", "X^3YZ^4", "X^3YZ^3W", "X^3YZ^2W^2", "X^3YZW^3",
        "X^2Y^2Z^4", "X^2Y^2Z^3W", "XY^3Z^4",
    ],
];

/// Zero-weight monomials of the three semistable quartic families.
pub const QUARTIC_ANNIHILATORS: [&[&str]; 3] = [
    &["X^2Y^2Z^4", "X^2Y^2Z^3W", "X^2Y^2Z^2W^2", "X^2Y^2ZW^3", "X^2Y^2W^4"],
    &["Y^4Z^4", "XY^3Z^3W", "X^2Y^2Z^2W^2", "X^3YZW^3", "X^4W^4"],
    &["XY^3Z^4", "X^3YW^4", "X^2Y^2Z^2W^2"],
];

/// Subgroups named in the (1,2) divisor discussion.
pub const DIVISOR_LAMBDAS: [[i64; 6]; 5] = [
    [0, 0, 1, 1, -1, -1],
    [2, -2, 1, 1, -1, -1],
    [2, -2, 1, 1, 1, -3],
    [0, 0, 1, 0, 0, -1],
    [2, -2, 3, -1, -1, -1],
];

pub const DIVISOR_FAMILIES: [&[&str]; 5] = [
    &[
        "x0y0^2", "x0y0y1", "x0y0y2", "x0y0y3", "x0y1^2", "x0y1y2", "x0y1y3", "x1y0^2", "x1y0y1", "x1y0y2", "x1y0y3",
        "x1y1^2", "x1y1y2", "x1y1y3",
    ],
    &[
        "x0y0^2", "x0y0y1", "x0y0y2", "x0y0y3", "x0y1^2", "x0y1y2", "x0y1y3", "x0y2^2", "x0y2y3", "x0y3^2", "x1y0^2",
        "x1y0y1", "x1y1^2",
    ],
    &[
        "x0y0^2", "x0y0y1", "x0y0y2", "x0y0y3", "x0y1^2", "x0y1y2", "x0y1y3", "x0y2^2", "x0y2y3", "x1y0^2", "x1y0y1",
        "x1y0y2", "x1y1^2", "x1y1y2", "x1y2^2",
    ],
    &[
        "x0y0^2", "x0y0y1", "x0y0y2", "x0y0y3", "x0y1^2", "x0y1y2", "x0y2^2", "x1y0^2", "x1y0y1", "x1y0y2", "x1y0y3",
        "x1y1^2", "x1y1y2", "x1y2^2",
    ],
    &[
        "x0y0^2", "x0y0y1", "x0y0y2", "x0y0y3", "x0y1^2", "x0y1y2", "x0y1y3", "x0y2^2", "x0y2y3", "x0y3^2", "x1y0^2",
        "x1y0y1", "x1y0y2", "x1y0y3",
    ],
];

pub const DIVISOR_ANNIHILATORS: [&[&str]; 5] = [
    &["x0y1y3", "x0y1y2", "x0y0y3", "x0y0y2", "x1y1y3", "x1y1y2", "x1y0y3", "x1y0y2"],
    &["x0y3^2", "x0y2y3", "x0y2^2", "x1y1^2", "x1y0y1", "x1y0^2"],
    &["x0y2y3", "x0y1y3", "x0y0y3", "x1y2^2", "x1y1y2", "x1y1^2", "x1y0y2", "x1y0y1", "x1y0^2"],
    &["x0y2^2", "x0y1y2", "x0y1^2", "x0y0y3", "x1y2^2", "x1y1y2", "x1y1^2", "x1y0y3"],
    &["x0y3^2", "x0y2y3", "x0y2^2", "x0y1y3", "x0y1y2", "x0y1^2", "x1y0y3", "x1y0y2", "x1y0y1"],
];

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// For P1 x P1 in bidegree (k, l), every wall is `a u + b v = 0` with
/// `|a| <= k`, `|b| <= l`, so the normalised rays `(u,-u|v,-v)` are the
/// primitive `(u, v)` with `0 <= u <= l` and `0 <= v <= k`.
pub fn p1p1_fundamental_oracle(k: i64, l: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for u in 0..=l {
        for v in 0..=k {
            if (u, v) != (0, 0) && gcd(u, v) == 1 {
                out.insert(vec![u, -u, v, -v]);
            }
        }
    }
    out
}

pub fn monomials_i64(s: &SpaceSignature) -> Vec<Vec<i64>> {
    enumerate_monomials(s).iter().map(|e| e.concat().into_iter().map(i64::from).collect()).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All per-block coordinate permutations, applied to concatenated vectors.
pub fn block_perms(s: &SpaceSignature) -> Vec<Vec<usize>> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let mut out = vec![Vec::new()];
    let mut offset = 0;
    for n in s.block_lens() {
        let mut next = Vec::new();
        for prefix in &out {
            for p in perms(n) {
                let mut v: Vec<usize> = prefix.clone();
                v.extend(p.iter().map(|&j| offset + j));
                next.push(v);
            }
        }
        out = next;
        offset += n;
    }
    out
}

/// Exact integer rank by fraction-free elimination.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                let pivot = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - p * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| {
                    let (mut a, mut b) = (g.abs(), x.abs());
                    while b != 0 {
                        (a, b) = (b, a % b);
                    }
                    a
                });
                if g > 1 {
                    for x in m[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact convex hull of integer points by gift wrapping, counter-clockwise
/// from the lowest-x, lowest-y point, collinear points dropped.
pub fn gift_wrap(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let d2 = |a: (i64, i64), b: (i64, i64)| (a.0 - b.0).pow(2) + (a.1 - b.1).pow(2);
    if pts.iter().all(|&p| cross(pts[0], pts[pts.len() - 1], p) == 0) {
        return vec![pts[0], pts[pts.len() - 1]];
    }
    let start = pts[0];
    let mut hull = vec![start];
    let mut current = start;
    loop {
        let mut next = if pts[0] == current { pts[1] } else { pts[0] };
        for &p in &pts {
            if p == current {
                continue;
            }
            let c = cross(current, next, p);
            if c < 0 || (c == 0 && d2(current, p) > d2(current, next)) {
                next = p;
            }
        }
        if next == start {
            break;
        }
        hull.push(next);
        current = next;
    }
    hull
}

/// Closed point-in-polygon test for a counter-clockwise convex polygon (or
/// a segment or point).
pub fn in_convex_polygon(hull: &[(i64, i64)], q: (i64, i64), scale: i64) -> (bool, bool) {
    // Coordinates of `q` are in units of 1/scale; returns (inside, interior).
    let h: Vec<(i64, i64)> = hull.iter().map(|&(x, y)| (x * scale, y * scale)).collect();
    match h.len() {
        1 => (h[0] == q, false),
        2 => {
            let (a, b) = (h[0], h[1]);
            let c = (b.0 - a.0) * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0);
            let within = (q.0 - a.0) * (q.0 - b.0) <= 0 && (q.1 - a.1) * (q.1 - b.1) <= 0;
            (c == 0 && within, false)
        }
        n => {
            let mut strict = true;
            for i in 0..n {
                let (a, b) = (h[i], h[(i + 1) % n]);
                let c = (b.0 - a.0) * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0);
                if c < 0 {
                    return (false, false);
                }
                if c == 0 {
                    strict = false;
                }
            }
            (true, strict)
        }
    }
}
