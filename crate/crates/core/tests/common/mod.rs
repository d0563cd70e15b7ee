//! Brute-force oracles written directly against rational arithmetic, plus
//! random instance generation shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use esgame_core::rational::frac;
use esgame_core::{Point, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

/// Integer copy of a point set (scaled by the common denominator) so the
/// brute-force searches run on exact machine integers.
pub struct Scaled {
    pub points: Vec<Point>,
    xy: Vec<(i128, i128)>,
}

impl Scaled {
    pub fn new(points: &[Point]) -> Scaled {
        let mut den = BigInt::one();
        for p in points {
            den = den.lcm(p.x.denom()).lcm(p.y.denom());
        }
        let conv = |r: &Rational| -> i128 {
            let v = r.numer() * (&den / r.denom());
            v.to_i128().expect("coordinates fit in i128")
        };
        let xy = points.iter().map(|p| (conv(&p.x), conv(&p.y))).collect();
        Scaled { points: points.to_vec(), xy }
    }

    pub fn len(&self) -> usize {
        self.xy.len()
    }

    pub fn cross(&self, o: usize, a: usize, b: usize) -> i128 {
        let (o, a, b) = (self.xy[o], self.xy[a], self.xy[b]);
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    }

    /// Strictly inside triangle `abc`.
    pub fn in_triangle(&self, p: usize, a: usize, b: usize, c: usize) -> bool {
        let s = self.cross(a, b, c).signum();
        self.cross(a, b, p).signum() == s && self.cross(b, c, p).signum() == s && self.cross(c, a, p).signum() == s
    }

    /// Hull vertices of `subset`: members not inside any triangle of others.
    pub fn hull_of(&self, subset: &[usize]) -> Vec<usize> {
        let m = subset.len();
        let mut out = Vec::new();
        'p: for &p in subset {
            for a in 0..m {
                for b in a + 1..m {
                    for c in b + 1..m {
                        let (a, b, c) = (subset[a], subset[b], subset[c]);
                        if p != a && p != b && p != c && self.in_triangle(p, a, b, c) {
                            continue 'p;
                        }
                    }
                }
            }
            out.push(p);
        }
        out
    }

    pub fn set(&self, idx: &[usize]) -> BTreeSet<Point> {
        idx.iter().map(|&i| self.points[i].clone()).collect()
    }
}

pub fn general_position(points: &[Point]) -> bool {
    let s = Scaled::new(points);
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return false;
            }
            for k in j + 1..n {
                if s.cross(i, j, k) == 0 {
                    return false;
                }
            }
        }
    }
    true
}

pub fn hull_set(points: &[Point]) -> BTreeSet<Point> {
    let s = Scaled::new(points);
    let all: Vec<usize> = (0..s.len()).collect();
    s.set(&s.hull_of(&all))
}

pub fn layer_sets(points: &[Point]) -> Vec<BTreeSet<Point>> {
    let s = Scaled::new(points);
    let mut rest: Vec<usize> = (0..s.len()).collect();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let h = s.hull_of(&rest);
        rest.retain(|p| !h.contains(p));
        out.push(s.set(&h));
    }
    out
}

pub fn is_convex_position(points: &[Point]) -> bool {
    hull_set(points).len() == points.len()
}

/// Some point of `others` not in `poly` lies inside the convex polygon
/// `poly`: it is not a hull vertex of `poly` plus itself.
pub fn has_point_inside(poly: &[Point], others: &[Point]) -> bool {
    others.iter().any(|q| {
        if poly.contains(q) {
            return false;
        }
        let mut with_q = poly.to_vec();
        with_q.push(q.clone());
        !hull_set(&with_q).contains(q)
    })
}

/// Convex k-gon by exhaustive subset search (optionally empty).
pub fn naive_kgon(points: &[Point], k: usize, empty: bool) -> bool {
    let s = Scaled::new(points);
    let n = points.len();
    let mut found = false;
    subsets(n, k, &mut |sub| {
        if s.hull_of(sub).len() != k {
            return true;
        }
        if empty {
            let mut with_q = sub.to_vec();
            for q in (0..n).filter(|q| !sub.contains(q)) {
                with_q.push(q);
                let inside = !s.hull_of(&with_q).contains(&q);
                with_q.pop();
                if inside {
                    return true;
                }
            }
        }
        found = true;
        false
    });
    found
}

pub fn subsets(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            cur.push(i);
            let more = go(i + 1, n, k, cur, f);
            cur.pop();
            if !more {
                return false;
            }
        }
        true
    }
    go(0, n, k, &mut Vec::new(), f);
}

/// Number of faces of the arrangement of all lines through point pairs:
/// each added line gains one face per piece it is cut into.
pub fn naive_face_count(points: &[Point]) -> usize {
    let mut lines: Vec<(Point, Point)> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            lines.push((points[i].clone(), points[j].clone()));
        }
    }
    let mut faces = 1;
    for (l, (a, b)) in lines.iter().enumerate() {
        let mut hits = BTreeSet::new();
        for (c, d) in &lines[..l] {
            let r = b.sub(a);
            let s = d.sub(c);
            let den = r.cross(&s);
            if den.is_zero() {
                continue;
            }
            let t = c.sub(a).cross(&s) / den;
            hits.insert(a.add(&r.scale(&t)));
        }
        faces += hits.len() + 1;
    }
    faces
}

/// Random points in general position: small lattice coordinates half the
/// time, otherwise rationals with small denominators.
pub fn random_points<R: Rng>(n: usize, rng: &mut R) -> Vec<Point> {
    loop {
        let lattice = rng.gen_bool(0.5);
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                if lattice {
                    Point::int(rng.gen_range(-8..=8), rng.gen_range(-8..=8))
                } else {
                    Point::new(
                        frac(rng.gen_range(-60..=60), rng.gen_range(1..=7)),
                        frac(rng.gen_range(-60..=60), rng.gen_range(1..=7)),
                    )
                }
            })
            .collect();
        if general_position(&pts) {
            return pts;
        }
    }
}
