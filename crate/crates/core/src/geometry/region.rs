//! Regions around a convex 4-gon and type-1/type-2 beams.

use serde::{Deserialize, Serialize};

use super::point::{Point, IntFrame};
use crate::error::{Error, Result};
use crate::order::OrderType;

/// What adding a point to a convex 4-gon produces: `O` a convex 5-gon,
/// `I` a (4,1) set with the new point on the hull, `Z` a (4,1) set with the
/// new point inside, `S` a (3,2) set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionClass {
    I,
    O,
    S,
    Z,
}

/// Region of `p` relative to `quad`, with the quad vertex swallowed when the
/// class is `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegionDetail {
    pub class: RegionClass,
    /// Index into the quad of the vertex pushed into the interior (`I` only).
    pub swallowed: Option<usize>,
}

pub fn classify_region(quad: &[Point; 4], p: &Point) -> Result<RegionClass> {
    region_detail(quad, p).map(|d| d.class)
}

pub fn region_detail(quad: &[Point; 4], p: &Point) -> Result<RegionDetail> {
    let mut all: Vec<Point> = quad.to_vec();
    all.push(p.clone());
    let t = OrderType::from_frame(&IntFrame::new(&all));
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                if t.get(i, j, k) == 0 {
                    return Err(Error::DegenerateInput("quad has a collinear triple".into()));
                }
            }
            if t.get(i, j, 4) == 0 {
                return Err(Error::DegeneratePlacement);
            }
        }
    }
    if !t.is_convex(&[0, 1, 2, 3]) {
        return Err(Error::DegenerateInput("quad is not in convex position".into()));
    }
    Ok(region_in_order(&t, [0, 1, 2, 3], 4))
}

/// Region of point `p` against the convex 4-gon `quad`, all given as indices
/// into an order type.
pub fn region_in_order(t: &OrderType, quad: [usize; 4], p: usize) -> RegionDetail {
    let set = [quad[0], quad[1], quad[2], quad[3], p];
    let hull = t.hull(&set);
    match hull.len() {
        5 => RegionDetail { class: RegionClass::O, swallowed: None },
        4 if !hull.contains(&p) => RegionDetail { class: RegionClass::Z, swallowed: None },
        4 => {
            let swallowed = quad.iter().position(|q| !hull.contains(q));
            RegionDetail { class: RegionClass::I, swallowed }
        }
        _ => RegionDetail { class: RegionClass::S, swallowed: None },
    }
}

/// `Type1 { a, b, c }` is the cone at `a` spanned by rays `ab`, `ac` minus
/// triangle `abc`. `Type2 { a, b, c, d }` is the region bounded by segment
/// `ab` and rays `ad`, `bc`, minus the 4-gon `abcd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Beam {
    Type1 { a: Point, b: Point, c: Point },
    Type2 { a: Point, b: Point, c: Point, d: Point },
}

impl Beam {
    pub fn type1(a: Point, b: Point, c: Point) -> Result<Beam> {
        if super::orientation(&a, &b, &c).sign() == 0 {
            return Err(Error::DegenerateInput("type-1 beam anchors are collinear".into()));
        }
        Ok(Beam::Type1 { a, b, c })
    }

    pub fn type2(a: Point, b: Point, c: Point, d: Point) -> Result<Beam> {
        let quad = [a.clone(), b.clone(), c.clone(), d.clone()];
        let s = super::orientation(&a, &b, &c).sign();
        let cyclic = (0..4).all(|i| super::orientation(&quad[i], &quad[(i + 1) % 4], &quad[(i + 2) % 4]).sign() == s);
        if s == 0 || !cyclic {
            return Err(Error::DegenerateInput("type-2 beam anchors are not a convex 4-gon in order".into()));
        }
        Ok(Beam::Type2 { a, b, c, d })
    }

    pub fn anchors(&self) -> Vec<&Point> {
        match self {
            Beam::Type1 { a, b, c } => vec![a, b, c],
            Beam::Type2 { a, b, c, d } => vec![a, b, c, d],
        }
    }
}

/// Strict membership: inside the open cone or strip, and strictly beyond the
/// far edge of the deleted polygon.
pub fn beam_contains(beam: &Beam, p: &Point) -> bool {
    let mut pts: Vec<Point> = beam.anchors().into_iter().cloned().collect();
    pts.push(p.clone());
    let t = OrderType::from_points(&pts);
    let q = pts.len() - 1;
    match beam {
        Beam::Type1 { .. } => beam_contains_in_order(&t, BeamIdx::Type1 { a: 0, b: 1, c: 2 }, q),
        Beam::Type2 { .. } => beam_contains_in_order(&t, BeamIdx::Type2 { a: 0, b: 1, c: 2, d: 3 }, q),
    }
}

/// A beam given by indices into an order type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BeamIdx {
    Type1 { a: usize, b: usize, c: usize },
    Type2 { a: usize, b: usize, c: usize, d: usize },
}

pub fn beam_contains_in_order(t: &OrderType, beam: BeamIdx, p: usize) -> bool {
    let same = |i, j, k, r| {
        let s = t.get(i, j, r);
        s != 0 && t.get(i, j, k) == s
    };
    let opposite = |i, j, k, r| {
        let s = t.get(i, j, r);
        s != 0 && t.get(i, j, k) == -s
    };
    match beam {
        BeamIdx::Type1 { a, b, c } => same(a, b, p, c) && same(a, c, p, b) && opposite(b, c, p, a),
        BeamIdx::Type2 { a, b, c, d } => {
            same(a, b, p, c) && same(a, d, p, b) && same(b, c, p, a) && opposite(d, c, p, a)
        }
    }
}
