//! Convex and empty convex k-gon detection, layer types, U(i,j) 4-gons and
//! the configuration classifier for the strategy's game tree.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::point::{check_distinct, check_general_position, IntFrame, Point};
use crate::geometry::region::{region_in_order, RegionClass};
use crate::order::{for_each_combination, OrderType};

/// Sizes of the convex layers, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LayerType(pub Vec<usize>);

impl LayerType {
    pub fn is(&self, sizes: &[usize]) -> bool {
        self.0 == sizes
    }
}

impl fmt::Display for LayerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Vertices of a detected convex k-gon, counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GonWitness {
    pub indices: Vec<usize>,
    pub vertices: Vec<Point>,
    pub empty: bool,
}

impl GonWitness {
    pub fn from_indices(points: &[Point], indices: Vec<usize>, empty: bool) -> Self {
        let vertices = indices.iter().map(|&i| points[i].clone()).collect();
        GonWitness { indices, vertices, empty }
    }
}

/// Witnesses go over the wire as their vertex index lists.
impl Serialize for GonWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConfigurationLabel {
    #[serde(rename = "4")]
    Config4,
    #[serde(rename = "5.1")]
    Config5_1,
    #[serde(rename = "5.2")]
    Config5_2,
    #[serde(rename = "6.1")]
    Config6_1,
    #[serde(rename = "6.2")]
    Config6_2,
    #[serde(rename = "7.1")]
    Config7_1,
    #[serde(rename = "7.2")]
    Config7_2,
    #[serde(rename = "8")]
    Config8,
    #[serde(rename = "other")]
    Other,
}

impl ConfigurationLabel {
    /// Number of points a set must have to carry this label.
    pub fn size(self) -> Option<usize> {
        use ConfigurationLabel::*;
        match self {
            Config4 => Some(4),
            Config5_1 | Config5_2 => Some(5),
            Config6_1 | Config6_2 => Some(6),
            Config7_1 | Config7_2 => Some(7),
            Config8 => Some(8),
            Other => None,
        }
    }
}

impl fmt::Display for ConfigurationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConfigurationLabel::*;
        let s = match self {
            Config4 => "4",
            Config5_1 => "5.1",
            Config5_2 => "5.2",
            Config6_1 => "6.1",
            Config6_2 => "6.2",
            Config7_1 => "7.1",
            Config7_2 => "7.2",
            Config8 => "8",
            Other => "other",
        };
        f.write_str(s)
    }
}

pub fn is_convex_position(points: &[Point]) -> Result<bool> {
    check_distinct(points)?;
    let frame = IntFrame::new(points);
    let all: Vec<usize> = (0..points.len()).collect();
    Ok(crate::geometry::hull::hull_indices(&frame, &all).len() == points.len())
}

/// Some convex `k`-gon among `points` (exhaustive over all `k`-subsets).
pub fn find_convex_kgon(points: &[Point], k: usize, empty: bool) -> Result<Option<GonWitness>> {
    check_general_position(points)?;
    let t = OrderType::from_points(points);
    Ok(t.find_convex(k, None, empty).map(|idx| GonWitness::from_indices(points, idx, empty)))
}

pub fn find_convex_5gon(points: &[Point]) -> Result<Option<GonWitness>> {
    find_convex_kgon(points, 5, false)
}

pub fn find_empty_convex_5gon(points: &[Point]) -> Result<Option<GonWitness>> {
    find_convex_kgon(points, 5, true)
}

pub fn layer_type(points: &[Point]) -> Result<LayerType> {
    check_distinct(points)?;
    let frame = IntFrame::new(points);
    Ok(LayerType(crate::geometry::hull::layer_indices(&frame).iter().map(Vec::len).collect()))
}

/// A 4-subset counted by U(i,j).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct U4Gon {
    /// Counterclockwise vertex indices.
    pub indices: [usize; 4],
    pub empty: bool,
}

/// All convex 4-gons using exactly `i` points of the first layer and `j` of the second.
pub fn enumerate_u4gons(points: &[Point], i: usize, j: usize) -> Result<Vec<U4Gon>> {
    check_general_position(points)?;
    if i + j != 4 {
        return Err(Error::InvalidArgument(format!("U({i},{j}) must use four points")));
    }
    let t = OrderType::from_points(points);
    let layers = t.layers();
    if layers.len() < 2 {
        return Err(Error::LayerCountMismatch { needed: 2, found: layers.len() });
    }
    Ok(u4gons_in_order(&t, &layers[0], &layers[1], i, j))
}

pub(crate) fn u4gons_in_order(t: &OrderType, first: &[usize], second: &[usize], i: usize, j: usize) -> Vec<U4Gon> {
    let mut out = Vec::new();
    for_each_combination(first.len(), i, &mut |a| {
        for_each_combination(second.len(), j, &mut |b| {
            let subset: Vec<usize> = a.iter().map(|&x| first[x]).chain(b.iter().map(|&y| second[y])).collect();
            if t.is_convex(&subset) {
                let h = t.hull(&subset);
                out.push(U4Gon { indices: [h[0], h[1], h[2], h[3]], empty: t.is_empty_polygon(&h) });
            }
            true
        });
        true
    });
    out
}

pub fn classify_configuration(points: &[Point]) -> Result<ConfigurationLabel> {
    check_general_position(points)?;
    let t = OrderType::from_points(points);
    Ok(classify_with_order(points, &t))
}

/// Classifier over a precomputed order type. `points` may be empty when only
/// the purely combinatorial labels (7.2, 8) are of interest: metric labels
/// then fall through to `Other`.
pub fn classify_with_order(points: &[Point], t: &OrderType) -> ConfigurationLabel {
    use ConfigurationLabel::*;
    let n = t.len();
    if !(4..=8).contains(&n) {
        return Other;
    }
    let layers = t.layers();
    let sizes: Vec<usize> = layers.iter().map(Vec::len).collect();
    let metric = points.len() == n;
    match sizes.as_slice() {
        [4] if metric && is_parallelogram(points, &layers[0]) => Config4,
        [4, 1] if metric => {
            let hull = &layers[0];
            let x = layers[1][0];
            let five_one = is_parallelogram(points, hull);
            let five_two = parallelogram_with_interior(points, hull, x).is_some();
            debug_assert!(!(five_one && five_two), "5.1 and 5.2 are mutually exclusive");
            if five_one {
                Config5_1
            } else if five_two {
                Config5_2
            } else {
                Other
            }
        }
        [4, 2] if metric => {
            let hull = &layers[0];
            let (e, f) = (layers[1][0], layers[1][1]);
            let te = diagonal_triangle(t, hull, e);
            let tf = diagonal_triangle(t, hull, f);
            if (te + 2) % 4 != tf {
                return Other;
            }
            let d = points[e].sub(&points[f]);
            if is_parallelogram(points, hull) {
                let side = points[hull[1]].sub(&points[hull[0]]);
                let other = points[hull[2]].sub(&points[hull[1]]);
                if d.cross(&side) == crate::rational::int(0) || d.cross(&other) == crate::rational::int(0) {
                    return Config6_1;
                }
                return Other;
            }
            match trapezoid_parallel_direction(points, hull) {
                Some(dir) if d.cross(&dir) == crate::rational::int(0) => Config6_2,
                _ => Other,
            }
        }
        [3, 4] if metric => {
            let inner = [layers[1][0], layers[1][1], layers[1][2], layers[1][3]];
            if is_parallelogram(points, &inner) && outer_in_distinct_i_regions(t, &layers[0], inner) {
                Config7_1
            } else {
                Other
            }
        }
        [4, 3] => {
            if t.find_convex(5, None, true).is_none() {
                Config7_2
            } else {
                Other
            }
        }
        [4, 4] => {
            let inner = [layers[1][0], layers[1][1], layers[1][2], layers[1][3]];
            if outer_in_distinct_i_regions(t, &layers[0], inner) {
                Config8
            } else {
                Other
            }
        }
        _ => Other,
    }
}

/// Every outer point lies in an I region of `inner`, and no two of them
/// push the same vertex of `inner` into the interior.
pub(crate) fn outer_in_distinct_i_regions(t: &OrderType, outer: &[usize], inner: [usize; 4]) -> bool {
    let mut used = [false; 4];
    for &o in outer {
        let d = region_in_order(t, inner, o);
        match (d.class, d.swallowed) {
            (RegionClass::I, Some(v)) if !used[v] => used[v] = true,
            _ => return false,
        }
    }
    true
}

/// Index `k` of the diagonal triangle `(h_k, h_{k+1}, centre)` of a convex
/// 4-gon that contains `p`.
pub(crate) fn diagonal_triangle(t: &OrderType, quad: &[usize], p: usize) -> usize {
    let near_h1 = t.get(quad[0], quad[2], p) == t.get(quad[0], quad[2], quad[1]);
    let near_h2 = t.get(quad[1], quad[3], p) == t.get(quad[1], quad[3], quad[2]);
    match (near_h1, near_h2) {
        (true, false) => 0,
        (true, true) => 1,
        (false, true) => 2,
        (false, false) => 3,
    }
}

/// Cyclically ordered 4-gon with both pairs of opposite sides parallel
/// (`h0 + h2 = h1 + h3`).
pub(crate) fn is_parallelogram(points: &[Point], quad: &[usize]) -> bool {
    quad.len() == 4 && points[quad[0]].add(&points[quad[2]]) == points[quad[1]].add(&points[quad[3]])
}

/// For a (4,1) set: the hull vertex opposite the interior point `x` in a
/// parallelogram made of `x` and three hull vertices, as
/// `(opposite, [neighbour, neighbour])`.
pub(crate) fn parallelogram_with_interior(points: &[Point], hull: &[usize], x: usize) -> Option<(usize, [usize; 2])> {
    for q in 0..hull.len() {
        for a in 0..hull.len() {
            for b in a + 1..hull.len() {
                if a == q || b == q {
                    continue;
                }
                let (hq, ha, hb) = (hull[q], hull[a], hull[b]);
                if points[x].add(&points[hq]) == points[ha].add(&points[hb]) {
                    return Some((hq, [ha, hb]));
                }
            }
        }
    }
    None
}

/// Direction of the single parallel pair of opposite sides, or `None` if
/// there is no such pair or there are two.
pub(crate) fn trapezoid_parallel_direction(points: &[Point], quad: &[usize]) -> Option<Point> {
    let side = |k: usize| points[quad[(k + 1) % 4]].sub(&points[quad[k]]);
    let zero = crate::rational::int(0);
    let first = side(0).cross(&side(2)) == zero;
    let second = side(1).cross(&side(3)) == zero;
    match (first, second) {
        (true, false) => Some(side(0)),
        (false, true) => Some(side(1)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConfigurationLabel::*;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    #[test]
    fn convex_position_examples() {
        assert!(is_convex_position(&pts(&[(0, 0), (4, 0), (6, 3), (3, 6), (-1, 3)])).unwrap());
        assert!(!is_convex_position(&pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])).unwrap());
        assert!(is_convex_position(&pts(&[(0, 0), (5, 1), (2, 9)])).unwrap());
        assert!(is_convex_position(&pts(&[(0, 0), (0, 0)])).is_err());
    }

    #[test]
    fn pentagon_detection() {
        let pentagon = pts(&[(0, 0), (4, 0), (6, 3), (3, 6), (-1, 3)]);
        let w = find_convex_5gon(&pentagon).unwrap().unwrap();
        assert_eq!(w.indices.len(), 5);
        assert!(find_empty_convex_5gon(&pentagon).unwrap().is_some());
        let square_center = pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        assert!(find_convex_5gon(&square_center).unwrap().is_none());
    }

    #[test]
    fn pentagon_with_centroid_is_not_empty() {
        // Coordinates scaled by 5 so the centroid (12/5, 12/5) becomes (12, 12).
        let mut p = pts(&[(0, 0), (20, 0), (30, 15), (15, 30), (-5, 15)]);
        p.push(Point::int(12, 12));
        assert!(find_convex_5gon(&p).unwrap().is_some());
        assert!(find_empty_convex_5gon(&p).unwrap().is_none());
    }

    #[test]
    fn detector_rejects_collinear() {
        assert!(find_convex_5gon(&pts(&[(0, 0), (1, 1), (2, 2), (5, 0), (0, 5)])).is_err());
    }

    #[test]
    fn layer_types() {
        assert_eq!(layer_type(&pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])).unwrap(), LayerType(vec![4, 1]));
        let nested = pts(&[(0, 0), (12, 0), (12, 12), (0, 12), (3, 4), (8, 3), (9, 8), (4, 9), (6, 7)]);
        assert_eq!(layer_type(&nested).unwrap(), LayerType(vec![4, 4, 1]));
    }

    #[test]
    fn u4gons_need_two_layers() {
        let square = pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert!(matches!(enumerate_u4gons(&square, 2, 2), Err(Error::LayerCountMismatch { .. })));
        let square_center = pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        assert!(enumerate_u4gons(&square_center, 2, 2).unwrap().is_empty());
        let u31 = enumerate_u4gons(&square_center, 3, 1).unwrap();
        assert!(u31.iter().all(|g| g.empty));
        assert!(!u31.is_empty());
    }

    #[test]
    fn configuration_examples() {
        assert_eq!(classify_configuration(&pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap(), Config4);
        assert_eq!(classify_configuration(&pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])).unwrap(), Config5_1);
        // E = (9, 9) puts C = (4, 4) on the line AE, so that set is rejected.
        let degenerate = pts(&[(0, 0), (4, 0), (9, 9), (0, 4), (4, 4)]);
        assert!(matches!(classify_configuration(&degenerate), Err(Error::DegenerateInput(_))));
        // A, B, E, D on the hull, C inside, with B + D = A + C.
        let p = pts(&[(0, 0), (4, 0), (9, 8), (0, 4), (4, 4)]);
        assert_eq!(layer_type(&p).unwrap(), LayerType(vec![4, 1]));
        assert_eq!(crate::geometry::convex_hull(&p).unwrap(), pts(&[(0, 0), (4, 0), (9, 8), (0, 4)]));
        assert_eq!(classify_configuration(&p).unwrap(), Config5_2);
        assert_eq!(classify_configuration(&pts(&[(0, 0), (5, 0), (4, 4), (0, 4)])).unwrap(), Other);
    }

    #[test]
    fn six_point_labels() {
        // Square with E, F on a vertical line in the bottom and top diagonal triangles.
        let p = pts(&[(0, 0), (8, 0), (8, 8), (0, 8), (3, 1), (3, 7)]);
        assert_eq!(classify_configuration(&p).unwrap(), Config6_1);
        let skew = pts(&[(0, 0), (8, 0), (8, 8), (0, 8), (3, 1), (4, 7)]);
        assert_eq!(classify_configuration(&skew).unwrap(), Other);
        // Trapezoid with parallel vertical sides, interior pair vertical.
        let trap = pts(&[(-6, -3), (8, 0), (8, 8), (-6, 10), (0, 0), (0, 8)]);
        assert_eq!(classify_configuration(&trap).unwrap(), Config6_2);
    }

    #[test]
    fn config8_instance() {
        // Inner square, each outer point beyond a different corner.
        let p = pts(&[(0, 0), (10, 0), (10, 10), (0, 10), (-1, -3), (12, -4), (11, 12), (-1, 14)]);
        assert_eq!(layer_type(&p).unwrap(), LayerType(vec![4, 4]));
        assert_eq!(classify_configuration(&p).unwrap(), Config8);
        assert!(find_empty_convex_5gon(&p).unwrap().is_none());
        // The label is purely about regions: spreading the outer points wider
        // keeps it while opening an empty convex 5-gon.
        let wide = pts(&[(0, 0), (10, 0), (10, 10), (0, 10), (-4, -3), (14, -2), (13, 14), (-2, 13)]);
        assert_eq!(classify_configuration(&wide).unwrap(), Config8);
        assert!(find_empty_convex_5gon(&wide).unwrap().is_some());
    }
}
