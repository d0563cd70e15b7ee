//! Faces of the arrangement of all lines through pairs of input points.
//!
//! Faces are found with a left-to-right sweep. Between two consecutive
//! vertex abscissae the vertical order of the non-vertical lines is fixed, so
//! every gap between neighbouring lines in a slab lies in exactly one face.
//! Crossing a vertex reverses the contiguous block of lines through it. A face
//! is identified by its sign vector (which side of every line it lies on),
//! and each face is recorded the first time the sweep meets it.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::point::{check_general_position, IntFrame, Orientation, Point};
use crate::error::{Error, Result};
use crate::order::OrderType;
use crate::rational::{self, Rational};

/// Sign vector of a face: bit `line_index(i, j)` is set when the face lies to
/// the left of the directed line `p_i -> p_j` (`i < j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignVector(pub u128);

impl SignVector {
    pub fn bit(self, line: usize) -> bool {
        self.0 >> line & 1 == 1
    }
}

/// Side of the oriented line through two input points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfPlane {
    pub i: usize,
    pub j: usize,
    pub side: Orientation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub representative: Point,
    /// Halfplanes whose lines carry an edge of the (clipped) face.
    pub bounding: Vec<HalfPlane>,
    /// The face is bounded in the unclipped arrangement.
    pub bounded: bool,
    pub signs: SignVector,
    /// Vertices of the face clipped to the bounding box, counterclockwise.
    pub polygon: Vec<Point>,
}

/// Handle to one face of an [`Arrangement`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub signs: SignVector,
    slab: usize,
    gap: usize,
}

pub const MAX_POINTS: usize = 16;

#[derive(Debug, Clone)]
struct LineEq {
    i: usize,
    j: usize,
    dx: BigInt,
    dy: BigInt,
}

impl LineEq {
    /// `orient(p_i, p_j, (x, y))` determinant in frame coordinates.
    fn eval(&self, frame: &IntFrame, x: &Rational, y: &Rational) -> Rational {
        let (xi, yi) = &frame.coords[self.i];
        let xi = Rational::from_integer(xi.clone());
        let yi = Rational::from_integer(yi.clone());
        (y - yi) * Rational::from_integer(self.dx.clone()) - (x - xi) * Rational::from_integer(self.dy.clone())
    }

    /// Coefficients of `eval` as a homogeneous line in frame coordinates.
    fn homog(&self, frame: &IntFrame) -> Homog {
        let (xi, yi) = &frame.coords[self.i];
        Homog { a: -&self.dy, b: self.dx.clone(), c: &self.dy * xi - &self.dx * yi }
    }

    fn vertical(&self) -> bool {
        self.dx.is_zero()
    }

    /// Height of a non-vertical line at abscissa `x`.
    fn y_at(&self, frame: &IntFrame, x: &Rational) -> Rational {
        let (xi, yi) = &frame.coords[self.i];
        let slope = Rational::new(self.dy.clone(), self.dx.clone());
        Rational::from_integer(yi.clone()) + slope * (x - Rational::from_integer(xi.clone()))
    }
}

/// Line `a x + b y + c = 0`; the positive side is the kept halfplane.
#[derive(Debug, Clone)]
struct Homog {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Homog {
    fn flipped(self) -> Homog {
        Homog { a: -self.a, b: -self.b, c: -self.c }
    }

    fn sign_at(&self, p: &HPoint) -> i8 {
        let v: BigInt = &self.a * &p.x + &self.b * &p.y + &self.c * &p.w;
        match v.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }

    fn meet(&self, other: &Homog) -> HPoint {
        let x = &self.b * &other.c - &self.c * &other.b;
        let y = &self.c * &other.a - &self.a * &other.c;
        let w = &self.a * &other.b - &self.b * &other.a;
        debug_assert!(!w.is_zero(), "meet of parallel lines");
        if w.is_negative() {
            HPoint { x: -x, y: -y, w: -w }
        } else {
            HPoint { x, y, w }
        }
    }
}

/// Homogeneous point `(x / w, y / w)` with `w > 0`.
#[derive(Debug, Clone)]
struct HPoint {
    x: BigInt,
    y: BigInt,
    w: BigInt,
}

impl HPoint {
    fn affine(x: BigInt, y: BigInt) -> HPoint {
        HPoint { x, y, w: BigInt::one() }
    }

    fn same(&self, other: &HPoint) -> bool {
        &self.x * &other.w == &other.x * &self.w && &self.y * &other.w == &other.y * &self.w
    }

    fn to_rational(&self) -> (Rational, Rational) {
        (Rational::new(self.x.clone(), self.w.clone()), Rational::new(self.y.clone(), self.w.clone()))
    }
}

#[derive(Debug, Clone)]
struct Slab {
    /// Sample abscissa strictly inside the slab (frame coordinates).
    x: Rational,
    /// Non-vertical lines bottom to top.
    order: Vec<u16>,
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    points: Vec<Point>,
    frame: IntFrame,
    lines: Vec<LineEq>,
    line_index: Vec<Vec<usize>>,
    slabs: Vec<Slab>,
    faces: Vec<Face>,
    /// Frame-coordinate bounding box of all vertices.
    bbox: (Rational, Rational, Rational, Rational),
}

impl Arrangement {
    /// Builds the arrangement of the lines through all pairs of `points`.
    /// Requires at least two points in general position.
    pub fn new(points: &[Point]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidArgument("arrangement needs at least two points".into()));
        }
        if points.len() > MAX_POINTS {
            return Err(Error::InvalidArgument(format!("arrangement supports at most {MAX_POINTS} points")));
        }
        check_general_position(points)?;
        Ok(Self::build(points))
    }

    /// As [`Arrangement::new`] without the general-position check.
    pub(crate) fn build(points: &[Point]) -> Self {
        let frame = IntFrame::new(points);
        let n = points.len();
        let mut lines = Vec::new();
        let mut line_index = vec![vec![usize::MAX; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let (xi, yi) = &frame.coords[i];
                let (xj, yj) = &frame.coords[j];
                line_index[i][j] = lines.len();
                line_index[j][i] = lines.len();
                lines.push(LineEq { i, j, dx: xj - xi, dy: yj - yi });
            }
        }

        // Vertices: every input point, plus crossings of lines on disjoint index pairs.
        let mut vertices: Vec<(Rational, Rational, Vec<usize>)> = (0..n)
            .map(|v| {
                let (x, y) = &frame.coords[v];
                let through = (0..n).filter(|&u| u != v).map(|u| line_index[v][u]).collect();
                (Rational::from_integer(x.clone()), Rational::from_integer(y.clone()), through)
            })
            .collect();
        let mut crossings: HashMap<(Rational, Rational), Vec<usize>> = HashMap::new();
        for a in 0..lines.len() {
            for b in a + 1..lines.len() {
                let (la, lb) = (&lines[a], &lines[b]);
                if la.i == lb.i || la.i == lb.j || la.j == lb.i || la.j == lb.j {
                    continue;
                }
                let det: BigInt = &la.dx * &lb.dy - &la.dy * &lb.dx;
                if det.is_zero() {
                    continue;
                }
                // Solve p_a + s*d_a = p_b + t*d_b for s.
                let (xa, ya) = &frame.coords[la.i];
                let (xb, yb) = &frame.coords[lb.i];
                let wx: BigInt = xb - xa;
                let wy: BigInt = yb - ya;
                let s = Rational::new(&wx * &lb.dy - &wy * &lb.dx, det);
                let x = Rational::from_integer(xa.clone()) + &s * Rational::from_integer(la.dx.clone());
                let y = Rational::from_integer(ya.clone()) + &s * Rational::from_integer(la.dy.clone());
                let entry = crossings.entry((x, y)).or_default();
                for l in [a, b] {
                    if !entry.contains(&l) {
                        entry.push(l);
                    }
                }
            }
        }
        vertices.extend(crossings.into_iter().map(|((x, y), ls)| (x, y, ls)));
        vertices.sort_by(|u, v| u.0.cmp(&v.0).then_with(|| u.1.cmp(&v.1)));

        let bbox = {
            let mut it = vertices.iter();
            let first = it.next().expect("at least two vertices");
            let (mut x0, mut x1, mut y0, mut y1) = (first.0.clone(), first.0.clone(), first.1.clone(), first.1.clone());
            for (x, y, _) in it {
                if *x < x0 {
                    x0 = x.clone();
                }
                if *x > x1 {
                    x1 = x.clone();
                }
                if *y < y0 {
                    y0 = y.clone();
                }
                if *y > y1 {
                    y1 = y.clone();
                }
            }
            (x0, y0, x1, y1)
        };

        // Initial order at x -> -inf: ascending y means descending slope, then
        // ascending intercept for parallel lines.
        let mut order: Vec<u16> = (0..lines.len()).filter(|&l| !lines[l].vertical()).map(|l| l as u16).collect();
        order.sort_by(|&a, &b| {
            let (la, lb) = (&lines[a as usize], &lines[b as usize]);
            let slope = |l: &LineEq| {
                if l.dx.is_negative() {
                    Rational::new(-&l.dy, -&l.dx)
                } else {
                    Rational::new(l.dy.clone(), l.dx.clone())
                }
            };
            let (sa, sb) = (slope(la), slope(lb));
            sb.cmp(&sa).then_with(|| {
                let zero = Rational::zero();
                la.y_at(&frame, &zero).cmp(&lb.y_at(&frame, &zero))
            })
        });
        let mut pos = vec![usize::MAX; lines.len()];
        for (k, &l) in order.iter().enumerate() {
            pos[l as usize] = k;
        }

        // Bits for the gap below every non-vertical line: below a line directed
        // with dx < 0 is its left side.
        let mut base: u128 = 0;
        for (l, line) in lines.iter().enumerate() {
            let left_of_all = line.vertical() && line.dy.is_positive();
            let below = !line.vertical() && line.dx.is_negative();
            if left_of_all || below {
                base |= 1 << l;
            }
        }

        let mut breakpoints: Vec<(Rational, Vec<usize>)> = Vec::new();
        let mut vertex_ids: Vec<Vec<usize>> = Vec::new();
        for (vid, (x, _, _)) in vertices.iter().enumerate() {
            match breakpoints.last_mut() {
                Some((bx, _)) if bx == x => vertex_ids.last_mut().unwrap().push(vid),
                _ => {
                    breakpoints.push((x.clone(), Vec::new()));
                    vertex_ids.push(vec![vid]);
                }
            }
        }

        let mut slabs: Vec<Slab> = Vec::new();
        let mut faces = Vec::new();
        let mut seen: HashSet<u128> = HashSet::new();
        let one = Rational::one();
        let half = rational::frac(1, 2);
        let slab_count = breakpoints.len() + 1;
        for s in 0..slab_count {
            let x = if s == 0 {
                &breakpoints[0].0 - &one
            } else if s == breakpoints.len() {
                &breakpoints[s - 1].0 + &one
            } else {
                (&breakpoints[s - 1].0 + &breakpoints[s].0) * &half
            };
            let mut mask = base;
            let mut new_here = false;
            for gap in 0..=order.len() {
                if gap > 0 {
                    mask ^= 1 << order[gap - 1];
                }
                if seen.insert(mask) {
                    faces.push(Face { signs: SignVector(mask), slab: s, gap });
                    new_here = true;
                }
            }
            slabs.push(Slab { x, order: if new_here { order.clone() } else { Vec::new() } });
            if s == breakpoints.len() {
                break;
            }
            // Cross breakpoint s.
            for &vid in &vertex_ids[s] {
                let through = &vertices[vid].2;
                let mut ps: Vec<usize> = through
                    .iter()
                    .filter(|&&l| !lines[l].vertical())
                    .map(|&l| pos[l])
                    .collect();
                if ps.len() >= 2 {
                    ps.sort_unstable();
                    let (lo, hi) = (ps[0], *ps.last().unwrap());
                    debug_assert_eq!(hi - lo + 1, ps.len(), "lines through a vertex must be adjacent");
                    order[lo..=hi].reverse();
                    for k in lo..=hi {
                        pos[order[k] as usize] = k;
                    }
                }
            }
            for (l, line) in lines.iter().enumerate() {
                if line.vertical() && frame.coords[line.i].0 == *breakpoints[s].0.numer() && breakpoints[s].0.is_integer() {
                    base ^= 1 << l;
                }
            }
        }

        Arrangement { points: points.to_vec(), frame, lines, line_index, slabs, faces, bbox }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn line_index(&self, i: usize, j: usize) -> usize {
        self.line_index[i][j]
    }

    /// Orientation sign of `(p_i, p_j, q)` for any `q` in the face.
    pub fn side(&self, face: &Face, i: usize, j: usize) -> i8 {
        let (a, b, flip) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let s = if face.signs.bit(self.line_index[a][b]) { 1 } else { -1 };
        s * flip
    }

    /// Order type of the input points with a point of `face` appended.
    pub fn extended_order(&self, base: &OrderType, face: &Face) -> OrderType {
        base.extended(|i, j| self.side(face, i, j))
    }

    /// A point strictly inside the face, taken from the sweep slab that
    /// discovered it.
    pub fn sample_point(&self, face: &Face) -> Point {
        let slab = &self.slabs[face.slab];
        let x = &slab.x;
        let y = if slab.order.is_empty() {
            Rational::zero()
        } else if face.gap == 0 {
            self.lines[slab.order[0] as usize].y_at(&self.frame, x) - Rational::one()
        } else if face.gap == slab.order.len() {
            self.lines[*slab.order.last().unwrap() as usize].y_at(&self.frame, x) + Rational::one()
        } else {
            let lo = self.lines[slab.order[face.gap - 1] as usize].y_at(&self.frame, x);
            let hi = self.lines[slab.order[face.gap] as usize].y_at(&self.frame, x);
            (lo + hi) * rational::frac(1, 2)
        };
        self.unscale(x.clone(), y)
    }

    fn unscale(&self, x: Rational, y: Rational) -> Point {
        let s = Rational::from_integer(self.frame.scale.clone());
        Point::new(x / &s, y / &s)
    }

    /// Clipping box: the vertex bounding box grown on every side by its
    /// width plus height.
    fn clip_box(&self) -> [(Rational, Rational); 4] {
        let (x0, y0, x1, y1) = &self.bbox;
        let mut margin = (x1 - x0) + (y1 - y0);
        if margin.is_zero() {
            margin = Rational::one();
        }
        let (lx, ly, hx, hy) = (x0 - &margin, y0 - &margin, x1 + &margin, y1 + &margin);
        [(lx.clone(), ly.clone()), (hx.clone(), ly), (hx, hy.clone()), (lx, hy)]
    }

    /// Full cell for a face: clipped polygon, a simple interior
    /// representative and the lines that bound it.
    pub fn cell(&self, face: &Face) -> Cell {
        // Clip the box by every halfplane of the face. Vertices are kept in
        // homogeneous integer form as meets of two edge lines, so their size
        // stays bounded. Edge ids `0..L` are arrangement lines, `L..L+4` the
        // box sides.
        let nl = self.lines.len();
        let mut edges: Vec<Homog> = self
            .lines
            .iter()
            .enumerate()
            .map(|(l, line)| {
                let h = line.homog(&self.frame);
                if face.signs.bit(l) {
                    h
                } else {
                    h.flipped()
                }
            })
            .collect();
        let [(lx, ly), _, (hx, hy), _] = self.clip_box();
        let (lx, ly, hx, hy) = (lx.floor().to_integer(), ly.floor().to_integer(), hx.ceil().to_integer(), hy.ceil().to_integer());
        let one = BigInt::one();
        let zero = BigInt::zero();
        edges.push(Homog { a: zero.clone(), b: one.clone(), c: -&ly });
        edges.push(Homog { a: -&one, b: zero.clone(), c: hx.clone() });
        edges.push(Homog { a: zero.clone(), b: -&one, c: hy.clone() });
        edges.push(Homog { a: one.clone(), b: zero, c: -&lx });
        // (vertex, id of the edge leaving it)
        let mut poly: Vec<(HPoint, usize)> = vec![
            (HPoint::affine(lx.clone(), ly.clone()), nl),
            (HPoint::affine(hx.clone(), ly), nl + 1),
            (HPoint::affine(hx, hy.clone()), nl + 2),
            (HPoint::affine(lx, hy), nl + 3),
        ];
        for l in 0..nl {
            let line = &edges[l];
            let vals: Vec<i8> = poly.iter().map(|(v, _)| line.sign_at(v)).collect();
            if vals.iter().all(|&s| s >= 0) {
                continue;
            }
            let m = poly.len();
            let mut out: Vec<(HPoint, usize)> = Vec::with_capacity(m + 2);
            for k in 0..m {
                let (su, sv) = (vals[k], vals[(k + 1) % m]);
                let (u, tag) = &poly[k];
                match (su >= 0, sv >= 0) {
                    (true, true) => out.push((u.clone(), *tag)),
                    (true, false) => {
                        if su == 0 {
                            out.push((u.clone(), l));
                        } else {
                            out.push((u.clone(), *tag));
                            out.push((edges[*tag].meet(line), l));
                        }
                    }
                    (false, true) => {
                        if sv > 0 {
                            out.push((edges[*tag].meet(line), *tag));
                        }
                    }
                    (false, false) => {}
                }
            }
            out.dedup_by(|a, b| a.0.same(&b.0));
            while out.len() > 1 && out[0].0.same(&out[out.len() - 1].0) {
                out.pop();
            }
            poly = out;
        }
        debug_assert!(poly.len() >= 3, "face polygon degenerated");
        let poly: Vec<(Rational, Rational, Option<usize>)> = poly
            .into_iter()
            .map(|(v, tag)| {
                let (x, y) = v.to_rational();
                (x, y, (tag < nl).then_some(tag))
            })
            .collect();

        let scale = Rational::from_integer(self.frame.scale.clone());
        let polygon: Vec<Point> = poly.iter().map(|(x, y, _)| self.unscale(x.clone(), y.clone())).collect();
        let mut representative = simple_interior_point(&polygon);
        if !self.strictly_inside(face, &(&representative.x * &scale), &(&representative.y * &scale)) {
            let k = Rational::from_integer(BigInt::from(poly.len()));
            let mut cx = poly.iter().fold(Rational::zero(), |acc, v| acc + &v.0) / &k;
            let mut cy = poly.iter().fold(Rational::zero(), |acc, v| acc + &v.1) / &k;
            let mut toward = 0;
            while !self.strictly_inside(face, &cx, &cy) {
                let (vx, vy, _) = &poly[toward % poly.len()];
                cx = (&cx + vx) * rational::frac(1, 2);
                cy = (&cy + vy) * rational::frac(1, 2);
                toward += 1;
                assert!(toward < 256, "no interior representative found");
            }
            representative = self.unscale(cx, cy);
        }

        let mut tags: Vec<usize> = poly.iter().filter_map(|v| v.2).collect();
        tags.sort_unstable();
        tags.dedup();
        let bounded = poly.iter().all(|v| v.2.is_some());
        let bounding = tags
            .into_iter()
            .map(|l| {
                let line = &self.lines[l];
                let side = if face.signs.bit(l) { Orientation::CounterClockwise } else { Orientation::Clockwise };
                HalfPlane { i: line.i, j: line.j, side }
            })
            .collect();
        Cell { representative, bounding, bounded, signs: face.signs, polygon }
    }

    fn strictly_inside(&self, face: &Face, x: &Rational, y: &Rational) -> bool {
        self.lines.iter().enumerate().all(|(l, line)| {
            let v = line.eval(&self.frame, x, y);
            if face.signs.bit(l) {
                v.is_positive()
            } else {
                v.is_negative()
            }
        })
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.faces.iter().map(|f| self.cell(f)).collect()
    }
}

/// A point with small denominators inside a convex polygon: the simplest
/// abscissa in the middle half of its x-range, then the simplest ordinate in
/// the middle half of the vertical chord there.
fn simple_interior_point(polygon: &[Point]) -> Point {
    let xs = polygon.iter().map(|p| &p.x);
    let xmin = xs.clone().min().expect("non-empty polygon");
    let xmax = xs.max().expect("non-empty polygon");
    let quarter = (xmax - xmin) * rational::frac(1, 4);
    let x = rational::simplest_between(&(xmin + &quarter), &(xmax - &quarter));
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for k in 0..polygon.len() {
        let (u, v) = (&polygon[k], &polygon[(k + 1) % polygon.len()]);
        let (left, right) = if u.x < v.x { (&u.x, &v.x) } else { (&v.x, &u.x) };
        if u.x == v.x || x < *left || x > *right {
            continue;
        }
        let y = &u.y + (&v.y - &u.y) * (&x - &u.x) / (&v.x - &u.x);
        if lo.as_ref().is_none_or(|l| y < *l) {
            lo = Some(y.clone());
        }
        if hi.as_ref().is_none_or(|h| y > *h) {
            hi = Some(y);
        }
    }
    let (lo, hi) = (lo.expect("chord"), hi.expect("chord"));
    if lo >= hi {
        return Point::new(x, lo);
    }
    let quarter = (&hi - &lo) * rational::frac(1, 4);
    let y = rational::simplest_between(&(&lo + &quarter), &(&hi - &quarter));
    Point::new(x, y)
}

/// One cell per face of the arrangement of all lines through point pairs.
pub fn arrangement_cells(points: &[Point]) -> Result<Vec<Cell>> {
    Ok(Arrangement::new(points)?.cells())
}

/// Sign vector of an arbitrary point, or `None` if it lies on a spanned line.
pub fn locate(points: &[Point], q: &Point) -> Option<SignVector> {
    let mut mask = 0u128;
    let mut line = 0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            match super::orientation(&points[i], &points[j], q) {
                Orientation::CounterClockwise => mask |= 1 << line,
                Orientation::Clockwise => {}
                Orientation::Collinear => return None,
            }
            line += 1;
        }
    }
    Some(SignVector(mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::orientation;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    #[test]
    fn two_points_two_cells() {
        let cells = arrangement_cells(&pts(&[(0, 0), (3, 1)])).unwrap();
        assert_eq!(cells.len(), 2);
        assert!(cells.iter().all(|c| !c.bounded));
    }

    #[test]
    fn vertical_pair() {
        let cells = arrangement_cells(&pts(&[(1, 0), (1, 5)])).unwrap();
        assert_eq!(cells.len(), 2);
        let sides: HashSet<_> = cells.iter().map(|c| c.representative.x < rational::int(1)).collect();
        assert_eq!(sides.len(), 2);
    }

    #[test]
    fn triangle_seven_cells_with_distinct_signs() {
        let points = pts(&[(0, 0), (4, 0), (1, 3)]);
        let cells = arrangement_cells(&points).unwrap();
        assert_eq!(cells.len(), 7);
        assert_eq!(cells.iter().filter(|c| c.bounded).count(), 1);
        let signs: HashSet<Vec<Orientation>> = cells
            .iter()
            .map(|c| {
                vec![
                    orientation(&points[0], &points[1], &c.representative),
                    orientation(&points[0], &points[2], &c.representative),
                    orientation(&points[1], &points[2], &c.representative),
                ]
            })
            .collect();
        assert_eq!(signs.len(), 7);
    }

    #[test]
    fn representatives_match_sign_vectors() {
        let points = pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (1, 2), (3, 2)]);
        let arr = Arrangement::new(&points).unwrap();
        for face in arr.faces() {
            let cell = arr.cell(face);
            assert_eq!(locate(&points, &cell.representative), Some(face.signs));
            assert_eq!(locate(&points, &arr.sample_point(face)), Some(face.signs));
            for h in &cell.bounding {
                assert_eq!(orientation(&points[h.i], &points[h.j], &cell.representative), h.side);
            }
        }
    }

    #[test]
    fn parallelogram_has_parallel_lines() {
        // Parallel sides and the concurrency-free diagonals: 6 lines, 2 parallel pairs.
        let points = pts(&[(0, 0), (4, 0), (5, 3), (1, 3)]);
        let arr = Arrangement::new(&points).unwrap();
        // F = 1 + L + sum over vertices of (lines through it - 1):
        // 4 input vertices with 3 lines each, diagonal crossing with 2, total 1 + 6 + 8 + 1.
        assert_eq!(arr.face_count(), 16);
    }

    #[test]
    fn collinear_input_rejected() {
        assert!(matches!(arrangement_cells(&pts(&[(0, 0), (1, 1), (2, 2)])), Err(Error::DegenerateInput(_))));
        assert!(arrangement_cells(&pts(&[(0, 0)])).is_err());
    }
}
