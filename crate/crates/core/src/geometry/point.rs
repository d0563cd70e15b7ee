use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A point of the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "rational::serde_string")]
    pub x: Rational,
    #[serde(with = "rational::serde_string")]
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(rational::int(x), rational::int(y))
    }

    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Ok(Point::new(rational::parse(x)?, rational::parse(y)?))
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = rational::frac(1, 2);
        Point::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    /// Cross product of `self` and `other` read as vectors.
    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rational::to_f64(&self.x), rational::to_f64(&self.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn from_sign(sign: i8) -> Self {
        match sign.signum() {
            1 => Orientation::CounterClockwise,
            -1 => Orientation::Clockwise,
            _ => Orientation::Collinear,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }

    pub fn reversed(self) -> Self {
        Orientation::from_sign(-self.sign())
    }
}

/// Sign of `(q - p) x (r - p)`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    Orientation::from_sign(rational::sign(&det))
}

/// Points rescaled to a common integer lattice.
///
/// Multiplying every coordinate by the same positive integer preserves all
/// orientation signs, so predicates on the lattice copy agree with the
/// rational originals while running on plain integers.
#[derive(Debug, Clone)]
pub struct IntFrame {
    pub scale: BigInt,
    pub coords: Vec<(BigInt, BigInt)>,
    small: Option<Vec<(i64, i64)>>,
}

const SMALL_LIMIT: i64 = 1 << 61;

impl IntFrame {
    pub fn new(points: &[Point]) -> Self {
        let scale = rational::lcm_of_denominators(points.iter().flat_map(|p| [&p.x, &p.y]));
        let coords: Vec<(BigInt, BigInt)> = points
            .iter()
            .map(|p| {
                let x = p.x.numer() * (&scale / p.x.denom());
                let y = p.y.numer() * (&scale / p.y.denom());
                (x, y)
            })
            .collect();
        let small = coords
            .iter()
            .map(|(x, y)| {
                let x = i64::try_from(x).ok().filter(|v| v.abs() < SMALL_LIMIT)?;
                let y = i64::try_from(y).ok().filter(|v| v.abs() < SMALL_LIMIT)?;
                Some((x, y))
            })
            .collect();
        IntFrame { scale, coords, small }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn orient(&self, i: usize, j: usize, k: usize) -> i8 {
        if let Some(s) = &self.small {
            let (ax, ay) = s[i];
            let (bx, by) = s[j];
            let (cx, cy) = s[k];
            let det = (bx - ax) as i128 * (cy - ay) as i128 - (by - ay) as i128 * (cx - ax) as i128;
            return det.signum() as i8;
        }
        let (ax, ay) = &self.coords[i];
        let (bx, by) = &self.coords[j];
        let (cx, cy) = &self.coords[k];
        let det: BigInt = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        if det.is_positive() {
            1
        } else if det.is_zero() {
            0
        } else {
            -1
        }
    }
}

/// Rejects duplicate points.
pub fn check_distinct(points: &[Point]) -> Result<()> {
    let mut sorted: Vec<&Point> = points.iter().collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicatePoint(w[0].to_string()));
        }
    }
    Ok(())
}

/// Rejects duplicates and collinear triples.
pub fn check_general_position(points: &[Point]) -> Result<()> {
    check_distinct(points).map_err(|e| Error::DegenerateInput(e.to_string()))?;
    let frame = IntFrame::new(points);
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if frame.orient(i, j, k) == 0 {
                    return Err(Error::DegenerateInput(format!(
                        "{}, {}, {} are collinear",
                        points[i], points[j], points[k]
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn frame_matches_rational_orientation() {
        let pts = vec![
            Point::parse("1/3", "2/7").unwrap(),
            Point::parse("-5/2", "1/9").unwrap(),
            Point::parse("4", "-3/11").unwrap(),
        ];
        let frame = IntFrame::new(&pts);
        assert_eq!(frame.orient(0, 1, 2), orientation(&pts[0], &pts[1], &pts[2]).sign());
        assert_eq!(frame.orient(1, 0, 2), -frame.orient(0, 1, 2));
    }

    #[test]
    fn frame_handles_huge_coordinates() {
        let big = num_traits::pow(BigInt::from(10), 40);
        let pts = vec![
            Point::new(Rational::from_integer(big.clone()), rational::int(0)),
            Point::new(rational::int(0), Rational::from_integer(big.clone())),
            Point::new(Rational::from_integer(-big), rational::int(1)),
        ];
        let frame = IntFrame::new(&pts);
        assert_eq!(frame.orient(0, 1, 2), orientation(&pts[0], &pts[1], &pts[2]).sign());
    }

    #[test]
    fn general_position_check() {
        assert!(check_general_position(&[p(0, 0), p(1, 1), p(2, 2)]).is_err());
        assert!(check_general_position(&[p(0, 0), p(1, 1), p(0, 0)]).is_err());
        assert!(check_general_position(&[p(0, 0), p(1, 1), p(2, 3)]).is_ok());
    }
}
