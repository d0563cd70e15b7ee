//! Random point sets: uniform lattice samples and samples with a prescribed
//! convex-layer signature.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::point::IntFrame;
use crate::geometry::Point;
use crate::order::OrderType;

/// A point set realizing a convex-layer signature.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructuredSample {
    pub signature: Vec<usize>,
    pub points: Vec<Point>,
    pub seed: u64,
}

fn in_general_position(points: &[Point]) -> bool {
    let frame = IntFrame::new(points);
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return false;
            }
            for k in j + 1..n {
                if frame.orient(i, j, k) == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// `n` distinct lattice points in `[-range, range]^2` with no three collinear.
pub fn random_general_position<R: Rng>(n: usize, range: i64, rng: &mut R) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = random_extra_point(&pts, range, rng);
        pts.push(p);
    }
    pts
}

/// One more lattice point keeping `points` in general position.
pub fn random_extra_point<R: Rng>(points: &[Point], range: i64, rng: &mut R) -> Point {
    loop {
        let p = Point::int(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        let mut all = points.to_vec();
        all.push(p.clone());
        if in_general_position(&all) {
            return p;
        }
    }
}

const ATTEMPTS: usize = 10_000;
const RADIUS: f64 = 10_000.0;

/// Points on concentric, randomly shrunk and shifted circles (rounded to
/// the lattice), rejected until the layer sizes match `signature`.
pub fn structured_sample<R: Rng>(signature: &[usize], seed: u64, rng: &mut R) -> Result<StructuredSample> {
    if signature.is_empty() || signature.iter().any(|&s| s == 0) {
        return Err(Error::InvalidArgument("signature needs positive layer sizes".into()));
    }
    for _ in 0..ATTEMPTS {
        let mut points = Vec::new();
        let mut radius = RADIUS;
        let (mut cx, mut cy) = (0.0f64, 0.0f64);
        for (depth, &size) in signature.iter().enumerate() {
            if depth > 0 {
                let shrink = rng.gen_range(0.25..0.7);
                cx += rng.gen_range(-0.15..0.15) * radius;
                cy += rng.gen_range(-0.15..0.15) * radius;
                radius *= shrink;
            }
            let mut angles: Vec<f64> = (0..size).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
            angles.sort_by(f64::total_cmp);
            for a in angles {
                // Mild radial jitter keeps layers from being too regular.
                let r = radius * rng.gen_range(0.85..1.0);
                points.push(Point::int((cx + r * a.cos()).round() as i64, (cy + r * a.sin()).round() as i64));
            }
        }
        if !in_general_position(&points) {
            continue;
        }
        let sizes: Vec<usize> = OrderType::from_points(&points).layers().iter().map(Vec::len).collect();
        if sizes == signature {
            return Ok(StructuredSample { signature: signature.to_vec(), points, seed });
        }
    }
    Err(Error::SamplerFailure(signature.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::layer_type;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_sets_are_in_general_position() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = random_general_position(9, 5, &mut rng);
            assert_eq!(p.len(), 9);
            assert!(crate::geometry::check_general_position(&p).is_ok());
        }
    }

    #[test]
    fn signatures_realized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for sig in [vec![4, 3, 2], vec![4, 4, 1], vec![3, 3], vec![4, 2], vec![5, 1], vec![4, 4]] {
            let s = structured_sample(&sig, 11, &mut rng).unwrap();
            assert_eq!(layer_type(&s.points).unwrap().0, sig);
        }
    }

    #[test]
    fn impossible_signature_fails() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(structured_sample(&[2, 2], 3, &mut rng), Err(Error::SamplerFailure(vec![2, 2])));
    }
}
