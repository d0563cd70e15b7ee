//! Convex hulls and convex layers (onion peeling).

use super::point::{check_distinct, IntFrame, Point};
use crate::error::Result;

/// Hull vertices of `points`, counterclockwise, starting from the
/// lexicographically smallest point. Collinear boundary points are dropped.
pub fn convex_hull(points: &[Point]) -> Result<Vec<Point>> {
    check_distinct(points)?;
    let frame = IntFrame::new(points);
    let all: Vec<usize> = (0..points.len()).collect();
    Ok(hull_indices(&frame, &all).into_iter().map(|i| points[i].clone()).collect())
}

/// Convex layers: layer 0 is the hull, layer j the hull of what remains
/// after removing layers `< j`.
pub fn convex_layers(points: &[Point]) -> Result<Vec<Vec<Point>>> {
    check_distinct(points)?;
    let frame = IntFrame::new(points);
    Ok(layer_indices(&frame)
        .into_iter()
        .map(|layer| layer.into_iter().map(|i| points[i].clone()).collect())
        .collect())
}

/// Andrew's monotone chain over a subset of frame indices.
pub(crate) fn hull_indices(frame: &IntFrame, subset: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = subset.to_vec();
    idx.sort_by(|&a, &b| frame.coords[a].cmp(&frame.coords[b]));
    if idx.len() <= 2 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::with_capacity(idx.len());
    for &i in &idx {
        while lower.len() >= 2 && frame.orient(lower[lower.len() - 2], lower[lower.len() - 1], i) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::with_capacity(idx.len());
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && frame.orient(upper[upper.len() - 2], upper[upper.len() - 1], i) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Layers as index lists. Points collinear on a layer boundary are pushed
/// inward, which never happens for sets in general position.
pub(crate) fn layer_indices(frame: &IntFrame) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..frame.len()).collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let hull = hull_indices(frame, &remaining);
        remaining.retain(|i| !hull.contains(i));
        layers.push(hull);
    }
    layers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    #[test]
    fn square_with_center() {
        let hull = convex_hull(&pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])).unwrap();
        assert_eq!(hull, pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]));
    }

    #[test]
    fn triangle_is_ccw() {
        let hull = convex_hull(&pts(&[(0, 1), (1, 0), (0, 0)])).unwrap();
        assert_eq!(hull, pts(&[(0, 0), (1, 0), (0, 1)]));
    }

    #[test]
    fn duplicates_rejected() {
        assert!(convex_hull(&pts(&[(0, 0), (1, 0), (0, 0)])).is_err());
        assert!(convex_layers(&pts(&[(0, 0), (0, 0)])).is_err());
    }

    #[test]
    fn layer_sizes() {
        let sq = pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        let layers = convex_layers(&sq).unwrap();
        assert_eq!(layers.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 1]);
        let two = pts(&[(0, 0), (8, 0), (8, 8), (0, 8), (3, 2), (5, 6)]);
        let layers = convex_layers(&two).unwrap();
        assert_eq!(layers.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 2]);
    }

    #[test]
    fn single_and_pair() {
        assert_eq!(convex_hull(&pts(&[(3, 3)])).unwrap().len(), 1);
        assert_eq!(convex_layers(&pts(&[(3, 3), (1, 1)])).unwrap(), vec![pts(&[(1, 1), (3, 3)])]);
    }
}
