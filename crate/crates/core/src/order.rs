//! Orientation tables (chirotopes) for small point sets.
//!
//! Every combinatorial question the game asks (convex position, hull
//! membership, emptiness, layer structure, region membership) depends only on
//! the orientation signs of point triples. An [`OrderType`] caches those signs
//! once per position so the detectors never touch coordinates.

use crate::geometry::point::{IntFrame, Point};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderType {
    n: usize,
    signs: Vec<i8>,
}

impl std::fmt::Debug for OrderType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrderType(n={}, ", self.n)?;
        for w in self.triples() {
            let c = match w {
                1 => '+',
                -1 => '-',
                _ => '0',
            };
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl OrderType {
    pub fn from_points(points: &[Point]) -> Self {
        Self::from_frame(&IntFrame::new(points))
    }

    pub fn from_frame(frame: &IntFrame) -> Self {
        let n = frame.len();
        let mut t = OrderType { n, signs: vec![0; n * n * n] };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    t.set(i, j, k, frame.orient(i, j, k));
                }
            }
        }
        t
    }

    /// Appends one point whose orientation against every pair `i < j` is
    /// `side(i, j)` = sign of `orient(p_i, p_j, new)`.
    pub fn extended(&self, side: impl Fn(usize, usize) -> i8) -> OrderType {
        let n = self.n + 1;
        let mut t = OrderType { n, signs: vec![0; n * n * n] };
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    t.set(i, j, k, self.get(i, j, k));
                }
                t.set(i, j, self.n, side(i, j));
            }
        }
        t
    }

    /// Order type of the sub-configuration `subset` (relabelled `0..len`).
    pub fn restricted(&self, subset: &[usize]) -> OrderType {
        let n = subset.len();
        let mut t = OrderType { n, signs: vec![0; n * n * n] };
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    t.set(a, b, c, self.get(subset[a], subset[b], subset[c]));
                }
            }
        }
        t
    }

    fn set(&mut self, i: usize, j: usize, k: usize, s: i8) {
        let n = self.n;
        let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
        self.signs[idx(i, j, k)] = s;
        self.signs[idx(j, k, i)] = s;
        self.signs[idx(k, i, j)] = s;
        self.signs[idx(j, i, k)] = -s;
        self.signs[idx(i, k, j)] = -s;
        self.signs[idx(k, j, i)] = -s;
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Signs of all triples `i < j < k` in lexicographic order.
    pub fn triples(&self) -> Vec<i8> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    out.push(self.get(i, j, k));
                }
            }
        }
        out
    }

    pub fn has_collinear_triple(&self) -> bool {
        self.triples().contains(&0)
    }

    /// Strictly inside triangle `abc`.
    #[inline]
    pub fn in_triangle(&self, p: usize, a: usize, b: usize, c: usize) -> bool {
        let s = self.get(a, b, c);
        s != 0 && self.get(a, b, p) == s && self.get(b, c, p) == s && self.get(c, a, p) == s
    }

    /// Strictly inside the hull of `subset` (which need not be convex).
    pub fn in_hull(&self, p: usize, subset: &[usize]) -> bool {
        let m = subset.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    if self.in_triangle(p, subset[a], subset[b], subset[c]) {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn is_convex(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .all(|&p| !self.in_hull_excluding(p, subset))
    }

    fn in_hull_excluding(&self, p: usize, subset: &[usize]) -> bool {
        let others: buf::Buf = subset.iter().copied().filter(|&q| q != p).collect();
        self.in_hull(p, others.as_slice())
    }

    /// Hull vertices of `subset`, counterclockwise, starting at the smallest index.
    pub fn hull(&self, subset: &[usize]) -> Vec<usize> {
        let mut verts: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&p| !self.in_hull_excluding(p, subset))
            .collect();
        if verts.len() <= 2 {
            verts.sort_unstable();
            return verts;
        }
        verts.sort_unstable();
        let first = verts[0];
        let mut rest: Vec<usize> = verts[1..].to_vec();
        rest.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if self.get(first, a, b) > 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        let mut out = vec![first];
        out.extend(rest);
        out
    }

    /// Convex layers as CCW index lists.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        self.layers_of(&(0..self.n).collect::<Vec<_>>())
    }

    pub fn layers_of(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut remaining = subset.to_vec();
        let mut layers = Vec::new();
        while !remaining.is_empty() {
            let h = self.hull(&remaining);
            remaining.retain(|i| !h.contains(i));
            layers.push(h);
        }
        layers
    }

    /// No point of `0..n` outside `polygon` lies strictly inside it.
    /// `polygon` must be convex and in cyclic order.
    pub fn is_empty_polygon(&self, polygon: &[usize]) -> bool {
        let h0 = polygon[0];
        (0..self.n).filter(|q| !polygon.contains(q)).all(|q| {
            polygon
                .windows(2)
                .skip(1)
                .all(|w| !self.in_triangle(q, h0, w[0], w[1]))
        })
    }

    /// First `k`-subset (lexicographic) in convex position, optionally required
    /// to contain `must`, and optionally required to be empty. Returned in CCW order.
    pub fn find_convex(&self, k: usize, must: Option<usize>, empty: bool) -> Option<Vec<usize>> {
        let pool: Vec<usize> = (0..self.n).filter(|&i| Some(i) != must).collect();
        let need = if must.is_some() { k.checked_sub(1)? } else { k };
        let mut found = None;
        for_each_combination(pool.len(), need, &mut |combo| {
            let mut subset: buf::Buf = combo.iter().map(|&c| pool[c]).collect();
            if let Some(m) = must {
                subset.push(m);
            }
            if !self.is_convex(subset.as_slice()) {
                return true;
            }
            let h = self.hull(subset.as_slice());
            if empty && !self.is_empty_polygon(&h) {
                return true;
            }
            found = Some(h);
            false
        });
        found
    }
}

/// Calls `f` with every `k`-combination of `0..n` in lexicographic order
/// until it returns `false`.
pub fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Tiny fixed-capacity buffer so the inner detector loops avoid heap traffic.
mod buf {
    #[derive(Clone, Copy)]
    pub struct Buf {
        len: usize,
        data: [usize; 16],
    }

    impl Buf {
        pub fn push(&mut self, v: usize) {
            self.data[self.len] = v;
            self.len += 1;
        }

        pub fn as_slice(&self) -> &[usize] {
            &self.data[..self.len]
        }
    }

    impl FromIterator<usize> for Buf {
        fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
            let mut b = Buf { len: 0, data: [0; 16] };
            for v in iter {
                b.push(v);
            }
            b
        }
    }
}
