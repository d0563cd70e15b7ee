//! Player 2's strategy and the AND-OR game search.
//!
//! The engine moves at even steps. Steps 4, 6 and 8 have explicit
//! constructions (parallelogram, a mirrored interior or outer point, and a
//! point completing configuration 8); every constructed point is validated
//! with the detectors and, if validation fails, replaced by a move found by
//! exhaustive search over the cells of the line arrangement.

use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::arrangement::{Arrangement, Cell, Face};
use crate::geometry::point::{check_general_position, IntFrame};
use crate::geometry::{orientation, Point};
use crate::order::OrderType;
use crate::pattern::{
    classify_with_order, diagonal_triangle, parallelogram_with_interior, ConfigurationLabel,
};
use crate::rational::{self, Rational};
use crate::variant::GameVariant;

/// Size of the losing polygon in strategy play.
pub const TARGET: usize = 5;
/// The step at which the strategy makes player 1 lose.
pub const FINAL_STEP: usize = 9;

/// Arrangement faces of a position, each with the order type obtained by
/// adding a point of that face and the losing polygon it would complete.
pub(crate) struct Survey {
    pub arrangement: Arrangement,
    pub faces: Vec<SurveyFace>,
}

pub(crate) struct SurveyFace {
    pub face: Face,
    pub order: OrderType,
    pub losing: Option<Vec<usize>>,
}

impl Survey {
    /// Needs at least two points in general position.
    pub fn new(points: &[Point], variant: GameVariant, k: usize) -> Result<Survey> {
        let arrangement = Arrangement::new(points)?;
        let base = OrderType::from_points(points);
        let last = points.len();
        let faces = arrangement
            .faces()
            .iter()
            .map(|face| {
                let order = arrangement.extended_order(&base, face);
                let losing = variant.completed_by(&order, last, k);
                SurveyFace { face: *face, order, losing }
            })
            .collect();
        Ok(Survey { arrangement, faces })
    }

    pub fn open(&self) -> impl Iterator<Item = &SurveyFace> {
        self.faces.iter().filter(|f| f.losing.is_none())
    }

}

fn with_point(points: &[Point], p: &Point) -> Vec<Point> {
    let mut v = points.to_vec();
    v.push(p.clone());
    v
}

/// Whether adding `p` keeps general position and completes no losing polygon.
fn is_safe(points: &[Point], p: &Point, variant: GameVariant, k: usize) -> bool {
    let all = with_point(points, p);
    if check_general_position(&all).is_err() {
        return false;
    }
    let t = OrderType::from_frame(&IntFrame::new(&all));
    variant.completed_by(&t, points.len(), k).is_none()
}

/// Step 4: complete the triangle to a parallelogram. Of the three
/// completions the lexicographically smallest is returned.
pub fn construct_parallelogram(triangle: &[Point; 3]) -> Result<Point> {
    let [a, b, c] = triangle;
    if orientation(a, b, c).sign() == 0 {
        return Err(Error::DegenerateInput("triangle vertices are collinear".into()));
    }
    let candidates = [a.add(b).sub(c), a.add(c).sub(b), b.add(c).sub(a)];
    Ok(candidates.into_iter().min().expect("three candidates"))
}

/// Range of `s` for which `origin + s * dir` lies strictly on side `sign`
/// of every directed line `(a, b)`. `None` bounds are infinite.
type Interval = (Option<Rational>, Option<Rational>);

fn line_interval(origin: &Point, dir: &Point, sides: &[(&Point, &Point, i8)]) -> Option<Interval> {
    let (mut lo, mut hi): Interval = (None, None);
    for &(a, b, sign) in sides {
        let ab = b.sub(a);
        let s = rational::int(sign as i64);
        let c0 = ab.cross(&origin.sub(a)) * &s;
        let c1 = ab.cross(dir) * &s;
        let zero = rational::int(0);
        if c1 == zero {
            if c0 <= zero {
                return None;
            }
            continue;
        }
        let root = -c0 / &c1;
        if c1 > zero {
            if lo.as_ref().is_none_or(|l| root > *l) {
                lo = Some(root);
            }
        } else if hi.as_ref().is_none_or(|h| root < *h) {
            hi = Some(root);
        }
    }
    match (&lo, &hi) {
        (Some(l), Some(h)) if l >= h => None,
        _ => Some((lo, hi)),
    }
}

/// Parameters inside an interval, the midpoint first.
fn interval_samples(interval: &Interval) -> Vec<Rational> {
    let fr = rational::frac;
    match interval {
        (Some(l), Some(h)) => [fr(1, 2), fr(1, 3), fr(2, 3), fr(1, 4), fr(3, 4), fr(1, 8), fr(7, 8), fr(1, 16), fr(15, 16)]
            .iter()
            .map(|f| l + (h - l) * f)
            .collect(),
        (Some(l), None) => [fr(1, 1), fr(1, 2), fr(2, 1), fr(1, 4), fr(4, 1)].iter().map(|d| l + d).collect(),
        (None, Some(h)) => [fr(1, 1), fr(1, 2), fr(2, 1), fr(1, 4), fr(4, 1)].iter().map(|d| h - d).collect(),
        (None, None) => [fr(0, 1), fr(1, 1), fr(-1, 1), fr(1, 2)].into(),
    }
}

/// Step 6: from configuration 5.1 place the sixth point in the opposite
/// diagonal triangle on the line through the interior point parallel to a
/// hull side; from 5.2 place it in the I region of a neighbouring vertex on
/// the line through the outer point parallel to the interior parallelogram's
/// side.
pub fn construct_sixth(points: &[Point], variant: GameVariant) -> Result<Point> {
    check_general_position(points)?;
    let t = OrderType::from_points(points);
    let label = classify_with_order(points, &t);
    let expected = match label {
        ConfigurationLabel::Config5_1 => ConfigurationLabel::Config6_1,
        ConfigurationLabel::Config5_2 => ConfigurationLabel::Config6_2,
        other => return Err(Error::InvalidArgument(format!("construct_sixth needs configuration 5.1 or 5.2, got {other}"))),
    };
    let layers = t.layers();
    let hull = &layers[0];
    let x = layers[1][0];
    let p = |i: usize| &points[i];

    let (origin, dir, interval) = if label == ConfigurationLabel::Config5_1 {
        let k = diagonal_triangle(&t, hull, x);
        let hi = |d: usize| hull[(k + d) % 4];
        let h = |d: usize| p(hi(d));
        let dir = h(3).sub(h(0));
        // Opposite triangle (h2, h3, centre): inside the hull edge h2h3, on
        // h3's side of diagonal h0h2 and on h2's side of diagonal h1h3.
        let sides = [
            (h(2), h(3), t.get(hi(2), hi(3), hi(0))),
            (h(0), h(2), t.get(hi(0), hi(2), hi(3))),
            (h(1), h(3), t.get(hi(1), hi(3), hi(2))),
        ];
        let interval = line_interval(p(x), &dir, &sides);
        (p(x).clone(), dir, interval)
    } else {
        // x + q = a + a' with x swallowed by the outer point w.
        let (q, [a1, a2]) = parallelogram_with_interior(points, hull, x).expect("label 5.2");
        let w = *hull.iter().find(|&&h| h != q && h != a1 && h != a2).expect("four hull points");
        let on_w_side = |a: usize| t.get(x, q, a) == t.get(x, q, w);
        let (a, a_other) = if on_w_side(a1) { (a1, a2) } else { (a2, a1) };
        let dir = p(a).sub(p(x));
        // Cone opposite to the parallelogram at a, on x's side of the diagonal a a'.
        let sides = [
            (p(a), p(x), -t.get(a, x, q)),
            (p(a), p(q), -t.get(a, q, x)),
            (p(a), p(a_other), t.get(a, a_other, x)),
        ];
        let interval = line_interval(p(w), &dir, &sides);
        (p(w).clone(), dir, interval)
    };

    if let Some(interval) = interval {
        for s in interval_samples(&interval) {
            let f = origin.add(&dir.scale(&s));
            if is_safe(points, &f, variant, TARGET) {
                let all = with_point(points, &f);
                let t6 = OrderType::from_points(&all);
                if classify_with_order(&all, &t6) == expected {
                    return Ok(f);
                }
            }
        }
    }
    Err(Error::NoFeasiblePoint(format!("no configuration {expected} placement on the construction line")))
}

/// Step 8: a safe point whose addition yields configuration 8; candidates
/// are cell representatives, the lexicographically smallest wins.
pub fn construct_eighth(points: &[Point], variant: GameVariant) -> Result<Point> {
    check_general_position(points)?;
    if points.len() != 7 {
        return Err(Error::InvalidArgument("construct_eighth needs a 7-point position".into()));
    }
    let survey = Survey::new(points, variant, TARGET)?;
    let reps: Vec<Point> = survey
        .open()
        .filter(|f| classify_with_order(&[], &f.order) == ConfigurationLabel::Config8)
        .map(|f| survey.arrangement.cell(&f.face).representative)
        .collect();
    reps.into_iter()
        .min()
        .ok_or_else(|| Error::NoFeasiblePoint("no cell completes configuration 8".into()))
}

/// Player 2's move in the current position (`points.len()` must be odd).
pub fn choose_move(points: &[Point], variant: GameVariant) -> Result<Point> {
    check_general_position(points)?;
    let n = points.len();
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("step {} belongs to player 1", n + 1)));
    }
    let fast = match n {
        1 => Ok(points[0].add(&Point::int(1, 0))),
        3 => construct_parallelogram(&[points[0].clone(), points[1].clone(), points[2].clone()]),
        5 => construct_sixth(points, variant),
        7 => construct_eighth(points, variant),
        _ => Err(Error::NoFeasiblePoint("no construction for this step".into())),
    };
    match fast {
        Ok(p) if is_safe(points, &p, variant, TARGET) => Ok(p),
        _ => search_move(points, variant, TARGET, FINAL_STEP),
    }
}

/// First engine move (in cell order) from which the search certifies that
/// player 1 loses by `max_step`.
pub fn search_move(points: &[Point], variant: GameVariant, k: usize, max_step: usize) -> Result<Point> {
    let options = SolveOptions { policy: Policy::Search, detail: Detail::Compact, parallel: false };
    match solve_and_or(points, variant, k, max_step, &options)? {
        Solution::Win(cert) => cert
            .first_reply
            .ok_or_else(|| Error::NoWinningMove("position is not the engine's turn".into())),
        Solution::Refutation(r) => Err(Error::NoWinningMove(r.reason)),
    }
}

/// Cells whose points complete the variant's losing 5-gon.
pub fn losing_cells(points: &[Point], variant: GameVariant) -> Result<Vec<Cell>> {
    check_general_position(points)?;
    if points.len() < TARGET - 1 {
        return Ok(Vec::new());
    }
    let survey = Survey::new(points, variant, TARGET)?;
    Ok(survey
        .faces
        .iter()
        .filter(|f| f.losing.is_some())
        .map(|f| survey.arrangement.cell(&f.face))
        .collect())
}

/// A player-2 move rule.
pub type MovePolicy = fn(&[Point], GameVariant) -> Result<Point>;

/// How player 2 picks moves during [`solve_and_or`].
#[derive(Debug, Clone, Copy)]
pub enum Policy {
    /// Try every safe cell until one wins.
    Search,
    /// Play [`choose_move`].
    Strategy,
    /// Play a supplied rule (used to test the verifier itself).
    Custom(MovePolicy),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Detail {
    /// Keep the whole move tree.
    Full,
    /// Keep only statistics.
    Compact,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub policy: Policy,
    pub detail: Detail,
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { policy: Policy::Search, detail: Detail::Full, parallel: false }
    }
}

/// Node of a win certificate. Step numbers are 1-based move counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertNode {
    /// Player 1 to move with no safe cell: every placement loses.
    Leaf {
        step: usize,
        cells: usize,
        /// Losing polygon completed by a point of the first cell, as indices
        /// into the position with that point appended.
        witness: Vec<usize>,
    },
    /// Player 1 to move: one branch per safe cell.
    Adversary { step: usize, branches: Vec<Branch> },
    /// Player 2's reply.
    Engine { step: usize, reply: Point, next: Box<CertNode> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Branch {
    #[serde(rename = "move")]
    pub mv: Point,
    pub next: CertNode,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CertStats {
    pub leaves: usize,
    pub adversary_nodes: usize,
    pub engine_moves: usize,
    pub cells_examined: usize,
    pub min_leaf_step: usize,
    pub max_leaf_step: usize,
}

impl CertStats {
    fn leaf(step: usize, cells: usize) -> Self {
        CertStats { leaves: 1, cells_examined: cells, min_leaf_step: step, max_leaf_step: step, ..Default::default() }
    }

    fn merge(&mut self, other: &CertStats) {
        if self.leaves == 0 {
            self.min_leaf_step = other.min_leaf_step;
        } else if other.leaves > 0 {
            self.min_leaf_step = self.min_leaf_step.min(other.min_leaf_step);
        }
        self.leaves += other.leaves;
        self.adversary_nodes += other.adversary_nodes;
        self.engine_moves += other.engine_moves;
        self.cells_examined += other.cells_examined;
        self.max_leaf_step = self.max_leaf_step.max(other.max_leaf_step);
    }
}

/// Proof that player 1 loses from `start` by `max_step` against every
/// placement, over representative points of the arrangement cells.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WinCertificate {
    pub variant: GameVariant,
    pub k: usize,
    pub start: Vec<Point>,
    pub max_step: usize,
    /// Engine reply at the root when the start position is the engine's turn.
    pub first_reply: Option<Point>,
    pub stats: CertStats,
    /// Absent when solved with [`Detail::Compact`].
    pub root: Option<CertNode>,
}

/// A line of play on which the engine fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Refutation {
    /// Moves after the start position.
    pub path: Vec<Point>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Solution {
    Win(WinCertificate),
    Refutation(Refutation),
}

impl Solution {
    pub fn is_win(&self) -> bool {
        matches!(self, Solution::Win(_))
    }
}

struct Ctx<'a> {
    variant: GameVariant,
    k: usize,
    max_step: usize,
    options: &'a SolveOptions,
    start_len: usize,
    /// Order types (in input order) already known to fail for the engine.
    failed: DashMap<Vec<i8>, ()>,
    nodes: AtomicUsize,
}

const NODE_BUDGET: usize = 5_000_000;

/// Certificate subtree (full detail only), statistics, and the engine's
/// reply when the node is an engine move.
type Outcome = std::result::Result<(Option<CertNode>, CertStats, Option<Point>), Refutation>;

/// Exhaustive AND-OR search: player 1 branches over every safe cell,
/// player 2 needs one winning reply (or follows the strategy).
pub fn solve_and_or(
    points: &[Point],
    variant: GameVariant,
    k: usize,
    max_step: usize,
    options: &SolveOptions,
) -> Result<Solution> {
    if !(3..=5).contains(&k) {
        return Err(Error::InvalidArgument(format!("k must be 3, 4 or 5, got {k}")));
    }
    if points.len() < 2 {
        return Err(Error::InvalidArgument("search needs at least two placed points".into()));
    }
    check_general_position(points)?;
    if variant.losing_polygon(points, k)?.is_some() {
        return Err(Error::InvalidArgument("start position already contains a losing polygon".into()));
    }
    let ctx = Ctx {
        variant,
        k,
        max_step,
        options,
        start_len: points.len(),
        failed: DashMap::new(),
        nodes: AtomicUsize::new(0),
    };
    let step = points.len() + 1;
    let outcome = if step % 2 == 1 { adversary(&ctx, points, step)? } else { engine(&ctx, points, step)? };
    Ok(match outcome {
        Ok((root, stats, first_reply)) => {
            let root = if options.detail == Detail::Full { root } else { None };
            Solution::Win(WinCertificate { variant, k, start: points.to_vec(), max_step, first_reply, stats, root })
        }
        Err(r) => Solution::Refutation(r),
    })
}

fn tick(ctx: &Ctx) -> Result<()> {
    if ctx.nodes.fetch_add(1, Ordering::Relaxed) > NODE_BUDGET {
        return Err(Error::DepthExceeded(format!("more than {NODE_BUDGET} search nodes")));
    }
    Ok(())
}

fn refute(ctx: &Ctx, points: &[Point], reason: String) -> Refutation {
    Refutation { path: points[ctx.start_len..].to_vec(), reason }
}

fn adversary(ctx: &Ctx, points: &[Point], step: usize) -> Result<Outcome> {
    tick(ctx)?;
    if step > ctx.max_step {
        return Ok(Err(refute(ctx, points, format!("player 1 still has a safe move at step {step}"))));
    }
    let survey = Survey::new(points, ctx.variant, ctx.k)?;
    let open: Vec<&SurveyFace> = survey.open().collect();
    if open.is_empty() {
        let witness = survey.faces[0].losing.clone().unwrap_or_default();
        let cells = survey.faces.len();
        let node = (ctx.options.detail == Detail::Full).then_some(CertNode::Leaf { step, cells, witness });
        return Ok(Ok((node, CertStats::leaf(step, cells), None)));
    }
    let explore = |f: &&SurveyFace| -> Result<(Point, Outcome)> {
        let rep = survey.arrangement.cell(&f.face).representative;
        let next = with_point(points, &rep);
        let outcome = engine(ctx, &next, step + 1)?;
        Ok((rep, outcome))
    };
    let results: Vec<Result<(Point, Outcome)>> = if ctx.options.parallel {
        open.par_iter().map(explore).collect()
    } else {
        let mut out = Vec::with_capacity(open.len());
        for f in &open {
            let r = explore(f);
            let stop = matches!(r, Err(_) | Ok((_, Err(_))));
            out.push(r);
            if stop {
                break;
            }
        }
        out
    };
    let mut stats = CertStats { adversary_nodes: 1, cells_examined: survey.faces.len(), ..Default::default() };
    let mut branches = Vec::new();
    for r in results {
        let (mv, outcome) = r?;
        let (node, child, _) = match outcome {
            Ok(o) => o,
            Err(refutation) => return Ok(Err(refutation)),
        };
        stats.merge(&child);
        if let Some(next) = node {
            branches.push(Branch { mv, next });
        }
    }
    let node = (ctx.options.detail == Detail::Full).then_some(CertNode::Adversary { step, branches });
    Ok(Ok((node, stats, None)))
}

fn engine(ctx: &Ctx, points: &[Point], step: usize) -> Result<Outcome> {
    tick(ctx)?;
    if step > ctx.max_step {
        return Ok(Err(refute(ctx, points, format!("game not over by step {}", ctx.max_step))));
    }
    match ctx.options.policy {
        Policy::Strategy | Policy::Custom(_) => {
            let rule: MovePolicy = match ctx.options.policy {
                Policy::Custom(f) => f,
                _ => choose_move,
            };
            let reply = match rule(points, ctx.variant) {
                Ok(p) => p,
                Err(e) => return Ok(Err(refute(ctx, points, format!("engine failed at step {step}: {e}")))),
            };
            if !is_safe(points, &reply, ctx.variant, ctx.k) {
                return Ok(Err(refute(ctx, points, format!("engine move at step {step} loses"))));
            }
            let next = with_point(points, &reply);
            Ok(adversary(ctx, &next, step + 1)?.map(|(node, mut stats, _)| {
                stats.engine_moves += 1;
                let node = node.map(|n| CertNode::Engine { step, reply: reply.clone(), next: Box::new(n) });
                (node, stats, Some(reply))
            }))
        }
        Policy::Search => {
            let key = OrderType::from_points(points).triples();
            if ctx.failed.contains_key(&key) {
                return Ok(Err(refute(ctx, points, format!("no winning reply at step {step} (memoized)"))));
            }
            let survey = Survey::new(points, ctx.variant, ctx.k)?;
            let mut last = None;
            for f in survey.open() {
                let reply = survey.arrangement.cell(&f.face).representative;
                let next = with_point(points, &reply);
                match adversary(ctx, &next, step + 1)? {
                    Ok((node, mut stats, _)) => {
                        stats.engine_moves += 1;
                        stats.cells_examined += survey.faces.len();
                        let node = node.map(|n| CertNode::Engine { step, reply: reply.clone(), next: Box::new(n) });
                        return Ok(Ok((node, stats, Some(reply))));
                    }
                    Err(r) => last = Some(r),
                }
            }
            ctx.failed.insert(key, ());
            Ok(Err(last.unwrap_or_else(|| refute(ctx, points, format!("engine has no safe move at step {step}")))))
        }
    }
}

/// The step at which player 1 is forced to lose under best play for the
/// k-gon game, found by iterative deepening from the canonical opening
/// (two points for k = 3, a triangle otherwise).
pub fn game_value(variant: GameVariant, k: usize, limit: usize) -> Result<usize> {
    let start = canonical_start(k);
    let options = SolveOptions { policy: Policy::Search, detail: Detail::Compact, parallel: false };
    let mut max_step = start.len() + 1;
    while max_step <= limit {
        if solve_and_or(&start, variant, k, max_step, &options)?.is_win() {
            return Ok(max_step);
        }
        max_step += 1;
    }
    Err(Error::DepthExceeded(format!("no forced loss for player 1 by step {limit}")))
}

/// Opening used by searches: all pairs and all triangles are affinely
/// equivalent, so one representative suffices.
pub fn canonical_start(k: usize) -> Vec<Point> {
    if k <= 3 {
        vec![Point::int(0, 0), Point::int(1, 0)]
    } else {
        canonical_triangle()
    }
}

pub fn canonical_triangle() -> Vec<Point> {
    vec![Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::classify_configuration;
    use ConfigurationLabel::*;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    #[test]
    fn parallelogram_examples() {
        let tri = [Point::int(0, 0), Point::int(4, 0), Point::int(0, 4)];
        assert_eq!(construct_parallelogram(&tri).unwrap(), Point::int(-4, 4));
        let tri = [Point::int(0, 0), Point::int(2, 0), Point::int(1, 3)];
        assert_eq!(construct_parallelogram(&tri).unwrap(), Point::int(-1, 3));
        let line = [Point::int(0, 0), Point::int(1, 1), Point::int(2, 2)];
        assert!(matches!(construct_parallelogram(&line), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn parallelogram_classifies_config4() {
        let tri = pts(&[(0, 0), (6, 1), (2, 5)]);
        let d = construct_parallelogram(&[tri[0].clone(), tri[1].clone(), tri[2].clone()]).unwrap();
        assert_eq!(classify_configuration(&with_point(&tri, &d)).unwrap(), Config4);
        assert_eq!(choose_move(&tri, GameVariant::Convex).unwrap(), d);
    }

    #[test]
    fn sixth_from_config5_1() {
        let p = pts(&[(0, 4), (0, 0), (4, 0), (4, 4), (2, 1)]);
        for v in GameVariant::ALL {
            let f = construct_sixth(&p, v).unwrap();
            let all = with_point(&p, &f);
            assert_eq!(classify_configuration(&all).unwrap(), Config6_1);
            assert!(v.losing_polygon(&all, 5).unwrap().is_none());
        }
    }

    #[test]
    fn sixth_from_config5_2() {
        let p = pts(&[(0, 0), (4, 0), (9, 8), (0, 4), (4, 4)]);
        for v in GameVariant::ALL {
            let f = construct_sixth(&p, v).unwrap();
            let all = with_point(&p, &f);
            assert_eq!(classify_configuration(&all).unwrap(), Config6_2);
            assert!(GameVariant::Convex.losing_polygon(&all, 5).unwrap().is_none());
        }
    }

    #[test]
    fn sixth_rejects_other_labels() {
        assert!(construct_sixth(&pts(&[(0, 0), (5, 0), (4, 4), (0, 4), (2, 1)]), GameVariant::Convex).is_err());
    }

    #[test]
    fn losing_cells_of_parallelogram_are_o_regions() {
        use crate::geometry::region::{classify_region, RegionClass};
        let sq = pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let quad = [sq[0].clone(), sq[1].clone(), sq[2].clone(), sq[3].clone()];
        let losing = losing_cells(&sq, GameVariant::Empty).unwrap();
        assert!(!losing.is_empty());
        for cell in &losing {
            assert_eq!(classify_region(&quad, &cell.representative).unwrap(), RegionClass::O);
        }
        let all = crate::geometry::arrangement_cells(&sq).unwrap();
        let o_cells = all
            .iter()
            .filter(|c| classify_region(&quad, &c.representative).unwrap() == RegionClass::O)
            .count();
        assert_eq!(o_cells, losing.len());
    }

    #[test]
    fn small_sets_are_never_bad() {
        assert!(losing_cells(&pts(&[(0, 0), (1, 0), (0, 1)]), GameVariant::Convex).unwrap().is_empty());
        let four = pts(&[(0, 0), (7, 1), (3, 6), (2, 2)]);
        let total = crate::geometry::arrangement_cells(&four).unwrap().len();
        assert!(losing_cells(&four, GameVariant::Convex).unwrap().len() < total);
    }

    #[test]
    fn choose_move_rejects_player_one_turn() {
        assert!(choose_move(&pts(&[(0, 0), (1, 0)]), GameVariant::Convex).is_err());
    }

    #[test]
    fn small_game_values() {
        for v in GameVariant::ALL {
            assert_eq!(game_value(v, 3, 9).unwrap(), 3);
            assert_eq!(game_value(v, 4, 9).unwrap(), 5);
        }
    }

    #[test]
    fn k4_certificate_depth() {
        let sol = solve_and_or(&canonical_triangle(), GameVariant::Convex, 4, 5, &SolveOptions::default()).unwrap();
        let Solution::Win(cert) = sol else { panic!("expected a win") };
        assert_eq!(cert.stats.max_leaf_step, 5);
        assert_eq!(cert.stats.min_leaf_step, 5);
        assert!(matches!(cert.root, Some(CertNode::Engine { step: 4, .. })));
    }
}
