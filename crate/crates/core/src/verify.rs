//! Computational checks of the strategy tree and the structural lemmas it
//! relies on. Each check returns a [`VerificationReport`].

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::region::{beam_contains_in_order, region_in_order, BeamIdx, RegionClass};
use crate::geometry::Point;
use crate::order::OrderType;
use crate::pattern::{classify_configuration, find_convex_5gon, find_empty_convex_5gon, ConfigurationLabel};
use crate::referee::{GameState, Trace};
use crate::sample::{random_general_position, structured_sample};
use crate::simulate::simulate_game;
use crate::strategy::{canonical_triangle, choose_move, MovePolicy, Survey, FINAL_STEP, TARGET};
use crate::variant::GameVariant;

pub const CAVEAT: &str = "verified over representative realizations of arrangement cells and sampled point sets";

/// Coordinate range for uniformly sampled lattice sets.
const SAMPLE_RANGE: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    CounterexampleFound {
        points: Vec<Point>,
        /// Replayable game trace when the points form a legal game.
        trace: Option<Trace>,
        detail: String,
    },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma: String,
    pub variant: Option<GameVariant>,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Number of positions, samples or cells tested.
    pub items: usize,
    pub stats: BTreeMap<String, u64>,
    pub seed: Option<u64>,
    pub seconds: f64,
    pub caveat: String,
}

impl VerificationReport {
    fn new(lemma: &str, variant: Option<GameVariant>, seed: Option<u64>) -> Self {
        VerificationReport {
            lemma: lemma.to_string(),
            variant,
            verdict: Verdict::Inconclusive { reason: "not run".into() },
            items: 0,
            stats: BTreeMap::new(),
            seed,
            seconds: 0.0,
            caveat: CAVEAT.to_string(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self.verdict, Verdict::CounterexampleFound { .. })
    }

    fn finish(mut self, started: Instant, failure: Option<Failure>) -> Self {
        self.seconds = started.elapsed().as_secs_f64();
        self.verdict = match failure {
            Some(f) => Verdict::CounterexampleFound { trace: trace_of(&f.points, self.variant), points: f.points, detail: f.detail },
            None if self.items == 0 => Verdict::Inconclusive { reason: "nothing was tested".into() },
            None => Verdict::Verified,
        };
        self
    }

    fn bump(&mut self, key: impl Into<String>, by: u64) {
        *self.stats.entry(key.into()).or_insert(0) += by;
    }
}

/// A point set violating the checked property.
#[derive(Debug, Clone)]
struct Failure {
    points: Vec<Point>,
    detail: String,
}

fn fail(points: &[Point], detail: impl Into<String>) -> Failure {
    Failure { points: points.to_vec(), detail: detail.into() }
}

fn trace_of(points: &[Point], variant: Option<GameVariant>) -> Option<Trace> {
    let mut state = GameState::new(variant?);
    for p in points {
        state.apply_move(p.clone()).ok()?;
    }
    Some(state.to_trace())
}

fn rng_for(seed: u64, item: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(item);
    rng
}

fn with_point(points: &[Point], p: &Point) -> Vec<Point> {
    let mut v = points.to_vec();
    v.push(p.clone());
    v
}

// ---------------------------------------------------------------------------
// Strategy tree

/// Labels the position must carry after the given step.
fn expected_labels(step: usize) -> &'static [ConfigurationLabel] {
    use ConfigurationLabel::*;
    match step {
        4 => &[Config4],
        5 => &[Config5_1, Config5_2],
        6 => &[Config6_1, Config6_2],
        7 => &[Config7_1, Config7_2],
        8 => &[Config8],
        _ => &[],
    }
}

#[derive(Default)]
struct TreeStats {
    leaves: u64,
    adversary_nodes: u64,
    engine_moves: u64,
    cells: u64,
    paths: BTreeMap<String, u64>,
}

impl TreeStats {
    fn merge(&mut self, o: TreeStats) {
        self.leaves += o.leaves;
        self.adversary_nodes += o.adversary_nodes;
        self.engine_moves += o.engine_moves;
        self.cells += o.cells;
        for (k, v) in o.paths {
            *self.paths.entry(k).or_insert(0) += v;
        }
    }
}

struct Walker {
    variant: GameVariant,
    rule: MovePolicy,
}

type Walk = std::result::Result<TreeStats, Failure>;

impl Walker {
    fn check_label(&self, points: &[Point], labels: &mut Vec<ConfigurationLabel>) -> std::result::Result<(), Failure> {
        let step = points.len();
        let expected = expected_labels(step);
        if expected.is_empty() {
            return Ok(());
        }
        let label = classify_configuration(points).map_err(|e| fail(points, format!("classifier rejected step {step}: {e}")))?;
        if !expected.contains(&label) {
            let want: Vec<String> = expected.iter().map(|l| l.to_string()).collect();
            return Err(fail(points, format!("step {step} is configuration {label}, expected {}", want.join(" or "))));
        }
        labels.push(label);
        Ok(())
    }

    fn engine(&self, points: &[Point], labels: &[ConfigurationLabel]) -> Result<Walk> {
        let step = points.len() + 1;
        let reply = match (self.rule)(points, self.variant) {
            Ok(p) => p,
            Err(e) => return Ok(Err(fail(points, format!("engine failed at step {step}: {e}")))),
        };
        let next = with_point(points, &reply);
        if let Some(w) = self.variant.losing_polygon(&next, TARGET)? {
            return Ok(Err(fail(&next, format!("engine completed a losing 5-gon {:?} at step {step}", w.indices))));
        }
        let mut labels = labels.to_vec();
        if let Err(f) = self.check_label(&next, &mut labels) {
            return Ok(Err(f));
        }
        Ok(self.adversary(&next, &labels)?.map(|mut s| {
            s.engine_moves += 1;
            s
        }))
    }

    fn adversary(&self, points: &[Point], labels: &[ConfigurationLabel]) -> Result<Walk> {
        let step = points.len() + 1;
        let survey = Survey::new(points, self.variant, TARGET)?;
        let open: Vec<Point> = survey.open().map(|f| survey.arrangement.cell(&f.face).representative).collect();
        let mut stats = TreeStats { cells: survey.faces.len() as u64, ..Default::default() };
        if open.is_empty() {
            if step != FINAL_STEP {
                return Ok(Err(fail(points, format!("player 1 forced to lose at step {step}, expected step {FINAL_STEP}"))));
            }
            let path: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
            stats.leaves = 1;
            stats.paths.insert(path.join(">"), 1);
            return Ok(Ok(stats));
        }
        if step >= FINAL_STEP {
            return Ok(Err(fail(points, format!("player 1 has {} safe cells at step {step}", open.len()))));
        }
        stats.adversary_nodes = 1;
        let explore = |rep: &Point| -> Result<Walk> {
            let next = with_point(points, rep);
            let mut labels = labels.to_vec();
            if let Err(f) = self.check_label(&next, &mut labels) {
                return Ok(Err(f));
            }
            self.engine(&next, &labels)
        };
        // The first adversary layer fans out in parallel; deeper ones run
        // sequentially inside each worker.
        let results: Vec<Result<Walk>> =
            if step == 5 { open.par_iter().map(explore).collect() } else { open.iter().map(explore).collect() };
        for r in results {
            match r? {
                Ok(s) => stats.merge(s),
                Err(f) => return Ok(Err(f)),
            }
        }
        Ok(Ok(stats))
    }
}

/// Plays `choose_move` for player 2 from the canonical triangle while
/// player 1 branches over every safe cell at steps 5 and 7, checking the
/// configuration labels along each line and that every line ends at step 9.
pub fn verify_strategy_tree(variant: GameVariant) -> Result<VerificationReport> {
    verify_strategy_tree_with(variant, choose_move)
}

/// [`verify_strategy_tree`] with a different player-2 rule.
pub fn verify_strategy_tree_with(variant: GameVariant, rule: MovePolicy) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("strategy", Some(variant), None);
    let walker = Walker { variant, rule };
    let start = canonical_triangle();
    let failure = match walker.engine(&start, &[])? {
        Ok(s) => {
            report.items = s.leaves as usize;
            report.bump("leaves", s.leaves);
            report.bump("adversary_nodes", s.adversary_nodes);
            report.bump("engine_moves", s.engine_moves);
            report.bump("cells_examined", s.cells);
            report.bump("leaf_step", FINAL_STEP as u64);
            for (path, n) in s.paths {
                report.bump(format!("path {path}"), n);
            }
            None
        }
        Err(f) => Some(f),
    };
    Ok(report.finish(started, failure))
}

// ---------------------------------------------------------------------------
// Small positions

/// Region of each outer point against the inner triangle: `Err(edge)` when
/// beyond exactly one edge line, `Ok(vertex)` when beyond the two edge lines
/// meeting at that vertex.
fn triangle_region(t: &OrderType, tri: &[usize], p: usize) -> std::result::Result<usize, usize> {
    let beyond: Vec<usize> = (0..3)
        .filter(|&e| {
            let (a, b, c) = (tri[e], tri[(e + 1) % 3], tri[(e + 2) % 3]);
            t.get(a, b, p) != t.get(a, b, c)
        })
        .collect();
    match beyond.as_slice() {
        [e] => Err(*e),
        // Edges e and e+1 meet at vertex e+1.
        [e, f] if (e + 1) % 3 == *f => Ok(*f),
        // Edges 0 and 2 meet at vertex 0.
        [e, _] => Ok(*e),
        _ => unreachable!("a point outside a triangle is beyond one or two edge lines"),
    }
}

/// Name of the (3,3) sub-case: where the outer points sit relative to the
/// inner triangle.
fn three_three_case(points: &[Point]) -> String {
    let t = OrderType::from_points(points);
    let layers = t.layers();
    let (outer, inner) = (&layers[0], &layers[1]);
    let regions: Vec<std::result::Result<usize, usize>> = outer.iter().map(|&p| triangle_region(&t, inner, p)).collect();
    let mut i_at = [0usize; 3];
    let mut o_at = [0usize; 3];
    for r in &regions {
        match r {
            Ok(v) => i_at[*v] += 1,
            Err(e) => o_at[*e] += 1,
        }
    }
    let mut parts: Vec<&str> = Vec::new();
    for &n in &i_at {
        match n {
            0 => {}
            1 => parts.push("I"),
            2 => parts.push("2I"),
            _ => parts.push("3I"),
        }
    }
    for &n in &o_at {
        match n {
            0 => {}
            1 => parts.push("O"),
            2 => parts.push("2O"),
            _ => parts.push("3O"),
        }
    }
    // Multiplicities first, then the more frequent letter.
    let i_count = i_at.iter().sum::<usize>();
    let major = if 2 * i_count >= regions.len() { 'I' } else { 'O' };
    parts.sort_by_key(|s| (!s.starts_with(char::is_numeric), !s.contains(major)));
    format!("({})", parts.join(","))
}

pub const THREE_THREE_CASES: [&str; 5] = ["(I,I,I)", "(O,O,O)", "(I,I,O)", "(O,O,I)", "(2I,O)"];

fn strata(n: usize, variant: GameVariant) -> Vec<Vec<usize>> {
    match (n, variant) {
        (4, _) => vec![vec![4], vec![3, 1]],
        (6, GameVariant::Convex) => vec![vec![3, 3], vec![4, 2]],
        (6, GameVariant::Empty) => vec![vec![3, 3], vec![4, 2], vec![5, 1]],
        _ => Vec::new(),
    }
}

/// Random n-point positions (n = 4 or 6) without a losing polygon always
/// leave player 1 a cell that completes none.
pub fn verify_no_bad_small(n: usize, variant: GameVariant, samples: usize, seed: u64) -> Result<VerificationReport> {
    if n != 4 && n != 6 {
        return Err(Error::InvalidArgument(format!("n must be 4 or 6, got {n}")));
    }
    let started = Instant::now();
    let mut report = VerificationReport::new(&format!("no_bad_small_n{n}"), Some(variant), Some(seed));
    let strata = strata(n, variant);
    let mut failure = None;
    let mut exhausted = Vec::new();
    for (s, sig) in strata.iter().enumerate() {
        let per = samples / strata.len() + usize::from(s < samples % strata.len());
        let name: Vec<String> = sig.iter().map(|x| x.to_string()).collect();
        let name = format!("({})", name.join(","));
        // Samples already containing a losing polygon are skipped, so draw
        // in chunks until the stratum has its quota.
        let stream = (s as u64) << 40;
        let mut tested = 0;
        let mut drawn = 0;
        while tested < per && failure.is_none() {
            if drawn >= per * MAX_DRAWS_PER_SAMPLE {
                exhausted.push(name.clone());
                break;
            }
            let results: Vec<SmallOutcome> = (drawn..drawn + per)
                .into_par_iter()
                .map(|i| small_sample(n, sig, variant, seed, stream + i as u64))
                .collect();
            drawn += per;
            for r in results {
                match r? {
                    Ok(_) if tested == per => {}
                    Ok(Some((cells, case))) => {
                        tested += 1;
                        report.items += 1;
                        report.bump(format!("tested {name}"), 1);
                        report.bump("cells_examined", cells as u64);
                        if let Some(c) = case {
                            report.bump(format!("case {c}"), 1);
                        }
                    }
                    Ok(None) => report.bump(format!("skipped already losing {name}"), 1),
                    Err(f) => {
                        failure.get_or_insert(f);
                    }
                }
            }
        }
    }
    if failure.is_none() && !exhausted.is_empty() {
        report.seconds = started.elapsed().as_secs_f64();
        report.verdict = Verdict::Inconclusive { reason: format!("too few non-losing samples in strata {}", exhausted.join(" ")) };
        return Ok(report);
    }
    let mut report = report.finish(started, failure);
    if n == 6 && report.is_verified() {
        let missing: Vec<&str> =
            THREE_THREE_CASES.iter().copied().filter(|c| !report.stats.contains_key(&format!("case {c}"))).collect();
        if !missing.is_empty() {
            report.verdict = Verdict::Inconclusive { reason: format!("sampler never produced (3,3) sub-cases {}", missing.join(" ")) };
        }
    }
    Ok(report)
}

/// Cells and (3,3) sub-case of a tested sample, `None` if the sample already
/// contains a losing polygon.
type SmallOutcome = Result<std::result::Result<Option<(usize, Option<String>)>, Failure>>;

const MAX_DRAWS_PER_SAMPLE: usize = 40;

fn small_sample(n: usize, sig: &[usize], variant: GameVariant, seed: u64, item: u64) -> SmallOutcome {
    let mut rng = rng_for(seed, item);
    let points = if n == 4 { sample_with_layers(sig, &mut rng) } else { structured_sample(sig, seed, &mut rng)?.points };
    if variant.losing_polygon(&points, TARGET)?.is_some() {
        return Ok(Ok(None));
    }
    let survey = Survey::new(&points, variant, TARGET)?;
    if survey.open().next().is_none() {
        return Ok(Err(fail(&points, "every cell completes a losing 5-gon")));
    }
    let case = (sig == [3, 3]).then(|| three_three_case(&points));
    Ok(Ok(Some((survey.faces.len(), case))))
}

/// Uniform lattice set with the given layer sizes (rejection sampling).
fn sample_with_layers<R: Rng>(sig: &[usize], rng: &mut R) -> Vec<Point> {
    let n: usize = sig.iter().sum();
    loop {
        let points = random_general_position(n, SAMPLE_RANGE, rng);
        let sizes: Vec<usize> = OrderType::from_points(&points).layers().iter().map(Vec::len).collect();
        if sizes == sig {
            return points;
        }
    }
}

// ---------------------------------------------------------------------------
// Layered sets and configuration 8

/// Every sampled set with convex layers `signature` ((4,3,2) or (4,4,1))
/// contains an empty convex 5-gon.
pub fn verify_layered_lemma(signature: &[usize], samples: usize, seed: u64) -> Result<VerificationReport> {
    if signature != [4, 3, 2] && signature != [4, 4, 1] {
        return Err(Error::InvalidArgument(format!("signature must be (4,3,2) or (4,4,1), got {signature:?}")));
    }
    let started = Instant::now();
    let name: Vec<String> = signature.iter().map(|x| x.to_string()).collect();
    let mut report = VerificationReport::new(&format!("layered_{}", name.join("_")), None, Some(seed));
    let results: Vec<Result<Option<Failure>>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i as u64);
            let s = structured_sample(signature, seed, &mut rng)?;
            Ok(match find_empty_convex_5gon(&s.points)? {
                Some(_) => None,
                None => Some(fail(&s.points, "no empty convex 5-gon")),
            })
        })
        .collect();
    let mut failure = None;
    for r in results {
        report.items += 1;
        if let Some(f) = r? {
            failure.get_or_insert(f);
        }
    }
    Ok(report.finish(started, failure))
}

/// An 8-point configuration 8 position reached by the strategy against a
/// random player 1.
pub fn config8_sample(variant: GameVariant, seed: u64) -> Result<Vec<Point>> {
    let (state, _) = simulate_game(variant, seed, 8)?;
    let points = state.moves().to_vec();
    if points.len() != 8 || classify_configuration(&points)? != ConfigurationLabel::Config8 {
        return Err(Error::InvariantViolation(format!("game with seed {seed} did not reach configuration 8")));
    }
    Ok(points)
}

/// Configuration 8 positions contain no empty convex 5-gon (and, from the
/// convex game, no convex 5-gon at all).
pub fn verify_config8_control(samples: usize, seed: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("config8_control", None, Some(seed));
    let results: Vec<Result<Option<Failure>>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let variant = GameVariant::ALL[i % 2];
            let points = config8_sample(variant, seed.wrapping_add(i as u64))?;
            let found = match variant {
                GameVariant::Convex => find_convex_5gon(&points)?,
                GameVariant::Empty => find_empty_convex_5gon(&points)?,
            };
            Ok(found.map(|w| fail(&points, format!("configuration 8 contains a 5-gon {:?}", w.indices))))
        })
        .collect();
    let mut failure = None;
    for r in results {
        report.items += 1;
        if let Some(f) = r? {
            failure.get_or_insert(f);
        }
    }
    Ok(report.finish(started, failure))
}

/// Inner 4-gon `A, B, C, D` (counterclockwise) and outer points `E, F, G,
/// H` where each outer point swallows the inner vertex of the same position.
fn config8_frame(t: &OrderType) -> Option<([usize; 4], [usize; 4])> {
    let layers = t.layers();
    if layers.len() != 2 || layers[0].len() != 4 || layers[1].len() != 4 {
        return None;
    }
    let inner = [layers[1][0], layers[1][1], layers[1][2], layers[1][3]];
    let mut outer = [usize::MAX; 4];
    for &o in &layers[0] {
        let d = region_in_order(t, inner, o);
        match (d.class, d.swallowed) {
            (RegionClass::I, Some(v)) if outer[v] == usize::MAX => outer[v] = o,
            _ => return None,
        }
    }
    Some((inner, outer))
}

fn config8_beams(inner: [usize; 4], outer: [usize; 4]) -> [BeamIdx; 4] {
    let [a, b, c, d] = inner;
    let [e, f, g, h] = outer;
    [
        BeamIdx::Type2 { a, b, c: f, d: e },
        BeamIdx::Type2 { a: b, b: c, c: g, d: f },
        BeamIdx::Type2 { a: d, b: c, c: g, d: h },
        BeamIdx::Type2 { a, b: d, c: h, d: e },
    ]
}

/// For configuration 8 samples: (a) every cell of the arrangement completes
/// an empty convex 5-gon; (b) every cell outside the hull lies in one of
/// the beams AB:FE, BC:GF, DC:GH, AD:HE.
pub fn verify_config8_closure(samples: usize, seed: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("config8_closure", None, Some(seed));
    let results: Vec<Result<std::result::Result<BTreeMap<&'static str, u64>, Failure>>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let variant = GameVariant::ALL[i % 2];
            let points = config8_sample(variant, seed.wrapping_add(i as u64))?;
            let survey = Survey::new(&points, GameVariant::Empty, TARGET)?;
            let mut counts = BTreeMap::new();
            let base = OrderType::from_points(&points);
            let Some((inner, outer)) = config8_frame(&base) else {
                return Ok(Err(fail(&points, "not a (4,4) set with outer points in distinct I regions")));
            };
            let beams = config8_beams(inner, outer);
            let new = points.len();
            for f in &survey.faces {
                *counts.entry("cells").or_insert(0) += 1;
                if f.losing.is_none() {
                    let rep = survey.arrangement.cell(&f.face).representative;
                    return Ok(Err(fail(&with_point(&points, &rep), "(a) added point completes no empty convex 5-gon")));
                }
                if f.order.in_hull(new, &outer) {
                    let inner_hull = f.order.in_hull(new, &inner);
                    *counts.entry(if inner_hull { "inner cells" } else { "ring cells" }).or_insert(0) += 1;
                    continue;
                }
                *counts.entry("outer cells").or_insert(0) += 1;
                if !beams.iter().any(|&b| beam_contains_in_order(&f.order, b, new)) {
                    let rep = survey.arrangement.cell(&f.face).representative;
                    return Ok(Err(fail(&with_point(&points, &rep), "(b) outer cell lies in none of the four beams")));
                }
            }
            Ok(Ok(counts))
        })
        .collect();
    let mut failure = None;
    for r in results {
        match r? {
            Ok(counts) => {
                report.items += 1;
                for (k, v) in counts {
                    report.bump(k, v);
                }
            }
            Err(f) => {
                failure.get_or_insert(f);
            }
        }
    }
    Ok(report.finish(started, failure))
}

/// Random 9-point sets in general position all contain a convex 5-gon.
pub fn verify_nine_points(samples: usize, seed: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("nine_points_convex_5gon", None, Some(seed));
    let results: Vec<Result<Option<Failure>>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i as u64);
            let points = random_general_position(9, SAMPLE_RANGE, &mut rng);
            Ok(find_convex_5gon(&points)?.is_none().then(|| fail(&points, "no convex 5-gon")))
        })
        .collect();
    let mut failure = None;
    for r in results {
        report.items += 1;
        if let Some(f) = r? {
            failure.get_or_insert(f);
        }
    }
    Ok(report.finish(started, failure))
}

/// Games of the strategy against a seeded random player 1 all end at
/// step 9 with player 1 losing.
pub fn verify_simulation(variant: GameVariant, games: usize, seed: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("simulation", Some(variant), Some(seed));
    let results: Vec<Result<(usize, Option<Failure>)>> = (0..games)
        .into_par_iter()
        .map(|i| {
            let (state, _) = simulate_game(variant, seed.wrapping_add(i as u64), usize::MAX)?;
            let step = state.step();
            let ok = step == FINAL_STEP && state.status().loser() == Some(crate::variant::Player::One);
            Ok((step, (!ok).then(|| fail(state.moves(), format!("game with seed {} ended at step {step}", seed.wrapping_add(i as u64))))))
        })
        .collect();
    let mut failure = None;
    for r in results {
        let (step, f) = r?;
        report.items += 1;
        report.bump(format!("ended at step {step}"), 1);
        if let Some(f) = f {
            failure.get_or_insert(f);
        }
    }
    Ok(report.finish(started, failure))
}

/// Which checks to run from [`verify_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Strategy,
    Small,
    Layered,
    Closure,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "strategy" => Ok(Suite::Strategy),
            "small" => Ok(Suite::Small),
            "layered" => Ok(Suite::Layered),
            "closure" => Ok(Suite::Closure),
            other => Err(Error::InvalidArgument(format!("unknown lemma {other:?}"))),
        }
    }
}

/// Runs a group of checks. `samples` applies to the sampled checks; the
/// closure check uses a tenth of it (configuration 8 samples are games).
pub fn verify_suite(suite: Suite, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Strategy {
        for v in GameVariant::ALL {
            out.push(verify_strategy_tree(v)?);
        }
    }
    if all || suite == Suite::Small {
        for v in GameVariant::ALL {
            for n in [4, 6] {
                out.push(verify_no_bad_small(n, v, samples, seed)?);
            }
        }
    }
    if all || suite == Suite::Layered {
        out.push(verify_layered_lemma(&[4, 3, 2], samples, seed)?);
        out.push(verify_layered_lemma(&[4, 4, 1], samples, seed)?);
        out.push(verify_config8_control((samples / 10).max(1), seed)?);
        out.push(verify_nine_points(samples, seed)?);
    }
    if all || suite == Suite::Closure {
        out.push(verify_config8_closure((samples / 10).max(1), seed)?);
    }
    Ok(out)
}
