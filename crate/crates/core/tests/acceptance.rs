//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use esgame_core::geometry::{convex_hull, convex_layers};
use esgame_core::pattern::{find_convex_kgon, layer_type};
use esgame_core::strategy::{
    canonical_triangle, choose_move, game_value, solve_and_or, Detail, Policy, Solution, SolveOptions, FINAL_STEP,
};
use esgame_core::verify::{
    verify_config8_closure, verify_config8_control, verify_layered_lemma, verify_nine_points, verify_no_bad_small,
    verify_simulation, verify_strategy_tree, verify_strategy_tree_with, VerificationReport,
};
use esgame_core::{GameVariant, Point, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_917;
const SAMPLES: usize = 10_000;
const CLOSURE_SAMPLES: usize = 1_000;

type Check = std::result::Result<String, String>;

fn require(report: &VerificationReport) -> std::result::Result<String, String> {
    let line = format!("{}{} items={} {:.1}s", report.lemma, report.variant.map(|v| format!("/{v}")).unwrap_or_default(), report.items, report.seconds);
    if report.is_verified() {
        Ok(line)
    } else {
        Err(format!("{line}: {:?}", report.verdict))
    }
}

fn all(parts: Vec<Check>) -> Check {
    let mut ok = Vec::new();
    for p in parts {
        ok.push(p?);
    }
    Ok(ok.join("; "))
}

fn theorem() -> Result<Check> {
    let mut parts = Vec::new();
    for v in GameVariant::ALL {
        let r = verify_strategy_tree(v)?;
        parts.push(require(&r).map(|s| format!("{s} leaves={}", r.stats.get("leaves").copied().unwrap_or(0))));
        let opts = SolveOptions { policy: Policy::Strategy, detail: Detail::Compact, parallel: true };
        parts.push(match solve_and_or(&canonical_triangle(), v, 5, FINAL_STEP, &opts)? {
            Solution::Win(c) if c.stats.min_leaf_step == FINAL_STEP && c.stats.max_leaf_step == FINAL_STEP => {
                Ok(format!("and-or/{v} leaves={} all at step {FINAL_STEP}", c.stats.leaves))
            }
            Solution::Win(c) => Err(format!("and-or/{v} leaves between steps {} and {}", c.stats.min_leaf_step, c.stats.max_leaf_step)),
            Solution::Refutation(r) => Err(format!("and-or/{v} refuted: {}", r.reason)),
        });
    }
    Ok(all(parts))
}

fn simulation() -> Result<Check> {
    let mut parts = Vec::new();
    for v in GameVariant::ALL {
        parts.push(require(&verify_simulation(v, SAMPLES, SEED)?));
    }
    Ok(all(parts))
}

fn small_games() -> Result<Check> {
    let mut parts = Vec::new();
    for v in GameVariant::ALL {
        for (k, expected) in [(3, 3), (4, 5)] {
            let got = game_value(v, k, 7)?;
            parts.push(if got == expected {
                Ok(format!("{v} k={k} ends at step {got}"))
            } else {
                Err(format!("{v} k={k} ends at step {got}, expected {expected}"))
            });
        }
    }
    Ok(all(parts))
}

fn nine_points() -> Result<Check> {
    Ok(all(vec![require(&verify_nine_points(SAMPLES, SEED)?), require(&verify_config8_control(100, SEED)?)]))
}

fn lemmas() -> Result<Check> {
    let mut parts = Vec::new();
    for v in GameVariant::ALL {
        for n in [4, 6] {
            parts.push(require(&verify_no_bad_small(n, v, SAMPLES, SEED)?));
        }
    }
    parts.push(require(&verify_layered_lemma(&[4, 3, 2], SAMPLES, SEED)?));
    parts.push(require(&verify_layered_lemma(&[4, 4, 1], SAMPLES, SEED)?));
    parts.push(require(&verify_config8_closure(CLOSURE_SAMPLES, SEED)?));
    Ok(all(parts))
}

fn step_four_mutant(points: &[Point], v: GameVariant) -> Result<Point> {
    if points.len() == 3 {
        Ok(Point::int(3, 2))
    } else {
        choose_move(points, v)
    }
}

fn label_paths() -> Result<Check> {
    let allowed: BTreeSet<&str> = ["4>5.1>6.1>7.1>8", "4>5.1>6.1>7.2>8", "4>5.2>6.2>7.1>8", "4>5.2>6.2>7.2>8"].into();
    let mut parts = Vec::new();
    for v in GameVariant::ALL {
        let r = verify_strategy_tree(v)?;
        let paths: Vec<(&str, u64)> =
            r.stats.iter().filter_map(|(k, n)| k.strip_prefix("path ").map(|p| (p, *n))).collect();
        let bad: Vec<&str> = paths.iter().map(|p| p.0).filter(|p| !allowed.contains(p)).collect();
        let covered: u64 = paths.iter().map(|p| p.1).sum();
        parts.push(if r.is_verified() && bad.is_empty() && covered == r.stats["leaves"] {
            let list: Vec<String> = paths.iter().map(|(p, n)| format!("{p} x{n}")).collect();
            Ok(format!("{v}: {}", list.join(", ")))
        } else {
            Err(format!("{v}: verdict {:?}, unexpected paths {bad:?}", r.verdict))
        });
    }
    let mutant = verify_strategy_tree_with(GameVariant::Convex, step_four_mutant)?;
    parts.push(if mutant.is_counterexample() {
        Ok("step-4 mutant rejected".into())
    } else {
        Err(format!("step-4 mutant not rejected: {:?}", mutant.verdict))
    });
    Ok(all(parts))
}

fn oracles() -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = Vec::new();
    for i in 0..SAMPLES {
        let n = rng.gen_range(1..=10);
        let pts = common::random_points(n, &mut rng);
        let hull: BTreeSet<Point> = convex_hull(&pts)?.into_iter().collect();
        if hull != common::hull_set(&pts) {
            mismatches.push(format!("hull #{i}"));
        }
        let layers: Vec<BTreeSet<Point>> = convex_layers(&pts)?.into_iter().map(|l| l.into_iter().collect()).collect();
        let oracle = common::layer_sets(&pts);
        if layers != oracle || layer_type(&pts)?.0 != oracle.iter().map(BTreeSet::len).collect::<Vec<_>>() {
            mismatches.push(format!("layers #{i}"));
        }
        for k in [4, 5] {
            for empty in [false, true] {
                if find_convex_kgon(&pts, k, empty)?.is_some() != common::naive_kgon(&pts, k, empty) {
                    mismatches.push(format!("{k}-gon empty={empty} #{i}"));
                }
            }
        }
    }
    Ok(if mismatches.is_empty() {
        Ok(format!("{SAMPLES} instances, hull/layers/4-gon/5-gon/empty detectors agree"))
    } else {
        Err(format!("{} mismatches, first {:?}", mismatches.len(), &mismatches[..mismatches.len().min(5)]))
    })
}

fn main() {
    let criteria: [(&str, fn() -> Result<Check>); 7] = [
        ("theorem reproduction", theorem),
        ("simulation", simulation),
        ("generic solver sanity", small_games),
        ("nine-point sanity", nine_points),
        ("lemma suite", lemmas),
        ("label pipeline", label_paths),
        ("oracle equivalence", oracles),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run().unwrap_or_else(|e| Err(format!("error: {e}")));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
