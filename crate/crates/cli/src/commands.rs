//! Subcommand implementations. Each returns the process exit code.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use esgame_core::referee::{GameMode, GameState, GameStatus};
use esgame_core::simulate::random_adversary_move;
use esgame_core::strategy::{
    canonical_triangle, game_value, solve_and_or, Detail, Policy, Solution, SolveOptions, FINAL_STEP, TARGET,
};
use esgame_core::svg::{render_svg, OverlayBundle};
use esgame_core::verify::{verify_suite, Suite, Verdict, VerificationReport};
use esgame_core::{Error, GameVariant, Player, Point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const OK: i32 = 0;
pub const FAILED: i32 = 1;
pub const USAGE: i32 = 2;

fn describe(state: &GameState) -> String {
    match state.status() {
        GameStatus::Ongoing => match state.label() {
            Some(l) => format!("step {} configuration {l}", state.step()),
            None => format!("step {}", state.step()),
        },
        GameStatus::Finished { loser, witness } => {
            let idx: Vec<String> = witness.indices.iter().map(|i| (i + 1).to_string()).collect();
            format!("step {} finished: player {} loses, polygon through moves {}", state.step(), loser.number(), idx.join(" "))
        }
    }
}

fn save_trace(state: &GameState, out: Option<&Path>) -> Result<(), String> {
    if let Some(path) = out {
        std::fs::write(path, state.to_json()).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

/// Human mode reads player 1's moves as `x y` lines from `input`.
pub fn play(variant: GameVariant, mode: GameMode, seed: u64, out: Option<&Path>, input: &mut dyn BufRead, output: &mut dyn Write) -> i32 {
    let mut state = GameState::new(variant);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let who = if mode == GameMode::HumanVsEngine { "you are" } else { "a random player is" };
    let _ = writeln!(output, "{variant} game, {who} player 1; the engine answers each move");
    while !state.status().is_finished() {
        let result = match mode {
            GameMode::EngineVsRandom => random_adversary_move(state.moves(), variant, &mut rng).and_then(|p| state.apply_with_reply(p)),
            GameMode::HumanVsEngine => {
                let _ = write!(output, "move {}> ", state.step() + 1);
                let _ = output.flush();
                let mut line = String::new();
                match input.read_line(&mut line) {
                    Ok(0) | Err(_) => {
                        let _ = writeln!(output, "\ninput closed");
                        let _ = save_trace(&state, out);
                        return USAGE;
                    }
                    Ok(_) => {}
                }
                let parts: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
                match parts.as_slice() {
                    [x, y] => Point::parse(x, y).and_then(|p| state.apply_with_reply(p)),
                    _ => Err(Error::MalformedNumber(line.trim().to_string())),
                }
            }
        };
        match result {
            Ok(outcome) => {
                let n = state.step() - usize::from(outcome.engine_reply.is_some());
                let _ = writeln!(output, "  {n}. player 1 {}", state.moves()[n - 1]);
                if let Some(r) = &outcome.engine_reply {
                    let _ = writeln!(output, "  {}. engine   {r}", n + 1);
                }
                let _ = writeln!(output, "  {}", describe(&state));
            }
            Err(e) if mode == GameMode::HumanVsEngine => {
                let _ = writeln!(output, "  rejected: {e}");
            }
            Err(e) => {
                let _ = writeln!(output, "error: {e}");
                return FAILED;
            }
        }
    }
    if let Err(e) = save_trace(&state, out) {
        let _ = writeln!(output, "{e}");
        return USAGE;
    }
    OK
}

pub fn print_reports(reports: &[VerificationReport], json: bool, output: &mut dyn Write) -> i32 {
    if json {
        let _ = writeln!(output, "{}", serde_json::to_string_pretty(reports).expect("reports serialize"));
    } else {
        let _ = writeln!(output, "{:<24} {:<8} {:<22} {:>8} {:>9}", "lemma", "variant", "verdict", "items", "seconds");
        for r in reports {
            let verdict = match &r.verdict {
                Verdict::Verified => "verified".to_string(),
                Verdict::CounterexampleFound { .. } => "COUNTEREXAMPLE".to_string(),
                Verdict::Inconclusive { .. } => "inconclusive".to_string(),
            };
            let variant = r.variant.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(output, "{:<24} {:<8} {:<22} {:>8} {:>9.2}", r.lemma, variant, verdict, r.items, r.seconds);
            match &r.verdict {
                Verdict::CounterexampleFound { points, detail, .. } => {
                    let pts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
                    let _ = writeln!(output, "    {detail}: {}", pts.join(" "));
                }
                Verdict::Inconclusive { reason } => {
                    let _ = writeln!(output, "    {reason}");
                }
                Verdict::Verified => {}
            }
        }
        if let Some(r) = reports.first() {
            let _ = writeln!(output, "note: {}", r.caveat);
        }
    }
    if reports.iter().all(VerificationReport::is_verified) {
        OK
    } else {
        FAILED
    }
}

pub fn verify(suite: Suite, samples: usize, seed: u64, json: bool, output: &mut dyn Write) -> i32 {
    match verify_suite(suite, samples, seed) {
        Ok(reports) => print_reports(&reports, json, output),
        Err(e) => {
            let _ = writeln!(output, "error: {e}");
            FAILED
        }
    }
}

/// k = 3, 4: iterative deepening with the exhaustive search. k = 5: the
/// strategy certificate bounds the game by step 9, and the exhaustive search
/// shows player 2 cannot force a loss by step 7 (player 1 only loses on odd
/// steps).
pub fn solve(k: usize, variant: GameVariant, output: &mut dyn Write) -> i32 {
    let value = match k {
        3 | 4 => game_value(variant, k, 7),
        5 => solve_five(variant),
        _ => {
            let _ = writeln!(output, "k must be 3, 4 or 5");
            return USAGE;
        }
    };
    match value {
        Ok(step) => {
            let _ = writeln!(output, "game value: ends at step {step}");
            OK
        }
        Err(e) => {
            let _ = writeln!(output, "no value: {e}");
            FAILED
        }
    }
}

fn solve_five(variant: GameVariant) -> esgame_core::Result<usize> {
    let start = canonical_triangle();
    let strategy = SolveOptions { policy: Policy::Strategy, detail: Detail::Compact, parallel: true };
    let upper = match solve_and_or(&start, variant, TARGET, FINAL_STEP, &strategy)? {
        Solution::Win(c) => c.stats.max_leaf_step,
        Solution::Refutation(r) => return Err(Error::NoWinningMove(r.reason)),
    };
    let search = SolveOptions { policy: Policy::Search, detail: Detail::Compact, parallel: false };
    if solve_and_or(&start, variant, TARGET, upper - 2, &search)?.is_win() {
        return Err(Error::InvariantViolation(format!("player 2 forces a loss before step {upper}")));
    }
    Ok(upper)
}

fn load_trace(path: &Path) -> Result<GameState, (i32, String)> {
    let text = std::fs::read_to_string(path).map_err(|e| (USAGE, format!("cannot read {}: {e}", path.display())))?;
    GameState::from_json(&text).map_err(|e| {
        let code = if matches!(e, Error::MalformedTrace(_)) { USAGE } else { FAILED };
        (code, format!("{}: {e}", path.display()))
    })
}

pub fn render(trace: &Path, out: &Path, overlay: bool, output: &mut dyn Write) -> i32 {
    let state = match load_trace(trace) {
        Ok(s) => s,
        Err((code, msg)) => {
            let _ = writeln!(output, "{msg}");
            return code;
        }
    };
    let bundle = if overlay {
        match OverlayBundle::for_state(&state) {
            Ok(b) => Some(b),
            Err(e) => {
                let _ = writeln!(output, "overlay failed: {e}");
                return FAILED;
            }
        }
    } else {
        None
    };
    let svg = match render_svg(&state, bundle.as_ref()) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(output, "render failed: {e}");
            return FAILED;
        }
    };
    if let Err(e) = std::fs::write(out, svg) {
        let _ = writeln!(output, "cannot write {}: {e}", out.display());
        return USAGE;
    }
    let _ = writeln!(output, "wrote {} ({} points)", out.display(), state.step());
    OK
}

/// Replays a trace move by move, printing the status after each step.
pub fn replay(trace: &Path, output: &mut dyn Write) -> i32 {
    let state = match load_trace(trace) {
        Ok(s) => s,
        Err((code, msg)) => {
            let _ = writeln!(output, "{msg}");
            return code;
        }
    };
    let mut again = GameState::new(state.variant);
    for (i, p) in state.moves().iter().enumerate() {
        if let Err(e) = again.apply_move(p.clone()) {
            let _ = writeln!(output, "move {} rejected: {e}", i + 1);
            return FAILED;
        }
        let who = if Player::at_step(i + 1) == Player::One { "player 1" } else { "engine  " };
        let _ = writeln!(output, "{:>2}. {who} {p}  {}", i + 1, describe(&again));
    }
    OK
}

pub fn default_data_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.unwrap_or_else(crate::store::data_dir)
}
