//! Engine-vs-random games.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::Point;
use crate::pattern::ConfigurationLabel;
use crate::referee::GameState;
use crate::sample::random_extra_point;
use crate::strategy::{choose_move, Survey, TARGET};
use crate::variant::{GameVariant, Player};

/// Range of the lattice used for player 1's opening moves.
const OPENING_RANGE: i64 = 10;

/// Player 1's random move: a uniformly chosen safe cell (any cell if none
/// is safe), or a random lattice point while no placement can lose.
pub fn random_adversary_move<R: Rng>(points: &[Point], variant: GameVariant, rng: &mut R) -> Result<Point> {
    if points.len() + 1 < TARGET {
        return Ok(random_extra_point(points, OPENING_RANGE, rng));
    }
    let survey = Survey::new(points, variant, TARGET)?;
    let open: Vec<usize> = (0..survey.faces.len()).filter(|&i| survey.faces[i].losing.is_none()).collect();
    let pick = if open.is_empty() {
        rng.gen_range(0..survey.faces.len())
    } else {
        *open.choose(rng).expect("non-empty")
    };
    Ok(survey.arrangement.cell(&survey.faces[pick].face).representative)
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulatedGame {
    pub seed: u64,
    pub trace: crate::referee::Trace,
    /// Label after each step from 4 to 8 (index 0 is step 4).
    pub labels: Vec<Option<ConfigurationLabel>>,
    pub steps: usize,
    pub loser: Option<Player>,
}

/// Plays the engine against a random player 1 until the game ends or
/// `stop_after` points are placed.
pub fn simulate_game(variant: GameVariant, seed: u64, stop_after: usize) -> Result<(GameState, Vec<Option<ConfigurationLabel>>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = GameState::new(variant);
    let mut labels = Vec::new();
    while !state.status().is_finished() && state.step() < stop_after {
        let p = match state.to_move() {
            Player::One => random_adversary_move(state.moves(), variant, &mut rng)?,
            Player::Two => choose_move(state.moves(), variant)?,
        };
        let out = state.apply_move(p)?;
        if (4..=8).contains(&out.step) {
            labels.push(out.label);
        }
    }
    Ok((state, labels))
}

/// A full game, summarized.
pub fn simulate(variant: GameVariant, seed: u64) -> Result<SimulatedGame> {
    let (state, labels) = simulate_game(variant, seed, usize::MAX)?;
    Ok(SimulatedGame {
        seed,
        trace: state.to_trace(),
        labels,
        steps: state.step(),
        loser: state.status().loser(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn games_end_at_step_nine() {
        for v in GameVariant::ALL {
            for seed in 0..3 {
                let g = simulate(v, seed).unwrap();
                assert_eq!(g.steps, 9, "{v} seed {seed}");
                assert_eq!(g.loser, Some(Player::One));
                assert_eq!(g.labels.last().copied().flatten(), Some(ConfigurationLabel::Config8));
            }
        }
    }

    #[test]
    fn simulation_is_reproducible() {
        let a = simulate(GameVariant::Empty, 42).unwrap();
        let b = simulate(GameVariant::Empty, 42).unwrap();
        assert_eq!(a.trace, b.trace);
    }
}
