//! Game state machine: turn order, general position, end detection and
//! JSON traces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::point::IntFrame;
use crate::geometry::Point;
use crate::order::OrderType;
use crate::pattern::{classify_with_order, ConfigurationLabel, GonWitness};
use crate::strategy::{choose_move, TARGET};
use crate::variant::{GameVariant, Player};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameStatus {
    Ongoing,
    Finished { loser: Player, witness: GonWitness },
}

impl GameStatus {
    pub fn is_finished(&self) -> bool {
        matches!(self, GameStatus::Finished { .. })
    }

    pub fn loser(&self) -> Option<Player> {
        match self {
            GameStatus::Ongoing => None,
            GameStatus::Finished { loser, .. } => Some(*loser),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    pub variant: GameVariant,
    moves: Vec<Point>,
    status: GameStatus,
}

/// Result of one accepted move.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MoveOutcome {
    pub accepted: bool,
    pub step: usize,
    pub status: StatusJson,
    /// Configuration of the placed points while `4 <= step <= 8`.
    pub label: Option<ConfigurationLabel>,
    /// Engine's answer when playing against the engine.
    pub engine_reply: Option<Point>,
}

impl GameState {
    pub fn new(variant: GameVariant) -> Self {
        GameState { variant, moves: Vec::new(), status: GameStatus::Ongoing }
    }

    pub fn moves(&self) -> &[Point] {
        &self.moves
    }

    pub fn status(&self) -> &GameStatus {
        &self.status
    }

    pub fn step(&self) -> usize {
        self.moves.len()
    }

    /// Player who places the next point.
    pub fn to_move(&self) -> Player {
        Player::at_step(self.moves.len() + 1)
    }

    /// Configuration label of the current point set, for 4 to 8 points.
    pub fn label(&self) -> Option<ConfigurationLabel> {
        if !(4..=8).contains(&self.moves.len()) {
            return None;
        }
        Some(classify_with_order(&self.moves, &OrderType::from_points(&self.moves)))
    }

    /// Validates and places `p`. If it completes the variant's losing
    /// polygon the mover loses.
    pub fn apply_move(&mut self, p: Point) -> Result<MoveOutcome> {
        if self.status.is_finished() {
            return Err(Error::GameAlreadyFinished);
        }
        if self.moves.contains(&p) {
            return Err(Error::DuplicatePoint(p.to_string()));
        }
        let mut all = self.moves.clone();
        all.push(p);
        let frame = IntFrame::new(&all);
        let last = all.len() - 1;
        for i in 0..last {
            for j in i + 1..last {
                if frame.orient(i, j, last) == 0 {
                    return Err(Error::GeneralPositionViolation(i, j));
                }
            }
        }
        let t = OrderType::from_frame(&frame);
        let mover = Player::at_step(all.len());
        self.moves = all;
        if let Some(indices) = self.variant.completed_by(&t, last, TARGET) {
            let witness = GonWitness::from_indices(&self.moves, indices, self.variant.requires_empty());
            self.status = GameStatus::Finished { loser: mover, witness };
        }
        Ok(self.outcome(None))
    }

    /// Places a player-1 move and, if the game goes on, the engine's reply.
    pub fn apply_with_reply(&mut self, p: Point) -> Result<MoveOutcome> {
        self.apply_move(p)?;
        if self.status.is_finished() || self.to_move() != Player::Two {
            return Ok(self.outcome(None));
        }
        let reply = choose_move(&self.moves, self.variant)?;
        self.apply_move(reply.clone())?;
        Ok(self.outcome(Some(reply)))
    }

    fn outcome(&self, engine_reply: Option<Point>) -> MoveOutcome {
        MoveOutcome {
            accepted: true,
            step: self.step(),
            status: StatusJson::from(&self.status),
            label: if self.status.is_finished() { None } else { self.label() },
            engine_reply,
        }
    }

    pub fn to_trace(&self) -> Trace {
        Trace { variant: self.variant, moves: self.moves.clone(), status: StatusJson::from(&self.status) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_trace()).expect("trace serializes")
    }

    /// Replays a trace, checking every move and the recorded status.
    pub fn from_trace(trace: &Trace) -> Result<GameState> {
        let mut state = GameState::new(trace.variant);
        for (k, p) in trace.moves.iter().enumerate() {
            state.apply_move(p.clone()).map_err(|e| match e {
                Error::GameAlreadyFinished => Error::InvariantViolation(format!("move {} follows a finished game", k + 1)),
                other => Error::InvariantViolation(format!("move {}: {other}", k + 1)),
            })?;
        }
        let recorded = &trace.status;
        let actual = StatusJson::from(&state.status);
        let agrees = match (recorded, &actual) {
            (StatusJson::Ongoing(_), StatusJson::Ongoing(_)) => true,
            (StatusJson::Finished(a), StatusJson::Finished(b)) => {
                let (mut wa, mut wb) = (a.witness.clone(), b.witness.clone());
                wa.sort_unstable();
                wb.sort_unstable();
                a.loser == b.loser && (wa == wb || state.witness_is_valid(&a.witness))
            }
            _ => false,
        };
        if !agrees {
            return Err(Error::InvariantViolation("recorded status does not match the replayed moves".into()));
        }
        Ok(state)
    }

    pub fn from_json(text: &str) -> Result<GameState> {
        let trace: Trace = serde_json::from_str(text).map_err(|e| Error::MalformedTrace(e.to_string()))?;
        GameState::from_trace(&trace)
    }

    /// A recorded witness other than ours is accepted if it is a losing
    /// polygon through the last move.
    fn witness_is_valid(&self, witness: &[usize]) -> bool {
        let n = self.moves.len();
        if witness.len() != TARGET || !witness.contains(&(n - 1)) || witness.iter().any(|&i| i >= n) {
            return false;
        }
        let t = OrderType::from_points(&self.moves);
        if !t.is_convex(witness) {
            return false;
        }
        !self.variant.requires_empty() || t.is_empty_polygon(&t.hull(witness))
    }
}

/// Wire form of a game (field names are part of the public format).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub variant: GameVariant,
    pub moves: Vec<Point>,
    pub status: StatusJson,
}

/// `"ongoing"` or `{"loser": 1|2, "witness": [indices]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StatusJson {
    Ongoing(OngoingTag),
    Finished(FinishedJson),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OngoingTag {
    Ongoing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinishedJson {
    pub loser: Player,
    pub witness: Vec<usize>,
}

impl From<&GameStatus> for StatusJson {
    fn from(s: &GameStatus) -> Self {
        match s {
            GameStatus::Ongoing => StatusJson::Ongoing(OngoingTag::Ongoing),
            GameStatus::Finished { loser, witness } => {
                StatusJson::Finished(FinishedJson { loser: *loser, witness: witness.indices.clone() })
            }
        }
    }
}

/// Who plays player 1 in a session; player 2 is always the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GameMode {
    #[serde(rename = "human")]
    HumanVsEngine,
    #[serde(rename = "random")]
    EngineVsRandom,
}

impl std::str::FromStr for GameMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(GameMode::HumanVsEngine),
            "random" => Ok(GameMode::EngineVsRandom),
            other => Err(Error::InvalidArgument(format!("unknown mode {other:?}"))),
        }
    }
}
