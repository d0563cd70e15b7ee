//! Game variants and players.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::order::OrderType;
use crate::pattern::{find_convex_kgon, GonWitness};

/// Which polygon loses the game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameVariant {
    /// Completing any convex k-gon loses.
    Convex,
    /// Completing a convex k-gon with no placed point inside loses.
    Empty,
}

impl GameVariant {
    pub const ALL: [GameVariant; 2] = [GameVariant::Convex, GameVariant::Empty];

    pub fn requires_empty(self) -> bool {
        self == GameVariant::Empty
    }

    pub fn name(self) -> &'static str {
        match self {
            GameVariant::Convex => "convex",
            GameVariant::Empty => "empty",
        }
    }

    /// The losing polygon of size `k` in `points`, if any.
    pub fn losing_polygon(self, points: &[Point], k: usize) -> Result<Option<GonWitness>> {
        find_convex_kgon(points, k, self.requires_empty())
    }

    /// Losing polygon through point `last` of an order type whose other
    /// points are known to be free of one.
    pub(crate) fn completed_by(self, t: &OrderType, last: usize, k: usize) -> Option<Vec<usize>> {
        t.find_convex(k, Some(last), self.requires_empty())
    }
}

impl fmt::Display for GameVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GameVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convex" => Ok(GameVariant::Convex),
            "empty" => Ok(GameVariant::Empty),
            other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
        }
    }
}

/// Player 1 moves at odd steps, player 2 at even steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    One,
    Two,
}

impl Player {
    /// The player who places the `step`-th point (1-based).
    pub fn at_step(step: usize) -> Player {
        if step % 2 == 1 {
            Player::One
        } else {
            Player::Two
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Player::One => 1,
            Player::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Player> {
        match n {
            1 => Some(Player::One),
            2 => Some(Player::Two),
            _ => None,
        }
    }
}

impl Serialize for Player {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.number())
    }
}

impl<'de> Deserialize<'de> for Player {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = u8::deserialize(d)?;
        Player::from_number(n).ok_or_else(|| serde::de::Error::custom(format!("player must be 1 or 2, got {n}")))
    }
}
