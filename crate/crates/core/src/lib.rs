//! Engine for the two-player Erdős–Szekeres game: players alternately place
//! points in the plane, and whoever completes a convex 5-gon (or, in the
//! second variant, an empty convex 5-gon) loses.
//!
//! Everything runs on exact rationals. The crate provides the geometric
//! kernel, pattern detectors and configuration classifier, the second
//! player's strategy with an AND-OR search over arrangement cells, a game
//! referee with JSON traces, randomized and cell-exhaustive verifiers for the
//! strategy's supporting lemmas, and SVG rendering.

pub mod error;
pub mod geometry;
pub mod order;
pub mod pattern;
pub mod rational;
pub mod referee;
pub mod sample;
pub mod simulate;
pub mod strategy;
pub mod svg;
pub mod variant;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::Point;
pub use rational::Rational;
pub use variant::{GameVariant, Player};
