//! Command line tools and the HTTP/JSON service for the game engine.

pub mod api;
pub mod commands;
pub mod store;
