//! Browser bindings: a game against the engine with its losing-region
//! overlay, and a region explorer for a convex 4-gon.
//!
//! Build with `wasm-pack build --target web --out-dir www/pkg` and serve
//! `www/` statically.

use esgame_core::geometry::{classify_region, Point};
use esgame_core::referee::GameState;
use esgame_core::svg::{render_svg, OverlayBundle};
use esgame_core::GameVariant;
use wasm_bindgen::prelude::*;

fn js(e: impl ToString) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Game {
    state: GameState,
}

#[wasm_bindgen]
impl Game {
    /// `variant` is `"convex"` or `"empty"`.
    #[wasm_bindgen(constructor)]
    pub fn new(variant: &str) -> Result<Game, JsError> {
        Game::create(variant).map_err(js)
    }

    /// Places player 1's point (rational or decimal strings) and the
    /// engine's reply; returns the move outcome as JSON.
    #[wasm_bindgen(js_name = play)]
    pub fn play_js(&mut self, x: &str, y: &str) -> Result<String, JsError> {
        self.play(x, y).map_err(js)
    }

    /// Current game as a JSON trace.
    #[wasm_bindgen(js_name = trace)]
    pub fn trace_js(&self) -> String {
        self.state.to_json()
    }

    /// Board as SVG, optionally shading the cells where the next point loses.
    #[wasm_bindgen(js_name = svg)]
    pub fn svg_js(&self, overlay: bool) -> Result<String, JsError> {
        self.svg(overlay).map_err(js)
    }
}

impl Game {
    pub fn create(variant: &str) -> esgame_core::Result<Game> {
        Ok(Game { state: GameState::new(variant.parse::<GameVariant>()?) })
    }

    pub fn play(&mut self, x: &str, y: &str) -> esgame_core::Result<String> {
        let outcome = self.state.apply_with_reply(Point::parse(x, y)?)?;
        Ok(serde_json::to_string(&outcome).expect("outcomes serialize"))
    }

    pub fn svg(&self, overlay: bool) -> esgame_core::Result<String> {
        let bundle = if overlay { Some(OverlayBundle::for_state(&self.state)?) } else { None };
        render_svg(&self.state, bundle.as_ref())
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }
}

/// Region (`I`, `O`, `S` or `Z`) of point `(x, y)` against the convex
/// 4-gon given as eight coordinates `x0 y0 x1 y1 ...`.
#[wasm_bindgen(js_name = regionOf)]
pub fn region_of_js(quad: &str, x: &str, y: &str) -> Result<String, JsError> {
    region_of(quad, x, y).map_err(js)
}

pub fn region_of(quad: &str, x: &str, y: &str) -> esgame_core::Result<String> {
    let nums: Vec<&str> = quad.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
    if nums.len() != 8 {
        return Err(esgame_core::Error::InvalidArgument("a 4-gon needs eight coordinates".into()));
    }
    let mut pts = Vec::with_capacity(4);
    for pair in nums.chunks(2) {
        pts.push(Point::parse(pair[0], pair[1])?);
    }
    let quad: [Point; 4] = pts.try_into().expect("four points");
    Ok(format!("{:?}", classify_region(&quad, &Point::parse(x, y)?)?))
}
