//! SVG rendering of positions and losing-region overlays.

use std::fmt::Write;

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{convex_layers, Point};
use crate::pattern::{classify_configuration, ConfigurationLabel};
use crate::referee::{GameState, GameStatus};
use crate::strategy::losing_cells;
use crate::variant::GameVariant;

/// Losing regions of the next placement, with the data the board draws
/// alongside them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OverlayBundle {
    pub step: usize,
    pub label: Option<ConfigurationLabel>,
    /// Losing cells clipped to the arrangement's bounding box.
    pub losing: Vec<Vec<Point>>,
    /// Convex layers, outermost first, counterclockwise.
    pub layers: Vec<Vec<Point>>,
}

impl OverlayBundle {
    pub fn for_position(points: &[Point], variant: GameVariant) -> Result<OverlayBundle> {
        let label = match classify_configuration(points) {
            Ok(ConfigurationLabel::Other) | Err(_) => None,
            Ok(l) => Some(l),
        };
        let losing = losing_cells(points, variant)?.into_iter().map(|c| c.polygon).collect();
        Ok(OverlayBundle { step: points.len(), label, losing, layers: convex_layers(points)? })
    }

    pub fn for_state(state: &GameState) -> Result<OverlayBundle> {
        OverlayBundle::for_position(state.moves(), state.variant)
    }
}

const SIZE: f64 = 600.0;
const PAD: f64 = 30.0;

struct View {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl View {
    fn fit(points: &[Point]) -> View {
        if points.is_empty() {
            return View { min_x: -1.0, min_y: -1.0, scale: (SIZE - 2.0 * PAD) / 2.0 };
        }
        let coords: Vec<(f64, f64)> = points.iter().map(Point::to_f64).collect();
        let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| coords.iter().map(pick).fold(init, f);
        let (lo_x, hi_x) = (fold(f64::min, f64::INFINITY, |c| c.0), fold(f64::max, f64::NEG_INFINITY, |c| c.0));
        let (lo_y, hi_y) = (fold(f64::min, f64::INFINITY, |c| c.1), fold(f64::max, f64::NEG_INFINITY, |c| c.1));
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9);
        // Leave room around the points so unbounded regions are visible.
        let margin = span * 0.25;
        let side = span + 2.0 * margin;
        View {
            min_x: (lo_x + hi_x) / 2.0 - side / 2.0,
            min_y: (lo_y + hi_y) / 2.0 - side / 2.0,
            scale: (SIZE - 2.0 * PAD) / side,
        }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (PAD + (x - self.min_x) * self.scale, SIZE - PAD - (y - self.min_y) * self.scale)
    }

    fn path(&self, poly: &[Point]) -> String {
        let parts: Vec<String> = poly
            .iter()
            .map(|p| {
                let (x, y) = self.map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        parts.join(" ")
    }
}

/// Deterministic SVG of a game: points labeled by move number, convex
/// layers, the optional overlay, and the losing polygon of a finished game.
pub fn render_svg(state: &GameState, overlay: Option<&OverlayBundle>) -> Result<String> {
    let points = state.moves();
    let view = View::fit(points);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = writeln!(out, r#"<defs><clipPath id="board"><rect x="0" y="0" width="{SIZE}" height="{SIZE}"/></clipPath></defs>"#);
    let _ = writeln!(out, r##"<rect class="board" x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#fdfdf8"/>"##);
    if let Some(o) = overlay {
        let _ = writeln!(out, r#"<g class="losing" clip-path="url(#board)">"#);
        for poly in &o.losing {
            let _ = writeln!(out, r##"<polygon points="{}" fill="#e4572e" fill-opacity="0.3" stroke="none"/>"##, view.path(poly));
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, r#"<g class="layers">"#);
    for layer in convex_layers(points)? {
        let _ = writeln!(out, r##"<polygon points="{}" fill="none" stroke="#4c6ef5" stroke-width="1.5"/>"##, view.path(&layer));
    }
    let _ = writeln!(out, "</g>");
    if let GameStatus::Finished { witness, .. } = state.status() {
        let _ = writeln!(
            out,
            r##"<polygon class="witness" points="{}" fill="#ffd43b" fill-opacity="0.5" stroke="#e67700" stroke-width="3"/>"##,
            view.path(&witness.vertices)
        );
    }
    let _ = writeln!(out, r#"<g class="points">"#);
    for (i, p) in points.iter().enumerate() {
        let (x, y) = view.map(p);
        let fill = if i % 2 == 0 { "#212529" } else { "#2f9e44" };
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="{fill}"/>"#);
        let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}" font-size="12" font-family="sans-serif">{}</text>"#, x + 7.0, y - 7.0, i + 1);
    }
    let _ = writeln!(out, "</g>");
    if let Some(label) = overlay.and_then(|o| o.label) {
        let _ = writeln!(out, r#"<text class="label" x="8" y="18" font-size="14" font-family="sans-serif">configuration {label}</text>"#);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::simulate_game;

    #[test]
    fn empty_board_is_valid() {
        let svg = render_svg(&GameState::new(GameVariant::Convex), None).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn finished_game_has_nine_points_and_witness() {
        let (state, _) = simulate_game(GameVariant::Empty, 3, usize::MAX).unwrap();
        let svg = render_svg(&state, None).unwrap();
        assert_eq!(svg.matches("<circle").count(), 9);
        assert!(svg.contains(r#"class="witness""#));
        assert_eq!(svg, render_svg(&state, None).unwrap());
    }

    #[test]
    fn configuration_four_overlay_is_the_o_regions() {
        let mut state = GameState::new(GameVariant::Convex);
        for (x, y) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            state.apply_move(Point::int(x, y)).unwrap();
        }
        let o = OverlayBundle::for_state(&state).unwrap();
        assert_eq!(o.label, Some(ConfigurationLabel::Config4));
        let quad = [Point::int(0, 0), Point::int(1, 0), Point::int(1, 1), Point::int(0, 1)];
        let cells = crate::geometry::arrangement_cells(state.moves()).unwrap();
        let in_o = cells
            .iter()
            .filter(|c| crate::geometry::classify_region(&quad, &c.representative).unwrap() == crate::geometry::RegionClass::O)
            .count();
        assert_eq!(o.losing.len(), in_o);
        for c in losing_cells(state.moves(), GameVariant::Convex).unwrap() {
            assert_eq!(crate::geometry::classify_region(&quad, &c.representative).unwrap(), crate::geometry::RegionClass::O);
        }
        let svg = render_svg(&state, Some(&o)).unwrap();
        assert_eq!(svg.matches("fill-opacity=\"0.3\"").count(), o.losing.len());
    }

    #[test]
    fn config8_overlay_covers_every_cell() {
        let (state, _) = simulate_game(GameVariant::Empty, 1, 8).unwrap();
        let o = OverlayBundle::for_state(&state).unwrap();
        let all = crate::geometry::arrangement_cells(state.moves()).unwrap();
        assert_eq!(o.losing.len(), all.len());
    }
}
