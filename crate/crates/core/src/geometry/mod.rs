//! Exact geometric kernel.

pub mod arrangement;
pub mod hull;
pub mod point;
pub mod region;

pub use arrangement::{arrangement_cells, Arrangement, Cell, Face, HalfPlane, SignVector};
pub use hull::{convex_hull, convex_layers};
pub use point::{check_general_position, orientation, Orientation, Point};
pub use region::{beam_contains, classify_region, Beam, RegionClass};
