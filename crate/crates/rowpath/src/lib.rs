//! Coverage path generation for row-crop fields from binary occupancy grids.
//!
//! The pipeline has four stages, each usable on its own:
//!
//! 1. [`datagen`] — seeded generator of synthetic row-crop occupancy grids
//!    with ground-truth end-of-row waypoints.
//! 2. [`nn`] — a small fully-convolutional network (manual forward/backward,
//!    CPU only) that regresses a per-cell waypoint confidence plus sub-cell
//!    offsets from the raw mask, and [`decode`] which turns that cell map
//!    into image-space waypoints with confidence thresholding and distance
//!    suppression.
//! 3. [`order`] — geometric post-processing: DBSCAN clustering, row-angle
//!    estimation, missing/duplicate waypoint repair and A-B-B-A route
//!    ordering.
//! 4. [`plan`] — weighted A* over the occupancy grid, waypoint to waypoint,
//!    plus [`eval`] metrics (average precision over waypoints and the
//!    row-coverage score).
//!
//! Grid coordinates are `x` = column, `y` = row, origin at the centre of the
//! top-left pixel. Everything is deterministic given its seeds.
//!
//! The `parallel` feature (on by default) runs dataset generation, batch
//! gradient evaluation, per-image metrics and route legs on a rayon pool;
//! without it the same code paths run sequentially.

pub mod datagen;
pub mod decode;
pub mod error;
pub mod eval;
pub mod geom;
pub mod grid;
pub mod hough;
pub mod nn;
pub mod order;
pub(crate) mod par;
pub mod plan;
pub mod render;

pub use error::{Error, Result};
pub use geom::{Angle, Point, Waypoint};
pub use grid::{count_risings, raster_line, segment_row_crossings, OccupancyGrid};
