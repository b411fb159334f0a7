//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point ({x}, {y}) outside grid bounds {width}x{height}")]
    OutOfBounds {
        x: f64,
        y: f64,
        width: usize,
        height: usize,
    },

    #[error("empty sample sequence")]
    EmptySamples,

    #[error("infeasible field parameters: {0}")]
    InfeasibleParams(String),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("grid has no occupied pixels")]
    NoContent,

    #[error("cannot order waypoints: {0}")]
    Ordering(String),

    #[error("no path from ({},{}) to ({},{})", from.0, from.1, to.0, to.1)]
    Unreachable { from: (i64, i64), to: (i64, i64) },

    #[error("plan incomplete: {completed} of {total} legs planned ({reason})")]
    PartialPlan {
        completed: usize,
        total: usize,
        reason: String,
    },

    #[error("plan does not align with route order: {0}")]
    Alignment(String),

    #[error("recall undefined: no ground-truth waypoints in the dataset")]
    UndefinedRecall,

    #[error("weights file malformed: {0}")]
    WeightsFormat(String),

    #[error("weights file corrupt: stored checksum {stored:#010x}, computed {computed:#010x}")]
    WeightsIntegrity { stored: u32, computed: u32 },

    #[error("training diverged at epoch {epoch}: {reason} (last checkpoint: {checkpoint:?})")]
    Diverged {
        epoch: usize,
        reason: String,
        checkpoint: Option<PathBuf>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;
