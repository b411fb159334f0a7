//! Binary occupancy grid and the line-traversal primitives used by dataset
//! generation, waypoint refinement, planning and coverage scoring.

use std::path::Path;

use crate::error::{Error, Result};
use crate::geom::Point;

/// Binary H x W raster. `1` marks an occupied (crop row) pixel, `0` free
/// space. Cells are stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupancyGrid {
    width: usize,
    height: usize,
    cells: Vec<u8>,
}

impl OccupancyGrid {
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width >= 1 && height >= 1, "grid must be at least 1x1");
        Self {
            width,
            height,
            cells: vec![0; width * height],
        }
    }

    /// Builds a grid from raw row-major cells, validating that every value
    /// is exactly 0 or 1.
    pub fn from_cells(width: usize, height: usize, cells: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 || cells.len() != width * height {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} grid needs {} cells, got {}",
                width,
                height,
                width * height,
                cells.len()
            )));
        }
        if let Some(v) = cells.iter().find(|&&v| v > 1) {
            return Err(Error::ShapeMismatch(format!(
                "occupancy cells must be 0 or 1, found {v}"
            )));
        }
        Ok(Self {
            width,
            height,
            cells,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.cells[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: u8) {
        debug_assert!(value <= 1);
        self.cells[y * self.width + x] = value;
    }

    #[inline]
    pub fn is_occupied(&self, x: usize, y: usize) -> bool {
        self.get(x, y) == 1
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|&&v| v == 1).count()
    }

    /// A sub-pixel point is inside the grid if it lies within the closed box
    /// spanned by the outer pixel edges: `[-0.5, W-0.5] x [-0.5, H-0.5]`.
    pub fn contains_point(&self, p: Point) -> bool {
        p.x >= -0.5
            && p.x <= self.width as f64 - 0.5
            && p.y >= -0.5
            && p.y <= self.height as f64 - 0.5
    }

    /// Pixel whose square contains `p` (points exactly on a shared edge
    /// belong to the pixel with the larger index, clamped to the grid).
    pub fn cell_of(&self, p: Point) -> (usize, usize) {
        let cx = (p.x.round() as i64).clamp(0, self.width as i64 - 1) as usize;
        let cy = (p.y.round() as i64).clamp(0, self.height as i64 - 1) as usize;
        (cx, cy)
    }

    /// Nearest free pixel to `p` within `radius` (Euclidean), or `None`.
    /// Ties resolve to the smaller (y, x).
    pub fn nearest_free(&self, p: Point, radius: f64) -> Option<(usize, usize)> {
        let (cx, cy) = self.cell_of(p);
        if !self.is_occupied(cx, cy) {
            return Some((cx, cy));
        }
        let r = radius.max(0.0).ceil() as i64;
        let mut best: Option<(f64, usize, usize)> = None;
        for dy in -r..=r {
            for dx in -r..=r {
                let x = cx as i64 + dx;
                let y = cy as i64 + dy;
                if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
                    continue;
                }
                let (x, y) = (x as usize, y as usize);
                if self.is_occupied(x, y) {
                    continue;
                }
                let d = (x as f64 - p.x).hypot(y as f64 - p.y);
                if d > radius {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bd, by, bx)) => d < bd || (d == bd && (y, x) < (by, bx)),
                };
                if better {
                    best = Some((d, y, x));
                }
            }
        }
        best.map(|(_, y, x)| (x, y))
    }

    /// Grid with every occupied pixel dilated by a square radius (used for
    /// optional obstacle inflation before planning).
    pub fn dilated(&self, radius: usize) -> OccupancyGrid {
        if radius == 0 {
            return self.clone();
        }
        let mut out = OccupancyGrid::new(self.width, self.height);
        let r = radius as i64;
        for y in 0..self.height {
            for x in 0..self.width {
                if !self.is_occupied(x, y) {
                    continue;
                }
                for dy in -r..=r {
                    for dx in -r..=r {
                        let nx = x as i64 + dx;
                        let ny = y as i64 + dy;
                        if nx >= 0 && ny >= 0 && nx < self.width as i64 && ny < self.height as i64 {
                            out.set(nx as usize, ny as usize, 1);
                        }
                    }
                }
            }
        }
        out
    }

    /// Writes the grid as an 8-bit grayscale PNG (0 = background,
    /// 255 = occupied).
    pub fn save_png(&self, path: &Path) -> Result<()> {
        let mut img = image::GrayImage::new(self.width as u32, self.height as u32);
        for (i, px) in img.pixels_mut().enumerate() {
            px.0 = [if self.cells[i] == 1 { 255 } else { 0 }];
        }
        img.save(path)?;
        Ok(())
    }

    /// Reads an 8-bit grayscale PNG. Any nonzero value is treated as
    /// occupied; a warning is logged if values other than 0/255 appear.
    pub fn load_png(path: &Path) -> Result<Self> {
        let img = image::open(path)?.into_luma8();
        let (w, h) = img.dimensions();
        if w == 0 || h == 0 {
            return Err(Error::ShapeMismatch(format!("empty image {path:?}")));
        }
        let mut nonbinary = false;
        let cells: Vec<u8> = img
            .pixels()
            .map(|p| {
                let v = p.0[0];
                if v != 0 && v != 255 {
                    nonbinary = true;
                }
                u8::from(v != 0)
            })
            .collect();
        if nonbinary {
            log::warn!("{path:?} contains gray values other than 0/255; treating any nonzero as occupied");
        }
        Self::from_cells(w as usize, h as usize, cells)
    }
}

/// Pixels touched by the segment `a -> b`, in order from `a` to `b`, each
/// exactly once. This is a supercover traversal: every pixel whose closed
/// square the real segment meets is visited, so thin diagonal structures
/// cannot be skipped. When the segment passes exactly through a pixel
/// corner, both side pixels are visited (x-step side first).
pub fn supercover_pixels(grid: &OccupancyGrid, a: Point, b: Point) -> Result<Vec<(usize, usize)>> {
    for p in [a, b] {
        if !p.x.is_finite() || !p.y.is_finite() || !grid.contains_point(p) {
            return Err(Error::OutOfBounds {
                x: p.x,
                y: p.y,
                width: grid.width,
                height: grid.height,
            });
        }
    }
    let (ax, ay) = (a.x, a.y);
    let (bx, by) = (b.x, b.y);
    let (mut cx, mut cy) = {
        let (x, y) = grid.cell_of(a);
        (x as i64, y as i64)
    };
    let (ex, ey) = {
        let (x, y) = grid.cell_of(b);
        (x as i64, y as i64)
    };

    let dx = bx - ax;
    let dy = by - ay;
    let sx: i64 = if dx > 0.0 { 1 } else { -1 };
    let sy: i64 = if dy > 0.0 { 1 } else { -1 };

    // Parameter value at which the ray crosses the next pixel boundary on
    // each axis, and the per-pixel increment.
    let mut t_max_x = if dx != 0.0 {
        ((cx as f64 + 0.5 * sx as f64) - ax) / dx
    } else {
        f64::INFINITY
    };
    let mut t_max_y = if dy != 0.0 {
        ((cy as f64 + 0.5 * sy as f64) - ay) / dy
    } else {
        f64::INFINITY
    };
    let t_delta_x = if dx != 0.0 { 1.0 / dx.abs() } else { f64::INFINITY };
    let t_delta_y = if dy != 0.0 { 1.0 / dy.abs() } else { f64::INFINITY };

    let in_grid = |x: i64, y: i64| {
        x >= 0 && y >= 0 && x < grid.width as i64 && y < grid.height as i64
    };

    let mut pixels = Vec::new();
    let budget = 3 * ((ex - cx).abs() + (ey - cy).abs() + 2) as usize;
    let mut steps = 0usize;
    loop {
        pixels.push((cx as usize, cy as usize));
        if cx == ex && cy == ey {
            break;
        }
        if t_max_x < t_max_y {
            cx += sx;
            t_max_x += t_delta_x;
        } else if t_max_y < t_max_x {
            cy += sy;
            t_max_y += t_delta_y;
        } else {
            // Exact corner crossing: the segment touches both side pixels.
            if in_grid(cx + sx, cy) {
                pixels.push(((cx + sx) as usize, cy as usize));
            }
            if in_grid(cx, cy + sy) {
                pixels.push((cx as usize, (cy + sy) as usize));
            }
            cx += sx;
            cy += sy;
            t_max_x += t_delta_x;
            t_max_y += t_delta_y;
        }
        // Numeric safety net: the walk between two in-bounds cells is bounded.
        steps += 1;
        if steps > budget {
            cx = ex;
            cy = ey;
            t_max_x = f64::INFINITY;
            t_max_y = f64::INFINITY;
        }
    }
    Ok(pixels)
}

/// Grid values sampled along the discretized segment `a -> b`, endpoints
/// included, each pixel once, in order.
pub fn raster_line(grid: &OccupancyGrid, a: Point, b: Point) -> Result<Vec<u8>> {
    Ok(supercover_pixels(grid, a, b)?
        .into_iter()
        .map(|(x, y)| grid.get(x, y))
        .collect())
}

/// Number of 0 -> 1 transitions in a binary sample sequence. A leading 1
/// counts as one rising edge.
pub fn count_risings(samples: &[u8]) -> Result<usize> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let mut count = 0;
    let mut prev = 0u8;
    for &s in samples {
        if s == 1 && prev == 0 {
            count += 1;
        }
        prev = s;
    }
    Ok(count)
}

/// Number of distinct occupied runs the segment `a -> b` crosses.
pub fn segment_row_crossings(grid: &OccupancyGrid, a: Point, b: Point) -> Result<usize> {
    count_risings(&raster_line(grid, a, b)?)
}
