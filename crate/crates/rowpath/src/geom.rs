//! Plain geometry types shared by every stage.

use serde::{Deserialize, Serialize};

/// Sub-pixel point in grid coordinates. `x` grows rightward (column axis),
/// `y` grows downward (row axis); the origin is the centre of the top-left
/// pixel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }

    /// Projection onto the axis perpendicular to rows at `angle`.
    pub fn project_perpendicular(self, angle: Angle) -> f64 {
        let (sin, cos) = angle.radians().sin_cos();
        -self.x * sin + self.y * cos
    }
}

/// A row orientation. Rows are orientation-free lines, so `theta` and
/// `theta + pi` are the same direction; values are kept normalized into
/// `(-pi/2, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Angle {
    radians: f64,
}

impl Angle {
    pub fn new(radians: f64) -> Self {
        assert!(radians.is_finite(), "angle must be finite");
        let mut r = radians % std::f64::consts::PI;
        if r > std::f64::consts::FRAC_PI_2 {
            r -= std::f64::consts::PI;
        } else if r <= -std::f64::consts::FRAC_PI_2 {
            r += std::f64::consts::PI;
        }
        Self { radians: r }
    }

    pub fn radians(self) -> f64 {
        self.radians
    }

    /// Unit vector along the row direction.
    pub fn direction(self) -> (f64, f64) {
        (self.radians.cos(), self.radians.sin())
    }

    /// Unit vector perpendicular to the row direction.
    pub fn perpendicular(self) -> (f64, f64) {
        (-self.radians.sin(), self.radians.cos())
    }

    /// Circular mean of orientations. Angles are doubled before averaging so
    /// that `theta` and `theta + pi` count as the same orientation.
    pub fn circular_mean(angles: &[Angle]) -> Option<Angle> {
        if angles.is_empty() {
            return None;
        }
        let (mut s, mut c) = (0.0, 0.0);
        for a in angles {
            let d = 2.0 * a.radians;
            s += d.sin();
            c += d.cos();
        }
        if s == 0.0 && c == 0.0 {
            return None;
        }
        Some(Angle::new(0.5 * s.atan2(c)))
    }

    /// Absolute angular distance between two orientations, in `[0, pi/2]`.
    pub fn distance(self, other: Angle) -> f64 {
        let d = (self.radians - other.radians).abs();
        d.min(std::f64::consts::PI - d)
    }
}

/// A candidate navigation point with its detection confidence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Waypoint {
    pub position: Point,
    pub confidence: f64,
}

impl Waypoint {
    pub fn new(position: Point, confidence: f64) -> Self {
        assert!(
            (0.0..=1.0).contains(&confidence),
            "confidence {confidence} outside [0, 1]"
        );
        Self {
            position,
            confidence,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn angle_normalizes_into_half_open_interval() {
        assert_eq!(Angle::new(0.0).radians(), 0.0);
        assert_eq!(Angle::new(FRAC_PI_2).radians(), FRAC_PI_2);
        // -pi/2 is identified with +pi/2
        assert_eq!(Angle::new(-FRAC_PI_2).radians(), FRAC_PI_2);
        assert!((Angle::new(PI + 0.1).radians() - 0.1).abs() < 1e-12);
        assert!((Angle::new(-3.0 * FRAC_PI_4).radians() - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn circular_mean_handles_wraparound() {
        // Orientations just either side of the +-pi/2 seam average to the seam.
        let m = Angle::circular_mean(&[Angle::new(FRAC_PI_2 - 0.05), Angle::new(-FRAC_PI_2 + 0.05)])
            .unwrap();
        assert!(m.distance(Angle::new(FRAC_PI_2)) < 1e-9);
    }

    #[test]
    fn perpendicular_projection_reduces_to_y_at_angle_zero() {
        let p = Point::new(3.0, 7.0);
        assert!((p.project_perpendicular(Angle::new(0.0)) - 7.0).abs() < 1e-12);
    }

    #[test]
    #[should_panic]
    fn waypoint_rejects_out_of_range_confidence() {
        let _ = Waypoint::new(Point::new(0.0, 0.0), 1.5);
    }
}
