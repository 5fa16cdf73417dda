use crate::error::{Error, Result};
use crate::geometry::{normalize_angle, Point, Wedge};

/// Bisector angle for every point plus the shared aperture and radius.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientationAssignment {
    pub alpha: f64,
    /// `theta[id]` in `[0, 2π)`.
    pub theta: Vec<f64>,
    pub guaranteed_radius: f64,
}

impl OrientationAssignment {
    pub fn new(alpha: f64, theta: Vec<f64>, guaranteed_radius: f64) -> Self {
        let theta = theta.into_iter().map(normalize_angle).collect();
        OrientationAssignment {
            alpha,
            theta,
            guaranteed_radius,
        }
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    /// Wedge at `apex` with this assignment's aperture and the given radius.
    pub fn wedge(&self, apex: &Point, r: f64) -> Result<Wedge> {
        let theta = self
            .theta
            .get(apex.id)
            .ok_or(Error::MissingOrientation(apex.id))?;
        Ok(Wedge::new(*apex, *theta, self.alpha, r))
    }

    pub fn check_covers(&self, points: &[Point]) -> Result<()> {
        if self.theta.len() < points.len() {
            return Err(Error::MissingOrientation(self.theta.len()));
        }
        Ok(())
    }
}
