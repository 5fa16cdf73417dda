//! Orienting fixed-aperture directional antennas so that the induced
//! communication graph is strongly connected.
//!
//! Two constructions are provided: half-plane antennas (aperture 180°) reach
//! strong connectivity at radius `1 + √3`, quarter-plane antennas (90°) at
//! radius 7, both relative to a connected unit disk graph. The [`verifier`]
//! module checks any orientation independently.

pub mod assignment;
pub mod error;
pub mod fourpoint;
pub mod geometry;
pub mod instances;
pub mod io;
pub mod orient180;
pub mod orient90;
pub mod topology;
pub mod verifier;

pub use assignment::OrientationAssignment;
pub use error::{Error, Result};
pub use geometry::{Point, Wedge, EPS};
pub use orient180::{orient_all_180, RADIUS_180};
pub use orient90::{orient_all_90, RADIUS_90};
