//! Extremal sets for the squares-from-vertices problem: generators for the
//! explicit constructions, center finders, covering-number estimators and
//! the inequality checks that tie them together.
//!
//! Centers and radii of squares are carried in doubled coordinates so
//! half-integer midpoints stay exact.

pub mod budget;
pub mod constructions;
pub mod dimension;
pub mod error;
pub mod finders;
pub mod grid;
pub mod rational;
pub mod report;
pub mod sets;

pub use budget::Budget;
pub use error::{Error, Result};
pub use rational::Rational;
pub use sets::{BoundingBox, DoubledPoint, IntSet1D, PointSet2D};
