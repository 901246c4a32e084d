//! Covering numbers, dyadic box counts and finite-difference exponents.

mod covering;
mod exponents;
mod ratios;

pub use covering::{covering_count_1d, dyadic_box_count_2d, snap_to_grid, CoverReport};
pub use exponents::{exponent_finite_diff, Slope};
pub use ratios::{falconer_ratios, RatioBound, RatioFamily, RatioPoint};
