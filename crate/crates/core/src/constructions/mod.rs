//! Generators for the explicit extremal sets, in exact integer arithmetic.

pub mod an;
pub mod cantor;
pub mod countable;
pub mod dk;
pub mod examples;
pub mod splice;

pub use an::{an_modulus, gen_an, witness_r_an};
pub use cantor::{gen_cantor_truncation, CantorMode, CantorSets, CantorTruncation};
pub use countable::{gen_countable_truncation, CountableBlock, CountableTruncation};
pub use dk::{dk_cardinality, dk_size_bound, gen_dk, witness_r};
pub use examples::{gen_boundary_example, gen_vertex_example};
pub use splice::{splice_en, CellPattern, Dim};
