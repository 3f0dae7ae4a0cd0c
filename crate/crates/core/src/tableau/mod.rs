//! Admissible fillings of rectangles.
//!
//! A positive [`Filling`] assigns one index in `1..=g` to every box of an
//! `alpha x beta` rectangle so that rows and columns strictly increase. An
//! index may repeat only at a torsion component of the [`ChainSpec`], and
//! the torsion order must divide the grid distance between consecutive
//! occurrences. [`WeightedFilling`] is the signed generalization over the
//! vertical strip containing the rectangle.

mod chain;
mod enumerate;
mod filling;
mod report;
mod weighted;

pub use chain::ChainSpec;
pub use enumerate::{
    count_fillings, enumerate_fillings, filling_exists, max_distance_sum_exhaustive,
    FillingEnumerator, DEFAULT_BUDGET,
};
pub(crate) use filling::check_repeat;
pub use filling::{
    grid_distance, grid_distance_sum, minimal_torsion_chain, transpose, validate_positive, Cell,
    Filling, RepeatRecord,
};
pub use report::{ValidationReport, Violation};
pub use weighted::{reduce_to_positive, validate_weighted, WeightedEntry, WeightedFilling};
