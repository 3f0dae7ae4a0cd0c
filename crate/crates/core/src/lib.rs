//! Exact combinatorics of Brill–Noether loci through limit linear series on
//! chains of elliptic curves.
//!
//! * [`params`]: the numbers `rho`, Serre duality, and the grid-distance bound.
//! * [`tableau`]: positive and weighted admissible fillings, validation, and
//!   exhaustive enumeration.
//! * [`construct`]: the optimal-separation and staircase fillings.
//! * [`series`]: fillings as refined limit linear series and back.
//! * [`certify`]: Petri, maximal rank (quadrics), distinctness, and
//!   inclusion screening certificates.
//! * [`json`]: versioned JSON documents for all of the above.

pub mod certify;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod params;
pub mod series;
pub mod tableau;

pub use error::{Error, Result};
pub use params::{BnParams, Triple};
pub use series::LimitSeriesTable;
pub use tableau::{ChainSpec, Filling, ValidationReport, WeightedFilling};
