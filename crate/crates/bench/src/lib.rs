//! Benchmark inputs shared by the criterion targets.

/// Rectangles whose generic fillings are streamed in full.
pub const ENUMERATION_SHAPES: &[(usize, usize)] = &[(2, 4), (3, 3), (3, 4)];

/// Rectangles whose fillings are only counted.
pub const COUNT_SHAPES: &[(usize, usize)] = &[(3, 4), (4, 4), (4, 5), (5, 6)];

/// `(alpha, beta, g)` inputs for the staircase construction.
pub const STAIRCASE_CASES: &[(usize, usize, usize)] =
    &[(4, 8, 21), (4, 8, 17), (5, 7, 19), (6, 10, 40), (8, 12, 60)];

/// `(alpha, beta, e)` inputs for the exhaustive separation oracle.
pub const SEPARATION_CASES: &[(usize, usize, usize)] =
    &[(4, 4, 3), (5, 5, 6), (5, 6, 7), (6, 6, 8)];
