//! The worked fillings from the reference figures, as in-memory values.
//!
//! Two printed panels contain a misprinted entry that breaks monotonicity;
//! the values here carry the only entry consistent with the rest of the
//! panel: `fig3_left` has 14 at row 1, column 4 and `fig3_right` has 10 at
//! row 3, column 4.

use crate::tableau::{Filling, WeightedEntry, WeightedFilling};

fn grid(g: usize, rows: &[&[usize]]) -> Filling {
    Filling::from_rows(g, rows).expect("fixture rows are rectangular")
}

/// 2 columns x 4 rows, g = 10 (r = 1, d = 7); index 5 doubled.
pub fn fig1_left() -> Filling {
    grid(10, &[&[3, 5], &[4, 8], &[5, 9], &[6, 10]])
}

/// The signed filling whose reduction is [`fig1_left`]; 5 and 6 doubled.
pub fn fig1_right() -> WeightedFilling {
    use WeightedEntry as E;
    let mut w = WeightedFilling::new(2, 4, 10).expect("two columns");
    let boxes: [(i64, usize, &[WeightedEntry]); 8] = [
        (1, 1, &[E::plus(1), E::minus(2), E::plus(3)]),
        (1, 2, &[E::plus(5)]),
        (2, 1, &[E::plus(4)]),
        (2, 2, &[E::plus(6), E::minus(7), E::plus(8)]),
        (3, 1, &[E::plus(5)]),
        (3, 2, &[E::plus(9)]),
        (4, 1, &[E::plus(6)]),
        (4, 2, &[E::plus(10)]),
    ];
    for (row, col, entries) in boxes {
        for &e in entries {
            w.push(row, col, e).expect("fixture columns in range");
        }
    }
    w
}

/// 5 x 6 with e = 7 doubled indices, numbers 1..=23.
pub fn fig2_left() -> Filling {
    grid(
        23,
        &[
            &[1, 2, 7, 12, 18],
            &[3, 4, 8, 13, 19],
            &[5, 6, 9, 14, 20],
            &[7, 10, 11, 15, 21],
            &[12, 13, 16, 17, 22],
            &[18, 19, 20, 21, 23],
        ],
    )
}

/// 5 x 5 with e = 11 doubled indices, numbers 1..=14.
pub fn fig2_right() -> Filling {
    grid(
        14,
        &[
            &[1, 2, 4, 6, 9],
            &[2, 3, 5, 7, 11],
            &[4, 5, 6, 8, 12],
            &[7, 8, 9, 10, 13],
            &[10, 11, 12, 13, 14],
        ],
    )
}

/// 4 x 8, g = 21, e = 11.
pub fn fig3_left() -> Filling {
    grid(
        21,
        &[
            &[1, 5, 9, 14],
            &[2, 6, 10, 15],
            &[3, 7, 11, 16],
            &[4, 8, 12, 17],
            &[5, 9, 13, 18],
            &[6, 10, 14, 19],
            &[11, 12, 15, 20],
            &[16, 17, 18, 21],
        ],
    )
}

/// 4 x 8, g = 17, e = 15 = g - 2.
pub fn fig3_middle() -> Filling {
    grid(
        17,
        &[
            &[1, 2, 5, 10],
            &[2, 3, 6, 11],
            &[3, 4, 7, 12],
            &[4, 5, 8, 13],
            &[6, 7, 9, 14],
            &[8, 9, 10, 15],
            &[11, 12, 13, 16],
            &[14, 15, 16, 17],
        ],
    )
}

/// 5 x 7, g = 19, e = 16 = g - 3.
pub fn fig3_right() -> Filling {
    grid(
        19,
        &[
            &[1, 2, 5, 8, 13],
            &[2, 3, 6, 9, 14],
            &[3, 4, 7, 10, 15],
            &[4, 5, 8, 11, 16],
            &[6, 7, 9, 12, 17],
            &[10, 11, 12, 13, 18],
            &[14, 15, 16, 17, 19],
        ],
    )
}

/// The 5 x 5 triangular corner filling, g = 15.
pub fn fig4_square() -> Filling {
    grid(
        15,
        &[
            &[1, 2, 4, 7, 11],
            &[2, 3, 5, 8, 12],
            &[4, 5, 6, 9, 13],
            &[7, 8, 9, 10, 14],
            &[11, 12, 13, 14, 15],
        ],
    )
}
