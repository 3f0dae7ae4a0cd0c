use serde::{Deserialize, Serialize};

/// A single reason a filling, weighted filling, or component fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Rows must increase left to right.
    RowOrder {
        row: i64,
        col: usize,
        left: usize,
        right: usize,
    },
    /// Columns must increase top to bottom.
    ColumnOrder {
        row: i64,
        col: usize,
        above: usize,
        below: usize,
    },
    IndexOutOfRange {
        row: i64,
        col: usize,
        index: usize,
        g: usize,
    },
    /// An index occurs more than once at a component without torsion.
    RepeatAtGeneric {
        index: usize,
        occurrences: usize,
    },
    /// Grid distance between consecutive occurrences not divisible by the torsion order.
    TorsionMismatch {
        index: usize,
        order: usize,
        distance: usize,
    },
    ChainMismatch {
        filling_g: usize,
        chain_g: usize,
    },
    /// A number appears twice in the same box.
    DuplicateInBox {
        row: i64,
        col: usize,
        index: usize,
    },
    /// Cumulative weight outside {0, 1}.
    WeightRange {
        row: i64,
        col: usize,
        level: usize,
        weight: i64,
    },
    /// Cumulative weight increases to the right.
    WeightRight {
        row: i64,
        col: usize,
        level: usize,
        weight: i64,
        right: i64,
    },
    /// Cumulative weight increases downward.
    WeightDown {
        row: i64,
        col: usize,
        level: usize,
        weight: i64,
        below: i64,
    },
    /// Full weight is not 1 inside/above the rectangle or not 0 below it.
    FullWeight {
        row: i64,
        col: usize,
        weight: i64,
        expected: i64,
    },
    /// Section slot whose vanishing orders exceed the degree.
    SumExceedsDegree {
        slot: usize,
        u: i64,
        v: i64,
        d: i64,
    },
    /// Full-sum slot on a component with a generic bundle, or a bundle of the wrong form.
    BundleMismatch {
        slot: usize,
        u: i64,
        v: i64,
        detail: String,
    },
    /// Two full-sum slots without torsion, or with a torsion order not dividing the gap.
    TorsionRequired {
        slots: (usize, usize),
        gap: i64,
        torsion: Option<usize>,
    },
    /// Vanishing sequences not strictly monotone or of unequal length.
    SequenceShape {
        detail: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}
