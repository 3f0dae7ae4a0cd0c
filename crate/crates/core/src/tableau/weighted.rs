use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{check_repeat, ChainSpec, Filling, ValidationReport, Violation};

/// One signed occurrence of an index inside a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightedEntry {
    pub index: usize,
    /// `+1` or `-1`.
    pub weight: i8,
}

impl WeightedEntry {
    pub fn plus(index: usize) -> Self {
        WeightedEntry { index, weight: 1 }
    }

    pub fn minus(index: usize) -> Self {
        WeightedEntry { index, weight: -1 }
    }
}

/// A signed filling of the vertical strip over an `alpha x beta` rectangle.
///
/// Boxes may sit above (row < 1) or below (row > beta) the rectangle. The
/// `i`-weight of a box is its base weight (1 above the rectangle, 0
/// elsewhere) plus the weights of its entries with index `<= i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    into = "crate::json::WeightedFillingDoc",
    try_from = "crate::json::WeightedFillingDoc"
)]
pub struct WeightedFilling {
    alpha: usize,
    beta: usize,
    g: usize,
    entries: BTreeMap<(i64, usize), Vec<WeightedEntry>>,
}

impl WeightedFilling {
    pub fn new(alpha: usize, beta: usize, g: usize) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::Malformed(
                "weighted filling needs at least one column".into(),
            ));
        }
        Ok(WeightedFilling {
            alpha,
            beta,
            g,
            entries: BTreeMap::new(),
        })
    }

    /// Appends an entry to box `(row, col)`.
    pub fn push(&mut self, row: i64, col: usize, entry: WeightedEntry) -> Result<()> {
        if col == 0 || col > self.alpha {
            return Err(Error::Malformed(format!(
                "column {col} outside 1..={}",
                self.alpha
            )));
        }
        if entry.weight != 1 && entry.weight != -1 {
            return Err(Error::Malformed(format!(
                "weight {} is not +1 or -1",
                entry.weight
            )));
        }
        self.entries.entry((row, col)).or_default().push(entry);
        Ok(())
    }

    /// Embeds a positive filling with every entry at weight +1.
    pub fn from_positive(f: &Filling) -> Self {
        let mut w = WeightedFilling {
            alpha: f.alpha(),
            beta: f.beta(),
            g: f.g(),
            entries: BTreeMap::new(),
        };
        for ((r, c), v) in f.iter() {
            w.entries
                .entry((r as i64, c))
                .or_default()
                .push(WeightedEntry::plus(v));
        }
        w
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn entries(&self) -> &BTreeMap<(i64, usize), Vec<WeightedEntry>> {
        &self.entries
    }

    pub fn box_entries(&self, row: i64, col: usize) -> &[WeightedEntry] {
        self.entries.get(&(row, col)).map_or(&[], Vec::as_slice)
    }

    pub fn remove_entry(&mut self, row: i64, col: usize, index: usize) -> bool {
        if let Some(list) = self.entries.get_mut(&(row, col)) {
            let before = list.len();
            list.retain(|e| e.index != index);
            let removed = list.len() != before;
            if list.is_empty() {
                self.entries.remove(&(row, col));
            }
            return removed;
        }
        false
    }

    fn base_weight(&self, row: i64) -> i64 {
        i64::from(row < 1)
    }

    /// The `level`-weight of a box.
    pub fn weight(&self, row: i64, col: usize, level: usize) -> i64 {
        self.base_weight(row)
            + self
                .box_entries(row, col)
                .iter()
                .filter(|e| e.index <= level)
                .map(|e| i64::from(e.weight))
                .sum::<i64>()
    }

    /// Rows that can carry a violation: every occupied row, the rectangle,
    /// and one guard row on each side.
    fn row_span(&self) -> (i64, i64) {
        let lo = self.entries.keys().map(|k| k.0).min().unwrap_or(1).min(1);
        let hi = self
            .entries
            .keys()
            .map(|k| k.0)
            .max()
            .unwrap_or(0)
            .max(self.beta as i64);
        (lo - 1, hi + 1)
    }
}

/// Checks the six admissibility conditions on a weighted filling.
pub fn validate_weighted(w: &WeightedFilling, chain: &ChainSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    if chain.g() != w.g {
        report.push(Violation::ChainMismatch {
            filling_g: w.g,
            chain_g: chain.g(),
        });
    }

    // index range and at most one occurrence per box
    let mut positive: BTreeMap<usize, Vec<(i64, usize)>> = BTreeMap::new();
    for (&(row, col), list) in &w.entries {
        let mut seen = std::collections::BTreeSet::new();
        for e in list {
            if e.index == 0 || e.index > w.g {
                report.push(Violation::IndexOutOfRange {
                    row,
                    col,
                    index: e.index,
                    g: w.g,
                });
            }
            if !seen.insert(e.index) {
                report.push(Violation::DuplicateInBox {
                    row,
                    col,
                    index: e.index,
                });
            }
            if e.weight > 0 {
                positive.entry(e.index).or_default().push((row, col));
            }
        }
    }

    // positive repeats only at torsion components
    for (index, mut occ) in positive {
        if occ.len() < 2 {
            continue;
        }
        occ.sort();
        let distances: Vec<usize> = occ
            .windows(2)
            .map(|p| p[0].0.abs_diff(p[1].0) as usize + p[0].1.abs_diff(p[1].1))
            .collect();
        check_repeat(index, &distances, chain, &mut report);
    }

    let (lo, hi) = w.row_span();
    for row in lo..=hi {
        for col in 1..=w.alpha {
            let mut flagged = [false; 3];
            for level in 0..=w.g {
                let here = w.weight(row, col, level);
                if !flagged[0] && !(0..=1).contains(&here) {
                    flagged[0] = true;
                    report.push(Violation::WeightRange {
                        row,
                        col,
                        level,
                        weight: here,
                    });
                }
                if !flagged[1] && col < w.alpha {
                    let right = w.weight(row, col + 1, level);
                    if here < right {
                        flagged[1] = true;
                        report.push(Violation::WeightRight {
                            row,
                            col,
                            level,
                            weight: here,
                            right,
                        });
                    }
                }
                if !flagged[2] && row < hi {
                    let below = w.weight(row + 1, col, level);
                    if here < below {
                        flagged[2] = true;
                        report.push(Violation::WeightDown {
                            row,
                            col,
                            level,
                            weight: here,
                            below,
                        });
                    }
                }
            }
            let full = w.weight(row, col, w.g);
            let expected = i64::from(row <= w.beta as i64);
            if full != expected {
                report.push(Violation::FullWeight {
                    row,
                    col,
                    weight: full,
                    expected,
                });
            }
        }
    }
    report
}

/// Keeps, in each box of the rectangle, the largest index carrying weight +1.
pub fn reduce_to_positive(w: &WeightedFilling) -> Result<Filling> {
    let mut cells = Vec::with_capacity(w.alpha * w.beta);
    for row in 1..=w.beta as i64 {
        for col in 1..=w.alpha {
            let last = w
                .box_entries(row, col)
                .iter()
                .filter(|e| e.weight > 0)
                .map(|e| e.index)
                .max()
                .ok_or_else(|| {
                    Error::Malformed(format!("box ({row}, {col}) has no positive entry"))
                })?;
            cells.push(last);
        }
    }
    Filling::new(w.alpha, w.beta, w.g, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tableau::validate_positive;

    fn right_chain() -> ChainSpec {
        ChainSpec::new(10, [(5, 3), (6, 3)]).unwrap()
    }

    #[test]
    fn figure_one_right_is_admissible() {
        let w = fixtures::fig1_right();
        let report = validate_weighted(&w, &right_chain());
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn empty_strip_is_admissible() {
        let w = WeightedFilling::new(3, 0, 4).unwrap();
        assert!(validate_weighted(&w, &ChainSpec::generic(4)).is_valid());
    }

    #[test]
    fn deleting_negative_entry_breaks_weights() {
        let mut w = fixtures::fig1_right();
        assert!(w.remove_entry(2, 2, 7));
        let report = validate_weighted(&w, &right_chain());
        // 6 and 8 both positive in box (2, 2): the 8-weight reaches 2
        assert!(report.violations.contains(&Violation::WeightRange {
            row: 2,
            col: 2,
            level: 8,
            weight: 2
        }));
    }

    #[test]
    fn duplicate_in_box() {
        let mut w = WeightedFilling::new(1, 1, 3).unwrap();
        w.push(1, 1, WeightedEntry::plus(2)).unwrap();
        w.push(1, 1, WeightedEntry::minus(2)).unwrap();
        w.push(1, 1, WeightedEntry::plus(3)).unwrap();
        let report = validate_weighted(&w, &ChainSpec::generic(3));
        assert!(report.violations.contains(&Violation::DuplicateInBox {
            row: 1,
            col: 1,
            index: 2
        }));
    }

    #[test]
    fn below_rectangle_must_be_empty_weight() {
        let mut w = WeightedFilling::from_positive(&fixtures::fig1_left());
        w.push(5, 1, WeightedEntry::plus(7)).unwrap();
        let report = validate_weighted(&w, &ChainSpec::new(10, [(5, 3)]).unwrap());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::FullWeight { row: 5, col: 1, .. })));
    }

    #[test]
    fn reduction_of_figure_one() {
        let reduced = reduce_to_positive(&fixtures::fig1_right()).unwrap();
        assert_eq!(reduced, fixtures::fig1_left());
        assert!(validate_positive(&reduced, &right_chain()).is_valid());
    }

    #[test]
    fn reduction_is_identity_on_positive() {
        let f = fixtures::fig2_left();
        let w = WeightedFilling::from_positive(&f);
        let chain = crate::tableau::minimal_torsion_chain(&f).unwrap();
        assert!(validate_weighted(&w, &chain).is_valid());
        assert_eq!(reduce_to_positive(&w).unwrap(), f);
    }

    #[test]
    fn canceling_pair_above_rectangle_changes_nothing() {
        let mut w = fixtures::fig1_right();
        // 1-weight drops to 0 and 2 restores it, above column 2
        w.push(0, 2, WeightedEntry::minus(1)).unwrap();
        w.push(0, 2, WeightedEntry::plus(2)).unwrap();
        let report = validate_weighted(&w, &right_chain());
        assert!(report.is_valid(), "{:?}", report.violations);
        assert_eq!(reduce_to_positive(&w).unwrap(), fixtures::fig1_left());
    }

    #[test]
    fn missing_positive_entry_is_malformed() {
        let mut w = fixtures::fig1_right();
        w.remove_entry(4, 2, 10);
        assert!(matches!(reduce_to_positive(&w), Err(Error::Malformed(_))));
    }
}
