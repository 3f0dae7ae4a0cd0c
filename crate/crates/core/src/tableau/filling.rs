use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{ChainSpec, ValidationReport, Violation};

/// A 1-based `(row, col)` position. Row 1 is the top row, column 1 the
/// leftmost column. Column `c` carries the section slot `j = c - 1`.
pub type Cell = (usize, usize);

/// Grid distance `|drow| + |dcol|`.
pub fn grid_distance(a: Cell, b: Cell) -> usize {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1)
}

/// A positive filling of an `alpha x beta` rectangle (alpha columns, beta
/// rows) with indices drawn from `1..=g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "crate::json::FillingDoc", try_from = "crate::json::FillingDoc")]
pub struct Filling {
    alpha: usize,
    beta: usize,
    g: usize,
    /// Row-major.
    cells: Vec<usize>,
}

/// Every occurrence of an index that appears at least twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatRecord {
    pub index: usize,
    /// Sorted by row.
    pub occurrences: Vec<Cell>,
    /// Distances between consecutive occurrences.
    pub pair_distances: Vec<usize>,
}

impl Filling {
    pub fn new(alpha: usize, beta: usize, g: usize, cells: Vec<usize>) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::Malformed(format!(
                "rectangle {alpha}x{beta} must have positive sides"
            )));
        }
        if cells.len() != alpha * beta {
            return Err(Error::Malformed(format!(
                "expected {} cells for a {alpha}x{beta} rectangle, got {}",
                alpha * beta,
                cells.len()
            )));
        }
        Ok(Filling {
            alpha,
            beta,
            g,
            cells,
        })
    }

    /// Builds a filling from its rows, top row first.
    pub fn from_rows(g: usize, rows: &[&[usize]]) -> Result<Self> {
        let beta = rows.len();
        let alpha = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != alpha) {
            return Err(Error::Malformed("ragged rows".into()));
        }
        Self::new(
            alpha,
            beta,
            g,
            rows.iter().flat_map(|r| r.iter().copied()).collect(),
        )
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

    pub fn get(&self, row: usize, col: usize) -> usize {
        debug_assert!((1..=self.beta).contains(&row) && (1..=self.alpha).contains(&col));
        self.cells[(row - 1) * self.alpha + (col - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.alpha)
    }

    /// `((row, col), index)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        let alpha = self.alpha;
        self.cells
            .iter()
            .enumerate()
            .map(move |(n, &v)| ((n / alpha + 1, n % alpha + 1), v))
    }

    pub fn raw_cells(&self) -> &[usize] {
        &self.cells
    }

    /// Index -> occurrences sorted by row.
    pub fn occurrences(&self) -> BTreeMap<usize, Vec<Cell>> {
        let mut map: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
        for (cell, v) in self.iter() {
            map.entry(v).or_default().push(cell);
        }
        map
    }

    pub fn repeats(&self) -> Vec<RepeatRecord> {
        self.occurrences()
            .into_iter()
            .filter(|(_, occ)| occ.len() >= 2)
            .map(|(index, occurrences)| {
                let pair_distances = occurrences
                    .windows(2)
                    .map(|w| grid_distance(w[0], w[1]))
                    .collect();
                RepeatRecord {
                    index,
                    occurrences,
                    pair_distances,
                }
            })
            .collect()
    }

    /// Number of distinct indices used.
    pub fn distinct_indices(&self) -> usize {
        self.occurrences().len()
    }

    fn monotonicity(&self, report: &mut ValidationReport) {
        for r in 1..=self.beta {
            for c in 1..=self.alpha {
                let v = self.get(r, c);
                if c < self.alpha && v >= self.get(r, c + 1) {
                    report.push(Violation::RowOrder {
                        row: r as i64,
                        col: c,
                        left: v,
                        right: self.get(r, c + 1),
                    });
                }
                if r < self.beta && v >= self.get(r + 1, c) {
                    report.push(Violation::ColumnOrder {
                        row: r as i64,
                        col: c,
                        above: v,
                        below: self.get(r + 1, c),
                    });
                }
            }
        }
    }

    pub fn is_monotone(&self) -> bool {
        let mut report = ValidationReport::default();
        self.monotonicity(&mut report);
        report.is_valid()
    }
}

/// Checks monotonicity, the index range, and that repeats sit only at
/// torsion components whose order divides each consecutive grid distance.
pub fn validate_positive(f: &Filling, chain: &ChainSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    if chain.g() != f.g {
        report.push(Violation::ChainMismatch {
            filling_g: f.g,
            chain_g: chain.g(),
        });
    }
    f.monotonicity(&mut report);
    for ((row, col), index) in f.iter() {
        if index == 0 || index > f.g {
            report.push(Violation::IndexOutOfRange {
                row: row as i64,
                col,
                index,
                g: f.g,
            });
        }
    }
    for rep in f.repeats() {
        check_repeat(rep.index, &rep.pair_distances, chain, &mut report);
    }
    report
}

pub(crate) fn check_repeat(
    index: usize,
    pair_distances: &[usize],
    chain: &ChainSpec,
    report: &mut ValidationReport,
) {
    match chain.torsion(index) {
        None => report.push(Violation::RepeatAtGeneric {
            index,
            occurrences: pair_distances.len() + 1,
        }),
        Some(order) => {
            for &distance in pair_distances {
                if distance % order != 0 {
                    report.push(Violation::TorsionMismatch {
                        index,
                        order,
                        distance,
                    });
                }
            }
        }
    }
}

/// Swaps rows and columns; this is the filling of the Serre dual series.
pub fn transpose(f: &Filling) -> Filling {
    let mut cells = Vec::with_capacity(f.cells.len());
    for c in 1..=f.alpha {
        for r in 1..=f.beta {
            cells.push(f.get(r, c));
        }
    }
    Filling {
        alpha: f.beta,
        beta: f.alpha,
        g: f.g,
        cells,
    }
}

/// Sum of the grid distances of the doubled indices.
pub fn grid_distance_sum(f: &Filling) -> Result<usize> {
    let mut total = 0;
    for rep in f.repeats() {
        if rep.occurrences.len() > 2 {
            return Err(Error::UnsupportedMultiplicity {
                index: rep.index,
                count: rep.occurrences.len(),
            });
        }
        total += rep.pair_distances[0];
    }
    Ok(total)
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The weakest chain decoration making `f` valid: each repeated index gets
/// the torsion order equal to its occurrence distance (the gcd of the
/// consecutive distances for higher multiplicity).
pub fn minimal_torsion_chain(f: &Filling) -> Result<ChainSpec> {
    let mut special = Vec::new();
    for rep in f.repeats() {
        let order = rep.pair_distances.iter().fold(0, |acc, &d| gcd(acc, d));
        if order <= 1 {
            return Err(Error::ImpossibleFilling {
                index: rep.index,
                distance: order,
            });
        }
        special.push((rep.index, order));
    }
    ChainSpec::new(f.g, special)
}
