//! Exhaustive enumeration of positive fillings, plus shape-growth oracles.
//!
//! A positive filling is the same thing as a chain of Young-diagram shapes
//! inside the rectangle, where step `i` adds the cells holding index `i` as a
//! set of outer corners. The oracles below search that lattice directly,
//! which keeps them independent of the closed formulas they are used to
//! check.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{grid_distance, Cell, ChainSpec, Filling};

/// Default maximum number of cells [`enumerate_fillings`] accepts.
pub const DEFAULT_BUDGET: usize = 30;

/// Streams every valid positive filling of an `alpha x beta` rectangle with
/// indices from `1..=chain.g()`, in lexicographic row-major order.
pub fn enumerate_fillings(
    alpha: usize,
    beta: usize,
    chain: &ChainSpec,
    budget: usize,
) -> Result<FillingEnumerator> {
    let cells = alpha * beta;
    if cells > budget {
        return Err(Error::BudgetExceeded { cells, budget });
    }
    if alpha == 0 || beta == 0 {
        return Err(Error::Malformed(format!(
            "rectangle {alpha}x{beta} must have positive sides"
        )));
    }
    Ok(FillingEnumerator {
        alpha,
        beta,
        chain: chain.clone(),
        values: vec![0; cells],
        occurrences: vec![Vec::new(); chain.g() + 1],
        pos: 0,
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct FillingEnumerator {
    alpha: usize,
    beta: usize,
    chain: ChainSpec,
    values: Vec<usize>,
    /// Positions holding each index, in assignment order.
    occurrences: Vec<Vec<usize>>,
    pos: usize,
    done: bool,
}

impl FillingEnumerator {
    fn cell(&self, pos: usize) -> Cell {
        (pos / self.alpha + 1, pos % self.alpha + 1)
    }

    fn next_value(&self, pos: usize, current: usize) -> Option<usize> {
        let (row, col) = self.cell(pos);
        let left = if col > 1 { self.values[pos - 1] } else { 0 };
        let above = if row > 1 {
            self.values[pos - self.alpha]
        } else {
            0
        };
        let lo = current.max(left).max(above) + 1;
        // a strictly increasing chain of (beta - row) + (alpha - col) cells follows
        let tail = (self.beta - row) + (self.alpha - col);
        let hi = self.chain.g().checked_sub(tail)?;
        (lo..=hi).find(|&v| match self.occurrences[v].last() {
            None => true,
            Some(&prev) => self.chain.torsion(v).is_some_and(|order| {
                grid_distance(self.cell(prev), (row, col)).is_multiple_of(order)
            }),
        })
    }
}

impl Iterator for FillingEnumerator {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let last = self.values.len() - 1;
        loop {
            let current = self.values[self.pos];
            if current != 0 {
                self.occurrences[current].pop();
            }
            match self.next_value(self.pos, current) {
                Some(v) => {
                    self.values[self.pos] = v;
                    self.occurrences[v].push(self.pos);
                    if self.pos == last {
                        return Some(
                            Filling::new(
                                self.alpha,
                                self.beta,
                                self.chain.g(),
                                self.values.clone(),
                            )
                            .expect("enumerator keeps the rectangle shape"),
                        );
                    }
                    self.pos += 1;
                    self.values[self.pos] = 0;
                }
                None => {
                    self.values[self.pos] = 0;
                    if self.pos == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                }
            }
        }
    }
}

/// Row lengths of a shape inside the rectangle (non-increasing).
type Shape = Vec<u8>;

fn outer_corners(shape: &Shape, alpha: usize) -> Vec<Cell> {
    (0..shape.len())
        .filter(|&r| (shape[r] as usize) < alpha && (r == 0 || shape[r - 1] > shape[r]))
        .map(|r| (r + 1, shape[r] as usize + 1))
        .collect()
}

fn add_cells(shape: &Shape, cells: &[Cell]) -> Shape {
    let mut next = shape.clone();
    for &(r, _) in cells {
        next[r - 1] += 1;
    }
    next
}

/// The largest total grid distance over all admissible fillings of the
/// rectangle in which exactly `e` indices appear twice and the others once.
/// `None` when no such filling exists.
pub fn max_distance_sum_exhaustive(alpha: usize, beta: usize, e: usize) -> Option<usize> {
    fn go(
        shape: &Shape,
        pairs_left: usize,
        alpha: usize,
        memo: &mut HashMap<(Shape, usize), Option<usize>>,
    ) -> Option<usize> {
        if let Some(&hit) = memo.get(&(shape.clone(), pairs_left)) {
            return hit;
        }
        let corners = outer_corners(shape, alpha);
        let result = if corners.is_empty() {
            (pairs_left == 0).then_some(0)
        } else {
            let mut best: Option<usize> = None;
            for &c in &corners {
                if let Some(v) = go(&add_cells(shape, &[c]), pairs_left, alpha, memo) {
                    best = Some(best.map_or(v, |b| b.max(v)));
                }
            }
            if pairs_left > 0 {
                for (i, &a) in corners.iter().enumerate() {
                    for &b in &corners[i + 1..] {
                        let next = add_cells(shape, &[a, b]);
                        if let Some(v) = go(&next, pairs_left - 1, alpha, memo) {
                            let v = v + grid_distance(a, b);
                            best = Some(best.map_or(v, |x| x.max(v)));
                        }
                    }
                }
            }
            best
        };
        memo.insert((shape.clone(), pairs_left), result);
        result
    }
    if alpha == 0 || beta == 0 || alpha > u8::MAX as usize {
        return None;
    }
    go(&vec![0; beta], e, alpha, &mut HashMap::new())
}

/// Subsets of the given corners usable for a single index on `chain`.
fn admissible_subsets(corners: &[Cell], torsion: Option<usize>) -> Vec<Vec<Cell>> {
    let mut out = vec![Vec::new()];
    for &c in corners {
        out.push(vec![c]);
    }
    if let Some(order) = torsion {
        let n = corners.len();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            // corners are listed by row, so consecutive members are consecutive by row
            let subset: Vec<Cell> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| corners[i])
                .collect();
            if subset
                .windows(2)
                .all(|w| grid_distance(w[0], w[1]).is_multiple_of(order))
            {
                out.push(subset);
            }
        }
    }
    out
}

/// Number of valid positive fillings of the rectangle on `chain`.
pub fn count_fillings(alpha: usize, beta: usize, chain: &ChainSpec) -> u128 {
    fn go(
        index: usize,
        shape: &Shape,
        alpha: usize,
        chain: &ChainSpec,
        memo: &mut HashMap<(usize, Shape), u128>,
    ) -> u128 {
        let corners = outer_corners(shape, alpha);
        if corners.is_empty() {
            return 1;
        }
        if index > chain.g() {
            return 0;
        }
        if let Some(&hit) = memo.get(&(index, shape.clone())) {
            return hit;
        }
        let total = admissible_subsets(&corners, chain.torsion(index))
            .iter()
            .map(|s| go(index + 1, &add_cells(shape, s), alpha, chain, memo))
            .sum();
        memo.insert((index, shape.clone()), total);
        total
    }
    if alpha == 0 || beta == 0 {
        return 0;
    }
    go(1, &vec![0; beta], alpha, chain, &mut HashMap::new())
}

/// Whether any valid positive filling of the rectangle exists on `chain`.
pub fn filling_exists(alpha: usize, beta: usize, chain: &ChainSpec) -> bool {
    fn go(
        index: usize,
        shape: &Shape,
        alpha: usize,
        chain: &ChainSpec,
        memo: &mut HashMap<(usize, Shape), bool>,
    ) -> bool {
        let corners = outer_corners(shape, alpha);
        if corners.is_empty() {
            return true;
        }
        if index > chain.g() {
            return false;
        }
        if let Some(&hit) = memo.get(&(index, shape.clone())) {
            return hit;
        }
        let found = admissible_subsets(&corners, chain.torsion(index))
            .iter()
            .any(|s| go(index + 1, &add_cells(shape, s), alpha, chain, memo));
        memo.insert((index, shape.clone()), found);
        found
    }
    if alpha == 0 || beta == 0 {
        return false;
    }
    go(1, &vec![0; beta], alpha, chain, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::fixtures;
    use crate::tableau::validate_positive;

    #[test]
    fn single_column_is_forced() {
        let all: Vec<_> = enumerate_fillings(1, 2, &ChainSpec::generic(2), DEFAULT_BUDGET)
            .unwrap()
            .collect();
        assert_eq!(all, vec![Filling::from_rows(2, &[&[1], &[2]]).unwrap()]);
    }

    #[test]
    fn two_by_two_with_torsion_two() {
        let chain = ChainSpec::new(3, [(2, 2)]).unwrap();
        let all: Vec<_> = enumerate_fillings(2, 2, &chain, DEFAULT_BUDGET)
            .unwrap()
            .collect();
        let target = Filling::from_rows(3, &[&[1, 2], &[2, 3]]).unwrap();
        assert!(all.contains(&target));
        // the only fillings: 12/23 and 12/33? no, 3 cannot repeat; 13/23 is invalid
        assert_eq!(all.len(), count_fillings(2, 2, &chain) as usize);
    }

    #[test]
    fn figure_one_is_enumerated() {
        let chain = ChainSpec::new(10, [(5, 3)]).unwrap();
        let target = fixtures::fig1_left();
        assert!(enumerate_fillings(2, 4, &chain, DEFAULT_BUDGET)
            .unwrap()
            .any(|f| f == target));
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_fillings(6, 6, &ChainSpec::generic(36), DEFAULT_BUDGET).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                cells: 36,
                budget: 30
            }
        );
    }

    #[test]
    fn output_is_sorted_unique_valid_and_counted() {
        let chains = [
            ChainSpec::generic(7),
            ChainSpec::new(7, [(3, 2)]).unwrap(),
            ChainSpec::new(7, [(2, 3), (4, 2)]).unwrap(),
        ];
        for chain in &chains {
            for (alpha, beta) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
                let all: Vec<_> = enumerate_fillings(alpha, beta, chain, DEFAULT_BUDGET)
                    .unwrap()
                    .collect();
                let mut seen = HashSet::new();
                for w in all.windows(2) {
                    assert!(w[0].raw_cells() < w[1].raw_cells());
                }
                for f in &all {
                    assert!(validate_positive(f, chain).is_valid());
                    assert!(seen.insert(f.clone()));
                    for rep in f.repeats() {
                        for pair in rep.occurrences.windows(2) {
                            assert!(pair[1].0 > pair[0].0 && pair[1].1 < pair[0].1);
                        }
                    }
                }
                assert_eq!(all.len() as u128, count_fillings(alpha, beta, chain));
            }
        }
    }

    /// Row-major backtracking over every strictly increasing filling with
    /// values 1..=g, each used at most twice, ignoring torsion.
    fn literal_max(alpha: usize, beta: usize, e: usize) -> Option<usize> {
        fn go(
            pos: usize,
            alpha: usize,
            beta: usize,
            g: usize,
            vals: &mut Vec<usize>,
            best: &mut Option<usize>,
        ) {
            if pos == alpha * beta {
                let mut cells: HashMap<usize, Vec<Cell>> = HashMap::new();
                for (n, &v) in vals.iter().enumerate() {
                    cells
                        .entry(v)
                        .or_default()
                        .push((n / alpha + 1, n % alpha + 1));
                }
                if cells.len() != g {
                    return;
                }
                let s = cells
                    .values()
                    .filter(|c| c.len() == 2)
                    .map(|c| grid_distance(c[0], c[1]))
                    .sum();
                *best = Some(best.map_or(s, |b: usize| b.max(s)));
                return;
            }
            let (r, c) = (pos / alpha, pos % alpha);
            let left = if c > 0 { vals[pos - 1] } else { 0 };
            let above = if r > 0 { vals[pos - alpha] } else { 0 };
            for v in left.max(above) + 1..=g {
                if vals.iter().filter(|&&x| x == v).count() >= 2 {
                    continue;
                }
                vals.push(v);
                go(pos + 1, alpha, beta, g, vals, best);
                vals.pop();
            }
        }
        let g = alpha * beta - e;
        let mut best = None;
        go(0, alpha, beta, g, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn distance_oracle_matches_literal_enumeration() {
        for (alpha, beta) in [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4)] {
            let area = alpha * beta;
            for e in 0..=area / 2 {
                assert_eq!(
                    max_distance_sum_exhaustive(alpha, beta, e),
                    literal_max(alpha, beta, e),
                    "{alpha}x{beta} e={e}"
                );
            }
        }
    }

    #[test]
    fn distance_oracle_small_values() {
        // 2x2 with one pair: only (1,2)/(2,1), distance 2
        assert_eq!(max_distance_sum_exhaustive(2, 2, 1), Some(2));
        assert_eq!(max_distance_sum_exhaustive(2, 2, 2), None);
        assert_eq!(max_distance_sum_exhaustive(3, 3, 0), Some(0));
    }

    #[test]
    fn existence_agrees_with_count() {
        let chain = ChainSpec::new(10, [(5, 3)]).unwrap();
        assert!(filling_exists(2, 4, &chain));
        // nine cells, five indices: four would need to repeat
        let chain = ChainSpec::new(5, [(2, 2)]).unwrap();
        assert!(!filling_exists(3, 3, &chain));
        assert_eq!(count_fillings(3, 3, &chain), 0);
    }
}
