//! Explicit fillings: the optimal grid-distance separation and the staircase
//! construction that realizes every `e = alpha*beta - g` with
//! `alpha*beta/2 + 1 <= g <= alpha*beta`.
//!
//! Both builders first fix a [`SpotLayout`]: the bottom `a_i` boxes of column
//! `i` (for `i < alpha`) and the top `b_i` boxes of column `i` (for `i > 1`)
//! are reserved for doubled indices. The layout is then numbered by
//! [`fill_layout`], which pairs each reserved top-right box with a reserved
//! bottom-left box.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{check_separation_range, kj_decompose, max_distance_bound, max_separable_e};
use crate::tableau::{grid_distance_sum, minimal_torsion_chain, validate_positive, Cell, Filling};

/// Which boxes of an `alpha x beta` rectangle carry doubled indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotLayout {
    pub alpha: usize,
    pub beta: usize,
    pub e: usize,
    /// Staircase depth; 0 for optimal-separation layouts.
    pub t: usize,
    /// Overflow added to the first and last columns.
    pub l: usize,
    /// `eps[i - 1]` is the extra spot of column `i`, `i = 1..alpha-1`.
    pub eps: Vec<u8>,
    /// `a[i - 1]`: reserved boxes at the bottom of column `i`, `i = 1..alpha-1`.
    pub a: Vec<usize>,
    /// `b[i - 2]`: reserved boxes at the top of column `i`, `i = 2..alpha`.
    pub b: Vec<usize>,
}

impl SpotLayout {
    /// Bottom-left reserved boxes, column by column.
    pub fn bottom_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &ai) in self.a.iter().enumerate() {
            for row in self.beta - ai + 1..=self.beta {
                out.push((row, i + 1));
            }
        }
        out
    }

    /// Top-right reserved boxes, column by column.
    pub fn top_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &bi) in self.b.iter().enumerate() {
            for row in 1..=bi {
                out.push((row, i + 2));
            }
        }
        out
    }

    /// Checks the sum, monotonicity, and fit conditions.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Construction(msg));
        let (alpha, beta) = (self.alpha, self.beta);
        if alpha < 2 {
            return if self.e == 0 {
                Ok(())
            } else {
                fail(format!(
                    "a single column cannot hold {} doubled indices",
                    self.e
                ))
            };
        }
        if self.a.len() != alpha - 1 || self.b.len() != alpha - 1 {
            return fail("layout vectors must have alpha - 1 entries".into());
        }
        let sa: usize = self.a.iter().sum();
        let sb: usize = self.b.iter().sum();
        if sa != self.e || sb != self.e {
            return fail(format!("sum a = {sa}, sum b = {sb}, e = {}", self.e));
        }
        if self.a.windows(2).any(|w| w[0] < w[1]) {
            return fail(format!("a = {:?} is not non-increasing", self.a));
        }
        if self.b.windows(2).any(|w| w[0] > w[1]) {
            return fail(format!("b = {:?} is not non-decreasing", self.b));
        }
        for col in 2..alpha {
            let (ai, bi) = (self.a[col - 1], self.b[col - 2]);
            if ai + bi > beta {
                return fail(format!(
                    "column {col}: a + b = {} exceeds beta = {beta}",
                    ai + bi
                ));
            }
        }
        if self.a[0] >= beta {
            return fail(format!(
                "a_1 = {} leaves no free box in column 1",
                self.a[0]
            ));
        }
        if self.b[alpha - 2] >= beta {
            return fail(format!(
                "b_alpha = {} leaves no free box in column {alpha}",
                self.b[alpha - 2]
            ));
        }
        Ok(())
    }
}

/// Layout of the optimal-separation filling: all spots within diagonal
/// distance `k - 1` of the two corners plus `j` spots at distance `k`.
pub fn optimal_separation_layout(alpha: usize, beta: usize, e: usize) -> Result<SpotLayout> {
    check_separation_range(alpha as i64, beta as i64, e as i64)?;
    let dec = kj_decompose(e as i64);
    let (k, j) = (dec.k as usize, dec.j as usize);
    let cols = alpha.saturating_sub(1);
    let mut eps = vec![0u8; cols];
    let mut a = vec![0usize; cols];
    let mut b = vec![0usize; cols];

    if alpha == beta && k + 1 == alpha {
        // the distance-k diagonal is shared by both corners: alternate
        for s in 1..=j {
            if let Some(i) = alpha.checked_sub(2 * s).filter(|&i| i >= 1) {
                eps[i - 1] = 1;
            }
        }
        for i in 1..alpha {
            a[i - 1] = alpha - i + eps[i - 1] as usize;
        }
        for i in 2..=alpha {
            b[i - 2] = i - 1 + eps[i - 2] as usize;
        }
    } else {
        // j extra spots with the largest column values on each corner
        let lo = (k + 1).saturating_sub(j).min(cols.saturating_sub(j));
        let hi = (k + 1).min(cols);
        for i in lo + 1..=hi {
            eps[i - 1] = 1;
        }
        for i in 1..alpha {
            a[i - 1] = (k + 1).saturating_sub(i) + eps[i - 1] as usize;
        }
        for i in 2..=alpha {
            let extra = usize::from(i + j > alpha);
            b[i - 2] = (k + i).saturating_sub(alpha) + extra;
        }
    }

    let layout = SpotLayout {
        alpha,
        beta,
        e,
        t: 0,
        l: 0,
        eps,
        a,
        b,
    };
    layout.check()?;
    Ok(layout)
}

/// Layout of the staircase construction. Delegates to
/// [`optimal_separation_layout`] when `alpha == beta` or `e` is within the
/// separation bound.
pub fn staircase_layout(alpha: usize, beta: usize, g: usize) -> Result<SpotLayout> {
    if alpha < 2 || alpha > beta {
        return Err(Error::OutOfRange(format!(
            "need 2 <= alpha <= beta, got alpha = {alpha}, beta = {beta}"
        )));
    }
    let area = alpha * beta;
    if g > area || 2 * g < area + 2 {
        return Err(Error::OutOfRange(format!(
            "alpha*beta/2 + 1 <= g <= alpha*beta violated: g = {g}, alpha*beta = {area}"
        )));
    }
    let e = area - g;
    if alpha == beta || e as i64 <= max_separable_e(alpha as i64, beta as i64) {
        return optimal_separation_layout(alpha, beta, e);
    }

    let cols = alpha - 1;
    let tri = alpha * (alpha - 1) / 2;
    let t0 = (beta - alpha).div_ceil(2);
    let mut eps = vec![0u8; cols];
    let (t, l);
    if e <= tri + t0 * cols {
        // case (a): tri + t*cols <= e < tri + (t+1)*cols
        t = (e - tri) / cols;
        let j = e - tri - t * cols;
        l = 0;
        for i in alpha - j..=cols {
            if i >= 1 {
                eps[i - 1] = 1;
            }
        }
    } else {
        // case (b)
        t = t0;
        let base = (alpha + 2 * t0) * cols / 2;
        if (beta - alpha).is_multiple_of(2) {
            let j = (e - base).min(cols / 2);
            for s in 1..=j {
                if let Some(i) = alpha.checked_sub(2 * s).filter(|&i| i >= 1) {
                    eps[i - 1] = 1;
                }
            }
        }
        let spent = base + eps.iter().map(|&x| x as usize).sum::<usize>();
        l = e.checked_sub(spent).ok_or_else(|| {
            Error::Construction(format!(
                "negative overflow l = {} - {spent} for alpha = {alpha}, beta = {beta}, g = {g}",
                e
            ))
        })?;
    }

    let mut a = vec![0usize; cols];
    let mut b = vec![0usize; cols];
    for i in 1..alpha {
        a[i - 1] = alpha - i + t + eps[i - 1] as usize;
    }
    a[0] += l;
    for i in 2..=alpha {
        b[i - 2] = i - 1 + t + eps[i - 2] as usize;
    }
    b[cols - 1] += l;

    let layout = SpotLayout {
        alpha,
        beta,
        e,
        t,
        l,
        eps,
        a,
        b,
    };
    layout.check()?;
    Ok(layout)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Single,
    Top,
    Bottom,
}

/// Numbers a layout. Columns are swept left to right, each top to bottom;
/// the first box that can take the next number gets it. A reserved top box
/// is paired with the reserved bottom box that comes first in row-major
/// order among those whose upper and left neighbours are already numbered.
pub fn fill_layout(layout: &SpotLayout) -> Result<Filling> {
    let (alpha, beta) = (layout.alpha, layout.beta);
    let idx = |(r, c): Cell| (r - 1) * alpha + (c - 1);
    let mut role = vec![Role::Single; alpha * beta];
    for cell in layout.top_cells() {
        role[idx(cell)] = Role::Top;
    }
    for cell in layout.bottom_cells() {
        if role[idx(cell)] != Role::Single {
            return Err(Error::Construction(format!("box {cell:?} reserved twice")));
        }
        role[idx(cell)] = Role::Bottom;
    }

    let mut values = vec![0usize; alpha * beta];
    let ready = |values: &[usize], (r, c): Cell| {
        (r == 1 || values[idx((r - 1, c))] != 0) && (c == 1 || values[idx((r, c - 1))] != 0)
    };
    let mut next = 1;
    let mut filled = 0;
    while filled < alpha * beta {
        let mut progress = false;
        'scan: for c in 1..=alpha {
            for r in 1..=beta {
                let cell = (r, c);
                if values[idx(cell)] != 0 || !ready(&values, cell) {
                    continue;
                }
                match role[idx(cell)] {
                    Role::Bottom => continue,
                    Role::Single => {
                        values[idx(cell)] = next;
                        filled += 1;
                    }
                    Role::Top => {
                        let partner = (1..=beta)
                            .flat_map(|pr| (1..=alpha).map(move |pc| (pr, pc)))
                            .find(|&p| {
                                role[idx(p)] == Role::Bottom
                                    && values[idx(p)] == 0
                                    && ready(&values, p)
                            });
                        let Some(partner) = partner else { continue };
                        values[idx(cell)] = next;
                        values[idx(partner)] = next;
                        filled += 2;
                    }
                }
                next += 1;
                progress = true;
                break 'scan;
            }
        }
        if !progress {
            return Err(Error::Construction(format!(
                "numbering stalled after {} of {} boxes for layout a = {:?}, b = {:?}",
                filled,
                alpha * beta,
                layout.a,
                layout.b
            )));
        }
    }
    Filling::new(alpha, beta, next - 1, values)
}

/// Confirms `f` is a valid filling using every index in `1..=g`, with
/// exactly the layout's reserved boxes holding the doubled indices.
fn check_against_layout(f: &Filling, layout: &SpotLayout) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(msg));
    let chain = minimal_torsion_chain(f)?;
    let report = validate_positive(f, &chain);
    if !report.is_valid() {
        return fail(format!(
            "constructed filling invalid: {:?}",
            report.violations
        ));
    }
    let occ = f.occurrences();
    if occ.len() != f.g() || occ.keys().next_back() != Some(&f.g()) {
        return fail(format!("indices 1..={} not all used", f.g()));
    }
    let mut doubled: Vec<Cell> = occ
        .values()
        .filter(|c| c.len() == 2)
        .flatten()
        .copied()
        .collect();
    if occ.values().any(|c| c.len() > 2) {
        return fail("an index appears three or more times".into());
    }
    let mut reserved = layout.top_cells();
    reserved.extend(layout.bottom_cells());
    doubled.sort_unstable();
    reserved.sort_unstable();
    if doubled != reserved {
        return fail("doubled boxes differ from the reserved layout".into());
    }
    Ok(())
}

/// An admissible filling with numbers `1..=alpha*beta - e`, exactly `e` of
/// them doubled, whose grid-distance sum meets
/// [`max_distance_bound`](crate::params::max_distance_bound).
pub fn optimal_separation_filling(alpha: usize, beta: usize, e: usize) -> Result<Filling> {
    let layout = optimal_separation_layout(alpha, beta, e)?;
    let f = fill_layout(&layout)?;
    check_against_layout(&f, &layout)?;
    let bound = max_distance_bound(alpha as i64, beta as i64, e as i64)?;
    let sum = grid_distance_sum(&f)? as i64;
    if sum != bound {
        return Err(Error::Internal(format!(
            "distance sum {sum} differs from bound {bound} for ({alpha}, {beta}, {e})"
        )));
    }
    Ok(f)
}

/// An admissible filling with every index `1..=g`, `alpha*beta - g` of them
/// doubled and the rest single.
pub fn staircase_filling(alpha: usize, beta: usize, g: usize) -> Result<Filling> {
    let layout = staircase_layout(alpha, beta, g)?;
    let f = fill_layout(&layout)?;
    check_against_layout(&f, &layout)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn doubled_cells(f: &Filling) -> Vec<Cell> {
        let mut v: Vec<Cell> = f
            .repeats()
            .into_iter()
            .flat_map(|r| r.occurrences)
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn figure_two_left_layout() {
        let layout = optimal_separation_layout(5, 6, 7).unwrap();
        assert_eq!(layout.a, vec![3, 2, 1, 1]);
        assert_eq!(layout.b, vec![0, 1, 2, 4]);
        let f = optimal_separation_filling(5, 6, 7).unwrap();
        assert_eq!(f.g(), 23);
        assert_eq!(grid_distance_sum(&f).unwrap(), 41);
        assert_eq!(doubled_cells(&f), doubled_cells(&fixtures::fig2_left()));
    }

    #[test]
    fn figure_two_right_layout() {
        let layout = optimal_separation_layout(5, 5, 11).unwrap();
        assert_eq!(layout.eps, vec![0, 0, 1, 0]);
        assert_eq!(layout.a, vec![4, 3, 3, 1]);
        assert_eq!(layout.b, vec![1, 2, 4, 4]);
        let f = optimal_separation_filling(5, 5, 11).unwrap();
        assert_eq!(grid_distance_sum(&f).unwrap(), 40);
        assert_eq!(doubled_cells(&f), doubled_cells(&fixtures::fig2_right()));
    }

    #[test]
    fn figure_two_middle_layout() {
        // the printed middle panel has a misnumbered box, but its reserved
        // boxes are those of (5, 6, 12)
        let layout = optimal_separation_layout(5, 6, 12).unwrap();
        assert_eq!(layout.a, vec![4, 3, 3, 2]);
        assert_eq!(layout.b, vec![1, 2, 4, 5]);
        let f = optimal_separation_filling(5, 6, 12).unwrap();
        assert_eq!(
            grid_distance_sum(&f).unwrap() as i64,
            max_distance_bound(5, 6, 12).unwrap()
        );
    }

    #[test]
    fn zero_doubled_is_plain() {
        let f = optimal_separation_filling(3, 4, 0).unwrap();
        assert_eq!(f.g(), 12);
        assert!(f.repeats().is_empty());
        assert_eq!(grid_distance_sum(&f).unwrap(), 0);
    }

    #[test]
    fn out_of_range_e() {
        assert!(matches!(
            optimal_separation_filling(5, 6, 15),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            staircase_filling(4, 8, 16),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn figure_three_panels() {
        assert_eq!(staircase_filling(4, 8, 21).unwrap(), fixtures::fig3_left());
        assert_eq!(
            staircase_filling(4, 8, 17).unwrap(),
            fixtures::fig3_middle()
        );
        assert_eq!(staircase_filling(5, 7, 19).unwrap(), fixtures::fig3_right());
    }

    #[test]
    fn figure_three_layouts() {
        let l = staircase_layout(4, 8, 21).unwrap();
        assert_eq!((l.t, l.l), (1, 0));
        assert_eq!(l.a, vec![4, 4, 3]);
        assert_eq!(l.b, vec![2, 4, 5]);
        let l = staircase_layout(4, 8, 17).unwrap();
        assert_eq!((l.t, l.l, l.e), (2, 2, 15));
        assert_eq!(l.a, vec![7, 5, 3]);
        assert_eq!(l.b, vec![3, 5, 7]);
        let l = staircase_layout(5, 7, 19).unwrap();
        assert_eq!((l.t, l.l, l.e), (1, 0, 16));
        assert_eq!(l.eps, vec![1, 0, 1, 0]);
        assert_eq!(l.a, vec![6, 4, 4, 2]);
        assert_eq!(l.b, vec![3, 3, 5, 5]);
    }

    #[test]
    fn figure_four_is_the_square_staircase() {
        assert_eq!(
            staircase_filling(5, 5, 15).unwrap(),
            fixtures::fig4_square()
        );
    }

    #[test]
    fn full_g_has_no_repeats() {
        let f = staircase_filling(3, 5, 15).unwrap();
        assert!(f.repeats().is_empty());
        assert!(f.is_monotone());
    }

    #[test]
    fn optimal_sweep_meets_bound() {
        for alpha in 2..=6usize {
            for beta in alpha..=6 {
                let top = max_separable_e(alpha as i64, beta as i64) as usize;
                for e in 0..=top {
                    let f = optimal_separation_filling(alpha, beta, e)
                        .unwrap_or_else(|err| panic!("({alpha}, {beta}, {e}): {err}"));
                    assert_eq!(f.g(), alpha * beta - e);
                    assert_eq!(f.repeats().len(), e);
                }
            }
        }
    }

    #[test]
    fn staircase_sweep() {
        for alpha in 2..=5usize {
            for beta in alpha..=30 / alpha {
                for g in (alpha * beta + 3) / 2..=alpha * beta {
                    let layout = staircase_layout(alpha, beta, g)
                        .unwrap_or_else(|err| panic!("({alpha}, {beta}, {g}): {err}"));
                    assert_eq!(layout.a.iter().sum::<usize>(), alpha * beta - g);
                    let f = staircase_filling(alpha, beta, g).unwrap();
                    assert_eq!(f.distinct_indices(), g);
                }
            }
        }
    }
}
