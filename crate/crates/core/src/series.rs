//! Fillings as refined limit linear series on a chain of elliptic curves.
//!
//! Section slots are 0-indexed: slot `j` of a series corresponds to column
//! `j + 1` of a [`Filling`]. Component `i` of the chain runs over `1..=g`.
//! Tables store rows 0-indexed (`u[i - 1][j]`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::BnParams;
use crate::tableau::{validate_positive, ChainSpec, Filling, ValidationReport, Violation};

/// Either a general line bundle or one of the form `O(aP + bQ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BundleKind {
    Generic,
    Special { a: i64, b: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineBundleDescriptor {
    pub kind: BundleKind,
    pub degree: i64,
}

impl LineBundleDescriptor {
    pub fn generic(degree: i64) -> Self {
        LineBundleDescriptor {
            kind: BundleKind::Generic,
            degree,
        }
    }

    pub fn special(a: i64, b: i64, degree: i64) -> Result<Self> {
        if a < 0 || b < 0 || a + b != degree {
            return Err(Error::Malformed(format!(
                "O({a}P + {b}Q) is not a degree-{degree} bundle with nonnegative coefficients"
            )));
        }
        Ok(LineBundleDescriptor {
            kind: BundleKind::Special { a, b },
            degree,
        })
    }

    /// Whether this bundle is `O(aP + bQ)`, using `torsion * (P - Q) = 0`
    /// when the component carries torsion.
    pub fn is_equivalent_to(&self, a: i64, b: i64, torsion: Option<usize>) -> bool {
        match self.kind {
            BundleKind::Generic => false,
            BundleKind::Special { a: a0, b: b0 } => {
                if a0 + b0 != a + b {
                    return false;
                }
                match torsion {
                    None => a0 == a,
                    Some(l) => (a - a0).rem_euclid(l as i64) == 0,
                }
            }
        }
    }
}

/// A refined limit `g^r_d` on a decorated chain: vanishing orders `u` at
/// `P_i` and `v` at `Q_i` for every component and section slot, and the
/// line bundle on each component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "crate::json::SeriesDoc", try_from = "crate::json::SeriesDoc")]
pub struct LimitSeriesTable {
    pub params: BnParams,
    pub chain: ChainSpec,
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub bundles: Vec<LineBundleDescriptor>,
}

fn shape(detail: String) -> Violation {
    Violation::SequenceShape { detail }
}

impl LimitSeriesTable {
    fn dims(&self) -> (usize, usize) {
        (self.params.g() as usize, self.params.r() as usize + 1)
    }

    /// Checks boundary vanishing, strictness, refinedness, that every sum
    /// `u + v` is `d - 1` or `d`, and the per-component constraints.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let (g, slots) = self.dims();
        let (r, d) = (self.params.r(), self.params.d());
        if self.u.len() != g
            || self.v.len() != g
            || self.bundles.len() != g
            || self.u.iter().chain(&self.v).any(|row| row.len() != slots)
        {
            report.push(shape(format!(
                "expected {g} components with {slots} slots each and {g} bundles"
            )));
            return report;
        }
        if self.chain.g() != g {
            report.push(Violation::ChainMismatch {
                filling_g: g,
                chain_g: self.chain.g(),
            });
        }
        for j in 0..slots {
            if self.u[0][j] != j as i64 {
                report.push(shape(format!(
                    "u at P_1, slot {j}, is {} instead of {j}",
                    self.u[0][j]
                )));
            }
            if self.v[g - 1][j] != r - j as i64 {
                report.push(shape(format!(
                    "v at Q_g, slot {j}, is {} instead of {}",
                    self.v[g - 1][j],
                    r - j as i64
                )));
            }
        }
        for i in 0..g {
            for j in 0..slots {
                let sum = self.u[i][j] + self.v[i][j];
                if sum < d - 1 {
                    report.push(shape(format!(
                        "component {}, slot {j}: u + v = {sum} is below d - 1",
                        i + 1
                    )));
                }
                if i + 1 < g && self.u[i + 1][j] + self.v[i][j] != d {
                    report.push(shape(format!(
                        "not refined between components {} and {}, slot {j}",
                        i + 1,
                        i + 2
                    )));
                }
            }
            let comp = elliptic_component_check(
                &self.u[i],
                &self.v[i],
                d,
                &self.bundles[i],
                self.chain.torsion(i + 1),
            );
            for violation in comp.violations {
                report.push(match violation {
                    Violation::BundleMismatch { slot, u, v, detail } => Violation::BundleMismatch {
                        slot,
                        u,
                        v,
                        detail: format!("component {}: {detail}", i + 1),
                    },
                    Violation::SequenceShape { detail } => {
                        shape(format!("component {}: {detail}", i + 1))
                    }
                    other => other,
                });
            }
        }
        report
    }
}

/// The constraints on a single elliptic component: `u_k + v_k <= d`; where
/// equality holds the bundle is `O(u_k P + v_k Q)`; and two equality slots
/// need torsion dividing the gap between their `u` values.
pub fn elliptic_component_check(
    u_row: &[i64],
    v_row: &[i64],
    d: i64,
    bundle: &LineBundleDescriptor,
    torsion: Option<usize>,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    if u_row.len() != v_row.len() {
        report.push(shape(format!(
            "{} vanishing orders at P but {} at Q",
            u_row.len(),
            v_row.len()
        )));
        return report;
    }
    if u_row.windows(2).any(|w| w[0] >= w[1]) {
        report.push(shape(format!("u = {u_row:?} is not strictly increasing")));
    }
    if v_row.windows(2).any(|w| w[0] <= w[1]) {
        report.push(shape(format!("v = {v_row:?} is not strictly decreasing")));
    }
    if bundle.degree != d {
        report.push(Violation::BundleMismatch {
            slot: 0,
            u: u_row.first().copied().unwrap_or(0),
            v: v_row.first().copied().unwrap_or(0),
            detail: format!("bundle degree {} differs from d = {d}", bundle.degree),
        });
    }

    let mut previous: Option<(usize, i64)> = None;
    for (slot, (&u, &v)) in u_row.iter().zip(v_row).enumerate() {
        if u + v > d {
            report.push(Violation::SumExceedsDegree { slot, u, v, d });
            continue;
        }
        if u + v < d {
            continue;
        }
        if !bundle.is_equivalent_to(u, v, torsion) {
            let detail = match bundle.kind {
                BundleKind::Generic => "generic bundle at a slot with u + v = d".to_string(),
                BundleKind::Special { a, b } => format!("O({a}P + {b}Q) is not O({u}P + {v}Q)"),
            };
            report.push(Violation::BundleMismatch { slot, u, v, detail });
        }
        if let Some((first, u_first)) = previous {
            let gap = u - u_first;
            let ok = torsion.is_some_and(|l| gap % l as i64 == 0);
            if !ok {
                report.push(Violation::TorsionRequired {
                    slots: (first, slot),
                    gap,
                    torsion,
                });
            }
        }
        previous = Some((slot, u));
    }
    report
}

/// For each index, the 0-based slots (columns minus one) containing it.
fn columns_by_index(f: &Filling) -> Vec<Vec<usize>> {
    let mut columns_of = vec![Vec::new(); f.g() + 1];
    for ((_, col), index) in f.iter() {
        if index <= f.g() {
            columns_of[index].push(col - 1);
        }
    }
    for cols in &mut columns_of {
        cols.sort_unstable();
    }
    columns_of
}

/// Vanishing orders `(u, v)` of the refined series attached to `f`, read as
/// a `g^r_d` with `r + 1 = f.alpha()`. No orientation is imposed, so this
/// also serves the transposed filling of the Serre dual series.
pub(crate) fn vanishing_orders(f: &Filling, r: i64, d: i64) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let (g, slots) = (f.g(), f.alpha());
    debug_assert_eq!(slots as i64, r + 1);
    let columns_of = columns_by_index(f);
    let mut below = vec![0i64; slots];
    let mut u = Vec::with_capacity(g);
    for (i, cols) in columns_of.iter().enumerate().skip(1).take(g) {
        u.push(
            below
                .iter()
                .enumerate()
                .map(|(j, b)| j as i64 + i as i64 - 1 - b)
                .collect::<Vec<_>>(),
        );
        for &j in cols {
            below[j] += 1;
        }
    }
    let v = (0..g)
        .map(|i| {
            (0..slots)
                .map(|j| {
                    if i + 1 < g {
                        d - u[i + 1][j]
                    } else {
                        r - j as i64
                    }
                })
                .collect()
        })
        .collect();
    (u, v)
}

/// The refined limit series attached to a filling.
///
/// `u[i][j] = j + i - 1 - #{a < i in column j + 1}`, `v[i][j] = d - u[i+1][j]`
/// below the last component and `v[g][j] = r - j` at the end. Component `i`
/// carries `O(u P + v Q)` read off the first column containing `i`, and a
/// general bundle when `i` is absent.
pub fn filling_to_series(f: &Filling, p: &BnParams, chain: &ChainSpec) -> Result<LimitSeriesTable> {
    let (g, r, d) = (p.g(), p.r(), p.d());
    if f.alpha() as i64 != p.alpha() || f.beta() as i64 != p.beta() || f.g() as i64 != g {
        return Err(Error::ShapeMismatch(format!(
            "filling is {}x{} with g = {}, parameters {} need {}x{}",
            f.alpha(),
            f.beta(),
            f.g(),
            p.triple(),
            p.alpha(),
            p.beta()
        )));
    }
    let report = validate_positive(f, chain);
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "filling is not admissible for this chain: {:?}",
            report.violations
        )));
    }

    let g = g as usize;
    let (u, v) = vanishing_orders(f, r, d);
    let columns_of = columns_by_index(f);

    let mut bundles = Vec::with_capacity(g);
    for i in 1..=g {
        let cols = &columns_of[i];
        let Some(&first) = cols.first() else {
            bundles.push(LineBundleDescriptor::generic(d));
            continue;
        };
        let (a, b) = (u[i - 1][first], v[i - 1][first]);
        let bundle = LineBundleDescriptor::special(a, b, d)
            .map_err(|e| Error::Internal(format!("component {i}: {e}")))?;
        for &j in &cols[1..] {
            if !bundle.is_equivalent_to(u[i - 1][j], v[i - 1][j], chain.torsion(i)) {
                return Err(Error::Internal(format!(
                    "component {i}: slots {first} and {j} give inequivalent bundles"
                )));
            }
        }
        bundles.push(bundle);
    }

    let table = LimitSeriesTable {
        params: *p,
        chain: chain.clone(),
        u,
        v,
        bundles,
    };
    let report = table.validate();
    if !report.is_valid() {
        return Err(Error::Internal(format!(
            "series of an admissible filling fails its invariants: {:?}",
            report.violations
        )));
    }
    Ok(table)
}

/// Rebuilds the filling: for `i = 1..=g`, index `i` goes into the first
/// empty box of column `j + 1` for every slot `j` with `u + v = d`.
pub fn series_to_filling(t: &LimitSeriesTable) -> Result<Filling> {
    let (g, slots) = t.dims();
    let beta = t.params.beta() as usize;
    let d = t.params.d();
    if t.u.len() != g || t.v.len() != g || t.u.iter().chain(&t.v).any(|row| row.len() != slots) {
        return Err(Error::InconsistentTable(format!(
            "expected {g} components with {slots} slots each"
        )));
    }
    let mut columns: Vec<Vec<usize>> = vec![Vec::with_capacity(beta); slots];
    for i in 0..g {
        for (j, column) in columns.iter_mut().enumerate() {
            if t.u[i][j] + t.v[i][j] == d {
                if column.len() == beta {
                    return Err(Error::InconsistentTable(format!(
                        "column {} overflows at index {}",
                        j + 1,
                        i + 1
                    )));
                }
                column.push(i + 1);
            }
        }
    }
    if let Some((j, col)) = columns.iter().enumerate().find(|(_, c)| c.len() != beta) {
        return Err(Error::InconsistentTable(format!(
            "column {} received {} of {beta} indices",
            j + 1,
            col.len()
        )));
    }
    let cells = (0..beta)
        .flat_map(|row| columns.iter().map(move |c| c[row]))
        .collect();
    Filling::new(slots, beta, g, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn fig1() -> (Filling, BnParams, ChainSpec) {
        (
            fixtures::fig1_left(),
            BnParams::new(10, 1, 7).unwrap(),
            ChainSpec::new(10, [(5, 3)]).unwrap(),
        )
    }

    fn special(a: i64, b: i64) -> BundleKind {
        BundleKind::Special { a, b }
    }

    #[test]
    fn figure_one_bundles() {
        let (f, p, chain) = fig1();
        let t = filling_to_series(&f, &p, &chain).unwrap();
        let kinds: Vec<BundleKind> = t.bundles.iter().map(|b| b.kind).collect();
        assert_eq!(kinds[2], special(2, 5));
        assert_eq!(kinds[3], special(2, 5));
        assert_eq!(kinds[4], special(2, 5));
        assert!(t.bundles[4].is_equivalent_to(5, 2, Some(3)));
        assert_eq!(kinds[5], special(2, 5));
        for i in [7, 8, 9] {
            assert_eq!(kinds[i], special(7, 0));
        }
        for i in [0, 1, 6] {
            assert_eq!(kinds[i], BundleKind::Generic);
        }
        // sections at component 5 vanish to orders (2, 5) and (5, 2)
        assert_eq!(t.u[4], vec![2, 5]);
        assert_eq!(t.v[4], vec![5, 2]);
        assert_eq!(t.u[4][1] - t.u[4][0], 3);
    }

    #[test]
    fn figure_one_round_trip() {
        let (f, p, chain) = fig1();
        let t = filling_to_series(&f, &p, &chain).unwrap();
        assert_eq!(series_to_filling(&t).unwrap(), f);
    }

    #[test]
    fn plain_filling_sums() {
        let f = Filling::from_rows(6, &[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        let p = BnParams::from_shape(2, 3, 6).unwrap();
        let t = filling_to_series(&f, &p, &ChainSpec::generic(6)).unwrap();
        for i in 0..6 {
            for j in 0..2 {
                let present = f.iter().any(|((_, c), x)| x == i + 1 && c == j + 1);
                let expected = p.d() - 1 + i64::from(present);
                assert_eq!(t.u[i][j] + t.v[i][j], expected);
            }
        }
    }

    #[test]
    fn shape_mismatch() {
        let (f, _, chain) = fig1();
        let p = BnParams::new(10, 2, 9).unwrap();
        assert!(matches!(
            filling_to_series(&f, &p, &chain),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn invalid_filling_is_rejected() {
        let (f, p, _) = fig1();
        assert!(matches!(
            filling_to_series(&f, &p, &ChainSpec::generic(10)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn all_sums_below_degree_cannot_fill() {
        let (f, p, chain) = fig1();
        let mut t = filling_to_series(&f, &p, &chain).unwrap();
        for i in 0..10 {
            for j in 0..2 {
                t.v[i][j] = p.d() - 1 - t.u[i][j];
            }
        }
        assert!(matches!(
            series_to_filling(&t),
            Err(Error::InconsistentTable(_))
        ));
        assert!(!t.validate().is_valid());
    }

    #[test]
    fn component_checks() {
        let ok = elliptic_component_check(
            &[2, 5],
            &[5, 2],
            7,
            &LineBundleDescriptor::special(2, 5, 7).unwrap(),
            Some(3),
        );
        assert!(ok.is_valid(), "{:?}", ok.violations);
        let ok =
            elliptic_component_check(&[0, 1], &[6, 5], 7, &LineBundleDescriptor::generic(7), None);
        assert!(ok.is_valid());
        let bad =
            elliptic_component_check(&[2, 5], &[5, 2], 7, &LineBundleDescriptor::generic(7), None);
        assert!(bad
            .violations
            .iter()
            .any(|v| matches!(v, Violation::BundleMismatch { slot: 0, .. })));
        assert!(bad.violations.iter().any(|v| matches!(
            v,
            Violation::TorsionRequired {
                slots: (0, 1),
                gap: 3,
                torsion: None
            }
        )));
        let wrong_order = elliptic_component_check(
            &[2, 5],
            &[5, 2],
            7,
            &LineBundleDescriptor::special(2, 5, 7).unwrap(),
            Some(2),
        );
        assert!(!wrong_order.is_valid());
        let over = elliptic_component_check(&[3], &[5], 7, &LineBundleDescriptor::generic(7), None);
        assert_eq!(
            over.violations,
            vec![Violation::SumExceedsDegree {
                slot: 0,
                u: 3,
                v: 5,
                d: 7
            }]
        );
    }

    #[test]
    fn special_descriptor_invariants() {
        assert!(LineBundleDescriptor::special(3, 4, 7).is_ok());
        assert!(LineBundleDescriptor::special(-1, 8, 7).is_err());
        assert!(LineBundleDescriptor::special(3, 3, 7).is_err());
    }

    #[test]
    fn staircase_round_trip() {
        let f = fixtures::fig3_right();
        let p = BnParams::from_shape(5, 7, 19).unwrap();
        let chain = crate::tableau::minimal_torsion_chain(&f).unwrap();
        let t = filling_to_series(&f, &p, &chain).unwrap();
        assert_eq!(series_to_filling(&t).unwrap(), f);
    }
}
