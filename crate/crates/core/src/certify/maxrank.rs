use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::vanishing_orders;
use crate::tableau::{minimal_torsion_chain, validate_positive, Filling};

use super::{Inequality, Ledger, Relation};

/// A product `s_i s_j` still in play at step `k`, with its vanishing orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedPair {
    pub pair: (usize, usize),
    pub p_order: i64,
    pub q_order: i64,
}

/// Step `k`: the coefficient of `s_t s_{a+1}` is forced to vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationStep {
    pub k: usize,
    pub a: usize,
    pub t: usize,
    pub eliminated: (usize, usize),
    pub witness_p: i64,
    pub witness_q: i64,
    pub p_threshold: i64,
    pub q_threshold: i64,
    pub rejected: Vec<RejectedPair>,
}

/// A product whose order at `Q_k` from the case table differs from the sum
/// of the per-section orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDivergence {
    pub k: usize,
    pub pair: (usize, usize),
    pub direct: i64,
    pub table: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxRankCertificate {
    pub r: usize,
    pub g: usize,
    pub d: usize,
    pub filling: Filling,
    /// Degree of `L^2` placed on each component.
    pub degrees: Vec<i64>,
    pub steps: Vec<EliminationStep>,
    pub divergences: Vec<TableDivergence>,
    /// How the cases `e < r(r+1)/2` and `r + 1 < g - d + r` are handled.
    pub extensions: String,
    pub inequalities: Vec<Inequality>,
}

/// `(a, t)` with `k = a(a+1)/2 + t`, `1 <= t <= a + 1`.
fn corner_position(k: usize) -> (usize, usize) {
    let mut a = 0;
    while (a + 1) * (a + 2) / 2 < k {
        a += 1;
    }
    (a, k - a * (a + 1) / 2)
}

/// The `(r+1) x (r+1)` square where index `k = a(a+1)/2 + t` sits at row
/// `t`, column `a + 1` and at row `a + 1`, column `t`.
pub fn square_corner_filling(r: usize) -> Result<Filling> {
    if r == 0 {
        return Err(Error::OutOfRange("maximal rank needs r >= 1".into()));
    }
    let side = r + 1;
    let g = side * (side + 1) / 2;
    let mut cells = vec![0; side * side];
    for k in 1..=g {
        let (a, t) = corner_position(k);
        cells[(t - 1) * side + a] = k;
        cells[a * side + (t - 1)] = k;
    }
    Filling::new(side, side, g, cells)
}

/// Orders of vanishing of `s_i` (1-based) at `P_k` and `Q_k`, from the
/// closed forms for the corner filling.
pub fn section_orders(k: usize, i: usize, d: usize) -> (i64, i64) {
    let (a, t) = corner_position(k);
    let (k, i, d, a, t) = (k as i64, i as i64, d as i64, a as i64, t as i64);
    let at_p = if i < t {
        a + 1
    } else if i <= a {
        a
    } else if i == a + 1 {
        t - 1
    } else {
        0
    };
    let at_q = if i <= t {
        a + 1
    } else if i <= a {
        a
    } else if i == a + 1 {
        t
    } else {
        0
    };
    (i - 2 + k - at_p, d - i + 1 - k + at_q)
}

/// The case table for the order at `Q_k` of a product `s_i s_j`, `i <= j`,
/// among those not yet eliminated. `None` for `(t, a+1)` and for pairs the
/// table does not cover.
pub fn product_q_order_from_table(k: usize, i: usize, j: usize, d: usize) -> Option<i64> {
    let (a, t) = corner_position(k);
    let offset = if i <= t && j > a + 1 {
        a + 1
    } else if t < i && i <= a && j == a + 1 {
        a + t
    } else if t < i && i <= a && j > a + 1 {
        a
    } else if i == a + 1 && j == a + 1 && t < a + 1 {
        2 * t
    } else if i == a + 1 && j > a + 1 {
        t
    } else if i > a + 1 && j > a + 1 {
        0
    } else {
        return None;
    };
    Some(2 * d as i64 - 2 * k as i64 + 2 - i as i64 - j as i64 + offset as i64)
}

const EXTENSIONS: &str = "only the square case g = (r+1)(r+2)/2, d = g - 1 is computed; \
smaller codimension appends general components to this chain, and taller rectangles keep \
the doubled indices in the top square, both of which only specialize the certified curve";

/// Certifies injectivity of `S^2 H^0(L) -> H^0(L^2)` on the corner-filling
/// chain for `g^r_d` with `g = (r+1)(r+2)/2`, `d = g - 1`.
///
/// The degree of `L^2` is spread as `1, 2, ..., 2, 1` along the chain. At
/// component `k` exactly one product not yet known to have zero coefficient
/// meets both the `P_k` and the `Q_k` thresholds, which eliminates it.
pub fn maxrank_m2_certificate(r: usize) -> Result<MaxRankCertificate> {
    if r == 0 || r > 500 {
        return Err(Error::OutOfRange(format!("r = {r} outside 1..=500")));
    }
    let side = r + 1;
    let g = side * (side + 1) / 2;
    let d = g - 1;
    let (gi, di) = (g as i64, d as i64);
    let f = square_corner_filling(r)?;
    let mut ledger = Ledger::default();

    let chain = minimal_torsion_chain(&f)?;
    let report = validate_positive(&f, &chain);
    if !report.is_valid() {
        return Err(Error::Certificate(format!(
            "corner filling invalid: {:?}",
            report.violations
        )));
    }
    ledger.check(
        "rho",
        gi - (side * side) as i64,
        Relation::Eq,
        -((r * side / 2) as i64),
    )?;

    // the closed forms must agree with the series of the filling
    let (u, v) = vanishing_orders(&f, r as i64, di);
    for k in 1..=g {
        for i in 1..=side {
            let (op, oq) = section_orders(k, i, d);
            if (op, oq) != (u[k - 1][i - 1], v[k - 1][i - 1]) {
                return Err(Error::Certificate(format!(
                    "k = {k}, s_{i}: closed forms give ({op}, {oq}), the filling gives ({}, {})",
                    u[k - 1][i - 1],
                    v[k - 1][i - 1]
                )));
            }
        }
    }

    let mut degrees = vec![2i64; g];
    degrees[0] = 1;
    degrees[g - 1] = 2 * di - 1 - 2 * (gi - 2);
    ledger.check(
        "degree on the last component",
        degrees[g - 1],
        Relation::Eq,
        1,
    )?;
    ledger.check("total degree", degrees.iter().sum(), Relation::Eq, 2 * di)?;

    let all_pairs: Vec<(usize, usize)> = (1..=side)
        .flat_map(|j| (1..=j).map(move |i| (i, j)))
        .collect();
    let mut eliminated: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut steps = Vec::with_capacity(g);
    let mut divergences = Vec::new();

    for k in 1..=g {
        let (a, t) = corner_position(k);
        let ki = k as i64;
        let p_threshold: i64 = degrees[..k - 1].iter().sum();
        let q_threshold: i64 = degrees[k..].iter().sum();
        if k > 1 {
            ledger.check(
                format!("P threshold at k = {k}"),
                p_threshold,
                Relation::Eq,
                2 * ki - 3,
            )?;
        }
        if k < g {
            ledger.check(
                format!("Q threshold at k = {k}"),
                q_threshold,
                Relation::Eq,
                2 * di - 2 * ki + 1,
            )?;
        }

        let assumed: BTreeSet<(usize, usize)> = all_pairs
            .iter()
            .copied()
            .filter(|&(i, j)| j <= a || (j == a + 1 && i < t))
            .collect();
        if assumed != eliminated {
            return Err(Error::Certificate(format!(
                "k = {k}: pairs eliminated so far differ from the induction hypothesis"
            )));
        }

        let orders = |(i, j): (usize, usize)| {
            let (pi, qi) = section_orders(k, i, d);
            let (pj, qj) = section_orders(k, j, d);
            (pi + pj, qi + qj)
        };
        let survivor = (t, a + 1);
        let (witness_p, witness_q) = orders(survivor);
        ledger.check(
            format!("s_{t} s_{} at P_{k}", a + 1),
            witness_p,
            Relation::Eq,
            2 * ki - 2,
        )?;
        ledger.check(
            format!("s_{t} s_{} at Q_{k}", a + 1),
            witness_q,
            Relation::Eq,
            2 * di - 2 * ki + 2,
        )?;
        ledger.check(
            format!("s_{t} s_{} meets P_{k}", a + 1),
            witness_p,
            Relation::Ge,
            p_threshold,
        )?;
        ledger.check(
            format!("s_{t} s_{} meets Q_{k}", a + 1),
            witness_q,
            Relation::Ge,
            q_threshold,
        )?;

        let both = all_pairs
            .iter()
            .filter(|&&pair| {
                let (op, oq) = orders(pair);
                op >= p_threshold && oq >= q_threshold
            })
            .count();
        ledger.check(
            format!("products meeting both thresholds at k = {k}"),
            both as i64,
            Relation::Eq,
            1,
        )?;

        let mut rejected = Vec::new();
        for &pair in &all_pairs {
            if pair == survivor || eliminated.contains(&pair) {
                continue;
            }
            let (p_order, q_order) = orders(pair);
            match product_q_order_from_table(k, pair.0, pair.1, d) {
                Some(table) if table != q_order => divergences.push(TableDivergence {
                    k,
                    pair,
                    direct: q_order,
                    table,
                }),
                Some(_) => {}
                None => {
                    return Err(Error::Certificate(format!(
                        "k = {k}: pair {pair:?} is not covered by the product table"
                    )))
                }
            }
            ledger.check(
                format!("s_{} s_{} at Q_{k} below threshold", pair.0, pair.1),
                q_order,
                Relation::Lt,
                q_threshold,
            )?;
            rejected.push(RejectedPair {
                pair,
                p_order,
                q_order,
            });
        }

        if !eliminated.insert(survivor) {
            return Err(Error::Certificate(format!(
                "k = {k}: pair {survivor:?} eliminated twice"
            )));
        }
        steps.push(EliminationStep {
            k,
            a,
            t,
            eliminated: survivor,
            witness_p,
            witness_q,
            p_threshold,
            q_threshold,
            rejected,
        });
    }
    ledger.check(
        "pairs eliminated",
        eliminated.len() as i64,
        Relation::Eq,
        all_pairs.len() as i64,
    )?;

    Ok(MaxRankCertificate {
        r,
        g,
        d,
        filling: f,
        degrees,
        steps,
        divergences,
        extensions: EXTENSIONS.to_string(),
        inequalities: ledger.into_records(),
    })
}
