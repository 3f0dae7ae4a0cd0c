use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::BnParams;
use crate::series::vanishing_orders;
use crate::tableau::{transpose, validate_positive, ChainSpec, Filling};

use super::{Inequality, Ledger, Relation};

/// The product `s_i t_j`, concentrated on component `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetriProduct {
    /// Column of `f` (section `s_i` of the series).
    pub i: usize,
    /// Row of `f` (section `t_j` of the dual series).
    pub j: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetriCertificate {
    pub params: crate::params::Triple,
    pub filling: Filling,
    pub products: Vec<PetriProduct>,
    pub inequalities: Vec<Inequality>,
}

/// Picks one box per distinct index (the upper one when an index is
/// doubled) and checks that the corresponding products concentrate on
/// pairwise different components.
pub fn petri_certificate(f: &Filling, p: &BnParams, chain: &ChainSpec) -> Result<PetriCertificate> {
    if f.alpha() as i64 != p.alpha() || f.beta() as i64 != p.beta() || f.g() as i64 != p.g() {
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
    let occurrences = f.occurrences();
    if occurrences.len() != f.g() {
        return Err(Error::Certificate(format!(
            "only {} distinct indices appear, {} components need one each",
            occurrences.len(),
            f.g()
        )));
    }

    let products: Vec<PetriProduct> = occurrences
        .iter()
        .map(|(&k, cells)| {
            let (row, col) = cells[0];
            PetriProduct { i: col, j: row, k }
        })
        .collect();

    let (g, r, d) = (p.g(), p.r(), p.d());
    let (u, v) = vanishing_orders(f, r, d);
    let dual_d = 2 * g - 2 - d;
    let dual_r = g - d + r - 1;
    let (du, dv) = vanishing_orders(&transpose(f), dual_r, dual_d);

    let mut ledger = Ledger::default();
    ledger.check("products", products.len() as i64, Relation::Eq, g)?;
    for pair in products.windows(2) {
        ledger.check(
            format!("components increase at k = {}", pair[1].k),
            pair[0].k as i64,
            Relation::Lt,
            pair[1].k as i64,
        )?;
    }
    for prod in &products {
        let PetriProduct { i, j, k } = *prod;
        ledger.check(
            format!("index at row {j}, column {i}"),
            f.get(j, i) as i64,
            Relation::Eq,
            k as i64,
        )?;
        ledger.check(
            format!("s_{i} full sum on component {k}"),
            u[k - 1][i - 1] + v[k - 1][i - 1],
            Relation::Eq,
            d,
        )?;
        ledger.check(
            format!("t_{j} full sum on component {k}"),
            du[k - 1][j - 1] + dv[k - 1][j - 1],
            Relation::Eq,
            dual_d,
        )?;
        ledger.check(
            format!("s_{i} t_{j} vanishing on component {k}"),
            u[k - 1][i - 1] + du[k - 1][j - 1] + v[k - 1][i - 1] + dv[k - 1][j - 1],
            Relation::Eq,
            2 * g - 2,
        )?;
    }

    Ok(PetriCertificate {
        params: p.triple(),
        filling: f.clone(),
        products,
        inequalities: ledger.into_records(),
    })
}
