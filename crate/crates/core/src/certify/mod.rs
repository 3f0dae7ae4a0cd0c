//! Certificates that can be re-audited without re-deriving anything: every
//! check performed while building one is kept as an [`Inequality`] record.

mod loci;
mod maxrank;
mod petri;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use loci::{
    confirm_distinct_by_enumeration, distinctness_check, inclusion_candidates, DistinctnessVerdict,
    HypothesisCase, HypothesisCheck, InclusionCandidate, InclusionFamily, InclusionStatus, Verdict,
};
pub use maxrank::{
    maxrank_m2_certificate, product_q_order_from_table, section_orders, square_corner_filling,
    EliminationStep, MaxRankCertificate, RejectedPair, TableDivergence,
};
pub use petri::{petri_certificate, PetriCertificate, PetriProduct};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }
}

/// One checked relation `lhs relation rhs`, labelled with what it measures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub label: String,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
}

impl Inequality {
    pub fn new(label: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Inequality {
            label: label.into(),
            lhs,
            relation,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.relation.holds(self.lhs, self.rhs)
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {}",
            self.label,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )
    }
}

/// Collects records and fails on the first one that does not hold.
#[derive(Debug, Default)]
pub(crate) struct Ledger {
    records: Vec<Inequality>,
}

impl Ledger {
    pub(crate) fn check(
        &mut self,
        label: impl Into<String>,
        lhs: i64,
        relation: Relation,
        rhs: i64,
    ) -> crate::Result<()> {
        let record = Inequality::new(label, lhs, relation, rhs);
        if !record.holds() {
            return Err(crate::Error::Certificate(format!("failed {record}")));
        }
        self.records.push(record);
        Ok(())
    }

    pub(crate) fn into_records(self) -> Vec<Inequality> {
        self.records
    }
}

/// Re-checks every stored record.
pub fn audit(records: &[Inequality]) -> Result<(), Inequality> {
    match records.iter().find(|r| !r.holds()) {
        Some(bad) => Err(bad.clone()),
        None => Ok(()),
    }
}
