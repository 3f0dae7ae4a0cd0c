//! Versioned JSON documents.
//!
//! Every top-level document carries `"format_version": 1` next to the
//! object's own fields. Nested objects (a filling inside a certificate, a
//! chain inside a series table) do not repeat it.
//!
//! ```
//! use bnloci::{fixtures, json, Filling};
//! let text = json::to_document(&fixtures::fig1_left()).unwrap();
//! assert!(text.contains("\"format_version\": 1"));
//! let back: Filling = json::from_document(&text).unwrap();
//! assert_eq!(back, fixtures::fig1_left());
//! ```

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{BnParams, Triple};
use crate::series::{BundleKind, LimitSeriesTable, LineBundleDescriptor};
use crate::tableau::{ChainSpec, Filling, WeightedEntry, WeightedFilling};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Serialize)]
struct Envelope<'a, T> {
    format_version: u64,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty-printed document with a trailing newline.
pub fn to_document<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(&Envelope {
        format_version: FORMAT_VERSION,
        body: value,
    })?;
    text.push('\n');
    Ok(text)
}

/// Parses a document, insisting on the supported `format_version`.
pub fn from_document<T: DeserializeOwned>(text: &str) -> Result<T> {
    let mut value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| Error::Malformed("document is not a JSON object".into()))?;
    let version = obj
        .remove("format_version")
        .ok_or_else(|| Error::Malformed("missing format_version".into()))?;
    let found = version
        .as_u64()
        .ok_or_else(|| Error::Malformed(format!("format_version {version} is not an integer")))?;
    if found != FORMAT_VERSION {
        return Err(Error::FormatVersion {
            found,
            expected: FORMAT_VERSION,
        });
    }
    Ok(serde_json::from_value(value)?)
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct CellDoc {
    row: usize,
    col: usize,
    index: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct FillingDoc {
    alpha: usize,
    beta: usize,
    g: usize,
    cells: Vec<CellDoc>,
}

impl From<Filling> for FillingDoc {
    fn from(f: Filling) -> Self {
        FillingDoc {
            alpha: f.alpha(),
            beta: f.beta(),
            g: f.g(),
            cells: f
                .iter()
                .map(|((row, col), index)| CellDoc { row, col, index })
                .collect(),
        }
    }
}

impl TryFrom<FillingDoc> for Filling {
    type Error = Error;

    fn try_from(doc: FillingDoc) -> Result<Self> {
        let (alpha, beta) = (doc.alpha, doc.beta);
        let mut values = vec![None; alpha * beta];
        for c in &doc.cells {
            if !(1..=beta).contains(&c.row) || !(1..=alpha).contains(&c.col) {
                return Err(Error::Malformed(format!(
                    "cell ({}, {}) outside the {alpha}x{beta} rectangle",
                    c.row, c.col
                )));
            }
            let slot = &mut values[(c.row - 1) * alpha + (c.col - 1)];
            if slot.replace(c.index).is_some() {
                return Err(Error::Malformed(format!(
                    "cell ({}, {}) given twice",
                    c.row, c.col
                )));
            }
        }
        let cells = values
            .into_iter()
            .enumerate()
            .map(|(n, v)| {
                v.ok_or_else(|| {
                    Error::Malformed(format!(
                        "cell ({}, {}) missing",
                        n / alpha + 1,
                        n % alpha + 1
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::new(alpha, beta, doc.g, cells)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct WeightedCellDoc {
    row: i64,
    col: usize,
    index: usize,
    weight: i8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct WeightedFillingDoc {
    alpha: usize,
    beta: usize,
    g: usize,
    cells: Vec<WeightedCellDoc>,
}

impl From<WeightedFilling> for WeightedFillingDoc {
    fn from(w: WeightedFilling) -> Self {
        let cells = w
            .entries()
            .iter()
            .flat_map(|(&(row, col), list)| {
                list.iter().map(move |e| WeightedCellDoc {
                    row,
                    col,
                    index: e.index,
                    weight: e.weight,
                })
            })
            .collect();
        WeightedFillingDoc {
            alpha: w.alpha(),
            beta: w.beta(),
            g: w.g(),
            cells,
        }
    }
}

impl TryFrom<WeightedFillingDoc> for WeightedFilling {
    type Error = Error;

    fn try_from(doc: WeightedFillingDoc) -> Result<Self> {
        let mut w = WeightedFilling::new(doc.alpha, doc.beta, doc.g)?;
        for c in doc.cells {
            w.push(
                c.row,
                c.col,
                WeightedEntry {
                    index: c.index,
                    weight: c.weight,
                },
            )?;
        }
        Ok(w)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct SpecialDoc {
    component: usize,
    order: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ChainDoc {
    g: usize,
    #[serde(default)]
    special: Vec<SpecialDoc>,
}

impl From<ChainSpec> for ChainDoc {
    fn from(c: ChainSpec) -> Self {
        ChainDoc {
            g: c.g(),
            special: c
                .special()
                .iter()
                .map(|(&component, &order)| SpecialDoc { component, order })
                .collect(),
        }
    }
}

impl TryFrom<ChainDoc> for ChainSpec {
    type Error = Error;

    fn try_from(doc: ChainDoc) -> Result<Self> {
        ChainSpec::new(doc.g, doc.special.iter().map(|s| (s.component, s.order)))
    }
}

impl From<BnParams> for Triple {
    fn from(p: BnParams) -> Self {
        p.triple()
    }
}

impl TryFrom<Triple> for BnParams {
    type Error = Error;

    fn try_from(t: Triple) -> Result<Self> {
        BnParams::from_triple(t)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct SeriesDoc {
    params: Triple,
    chain: ChainSpec,
    u: Vec<Vec<i64>>,
    v: Vec<Vec<i64>>,
    bundles: Vec<BundleKind>,
}

impl From<LimitSeriesTable> for SeriesDoc {
    fn from(t: LimitSeriesTable) -> Self {
        SeriesDoc {
            params: t.params.triple(),
            chain: t.chain,
            u: t.u,
            v: t.v,
            bundles: t.bundles.iter().map(|b| b.kind).collect(),
        }
    }
}

impl TryFrom<SeriesDoc> for LimitSeriesTable {
    type Error = Error;

    fn try_from(doc: SeriesDoc) -> Result<Self> {
        let params = BnParams::from_triple(doc.params)?;
        if params.dualized() {
            return Err(Error::Malformed(format!(
                "series parameters {} must satisfy r + 1 <= g - d + r",
                doc.params
            )));
        }
        let d = params.d();
        let bundles = doc
            .bundles
            .into_iter()
            .map(|kind| match kind {
                BundleKind::Generic => Ok(LineBundleDescriptor::generic(d)),
                BundleKind::Special { a, b } => LineBundleDescriptor::special(a, b, d),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LimitSeriesTable {
            params,
            chain: doc.chain,
            u: doc.u,
            v: doc.v,
            bundles,
        })
    }
}
