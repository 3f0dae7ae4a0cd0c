use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A chain of `g` elliptic components. Components listed in `special` have
/// `P - Q` torsion of the given order; all others are generic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "crate::json::ChainDoc", try_from = "crate::json::ChainDoc")]
pub struct ChainSpec {
    g: usize,
    special: BTreeMap<usize, usize>,
}

impl ChainSpec {
    pub fn new(g: usize, special: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (component, order) in special {
            if component == 0 || component > g {
                return Err(Error::Malformed(format!(
                    "special component {component} outside 1..={g}"
                )));
            }
            if order < 2 {
                return Err(Error::Malformed(format!(
                    "torsion order {order} at component {component} must be at least 2"
                )));
            }
            if map.insert(component, order).is_some() {
                return Err(Error::Malformed(format!(
                    "component {component} decorated twice"
                )));
            }
        }
        Ok(ChainSpec { g, special: map })
    }

    /// A chain with no torsion decorations.
    pub fn generic(g: usize) -> Self {
        ChainSpec {
            g,
            special: BTreeMap::new(),
        }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn torsion(&self, component: usize) -> Option<usize> {
        self.special.get(&component).copied()
    }

    pub fn special(&self) -> &BTreeMap<usize, usize> {
        &self.special
    }

    pub fn is_generic(&self) -> bool {
        self.special.is_empty()
    }
}
