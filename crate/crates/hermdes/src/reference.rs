//! Shipped reference weight enumerator of the m = 2 design code.

use serde::{Deserialize, Serialize};

pub const DESIGN_CODE_M2_ENUMERATOR: &str = include_str!("../data/design_code_m2_enumerator.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceEnumerator {
    pub code: String,
    pub length: usize,
    pub dimension: usize,
    pub field: String,
    pub provenance: String,
    pub status: String,
    /// `(weight, count)` pairs in increasing weight.
    pub terms: Vec<(usize, u128)>,
}

impl ReferenceEnumerator {
    pub fn design_code_m2() -> Self {
        serde_json::from_str(DESIGN_CODE_M2_ENUMERATOR).expect("shipped reference data parses")
    }

    pub fn total(&self) -> u128 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }

    pub fn count(&self, w: usize) -> u128 {
        self.terms.iter().find(|&&(x, _)| x == w).map_or(0, |&(_, c)| c)
    }

    /// Lowest nonzero weight.
    pub fn min_weight(&self) -> Option<usize> {
        self.terms.iter().map(|&(w, _)| w).find(|&w| w > 0)
    }
}
