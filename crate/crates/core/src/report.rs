//! Aggregated per-code results: parameters, distances with exactness flags,
//! classification, and bound values.

use crate::classify::{CentralIntersectionReport, Classification};
use crate::code::TwoBlockCode;
use crate::distance::{Distance, DistanceResult};

/// Everything known about one code instance. Distances and classification
/// are optional because not every workflow computes them.
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub rank_h_x: usize,
    pub rank_h_z: usize,
    pub d_z: Option<DistanceResult>,
    pub d_x: Option<DistanceResult>,
    pub classification: Option<Classification>,
    pub bound: Option<CentralIntersectionReport>,
}

impl CodeReport {
    pub fn parameters_only(code: &TwoBlockCode) -> Self {
        CodeReport {
            n: code.n(),
            k: code.k(),
            q: code.field().p(),
            rank_h_x: code.rank_h_x(),
            rank_h_z: code.rank_h_z(),
            d_z: None,
            d_x: None,
            classification: None,
            bound: None,
        }
    }

    pub fn with_distances(code: &TwoBlockCode, d_z: DistanceResult, d_x: DistanceResult) -> Self {
        let mut r = Self::parameters_only(code);
        r.d_z = Some(d_z);
        r.d_x = Some(d_x);
        r
    }

    /// The overall distance min(d_X, d_Z) with its exactness: exact only
    /// when both sides were computed exhaustively.
    pub fn d(&self) -> Option<(Distance, bool)> {
        match (&self.d_z, &self.d_x) {
            (Some(z), Some(x)) => Some((z.value.min(x.value), z.exact && x.exact)),
            _ => None,
        }
    }
}
