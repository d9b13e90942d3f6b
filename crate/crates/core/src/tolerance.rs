//! Numerical tolerances shared by the whole library.

use serde::{Deserialize, Serialize};

/// Default value for every tolerance.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Environment variable that overrides [`DEFAULT_EPS`] for all three fields.
pub const TOLERANCE_ENV: &str = "CHP_TOLERANCE";

/// Read-only tolerance context.
///
/// * `mat` - matrix identities and projective equality,
/// * `null` - dead-band around the null cone,
/// * `geo` - geometric comparisons (distances, margins, predicates).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub mat: f64,
    pub null: f64,
    pub geo: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::uniform(DEFAULT_EPS)
    }
}

impl Tolerance {
    pub const fn uniform(eps: f64) -> Self {
        Self { mat: eps, null: eps, geo: eps }
    }

    /// Default tolerance, overridden by `CHP_TOLERANCE` when it parses as a positive float.
    pub fn from_env() -> Self {
        std::env::var(TOLERANCE_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|e| e.is_finite() && *e > 0.0)
            .map(Self::uniform)
            .unwrap_or_default()
    }

    /// Ratio of the geometric tolerance to the library default.
    pub fn scale(&self) -> f64 {
        self.geo / DEFAULT_EPS
    }
}
