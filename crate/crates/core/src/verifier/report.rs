//! The uniform record every check produces.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One check's outcome, serialized as
/// `{"check", "lhs", "rhs", "rel_err", "tolerance", "pass", "params"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub lhs: String,
    pub rhs: String,
    pub rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub params: Value,
}

impl VerificationReport {
    /// A floating comparison, passing when `rel_err ≤ tolerance` (NaN fails).
    pub fn numeric(check: &str, lhs: f64, rhs: f64, rel_err: f64, tolerance: f64, params: Value) -> Self {
        Self {
            check: check.to_string(),
            lhs: format!("{lhs:.17e}"),
            rhs: format!("{rhs:.17e}"),
            rel_err,
            tolerance,
            pass: rel_err <= tolerance,
            params,
        }
    }

    /// An exact comparison of two canonical strings.
    pub fn exact(check: &str, lhs: String, rhs: String, equal: bool, params: Value) -> Self {
        Self {
            check: check.to_string(),
            lhs,
            rhs,
            rel_err: if equal { 0.0 } else { 1.0 },
            tolerance: 0.0,
            pass: equal,
            params,
        }
    }

    /// A failed check that could not produce values.
    pub fn error(check: &str, message: String, params: Value) -> Self {
        Self {
            check: check.to_string(),
            lhs: message,
            rhs: String::new(),
            rel_err: 1.0,
            tolerance: 0.0,
            pass: false,
            params,
        }
    }
}

/// `|a − b| / |b|`, or `|a|` when `b = 0`.
pub fn relative_error(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}
