//! Error type shared by every module in the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when validating inputs or running a
/// computation. All variants are caused by caller input; none of the
/// numeric routines can fail once their inputs validate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A model or financial parameter violates its range invariant.
    /// `field` names the offending struct field so CLI layers can point
    /// the user at the exact input.
    #[error("invalid parameter `{field}`: {reason} (got {value})")]
    InvalidParameter {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A function argument (as opposed to a stored parameter) is out of
    /// range, e.g. a non-positive candidate quantity.
    #[error("invalid argument `{name}`: {reason} (got {value})")]
    InvalidArgument {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Production-quantity models require demand strictly below the
    /// production capacity; at `demand >= capacity` the cycle-stock
    /// term degenerates and no finite batch exists.
    #[error("demand ({demand}) must be strictly below production capacity ({capacity})")]
    CapacityViolation { demand: f64, capacity: f64 },

    /// Perpetuity-based valuation divides by the cost of capital, so a
    /// zero rate has no meaning there.
    #[error("cost of capital must be positive for perpetuity valuation")]
    PerpetuityUndefined,

    /// An integer scan or sweep range is unusable.
    #[error("invalid quantity range [{lo}, {hi}]: {reason}")]
    InvalidRange {
        lo: u64,
        hi: u64,
        reason: &'static str,
    },

    /// Present-value computation was handed no cash flows at all.
    #[error("cash-flow sequence must contain at least one period")]
    EmptyFlows,
}
