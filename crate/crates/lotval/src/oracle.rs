//! Brute-force search and tabulation over integer lot sizes.
//!
//! [`minimize_value_cost`] finds the best whole-unit lot size by
//! evaluating the value-adjusted cost at *every* integer in a range —
//! no derivative, no square root, no convexity assumption. It exists as
//! an independent check on the closed-form optima: if the algebra in
//! [`crate::lot`] is right, the scan must land within one unit of the
//! rounded closed form. At the ranges this crate targets (up to ~10^7
//! candidates) the scan completes in well under a second, so there is
//! no reason to be cleverer.
//!
//! [`sweep`] tabulates a contiguous range of candidate quantities
//! against one fixed baseline, producing the rows a decision maker
//! would lay out side by side: cost, inventory value, and the valuation
//! deltas from [`crate::valuation::compare_policies`].

use crate::error::{Error, Result};
use crate::lot::{FinancialContext, LotModel, Rounding};
use crate::valuation::compare_policies;

/// Outcome of an exhaustive integer scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanResult {
    /// The integer quantity with the lowest value-adjusted cost; ties
    /// resolve to the smallest quantity.
    pub best_q: u64,
    /// The objective value at `best_q`.
    pub best_value_cost: f64,
    /// The inclusive range that was scanned.
    pub scanned_range: (u64, u64),
}

/// One tabulated candidate quantity from [`sweep`].
///
/// `delta_*` fields compare this row's quantity against the sweep's
/// fixed baseline, with the sign convention of
/// [`crate::valuation::ValuationDelta`]: positive `delta_v`/`delta_eva`
/// means switching to this row creates value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// Candidate lot size, whole units.
    pub q: u64,
    /// Total periodic inventory cost at `q`.
    pub tci: f64,
    /// `tci` minus the baseline's total cost.
    pub delta_tci: f64,
    /// Money tied up in average inventory at `q` (always full
    /// precision; only the baseline side is subject to rounding).
    pub inv: f64,
    /// `inv` minus the baseline's inventory value.
    pub delta_inv: f64,
    /// Change in firm value when switching from the baseline to `q`.
    pub delta_v: f64,
    /// Change in periodic economic value added for the same switch.
    pub delta_eva: f64,
}

fn checked_range(lo: u64, hi: u64) -> Result<(u64, u64)> {
    if lo < 1 {
        return Err(Error::InvalidRange {
            lo,
            hi,
            reason: "lower bound must be at least 1",
        });
    }
    if hi < lo {
        return Err(Error::InvalidRange {
            lo,
            hi,
            reason: "upper bound must not be below the lower bound",
        });
    }
    Ok((lo, hi))
}

/// Exhaustively minimizes the value-adjusted cost over integer lot
/// sizes.
///
/// With no explicit `range` the scan covers `[1, ceil(10 × classical
/// optimum)]`, wide enough to bracket every optimum the models can
/// produce (the value-based quantity never exceeds the classical one).
/// An explicit range must satisfy `1 <= lo <= hi`.
pub fn minimize_value_cost(
    model: &LotModel,
    f: &FinancialContext,
    range: Option<(u64, u64)>,
) -> Result<ScanResult> {
    model.validate()?;
    f.validate()?;
    let (lo, hi) = match range {
        Some((lo, hi)) => checked_range(lo, hi)?,
        None => {
            let classical = model.classical_quantity()?;
            (1, (10.0 * classical).ceil() as u64)
        }
    };

    let mut best_q = lo;
    let mut best_value_cost = model.value_cost(lo as f64, f)?;
    for q in (lo + 1)..=hi {
        let cost = model.value_cost(q as f64, f)?;
        if cost < best_value_cost {
            best_value_cost = cost;
            best_q = q;
        }
    }

    Ok(ScanResult {
        best_q,
        best_value_cost,
        scanned_range: (lo, hi),
    })
}

/// Tabulates every integer quantity in `[q_from, q_to]` against a fixed
/// baseline quantity.
///
/// Deltas are computed through [`compare_policies`], so the rounding
/// convention is applied exactly as documented there: in
/// [`Rounding::WholeUnits`] mode costs are rounded to whole money units
/// and the baseline's average inventory to whole stock units, while
/// every row keeps its exact inventory value.
pub fn sweep(
    model: &LotModel,
    f: &FinancialContext,
    baseline_q: f64,
    q_from: u64,
    q_to: u64,
    rounding: Rounding,
) -> Result<Vec<SweepRow>> {
    let (lo, hi) = checked_range(q_from, q_to)?;
    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for q in lo..=hi {
        let delta = compare_policies(model, f, baseline_q, q as f64, rounding)?;
        let tci = rounding.money(model.tci(q as f64)?);
        let inv = model.inventory_value(q as f64, Rounding::Exact)?;
        rows.push(SweepRow {
            q,
            tci,
            delta_tci: delta.delta_tci,
            inv,
            delta_inv: delta.delta_inventory,
            delta_v: delta.delta_v,
            delta_eva: delta.delta_eva,
        });
    }
    Ok(rows)
}
