//! Lot sizing that optimizes firm value instead of accounting cost.
//!
//! The classical economic order quantity (EOQ) and economic production
//! quantity (POQ) minimize the sum of ordering/setup cost and inventory
//! holding cost. That objective ignores the capital tied up in inventory:
//! a dollar parked in stock is a dollar the firm's owners cannot invest
//! elsewhere, so two policies with equal operating cost can still differ
//! in the value they create. This crate implements both views:
//!
//! * [`lot`] — the classical EOQ/POQ closed forms, their total-cost and
//!   inventory-valuation functions, and value-based variants (VBEOQ,
//!   VBPOQ) that fold the opportunity cost of invested capital and the
//!   tax shield on operating cost into the optimization.
//! * [`valuation`] — free-cash-flow building blocks (NOPAT, FCFF, net
//!   working capital, EVA) and a policy comparison that prices an
//!   inventory-policy change as a perpetuity: its effect on firm value
//!   (delta V) and on economic value added (delta EVA).
//! * [`oracle`] — a brute-force integer scan that minimizes the
//!   value-adjusted cost without using any closed form, plus a sweep
//!   that tabulates candidate quantities against a fixed baseline. The
//!   scan exists to cross-check the closed forms, so it deliberately
//!   shares no algebra with them.
//!
//! All quantities are `f64` in whatever consistent unit system the
//! caller chooses (e.g. kg and dollars, or tons and dollars); nothing
//! here assumes a particular currency or unit.

#![forbid(unsafe_code)]

pub mod error;
pub mod lot;
pub mod oracle;
pub mod valuation;

pub use error::{Error, Result};
pub use lot::{
    EoqParameters, FinancialContext, LotModel, PoqParameters, PolicyEvaluation, Rounding,
};
pub use oracle::{ScanResult, SweepRow};
pub use valuation::{CashFlowInputs, EvaInputs, NwcComponents, ValuationDelta};
