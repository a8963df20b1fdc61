//! Free-cash-flow building blocks and policy comparison.
//!
//! The functions here price an inventory decision the way an owner
//! would: through its effect on the free cash flows the firm can pay
//! out. The chain is
//!
//! ```text
//! NOPAT = (CR − CE − NCE)·(1 − T)
//! FCFF  = NOPAT + NCE − capex − ΔNWC
//! NWC   = receivables + inventory + precautionary cash − payables
//! EVA   = NOPAT − k·(NWC + operating investments)
//! ```
//!
//! A change of lot-sizing policy touches exactly two of those levers:
//! it moves the money tied up in inventory (a one-off change in net
//! working capital, reversed in sign — releasing stock frees cash) and
//! it shifts the total periodic inventory cost (a perpetual change in
//! after-tax operating cash flow). [`compare_policies`] combines both
//! into the change in firm value and the change in economic value
//! added:
//!
//! ```text
//! ΔV   = −Δinventory − Δtci·(1 − T)/k
//! ΔEVA = −(1 − T)·Δtci − k·Δinventory
//! ```
//!
//! The two always satisfy `ΔV·k = ΔEVA`: a perpetual EVA stream
//! discounted at `k` is exactly the value effect.

use crate::error::{Error, Result};
use crate::lot::{FinancialContext, LotModel, Rounding};

// ---------------------------------------------------------------------------
// Cash-flow building blocks
// ---------------------------------------------------------------------------

/// Periodic figures needed to form free cash flow to the firm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CashFlowInputs {
    /// Cash revenues of the period.
    pub cash_revenues: f64,
    /// Cash operating expenses of the period.
    pub cash_expenses: f64,
    /// Non-cash operating expenses (e.g. depreciation).
    pub non_cash_expenses: f64,
    /// Capital expenditure of the period.
    pub capex: f64,
    /// Increase in net working capital over the period.
    pub nwc_growth: f64,
}

/// Balance-sheet components of net working capital.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NwcComponents {
    /// Accounts receivable.
    pub accounts_receivable: f64,
    /// Inventory at value.
    pub inventory: f64,
    /// Precautionary cash balance.
    pub cash: f64,
    /// Accounts payable (subtracted).
    pub accounts_payable: f64,
}

/// Inputs of the economic-value-added measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaInputs {
    /// Net operating profit after tax for the period.
    pub nopat: f64,
    /// Net working capital employed.
    pub nwc: f64,
    /// Other operating investments charged with capital cost.
    pub operating_investments: f64,
    /// Cost of capital per period.
    pub cost_of_capital: f64,
}

fn require_tax_rate(tax_rate: f64) -> Result<()> {
    if tax_rate.is_finite() && (0.0..1.0).contains(&tax_rate) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            field: "tax_rate",
            value: tax_rate,
            reason: "must lie in [0, 1)",
        })
    }
}

/// Net operating profit after tax: `(CR − CE − NCE)·(1 − T)`.
pub fn nopat(
    cash_revenues: f64,
    cash_expenses: f64,
    non_cash_expenses: f64,
    tax_rate: f64,
) -> Result<f64> {
    require_tax_rate(tax_rate)?;
    Ok((cash_revenues - cash_expenses - non_cash_expenses) * (1.0 - tax_rate))
}

/// Free cash flow to the firm: `NOPAT + NCE − capex − ΔNWC`.
///
/// Non-cash expenses are added back because they reduced taxable profit
/// without leaving the firm as cash.
pub fn fcff(inputs: &CashFlowInputs, tax_rate: f64) -> Result<f64> {
    let after_tax_profit = nopat(
        inputs.cash_revenues,
        inputs.cash_expenses,
        inputs.non_cash_expenses,
        tax_rate,
    )?;
    Ok(after_tax_profit + inputs.non_cash_expenses - inputs.capex - inputs.nwc_growth)
}

/// Net working capital: `receivables + inventory + cash − payables`.
pub fn nwc(components: &NwcComponents) -> f64 {
    components.accounts_receivable + components.inventory + components.cash
        - components.accounts_payable
}

/// Economic value added: `NOPAT − k·(NWC + operating investments)`.
pub fn eva(inputs: &EvaInputs) -> f64 {
    inputs.nopat - inputs.cost_of_capital * (inputs.nwc + inputs.operating_investments)
}

/// Present value of a sequence of periodic cash-flow changes.
///
/// `flows[0]` is received one period from now, `flows[1]` two periods
/// from now, and so on: `PV = Σ flows[t] / (1 + rate)^(t+1)`. The rate
/// must be a finite number greater than −1; an empty sequence is
/// rejected rather than silently priced at zero.
pub fn present_value_of_deltas(flows: &[f64], discount_rate: f64) -> Result<f64> {
    if flows.is_empty() {
        return Err(Error::EmptyFlows);
    }
    if !discount_rate.is_finite() || discount_rate <= -1.0 {
        return Err(Error::InvalidArgument {
            name: "discount_rate",
            value: discount_rate,
            reason: "must be a finite rate greater than -1",
        });
    }
    let growth = 1.0 + discount_rate;
    let mut discount = 1.0;
    let mut pv = 0.0;
    for &flow in flows {
        discount /= growth;
        pv += flow * discount;
    }
    Ok(pv)
}

// ---------------------------------------------------------------------------
// Policy comparison
// ---------------------------------------------------------------------------

/// Effect of switching from a baseline lot size to an alternative one.
///
/// Sign convention: positive `delta_v` / `delta_eva` means the switch
/// *creates* value. `delta_tci` and `delta_inventory` are plain
/// differences `alternative − baseline`, so a cost increase is
/// positive and an inventory release is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValuationDelta {
    /// Change in total periodic inventory cost.
    pub delta_tci: f64,
    /// Change in money tied up in average inventory.
    pub delta_inventory: f64,
    /// Change in firm value: the freed (or absorbed) working capital
    /// plus the perpetuity value of the after-tax cost change.
    pub delta_v: f64,
    /// Change in periodic economic value added.
    pub delta_eva: f64,
}

/// Prices the switch `baseline_q → alternative_q` under the given model
/// and financial context.
///
/// The cost change is treated as perpetual, so the cost of capital must
/// be strictly positive ([`Error::PerpetuityUndefined`] otherwise).
///
/// In [`Rounding::WholeUnits`] mode both total costs are rounded to
/// whole money units and the *baseline* average inventory is rounded to
/// whole stock units before pricing, while the alternative keeps its
/// exact inventory value — the convention whole-figure tabulations use.
/// `Exact` mode rounds nothing; only in that mode is the comparison
/// perfectly antisymmetric under swapping the two quantities.
pub fn compare_policies(
    model: &LotModel,
    f: &FinancialContext,
    baseline_q: f64,
    alternative_q: f64,
    rounding: Rounding,
) -> Result<ValuationDelta> {
    f.validate()?;
    if f.cost_of_capital <= 0.0 {
        return Err(Error::PerpetuityUndefined);
    }

    let baseline_tci = rounding.money(model.tci(baseline_q)?);
    let alternative_tci = rounding.money(model.tci(alternative_q)?);
    let baseline_inventory = model.inventory_value(baseline_q, rounding)?;
    let alternative_inventory = model.inventory_value(alternative_q, Rounding::Exact)?;

    let delta_tci = alternative_tci - baseline_tci;
    let delta_inventory = alternative_inventory - baseline_inventory;
    let after_tax = 1.0 - f.tax_rate;
    let delta_v = -delta_inventory - delta_tci * after_tax / f.cost_of_capital;
    let delta_eva = -after_tax * delta_tci - f.cost_of_capital * delta_inventory;

    Ok(ValuationDelta {
        delta_tci,
        delta_inventory,
        delta_v,
        delta_eva,
    })
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
