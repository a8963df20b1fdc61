//! Classical and value-based lot-sizing models.
//!
//! Two model families are covered, each described by a parameter struct:
//!
//! * **EOQ** ([`EoqParameters`]) — inventory is bought in. The whole
//!   order arrives at once, so average cycle stock is `Q/2` on top of a
//!   constant safety stock `s`. Total periodic inventory cost is
//!
//!   ```text
//!   tci(Q) = (D/Q)·S + (Q/2 + s)·v·C
//!   ```
//!
//!   with demand `D` per period, cost `S` per order, unit cost `v` and
//!   holding factor `C` (cost of holding one money unit of stock for one
//!   period). Minimizing over `Q` gives the classical square-root form
//!   `EOQ = sqrt(2·D·S / (v·C))`.
//!
//! * **POQ** ([`PoqParameters`]) — inventory is produced in-house at a
//!   finite rate `m > D`, so stock builds up gradually and the average
//!   cycle stock shrinks by the factor `1 − D/m`:
//!
//!   ```text
//!   tci(Q) = (Q/2)·(1 − D/m)·v·C + (D/Q)·S
//!   ```
//!
//!   yielding `POQ = sqrt(2·D·S / (v·C·(1 − D/m)))`.
//!
//! The classical forms treat holding cost as the only penalty for
//! carrying stock. From the owners' perspective there are two more
//! effects: operating costs are tax-deductible (so only `(1 − T)` of
//! every cost dollar is really lost), and the money frozen in inventory
//! carries the firm's cost of capital `k`. The value-adjusted objective
//! is therefore
//!
//! ```text
//! value_cost(Q) = (1 − T)·tci(Q) + k·inventory_value(Q)
//! ```
//!
//! where `inventory_value` is the money tied up in average stock.
//! Minimizing it gives the value-based quantities
//!
//! ```text
//! VBEOQ = sqrt(2·(1 − T)·D·S / (v·(k + C·(1 − T))))
//! VBPOQ = sqrt(2·(1 − T)·D·S / (v·(1 − D/m)·(k + C·(1 − T))))
//! ```
//!
//! Both shrink strictly below their classical counterparts whenever
//! `k > 0`: freeing capital is worth paying slightly more operating
//! cost. With `k = 0` and any tax rate they reduce to EOQ/POQ exactly.

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Rounding convention
// ---------------------------------------------------------------------------

/// How intermediate figures are treated before they feed comparisons.
///
/// `Exact` keeps full floating-point precision everywhere and is the
/// default. `WholeUnits` evaluates figures the way a ledger-style
/// worked comparison tabulates them: total periodic costs are rounded
/// to the nearest whole money unit, and the *baseline* side of a
/// comparison rounds its physical average inventory to the nearest
/// whole stock unit before pricing it, while candidate quantities keep
/// their exact inventory value. Use `WholeUnits` when reproducing
/// whole-figure tabulations; use `Exact` for analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rounding {
    /// Full floating-point precision (default).
    #[default]
    Exact,
    /// Round costs to whole money units and baseline average inventory
    /// to whole stock units.
    WholeUnits,
}

impl Rounding {
    /// Round a money amount according to the convention.
    pub(crate) fn money(self, amount: f64) -> f64 {
        match self {
            Rounding::Exact => amount,
            Rounding::WholeUnits => amount.round(),
        }
    }

    /// Round a physical stock level according to the convention.
    pub(crate) fn units(self, quantity: f64) -> f64 {
        match self {
            Rounding::Exact => quantity,
            Rounding::WholeUnits => quantity.round(),
        }
    }
}

// ---------------------------------------------------------------------------
// Parameter structs
// ---------------------------------------------------------------------------

fn require_positive(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            field,
            value,
            reason: "must be a positive finite number",
        })
    }
}

fn require_quantity(q: f64) -> Result<()> {
    if q.is_finite() && q > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            name: "quantity",
            value: q,
            reason: "must be a positive finite number",
        })
    }
}

/// Inputs of the purchase-order (EOQ) model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EoqParameters {
    /// Demand per period, in stock units.
    pub demand: f64,
    /// Fixed cost of placing one order, in money units.
    pub order_cost: f64,
    /// Purchase cost of one stock unit, in money units.
    pub unit_cost: f64,
    /// Periodic holding cost per money unit of inventory, as a fraction in `(0, 1]`.
    pub holding_factor: f64,
    /// Safety stock held on top of cycle stock, in stock units (may be zero).
    pub safety_stock: f64,
}

impl EoqParameters {
    /// Validating constructor; see [`EoqParameters::validate`] for the rules.
    pub fn new(
        demand: f64,
        order_cost: f64,
        unit_cost: f64,
        holding_factor: f64,
        safety_stock: f64,
    ) -> Result<Self> {
        let p = Self {
            demand,
            order_cost,
            unit_cost,
            holding_factor,
            safety_stock,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks every range invariant, naming the offending field on failure.
    pub fn validate(&self) -> Result<()> {
        require_positive("demand", self.demand)?;
        require_positive("order_cost", self.order_cost)?;
        require_positive("unit_cost", self.unit_cost)?;
        if !(self.holding_factor.is_finite()
            && self.holding_factor > 0.0
            && self.holding_factor <= 1.0)
        {
            return Err(Error::InvalidParameter {
                field: "holding_factor",
                value: self.holding_factor,
                reason: "must lie in (0, 1]",
            });
        }
        if !(self.safety_stock.is_finite() && self.safety_stock >= 0.0) {
            return Err(Error::InvalidParameter {
                field: "safety_stock",
                value: self.safety_stock,
                reason: "must be a non-negative finite number",
            });
        }
        Ok(())
    }
}

/// Inputs of the production-batch (POQ) model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoqParameters {
    /// Demand per period, in stock units.
    pub demand: f64,
    /// Maximum production per period, in stock units; must exceed demand.
    pub max_production: f64,
    /// Fixed cost of one production setup, in money units.
    pub setup_cost: f64,
    /// Production cost of one stock unit, in money units.
    pub unit_cost: f64,
    /// Periodic holding cost per money unit of inventory (strictly positive).
    pub holding_factor: f64,
}

impl PoqParameters {
    /// Validating constructor; see [`PoqParameters::validate`] for the rules.
    pub fn new(
        demand: f64,
        max_production: f64,
        setup_cost: f64,
        unit_cost: f64,
        holding_factor: f64,
    ) -> Result<Self> {
        let p = Self {
            demand,
            max_production,
            setup_cost,
            unit_cost,
            holding_factor,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks every range invariant. Demand at or above capacity is
    /// reported as [`Error::CapacityViolation`] because the model's
    /// cycle-stock factor `1 − D/m` degenerates there.
    pub fn validate(&self) -> Result<()> {
        require_positive("demand", self.demand)?;
        require_positive("max_production", self.max_production)?;
        require_positive("setup_cost", self.setup_cost)?;
        require_positive("unit_cost", self.unit_cost)?;
        require_positive("holding_factor", self.holding_factor)?;
        if self.demand >= self.max_production {
            return Err(Error::CapacityViolation {
                demand: self.demand,
                capacity: self.max_production,
            });
        }
        Ok(())
    }

    /// The cycle-stock shrinkage factor `1 − D/m`, in `(0, 1)` for valid
    /// parameters.
    fn stock_factor(&self) -> f64 {
        1.0 - self.demand / self.max_production
    }
}

/// Financial environment shared by all value-based computations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinancialContext {
    /// Effective income tax rate, in `[0, 1)`.
    pub tax_rate: f64,
    /// Cost of capital per period (e.g. WACC), non-negative.
    pub cost_of_capital: f64,
}

impl FinancialContext {
    /// Validating constructor; see [`FinancialContext::validate`].
    pub fn new(tax_rate: f64, cost_of_capital: f64) -> Result<Self> {
        let f = Self {
            tax_rate,
            cost_of_capital,
        };
        f.validate()?;
        Ok(f)
    }

    /// Checks the rate invariants. A zero cost of capital is *valid*
    /// here (the cost functions degrade gracefully); only perpetuity
    /// valuation rejects it, at the point of use.
    pub fn validate(&self) -> Result<()> {
        if !(self.tax_rate.is_finite() && (0.0..1.0).contains(&self.tax_rate)) {
            return Err(Error::InvalidParameter {
                field: "tax_rate",
                value: self.tax_rate,
                reason: "must lie in [0, 1)",
            });
        }
        if !(self.cost_of_capital.is_finite() && self.cost_of_capital >= 0.0) {
            return Err(Error::InvalidParameter {
                field: "cost_of_capital",
                value: self.cost_of_capital,
                reason: "must be a non-negative finite number",
            });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// EOQ family
// ---------------------------------------------------------------------------

/// Classical economic order quantity `sqrt(2·D·S / (v·C))`.
///
/// Minimizes [`tci_eoq`] over the order quantity. Safety stock adds a
/// constant holding cost and therefore does not move the optimum.
pub fn eoq(p: &EoqParameters) -> Result<f64> {
    p.validate()?;
    Ok((2.0 * p.demand * p.order_cost / (p.unit_cost * p.holding_factor)).sqrt())
}

/// Total periodic inventory cost of ordering in lots of `q`:
/// ordering cost `(D/q)·S` plus holding cost `(q/2 + s)·v·C`.
pub fn tci_eoq(q: f64, p: &EoqParameters) -> Result<f64> {
    p.validate()?;
    require_quantity(q)?;
    let ordering = (p.demand / q) * p.order_cost;
    let holding = (q / 2.0 + p.safety_stock) * p.unit_cost * p.holding_factor;
    Ok(ordering + holding)
}

/// Money tied up in average inventory under lot size `q`:
/// `(q/2 + s)·v`. In [`Rounding::WholeUnits`] mode the physical average
/// `q/2 + s` is rounded to the nearest whole unit before pricing.
pub fn inventory_value_eoq(q: f64, p: &EoqParameters, rounding: Rounding) -> Result<f64> {
    p.validate()?;
    require_quantity(q)?;
    Ok(rounding.units(q / 2.0 + p.safety_stock) * p.unit_cost)
}

/// Value-based order quantity `sqrt(2·(1−T)·D·S / (v·(k + C·(1−T))))`.
///
/// Minimizes [`value_cost`] for the EOQ family: operating costs enter
/// after tax and tied-up inventory capital is charged at `k`. Strictly
/// below [`eoq`] whenever `k > 0`; equal to it when `k = 0`.
pub fn vbeoq(p: &EoqParameters, f: &FinancialContext) -> Result<f64> {
    p.validate()?;
    f.validate()?;
    let after_tax = 1.0 - f.tax_rate;
    let numerator = 2.0 * after_tax * p.demand * p.order_cost;
    let denominator = p.unit_cost * (f.cost_of_capital + p.holding_factor * after_tax);
    Ok((numerator / denominator).sqrt())
}

// ---------------------------------------------------------------------------
// POQ family
// ---------------------------------------------------------------------------

/// Classical economic production quantity
/// `sqrt(2·D·S / (v·C·(1 − D/m)))`.
///
/// Minimizes [`tci_poq`] over the batch size. As `m → ∞` the gradual
/// stock build-up vanishes and the quantity converges to [`eoq`].
pub fn poq(p: &PoqParameters) -> Result<f64> {
    p.validate()?;
    let denominator = p.unit_cost * p.holding_factor * p.stock_factor();
    Ok((2.0 * p.demand * p.setup_cost / denominator).sqrt())
}

/// Total periodic inventory cost of producing in batches of `q`:
/// holding cost `(q/2)·(1 − D/m)·v·C` plus setup cost `(D/q)·S`.
pub fn tci_poq(q: f64, p: &PoqParameters) -> Result<f64> {
    p.validate()?;
    require_quantity(q)?;
    let holding = (q / 2.0) * p.stock_factor() * p.unit_cost * p.holding_factor;
    let setup = (p.demand / q) * p.setup_cost;
    Ok(holding + setup)
}

/// Money tied up in average inventory under batch size `q`:
/// `(q/2)·(1 − D/m)·v`. In [`Rounding::WholeUnits`] mode the physical
/// average `(q/2)·(1 − D/m)` is rounded to the nearest whole unit
/// before pricing.
pub fn inventory_value_poq(q: f64, p: &PoqParameters, rounding: Rounding) -> Result<f64> {
    p.validate()?;
    require_quantity(q)?;
    Ok(rounding.units(q / 2.0 * p.stock_factor()) * p.unit_cost)
}

/// Value-based production quantity
/// `sqrt(2·(1−T)·D·S / (v·(1 − D/m)·(k + C·(1−T))))`.
///
/// Minimizes [`value_cost`] for the POQ family. Strictly below [`poq`]
/// whenever `k > 0`; equal to it when `k = 0`.
pub fn vbpoq(p: &PoqParameters, f: &FinancialContext) -> Result<f64> {
    p.validate()?;
    f.validate()?;
    let after_tax = 1.0 - f.tax_rate;
    let numerator = 2.0 * after_tax * p.demand * p.setup_cost;
    let denominator =
        p.unit_cost * p.stock_factor() * (f.cost_of_capital + p.holding_factor * after_tax);
    Ok((numerator / denominator).sqrt())
}

// ---------------------------------------------------------------------------
// Model dispatch
// ---------------------------------------------------------------------------

/// A lot-sizing model instance: either an order (EOQ) or a production
/// (POQ) configuration. Lets the valuation and scan layers work with
/// either family through one interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LotModel {
    Eoq(EoqParameters),
    Poq(PoqParameters),
}

impl LotModel {
    /// Validates the wrapped parameter struct.
    pub fn validate(&self) -> Result<()> {
        match self {
            LotModel::Eoq(p) => p.validate(),
            LotModel::Poq(p) => p.validate(),
        }
    }

    /// The classical optimum for this family ([`eoq`] or [`poq`]).
    pub fn classical_quantity(&self) -> Result<f64> {
        match self {
            LotModel::Eoq(p) => eoq(p),
            LotModel::Poq(p) => poq(p),
        }
    }

    /// The value-based optimum for this family ([`vbeoq`] or [`vbpoq`]).
    pub fn value_based_quantity(&self, f: &FinancialContext) -> Result<f64> {
        match self {
            LotModel::Eoq(p) => vbeoq(p, f),
            LotModel::Poq(p) => vbpoq(p, f),
        }
    }

    /// Total periodic inventory cost at lot size `q`.
    pub fn tci(&self, q: f64) -> Result<f64> {
        match self {
            LotModel::Eoq(p) => tci_eoq(q, p),
            LotModel::Poq(p) => tci_poq(q, p),
        }
    }

    /// Money tied up in average inventory at lot size `q`.
    pub fn inventory_value(&self, q: f64, rounding: Rounding) -> Result<f64> {
        match self {
            LotModel::Eoq(p) => inventory_value_eoq(q, p, rounding),
            LotModel::Poq(p) => inventory_value_poq(q, p, rounding),
        }
    }

    /// Convenience wrapper around [`value_cost`].
    pub fn value_cost(&self, q: f64, f: &FinancialContext) -> Result<f64> {
        value_cost(q, self, f)
    }

    /// Evaluates one policy quantity into a [`PolicyEvaluation`] under
    /// the given rounding convention.
    pub fn evaluate(
        &self,
        f: &FinancialContext,
        q: f64,
        rounding: Rounding,
    ) -> Result<PolicyEvaluation> {
        f.validate()?;
        let tci = rounding.money(self.tci(q)?);
        let inventory_value = self.inventory_value(q, rounding)?;
        let value_cost = (1.0 - f.tax_rate) * tci + f.cost_of_capital * inventory_value;
        Ok(PolicyEvaluation {
            quantity: q,
            tci,
            inventory_value,
            value_cost,
        })
    }
}

/// The value-adjusted periodic cost of running lot size `q`:
/// `(1 − T)·tci(q) + k·inventory_value(q)`, always at full precision.
///
/// This is the objective the value-based quantities minimize. With
/// `T = 0` and `k = 0` it equals `tci(q)` exactly.
pub fn value_cost(q: f64, model: &LotModel, f: &FinancialContext) -> Result<f64> {
    f.validate()?;
    let tci = model.tci(q)?;
    let inventory = model.inventory_value(q, Rounding::Exact)?;
    Ok((1.0 - f.tax_rate) * tci + f.cost_of_capital * inventory)
}

/// One policy quantity evaluated under a model and financial context.
///
/// Invariant: `value_cost = (1 − tax_rate)·tci + cost_of_capital·inventory_value`
/// holds exactly over the stored fields (it is computed from them).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolicyEvaluation {
    /// The lot size that was evaluated, in stock units.
    pub quantity: f64,
    /// Total periodic inventory cost at that lot size.
    pub tci: f64,
    /// Money tied up in average inventory.
    pub inventory_value: f64,
    /// The value-adjusted periodic cost.
    pub value_cost: f64,
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
