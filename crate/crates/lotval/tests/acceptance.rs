//! Acceptance gate for the library: the numbered reference checks the
//! release must satisfy. Every check prints one `[acceptance] ... PASS`
//! (or `FAIL`) line — run with `--nocapture` to see them — and the
//! tolerances are pinned as constants below so a regression cannot be
//! "fixed" by quietly loosening a bound. Checks 1–7 reproduce the
//! worked purchase and production settings; check 8 runs the
//! parameter-independent property suites. Check 9 (the CLI round trip)
//! lives in the CLI crate's own acceptance target.

use lotval::oracle::{minimize_value_cost, sweep};
use lotval::valuation::compare_policies;
use lotval::{
    lot::{eoq, inventory_value_eoq, inventory_value_poq, poq, tci_eoq, tci_poq, vbeoq, vbpoq},
    EoqParameters, FinancialContext, LotModel, PoqParameters, Rounding,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Pinned tolerances
// ---------------------------------------------------------------------------

/// Closed-form quantities are accepted within one whole unit of the
/// reference value (reference figures round inconsistently, sometimes
/// to nearest, sometimes up).
const QUANTITY_TOL: f64 = 1.0;
/// Purchase-model costs are quoted to the nearest money unit.
const PURCHASE_COST_TOL: f64 = 1.0;
/// Production-model costs are larger by two orders of magnitude and
/// quoted with the same number of significant digits, hence ±2.
const PRODUCTION_COST_TOL: f64 = 2.0;
/// Tolerances on the purchase-model switch 5223 → 5000.
const ROUND_LOT_DELTA_V_TOL: f64 = 0.5;
const ROUND_LOT_DELTA_EVA_TOL: f64 = 0.5;
/// Tolerances on the purchase-model switch 5223 → 3959.
const VALUE_LOT_DELTA_V_TOL: f64 = 2.0;
const VALUE_LOT_DELTA_EVA_TOL: f64 = 1.0;
/// Tolerances on the production-model switch 633 → 570.
const PRODUCTION_DELTA_V_TOL: f64 = 5.0;
const PRODUCTION_DELTA_EVA_TOL: f64 = 1.0;
/// Tolerances for the tabulated production sweep (rows 477..=483).
const SWEEP_TCI_TOL: f64 = 2.0;
const SWEEP_DELTA_V_TOL: f64 = 5.0;
const SWEEP_DELTA_EVA_TOL: f64 = 2.0;
/// The integer scan may land on either neighbour of the closed form.
const SCAN_UNIT_TOL: i64 = 1;
/// Relative bound for the delta_v·k = delta_eva identity.
const IDENTITY_REL_TOL: f64 = 1e-9;
/// Relative bound for the k = 0 reductions and the cost-scaling law.
const REDUCTION_REL_TOL: f64 = 1e-12;
/// Relative bound for the capacity → infinity limit at m = 1e6·demand.
const LIMIT_REL_TOL: f64 = 1e-6;
/// Number of randomized instances for the property checks.
const RANDOM_INSTANCES: usize = 200;
/// Seed for the deterministic instance generator.
const SEED: u64 = 0x10755;

// ---------------------------------------------------------------------------
// Reference settings and harness
// ---------------------------------------------------------------------------

fn purchase_params() -> EoqParameters {
    EoqParameters::new(220_000.0, 31.0, 2.0, 0.25, 300.0).unwrap()
}

fn production_params() -> PoqParameters {
    PoqParameters::new(2_500.0, 10_000.0, 12_000.0, 800.0, 0.25).unwrap()
}

fn finance() -> FinancialContext {
    FinancialContext::new(0.19, 0.15).unwrap()
}

/// Collects named sub-checks and prints a single verdict line.
struct Checker {
    label: &'static str,
    failures: Vec<String>,
}

impl Checker {
    fn new(label: &'static str) -> Self {
        Self {
            label,
            failures: Vec::new(),
        }
    }

    fn close(&mut self, what: &str, actual: f64, expected: f64, tol: f64) {
        let gap = (actual - expected).abs();
        // NaN must fail, so the comparison cannot be a plain `> tol`.
        if gap.is_nan() || gap > tol {
            self.failures
                .push(format!("{what}: expected {expected} +/- {tol}, got {actual}"));
        }
    }

    fn exact(&mut self, what: &str, actual: f64, expected: f64) {
        if actual != expected {
            self.failures
                .push(format!("{what}: expected exactly {expected}, got {actual}"));
        }
    }

    fn is_true(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self) {
        let ok = self.failures.is_empty();
        println!(
            "[acceptance] {}: {}",
            self.label,
            if ok { "PASS" } else { "FAIL" }
        );
        assert!(ok, "{}:\n  {}", self.label, self.failures.join("\n  "));
    }
}

// ---------------------------------------------------------------------------
// 1–3: purchase model
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_classical_purchase_figures() {
    let mut c = Checker::new("1 classical purchase figures");
    let p = purchase_params();

    c.close("eoq", eoq(&p).unwrap(), 5223.0, QUANTITY_TOL);
    c.close(
        "tci(5223)",
        tci_eoq(5223.0, &p).unwrap(),
        2762.0,
        PURCHASE_COST_TOL,
    );
    c.close(
        "tci(5000)",
        tci_eoq(5000.0, &p).unwrap(),
        2764.0,
        PURCHASE_COST_TOL,
    );
    c.exact(
        "inventory value at 5223 (whole units)",
        inventory_value_eoq(5223.0, &p, Rounding::WholeUnits).unwrap(),
        5824.0,
    );
    c.exact(
        "inventory value at 5000",
        inventory_value_eoq(5000.0, &p, Rounding::WholeUnits).unwrap(),
        5600.0,
    );
    c.finish();
}

#[test]
fn criterion_2_purchase_switch_to_round_lot() {
    let mut c = Checker::new("2 purchase switch 5223 -> 5000");
    let model = LotModel::Eoq(purchase_params());
    let delta =
        compare_policies(&model, &finance(), 5223.0, 5000.0, Rounding::WholeUnits).unwrap();

    c.close("delta_v", delta.delta_v, 213.2, ROUND_LOT_DELTA_V_TOL);
    c.close("delta_eva", delta.delta_eva, 32.0, ROUND_LOT_DELTA_EVA_TOL);
    // The reference figure 32 is itself a rounding of 31.98.
    c.close("delta_eva (unrounded reference)", delta.delta_eva, 31.98, 1e-6);
    c.finish();
}

#[test]
fn criterion_3_value_based_purchase_quantity() {
    let mut c = Checker::new("3 value-based purchase quantity");
    let p = purchase_params();
    let model = LotModel::Eoq(p);

    c.close("vbeoq", vbeoq(&p, &finance()).unwrap(), 3959.0, QUANTITY_TOL);
    c.close(
        "tci(3959)",
        tci_eoq(3959.0, &p).unwrap(),
        2862.0,
        PURCHASE_COST_TOL,
    );
    let delta =
        compare_policies(&model, &finance(), 5223.0, 3959.0, Rounding::WholeUnits).unwrap();
    c.close("delta_v", delta.delta_v, 725.0, VALUE_LOT_DELTA_V_TOL);
    c.close("delta_eva", delta.delta_eva, 109.0, VALUE_LOT_DELTA_EVA_TOL);
    c.finish();
}

// ---------------------------------------------------------------------------
// 4–7: production model
// ---------------------------------------------------------------------------

#[test]
fn criterion_4_classical_production_figures() {
    let mut c = Checker::new("4 classical production figures");
    let p = production_params();

    let q = poq(&p).unwrap();
    c.close("poq", q, 633.0, QUANTITY_TOL);
    c.close("poq (unrounded reference)", q, 632.46, 5e-3);
    c.close(
        "tci(633)",
        tci_poq(633.0, &p).unwrap(),
        94_868.0,
        PRODUCTION_COST_TOL,
    );
    c.close(
        "tci(570)",
        tci_poq(570.0, &p).unwrap(),
        95_382.0,
        PRODUCTION_COST_TOL,
    );
    c.exact(
        "inventory value at 570",
        inventory_value_poq(570.0, &p, Rounding::Exact).unwrap(),
        171_000.0,
    );
    c.exact(
        "inventory value at 633 (whole units)",
        inventory_value_poq(633.0, &p, Rounding::WholeUnits).unwrap(),
        189_600.0,
    );
    c.finish();
}

#[test]
fn criterion_5_production_switch() {
    let mut c = Checker::new("5 production switch 633 -> 570");
    let model = LotModel::Poq(production_params());
    let delta = compare_policies(&model, &finance(), 633.0, 570.0, Rounding::WholeUnits).unwrap();

    c.close("delta_v", delta.delta_v, 15_824.0, PRODUCTION_DELTA_V_TOL);
    c.close("delta_eva", delta.delta_eva, 2373.66, PRODUCTION_DELTA_EVA_TOL);
    c.finish();
}

#[test]
fn criterion_6_value_based_production_quantity_two_ways() {
    let mut c = Checker::new("6 value-based production quantity, closed form vs scan");
    let p = production_params();

    let closed_form = vbpoq(&p, &finance()).unwrap();
    c.close("vbpoq", closed_form, 479.0, QUANTITY_TOL);

    let scanned = minimize_value_cost(&LotModel::Poq(p), &finance(), None).unwrap();
    c.is_true(
        &format!("scan best_q = {} within 1 of 479", scanned.best_q),
        (scanned.best_q as i64 - 479).abs() <= SCAN_UNIT_TOL,
    );
    c.is_true(
        &format!(
            "both paths agree: round({closed_form}) vs {}",
            scanned.best_q
        ),
        closed_form.round() as u64 == scanned.best_q,
    );
    c.finish();
}

/// Reference sweep rows for the production setting, baseline 633,
/// whole-unit rounding: (q, tci, delta_tci, inv, delta_inv, delta_v,
/// delta_eva).
const REFERENCE_SWEEP: [(u64, f64, f64, f64, f64, f64, f64); 7] = [
    (477, 98_668.0, 3800.0, 143_100.0, -46_500.0, 25_980.0, 3897.0),
    (478, 98_612.0, 3744.0, 143_400.0, -46_200.0, 25_985.0, 3897.0),
    (479, 98_555.0, 3687.0, 143_700.0, -45_900.0, 25_988.0, 3899.0),
    (480, 98_500.0, 3632.0, 144_000.0, -45_600.0, 25_987.0, 3898.0),
    (481, 98_445.0, 3577.0, 144_300.0, -45_300.0, 25_984.0, 3898.0),
    (482, 98_391.0, 3523.0, 144_600.0, -45_000.0, 25_978.0, 3896.0),
    (483, 98_337.0, 3469.0, 144_900.0, -44_700.0, 25_968.0, 3895.0),
];

#[test]
fn criterion_7_production_sweep_matches_reference_table() {
    let mut c = Checker::new("7 production sweep 477..=483 vs reference table");
    let model = LotModel::Poq(production_params());
    let rows = sweep(&model, &finance(), 633.0, 477, 483, Rounding::WholeUnits).unwrap();
    c.is_true("row count is 7", rows.len() == 7);

    for (row, &(q, tci, delta_tci, inv, delta_inv, delta_v, delta_eva)) in
        rows.iter().zip(REFERENCE_SWEEP.iter())
    {
        c.is_true(&format!("row order at {q}"), row.q == q);
        c.close(&format!("tci({q})"), row.tci, tci, SWEEP_TCI_TOL);
        c.exact(&format!("delta_tci({q})"), row.delta_tci, delta_tci);
        c.exact(&format!("inv({q})"), row.inv, inv);
        c.exact(&format!("delta_inv({q})"), row.delta_inv, delta_inv);
        c.close(&format!("delta_v({q})"), row.delta_v, delta_v, SWEEP_DELTA_V_TOL);
        c.close(
            &format!("delta_eva({q})"),
            row.delta_eva,
            delta_eva,
            SWEEP_DELTA_EVA_TOL,
        );
    }

    let best = rows
        .iter()
        .fold(rows[0], |best, row| {
            if row.delta_v > best.delta_v {
                *row
            } else {
                best
            }
        });
    c.is_true(
        &format!("delta_v peaks at 479 (got {})", best.q),
        best.q == 479,
    );
    c.finish();
}

// ---------------------------------------------------------------------------
// 8: property suites
// ---------------------------------------------------------------------------

struct InstanceGenerator {
    rng: ChaCha8Rng,
}

impl InstanceGenerator {
    fn new() -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(SEED),
        }
    }

    /// One randomized instance: matched purchase and production
    /// parameter sets plus a financial context with k > 0.
    fn draw(&mut self) -> (EoqParameters, PoqParameters, FinancialContext) {
        let demand = self.rng.random_range(1e3..=1e6);
        let order_cost = self.rng.random_range(1.0..=1e4);
        let unit_cost = self.rng.random_range(0.1..=1e3);
        let holding_factor = self.rng.random_range(0.05..=0.5);
        let capacity_ratio = self.rng.random_range(2.0..=100.0);
        let tax_rate = self.rng.random_range(0.0..=0.5);
        let cost_of_capital = self.rng.random_range(0.01..=0.4);

        let purchase =
            EoqParameters::new(demand, order_cost, unit_cost, holding_factor, 0.0).unwrap();
        let production = PoqParameters::new(
            demand,
            demand * capacity_ratio,
            order_cost,
            unit_cost,
            holding_factor,
        )
        .unwrap();
        let f = FinancialContext::new(tax_rate, cost_of_capital).unwrap();
        (purchase, production, f)
    }
}

#[test]
fn criterion_8a_scan_agrees_with_closed_forms() {
    let mut c = Checker::new("8a integer scan within 1 unit of the closed forms");
    let mut gen = InstanceGenerator::new();
    for instance in 0..RANDOM_INSTANCES {
        let (p, pp, f) = gen.draw();
        for (model, closed_form) in [
            (LotModel::Eoq(p), vbeoq(&p, &f).unwrap()),
            (LotModel::Poq(pp), vbpoq(&pp, &f).unwrap()),
        ] {
            let scanned = minimize_value_cost(&model, &f, None).unwrap();
            let gap = (scanned.best_q as i64 - closed_form.round() as i64).abs();
            c.is_true(
                &format!(
                    "instance {instance} ({model:?}): scan {} vs closed form {closed_form}",
                    scanned.best_q
                ),
                gap <= SCAN_UNIT_TOL,
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_8b_value_based_quantities_shrink_strictly() {
    let mut c = Checker::new("8b strict shrinkage under a positive capital charge");
    let mut gen = InstanceGenerator::new();
    for instance in 0..RANDOM_INSTANCES {
        let (p, pp, f) = gen.draw();
        c.is_true(
            &format!("instance {instance}: vbeoq < eoq"),
            vbeoq(&p, &f).unwrap() < eoq(&p).unwrap(),
        );
        c.is_true(
            &format!("instance {instance}: vbpoq < poq"),
            vbpoq(&pp, &f).unwrap() < poq(&pp).unwrap(),
        );
    }
    c.finish();
}

#[test]
fn criterion_8c_value_delta_discounts_the_eva_delta() {
    let mut c = Checker::new("8c delta_v * k = delta_eva on all comparisons");
    let mut gen = InstanceGenerator::new();
    for instance in 0..RANDOM_INSTANCES {
        let (p, pp, f) = gen.draw();
        let scale_a = gen.rng.random_range(0.3..=3.0);
        let scale_b = gen.rng.random_range(0.3..=3.0);
        for model in [LotModel::Eoq(p), LotModel::Poq(pp)] {
            let classical = model.classical_quantity().unwrap();
            for rounding in [Rounding::Exact, Rounding::WholeUnits] {
                let delta = compare_policies(
                    &model,
                    &f,
                    classical * scale_a,
                    classical * scale_b,
                    rounding,
                )
                .unwrap();
                let gap = (delta.delta_v * f.cost_of_capital - delta.delta_eva).abs();
                c.is_true(
                    &format!("instance {instance} ({rounding:?}): identity gap {gap}"),
                    gap <= IDENTITY_REL_TOL * delta.delta_eva.abs().max(1.0),
                );
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_8d_zero_capital_charge_reduces_to_classical() {
    let mut c = Checker::new("8d k = 0 reduces the value-based forms to the classical ones");
    let mut gen = InstanceGenerator::new();
    for instance in 0..RANDOM_INSTANCES {
        let (p, pp, f) = gen.draw();
        let degenerate = FinancialContext::new(f.tax_rate, 0.0).unwrap();
        let eoq_gap = (vbeoq(&p, &degenerate).unwrap() - eoq(&p).unwrap()).abs()
            / eoq(&p).unwrap();
        let poq_gap = (vbpoq(&pp, &degenerate).unwrap() - poq(&pp).unwrap()).abs()
            / poq(&pp).unwrap();
        c.is_true(
            &format!("instance {instance}: eoq gap {eoq_gap}, poq gap {poq_gap}"),
            eoq_gap < REDUCTION_REL_TOL && poq_gap < REDUCTION_REL_TOL,
        );
    }
    c.finish();
}

#[test]
fn criterion_8e_infinite_capacity_limit() {
    let mut c = Checker::new("8e poq approaches eoq at m = 1e6 * demand");
    let mut gen = InstanceGenerator::new();
    for instance in 0..RANDOM_INSTANCES {
        let (p, _, _) = gen.draw();
        let production = PoqParameters::new(
            p.demand,
            1e6 * p.demand,
            p.order_cost,
            p.unit_cost,
            p.holding_factor,
        )
        .unwrap();
        let gap = (poq(&production).unwrap() - eoq(&p).unwrap()).abs() / eoq(&p).unwrap();
        c.is_true(
            &format!("instance {instance}: relative gap {gap}"),
            gap < LIMIT_REL_TOL,
        );
    }
    c.finish();
}

#[test]
fn criterion_8f_joint_cost_scaling_invariance() {
    let mut c = Checker::new("8f joint (order cost, unit cost) scaling leaves quantities fixed");
    let mut gen = InstanceGenerator::new();
    for instance in 0..RANDOM_INSTANCES {
        let (p, pp, f) = gen.draw();
        let lambda = 10f64.powf(gen.rng.random_range(-3.0..=3.0));
        let mut scaled_p = p;
        scaled_p.order_cost *= lambda;
        scaled_p.unit_cost *= lambda;
        let mut scaled_pp = pp;
        scaled_pp.setup_cost *= lambda;
        scaled_pp.unit_cost *= lambda;

        let checks = [
            (eoq(&scaled_p).unwrap(), eoq(&p).unwrap()),
            (vbeoq(&scaled_p, &f).unwrap(), vbeoq(&p, &f).unwrap()),
            (poq(&scaled_pp).unwrap(), poq(&pp).unwrap()),
            (vbpoq(&scaled_pp, &f).unwrap(), vbpoq(&pp, &f).unwrap()),
        ];
        for (scaled, original) in checks {
            c.is_true(
                &format!("instance {instance} (lambda {lambda}): {scaled} vs {original}"),
                (scaled - original).abs() / original <= REDUCTION_REL_TOL,
            );
        }
    }
    c.finish();
}
