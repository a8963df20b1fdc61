//! Text output: small labelled reports for single results, and table/CSV
//! renderings of sweeps.
//!
//! Tables are for reading: money is shown with two decimals and quantities
//! as whole numbers. CSV is for feeding other tools: every float is written
//! with Rust's shortest round-trip formatting so a consumer can parse the
//! file and recover bit-identical values.

use crate::config::ModelConfig;
use lotval::{LotModel, PolicyEvaluation, ScanResult, SweepRow, ValuationDelta};

pub const CSV_HEADER: &str = "q,tci,delta_tci,inv,delta_inv,delta_v,delta_eva";

/// "5000 kg", or just "5000" when no unit is configured.
fn quantity(q: f64, config: &ModelConfig) -> String {
    let rounded = q.round();
    match &config.quantity_unit {
        Some(unit) => format!("{rounded} {unit}"),
        None => format!("{rounded}"),
    }
}

/// "2764.00 $", or just "2764.00" when no currency is configured.
fn money(amount: f64, config: &ModelConfig) -> String {
    match &config.currency {
        Some(currency) => format!("{amount:.2} {currency}"),
        None => format!("{amount:.2}"),
    }
}

fn report(lines: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (label, value) in lines {
        out.push_str(&format!("{label:<22}{value}\n"));
    }
    out
}

fn quantity_label(model: &LotModel, value_based: bool) -> &'static str {
    match (model, value_based) {
        (LotModel::Eoq(_), false) => "EOQ",
        (LotModel::Eoq(_), true) => "VBEOQ",
        (LotModel::Poq(_), false) => "POQ",
        (LotModel::Poq(_), true) => "VBPOQ",
    }
}

/// One-line result for the `classical` and `value-based` subcommands,
/// e.g. `EOQ = 5223.025941735312 (rounded: 5223 kg)`.
pub fn optimum(q: f64, config: &ModelConfig, value_based: bool) -> String {
    let label = quantity_label(&config.model, value_based);
    format!("{label} = {q} (rounded: {})\n", quantity(q, config))
}

pub fn evaluation(eval: &PolicyEvaluation, config: &ModelConfig) -> String {
    report(&[
        ("lot size", quantity(eval.quantity, config)),
        ("total periodic cost", money(eval.tci, config)),
        ("inventory value", money(eval.inventory_value, config)),
        ("value-adjusted cost", money(eval.value_cost, config)),
    ])
}

pub fn comparison(
    delta: &ValuationDelta,
    baseline_q: f64,
    alternative_q: f64,
    config: &ModelConfig,
) -> String {
    let switch = format!(
        "{} -> {}",
        quantity(baseline_q, config),
        quantity(alternative_q, config)
    );
    report(&[
        ("switch", switch),
        ("delta total cost", money(delta.delta_tci, config)),
        ("delta inventory", money(delta.delta_inventory, config)),
        ("delta firm value", money(delta.delta_v, config)),
        ("delta EVA", money(delta.delta_eva, config)),
    ])
}

pub fn scan(result: &ScanResult, config: &ModelConfig) -> String {
    let (lo, hi) = result.scanned_range;
    report(&[
        ("scanned range", format!("[{lo}, {hi}]")),
        ("best lot size", quantity(result.best_q as f64, config)),
        ("value-adjusted cost", money(result.best_value_cost, config)),
    ])
}

fn sweep_cells(row: &SweepRow) -> [String; 7] {
    [
        row.q.to_string(),
        format!("{:.2}", row.tci),
        format!("{:.2}", row.delta_tci),
        format!("{:.2}", row.inv),
        format!("{:.2}", row.delta_inv),
        format!("{:.2}", row.delta_v),
        format!("{:.2}", row.delta_eva),
    ]
}

/// Right-aligned columns sized to their widest entry.
pub fn sweep_table(rows: &[SweepRow]) -> String {
    let headers = CSV_HEADER.split(',').collect::<Vec<_>>();
    let cells: Vec<[String; 7]> = rows.iter().map(sweep_cells).collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(col, header)| {
            cells
                .iter()
                .map(|row| row[col].len())
                .chain([header.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = String::new();
    let mut push_row = |cols: &[&str]| {
        let line = cols
            .iter()
            .zip(&widths)
            .map(|(cell, width)| format!("{cell:>width$}"))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    };
    push_row(&headers);
    for row in &cells {
        let cols: Vec<&str> = row.iter().map(String::as_str).collect();
        push_row(&cols);
    }
    out
}

/// Machine-readable sweep: fixed header, one row per lot size, floats in
/// shortest round-trip form.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.q, row.tci, row.delta_tci, row.inv, row.delta_inv, row.delta_v, row.delta_eva
        ));
    }
    out
}
