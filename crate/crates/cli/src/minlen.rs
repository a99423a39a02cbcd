use rayon::prelude::*;
use serde::Serialize;
use uep_core::bounds::{
    min_length_ts, min_length_uep, ReferenceRow, SplitRule, TsGv, REFERENCE_ROWS,
};

use crate::output::Table;

/// Target `(log₂A, log₂B, d_A, d_B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Target {
    pub log2_a: u32,
    pub log2_b: u32,
    pub d_a: u32,
    pub d_b: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinlenRow {
    #[serde(flatten)]
    pub target: Target,
    pub n_ts_gv: Option<u32>,
    pub n_uep: Option<u32>,
    /// Best-known time-sharing length, an external reference value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext_n_ts_best: Option<u32>,
    /// Optimal linear UEP length, an external reference value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext_n_luep_opt: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

pub fn reference_targets() -> Vec<(Target, ReferenceRow)> {
    REFERENCE_ROWS
        .iter()
        .map(|r| {
            (
                Target {
                    log2_a: r.log2_a,
                    log2_b: r.log2_b,
                    d_a: r.d_a,
                    d_b: r.d_b,
                },
                *r,
            )
        })
        .collect()
}

pub fn compute(
    t: Target,
    reference: Option<&ReferenceRow>,
    gv: TsGv,
    split: SplitRule,
) -> MinlenRow {
    let mut errors = Vec::new();
    let mut keep = |r: uep_core::Result<u32>| r.map_err(|e| errors.push(e.to_string())).ok();
    let n_ts_gv = keep(min_length_ts(t.log2_a, t.log2_b, t.d_a, t.d_b, gv));
    let n_uep = keep(min_length_uep(t.log2_a, t.log2_b, t.d_a, t.d_b, split));
    MinlenRow {
        target: t,
        n_ts_gv,
        n_uep,
        ext_n_ts_best: reference.map(|r| r.n_ts_best),
        ext_n_luep_opt: reference.map(|r| r.n_luep_opt),
        errors,
    }
}

/// All reference rows, evaluated in parallel and returned in table order.
pub fn table1(gv: TsGv, split: SplitRule) -> Vec<MinlenRow> {
    reference_targets()
        .par_iter()
        .map(|(t, r)| compute(*t, Some(r), gv, split))
        .collect()
}

pub fn table(rows: &[MinlenRow]) -> Table {
    let with_ref = rows.iter().any(|r| r.ext_n_ts_best.is_some());
    let mut headers = vec!["log2A", "log2B", "dA", "dB", "n_ts_gv", "n_uep"];
    if with_ref {
        headers.extend(["ext_n_ts_best", "ext_n_luep_opt"]);
    }
    let cell = |v: Option<u32>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut t = Table::new(headers);
    for r in rows {
        let mut row = vec![
            r.target.log2_a.to_string(),
            r.target.log2_b.to_string(),
            r.target.d_a.to_string(),
            r.target.d_b.to_string(),
            cell(r.n_ts_gv),
            cell(r.n_uep),
        ];
        if with_ref {
            row.push(cell(r.ext_n_ts_best));
            row.push(cell(r.ext_n_luep_opt));
        }
        t.push(row);
    }
    t
}
