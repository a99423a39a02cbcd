use serde::Serialize;
use uep_core::bounds::{
    eep_bound, gv_classic, gv_improved, hamming_converse, packing_plan, ts_class_a, uep_ball_bound,
    uep_cube_bound, uep_enlargement_bound, uep_union_bound, BoundReport, PackingCount, SplitRule,
    TwoLevelParams,
};
use uep_core::exact::Count;

use crate::args::{BoundOptions, PointArgs, Which};
use crate::output::{fmt_rate, ExactJson, Table};

pub const ALL: [Which; 9] = [
    Which::Classic,
    Which::Improved,
    Which::Union,
    Which::Cube,
    Which::Ball,
    Which::Enlargement,
    Which::Ts,
    Which::Eep,
    Which::Hamming,
];

impl Which {
    pub fn label(self) -> &'static str {
        match self {
            Which::All => "all",
            Which::Classic => "gv_classic",
            Which::Improved => "gv_improved",
            Which::Union => "union",
            Which::Cube => "cube",
            Which::Ball => "ball",
            Which::Enlargement => "enlargement",
            Which::Hamming => "hamming",
            Which::Eep => "eep",
            Which::Ts => "ts_class_a",
        }
    }
}

/// Resolved bound options.
#[derive(Debug, Clone, Copy, Default)]
pub struct Settings {
    pub split: SplitRule,
    pub ms: PackingCount,
}

impl From<&BoundOptions> for Settings {
    fn from(o: &BoundOptions) -> Self {
        Self {
            split: o.split.into(),
            ms: o.ms.into(),
        }
    }
}

pub fn two_level(point: &PointArgs) -> uep_core::Result<TwoLevelParams> {
    match (point.log2_b, point.b) {
        (Some(k), _) => TwoLevelParams::with_log2_b(point.n, k, point.d_a, point.d_b),
        (None, Some(b)) => TwoLevelParams::new(point.n, Count::from(b), point.d_a, point.d_b),
        (None, None) => Err(uep_core::Error::InvalidParams("give --log2B or --B".into())),
    }
}

pub fn evaluate(p: &TwoLevelParams, which: Which, s: Settings) -> uep_core::Result<BoundReport> {
    match which {
        Which::All => Err(uep_core::Error::InvalidParams(
            "`all` is not a single bound".into(),
        )),
        Which::Classic => gv_classic(p.n, p.d_a),
        Which::Improved => gv_improved(p.n, p.d_a),
        Which::Union => Ok(uep_union_bound(p)),
        Which::Cube => uep_cube_bound(p, s.split),
        Which::Ball => uep_ball_bound(p, packing_plan(p)?.count(s.ms)),
        Which::Enlargement => uep_enlargement_bound(p, packing_plan(p)?.count(s.ms)),
        Which::Hamming => Ok(hamming_converse(p)),
        Which::Eep => Ok(eep_bound(p)),
        Which::Ts => ts_class_a(p, s.split),
    }
}

/// Expands `all` and drops repeats, keeping the first occurrence.
pub fn expand(which: &[Which]) -> Vec<Which> {
    let mut out: Vec<Which> = Vec::new();
    for &w in which {
        let items: &[Which] = if w == Which::All {
            &ALL
        } else {
            std::slice::from_ref(&w)
        };
        for &item in items {
            if !out.contains(&item) {
                out.push(item);
            }
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct BoundJson {
    pub bound: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guaranteed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log2_rate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn to_json(which: Which, r: &uep_core::Result<BoundReport>) -> BoundJson {
    match r {
        Ok(r) => BoundJson {
            bound: which.label(),
            direction: Some(r.direction.as_str()),
            exact: Some(ExactJson::from(&r.exact_value)),
            guaranteed: Some(r.guaranteed_size.to_string()),
            log2_rate: r.log2_rate.is_finite().then_some(r.log2_rate),
            error: None,
        },
        Err(e) => BoundJson {
            bound: which.label(),
            direction: None,
            exact: None,
            guaranteed: None,
            log2_rate: None,
            error: Some(e.to_string()),
        },
    }
}

pub fn table(rows: &[(Which, uep_core::Result<BoundReport>)]) -> Table {
    let mut t = Table::new(["bound", "direction", "exact", "guaranteed", "log2_rate"]);
    for (which, r) in rows {
        t.push(match r {
            Ok(r) => vec![
                which.label().to_string(),
                r.direction.as_str().to_string(),
                r.exact_value.to_string(),
                r.guaranteed_size.to_string(),
                fmt_rate(Some(r.log2_rate)),
            ],
            Err(e) => vec![
                which.label().to_string(),
                String::new(),
                format!("({e})"),
                String::new(),
                String::new(),
            ],
        });
    }
    t
}
