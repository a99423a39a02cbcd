use rayon::prelude::*;
use serde::Serialize;
use uep_core::bounds::{
    eep_bound, hamming_converse, packing_plan, ts_class_a, uep_ball_bound, uep_cube_bound,
    uep_enlargement_bound, BoundReport, TwoLevelParams,
};

use crate::args::{Param, SweepArgs};
use crate::bound::Settings;
use crate::error::{CliError, CliResult};
use crate::output::{fmt_rate, Table};

pub const COLUMNS: [&str; 8] = [
    "value",
    "a1_rate",
    "a2_rate",
    "a3_rate",
    "max_uep_rate",
    "ts_rate",
    "eep_rate",
    "hamming_rate",
];

/// One sweep point; `None` marks a bound that is infeasible there.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub value: u32,
    pub a1_rate: Option<f64>,
    pub a2_rate: Option<f64>,
    pub a3_rate: Option<f64>,
    pub max_uep_rate: Option<f64>,
    pub ts_rate: Option<f64>,
    pub eep_rate: Option<f64>,
    pub hamming_rate: Option<f64>,
}

fn rate(r: uep_core::Result<BoundReport>) -> Option<f64> {
    r.ok().map(|r| r.log2_rate).filter(|x| x.is_finite())
}

/// Rates of every bound at one point.
pub fn point_rates(value: u32, p: Option<&TwoLevelParams>, s: Settings) -> SweepRow {
    let Some(p) = p else {
        return SweepRow {
            value,
            a1_rate: None,
            a2_rate: None,
            a3_rate: None,
            max_uep_rate: None,
            ts_rate: None,
            eep_rate: None,
            hamming_rate: None,
        };
    };
    let plan = packing_plan(p);
    let a1 = rate(uep_cube_bound(p, s.split));
    let a2 = rate(
        plan.clone()
            .and_then(|plan| uep_ball_bound(p, plan.count(s.ms))),
    );
    let a3 = rate(plan.and_then(|plan| uep_enlargement_bound(p, plan.count(s.ms))));
    let max_uep = [a1, a2, a3].into_iter().flatten().reduce(f64::max);
    SweepRow {
        value,
        a1_rate: a1,
        a2_rate: a2,
        a3_rate: a3,
        max_uep_rate: max_uep,
        ts_rate: rate(ts_class_a(p, s.split)),
        eep_rate: rate(Ok(eep_bound(p))),
        hamming_rate: rate(Ok(hamming_converse(p))),
    }
}

/// Fixed parameters of a sweep; the varied one is filled per point.
#[derive(Debug, Clone, Copy)]
pub struct SweepSpec {
    pub vary: Param,
    pub start: u32,
    pub stop: u32,
    pub step: u32,
    pub n: Option<u32>,
    pub log2_b: Option<u32>,
    pub d_a: Option<u32>,
    pub d_b: Option<u32>,
    pub settings: Settings,
}

impl SweepSpec {
    pub fn from_args(a: &SweepArgs) -> CliResult<Self> {
        let spec = Self {
            vary: a.vary,
            start: a.start,
            stop: a.stop,
            step: a.step,
            n: a.n,
            log2_b: a.log2_b,
            d_a: a.d_a,
            d_b: a.d_b,
            settings: Settings::from(&a.options),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.step == 0 {
            return Err(CliError::Usage("--step must be positive".into()));
        }
        if self.start > self.stop {
            return Err(CliError::Usage(
                "empty range: --start exceeds --stop".into(),
            ));
        }
        let fixed = [
            (Param::N, self.n, "--n"),
            (Param::Log2B, self.log2_b, "--log2B"),
            (Param::DA, self.d_a, "--dA"),
            (Param::DB, self.d_b, "--dB"),
        ];
        for (param, value, flag) in fixed {
            if param != self.vary && value.is_none() {
                return Err(CliError::Usage(format!(
                    "{flag} is required unless it is swept"
                )));
            }
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<u32> {
        (self.start..=self.stop)
            .step_by(self.step as usize)
            .collect()
    }

    pub fn params_at(&self, v: u32) -> Option<TwoLevelParams> {
        let pick =
            |param: Param, fixed: Option<u32>| if self.vary == param { Some(v) } else { fixed };
        TwoLevelParams::with_log2_b(
            pick(Param::N, self.n)?,
            pick(Param::Log2B, self.log2_b)?,
            pick(Param::DA, self.d_a)?,
            pick(Param::DB, self.d_b)?,
        )
        .ok()
    }

    /// Evaluates all points in parallel; rows come back in range order.
    pub fn run(&self) -> Vec<SweepRow> {
        self.values()
            .into_par_iter()
            .map(|v| point_rates(v, self.params_at(v).as_ref(), self.settings))
            .collect()
    }
}

pub fn table(rows: &[SweepRow]) -> Table {
    let mut t = Table::new(COLUMNS);
    for r in rows {
        t.push(vec![
            r.value.to_string(),
            fmt_rate(r.a1_rate),
            fmt_rate(r.a2_rate),
            fmt_rate(r.a3_rate),
            fmt_rate(r.max_uep_rate),
            fmt_rate(r.ts_rate),
            fmt_rate(r.eep_rate),
            fmt_rate(r.hamming_rate),
        ]);
    }
    t
}
