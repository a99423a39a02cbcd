use std::io::Write;

use serde::Serialize;
use uep_core::bounds::asymptotic_check;
use uep_core::construction::{read_codebook, verify_profile};

use crate::args::{
    AsymArgs, BoundArgs, Cli, Command, ConstructArgs, MinlenArgs, SweepArgs, VerifyArgs,
};
use crate::bound::{self, Settings};
use crate::construct::{build, codebook_text, profile_text};
use crate::error::{CliError, CliResult};
use crate::minlen::{self, Target};
use crate::output::Table;
use crate::sweep::{self, SweepSpec};

/// What a command produced, before formatting.
struct Report {
    table: Table,
    json: serde_json::Value,
    /// Extra text printed after the table in human mode.
    trailer: Option<String>,
    /// Raised after output has been written.
    failure: Option<CliError>,
}

impl Report {
    fn new(table: Table, json: impl Serialize) -> CliResult<Self> {
        Ok(Self {
            table,
            json: serde_json::to_value(json)?,
            trailer: None,
            failure: None,
        })
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Output(e.to_string()))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let report = match &cli.command {
        Command::Bound(a) => bound_cmd(a)?,
        Command::Sweep(a) => sweep_cmd(a)?,
        Command::Minlen(a) => minlen_cmd(a)?,
        Command::Construct(a) => construct_cmd(a, cli.common.seed)?,
        Command::Verify(a) => verify_cmd(a)?,
        Command::Asym(a) => asym_cmd(a)?,
    };
    if let Some(path) = &cli.common.csv {
        report.table.save_csv(path)?;
    }
    if cli.common.json {
        write_out(out, &serde_json::to_string_pretty(&report.json)?)?;
        write_out(out, "\n")?;
    } else {
        let body = match &cli.command {
            // sweeps are plotting data: CSV on stdout
            Command::Sweep(_) => report.table.to_csv_string()?,
            _ => report.table.render(),
        };
        write_out(out, &body)?;
        if let Some(t) = &report.trailer {
            write_out(out, t)?;
        }
    }
    match report.failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn bound_cmd(a: &BoundArgs) -> CliResult<Report> {
    let p = bound::two_level(&a.point)?;
    let settings = Settings::from(&a.options);
    let selected = bound::expand(&a.which);
    let rows: Vec<_> = selected
        .iter()
        .map(|&w| (w, bound::evaluate(&p, w, settings)))
        .collect();
    if let [(_, Err(e))] = rows.as_slice() {
        return Err(e.clone().into());
    }
    let json: Vec<_> = rows.iter().map(|(w, r)| bound::to_json(*w, r)).collect();
    Report::new(bound::table(&rows), json)
}

fn sweep_cmd(a: &SweepArgs) -> CliResult<Report> {
    let rows = SweepSpec::from_args(a)?.run();
    Report::new(sweep::table(&rows), &rows)
}

fn minlen_cmd(a: &MinlenArgs) -> CliResult<Report> {
    let gv = a.ts_gv.into();
    let split = a.split.into();
    let rows = if a.table1 {
        minlen::table1(gv, split)
    } else {
        let missing = || CliError::Usage("give --log2A --log2B --dA --dB or --table1".into());
        let t = Target {
            log2_a: a.log2_a.ok_or_else(missing)?,
            log2_b: a.log2_b.ok_or_else(missing)?,
            d_a: a.d_a.ok_or_else(missing)?,
            d_b: a.d_b.ok_or_else(missing)?,
        };
        let row = minlen::compute(t, None, gv, split);
        if row.n_ts_gv.is_none() && row.n_uep.is_none() {
            let n_ts = uep_core::bounds::min_length_ts(t.log2_a, t.log2_b, t.d_a, t.d_b, gv);
            return Err(n_ts
                .err()
                .map_or_else(|| CliError::Usage(row.errors.join("; ")), Into::into));
        }
        vec![row]
    };
    let mut report = Report::new(minlen::table(&rows), &rows)?;
    if a.table1 {
        report.trailer = Some(
            "ext_* columns are published external reference values, not computed here\n".into(),
        );
    }
    Ok(report)
}

fn construct_cmd(a: &ConstructArgs, seed: Option<u64>) -> CliResult<Report> {
    let built = build(a, seed)?;
    let text = codebook_text(&built);
    let mut t = Table::new(["mode", "n", "shape", "profile"]);
    t.push(vec![
        built.mode.to_string(),
        built.n.to_string(),
        built
            .shape
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        profile_text(&built.profile),
    ]);
    let mut trailer = String::new();
    if let (Some(h), Some(f)) = (built.hosted, built.filled) {
        trailer.push_str(&format!("hosted {h}, filled {f}\n"));
    }
    if let (Some(trial), Some(rows)) = (built.trial, &built.generator) {
        trailer.push_str(&format!("generator found at trial {trial}\n"));
        for r in rows {
            trailer.push_str(r);
            trailer.push('\n');
        }
    }
    match &a.out {
        Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => trailer.push_str(&text),
    }
    let mut report = Report::new(t, &built)?;
    report.trailer = Some(trailer);
    Ok(report)
}

#[derive(Serialize)]
struct VerifyJson {
    n: u32,
    shape: Vec<usize>,
    claimed: Vec<Option<u32>>,
    verified: Vec<Option<u32>>,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    problem: Option<String>,
}

fn verify_cmd(a: &VerifyArgs) -> CliResult<Report> {
    let text = std::fs::read_to_string(&a.file).map_err(|source| CliError::Io {
        path: a.file.display().to_string(),
        source,
    })?;
    let code = read_codebook(&text)?;
    let verified = verify_profile(&code);
    let mut problems = Vec::new();
    for (level, (claim, got)) in code.profile().iter().zip(&verified).enumerate() {
        let overstated = match (claim, got) {
            (Some(c), Some(g)) => c > g,
            (None, Some(_)) => true,
            _ => false,
        };
        if overstated {
            problems.push(format!(
                "level {} claims {} but has {}",
                level + 1,
                profile_text(&[*claim]),
                profile_text(&[*got])
            ));
        }
    }
    if !a.require.is_empty() {
        if a.require.len() != verified.len() {
            return Err(CliError::Usage(format!(
                "--require has {} entries, the code has {} levels",
                a.require.len(),
                verified.len()
            )));
        }
        for (level, (&want, got)) in a.require.iter().zip(&verified).enumerate() {
            if got.is_some_and(|g| g < want) {
                problems.push(format!(
                    "level {} has distance {} < required {want}",
                    level + 1,
                    profile_text(&[*got])
                ));
            }
        }
    }
    let mut t = Table::new(["n", "shape", "claimed", "verified"]);
    t.push(vec![
        code.n().to_string(),
        code.shape()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        profile_text(code.profile()),
        profile_text(&verified),
    ]);
    let problem = (!problems.is_empty()).then(|| problems.join("; "));
    let json = VerifyJson {
        n: code.n(),
        shape: code.shape().to_vec(),
        claimed: code.profile().to_vec(),
        verified,
        ok: problem.is_none(),
        problem: problem.clone(),
    };
    let mut report = Report::new(t, json)?;
    report.failure = problem.map(CliError::Verification);
    Ok(report)
}

fn asym_cmd(a: &AsymArgs) -> CliResult<Report> {
    let r = asymptotic_check(a.beta_a, a.beta_b, a.rate_b, a.n)?;
    let verdict = |b: bool| if b { "pass" } else { "fail" }.to_string();
    let mut t = Table::new(["quantity", "value"]);
    let mut row = |k: &str, v: String| t.push(vec![k.to_string(), v]);
    let num = |x: Option<f64>| match x {
        Some(x) if x.is_finite() => format!("{x:.6}"),
        _ => "-".to_string(),
    };
    row("eta", num(r.eta));
    row("gamma_exponent", num(r.gamma_exponent));
    row("big_gamma_exponent", num(r.big_gamma_exponent));
    row("condition_db_small", verdict(r.condition_db_small));
    row("condition_rate_improve", verdict(r.condition_rate_improve));
    row("volume_hypothesis", verdict(r.volume_hypothesis));
    row("alpha_star", num(r.alpha_star));
    row("gain_exponent", num(Some(r.gain_exponent)));
    row("condition_gain", verdict(r.condition_gain));
    let json = serde_json::json!({
        "beta_a": r.beta_a,
        "beta_b": r.beta_b,
        "rate_b": r.rate_b,
        "eta": r.eta,
        "gamma_exponent": r.gamma_exponent,
        "big_gamma_exponent": r.big_gamma_exponent,
        "condition_db_small": r.condition_db_small,
        "condition_rate_improve": r.condition_rate_improve,
        "volume_hypothesis": r.volume_hypothesis,
        "alpha_star": r.alpha_star,
        "gain_exponent": r.gain_exponent,
        "condition_gain": r.condition_gain,
    });
    Report::new(t, json)
}
