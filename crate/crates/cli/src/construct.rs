use serde::Serialize;
use uep_core::bounds::{TwoLevelParams, UepParams};
use uep_core::construction::{
    ball_construction, cube_construction, greedy_multilevel, random_luep_search, verify_profile,
    write_codebook, LevelDistance, LinearSearchParams, UepCode,
};
use uep_core::exact::Count;

use crate::args::{ConstructArgs, Mode};
use crate::bound::Settings;
use crate::error::{CliError, CliResult};

#[derive(Debug, Serialize)]
pub struct Built {
    pub mode: &'static str,
    pub n: u32,
    pub shape: Vec<usize>,
    /// Verified profile; `None` for a level with a single message.
    pub profile: Vec<Option<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hosted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filled: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<String>>,
    #[serde(skip)]
    pub code: Option<UepCode>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, mode: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("{flag} is required for --mode {mode}")))
}

fn two_level(a: &ConstructArgs, mode: &str) -> CliResult<TwoLevelParams> {
    let d_a = need(a.d_a, "--dA", mode)?;
    let d_b = need(a.d_b, "--dB", mode)?;
    Ok(match (a.log2_b, a.b) {
        (Some(k), _) => TwoLevelParams::with_log2_b(a.n, k, d_a, d_b)?,
        (None, Some(b)) => TwoLevelParams::new(a.n, Count::from(b), d_a, d_b)?,
        (None, None) => {
            return Err(CliError::Usage(format!(
                "--log2B or --B is required for --mode {mode}"
            )))
        }
    })
}

pub fn profile_text(profile: &[LevelDistance]) -> String {
    profile
        .iter()
        .map(|d| d.map_or_else(|| "inf".to_string(), |d| d.to_string()))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn build(a: &ConstructArgs, seed: Option<u64>) -> CliResult<Built> {
    let settings = Settings::from(&a.options);
    let finish = |mode: &'static str, code: UepCode| Built {
        mode,
        n: code.n(),
        shape: code.shape().to_vec(),
        profile: verify_profile(&code),
        hosted: None,
        filled: None,
        trial: None,
        generator: None,
        code: Some(code),
    };
    match a.mode {
        Mode::Greedy => {
            if a.shape.is_empty() || a.profile.is_empty() {
                return Err(CliError::Usage(
                    "--shape and --profile are required for --mode greedy".into(),
                ));
            }
            let p = UepParams::new(
                a.n,
                a.shape.iter().map(|&x| Count::from(x)).collect(),
                a.profile.clone(),
            )?;
            Ok(finish("greedy", greedy_multilevel(&p, None)?))
        }
        Mode::Luep => {
            let seed =
                seed.ok_or_else(|| CliError::Usage("--seed is required for --mode luep".into()))?;
            let q = LinearSearchParams {
                n: a.n,
                k_a: need(a.k_a, "--kA", "luep")?,
                k_b: need(a.k_b, "--kB", "luep")?,
                d_a: need(a.d_a, "--dA", "luep")?,
                d_b: need(a.d_b, "--dB", "luep")?,
                seed,
                max_trials: a.max_trials,
            };
            let found = random_luep_search(&q)?;
            let mut built = finish("luep", found.code.to_uep_code()?);
            built.trial = Some(found.trial);
            built.generator = Some(found.code.rows.iter().map(|r| r.to_string()).collect());
            Ok(built)
        }
        Mode::Cube | Mode::Ball => {
            let (label, assembled) = if a.mode == Mode::Cube {
                (
                    "cube",
                    cube_construction(&two_level(a, "cube")?, settings.split)?,
                )
            } else {
                (
                    "ball",
                    ball_construction(&two_level(a, "ball")?, settings.ms)?,
                )
            };
            let mut built = finish(label, assembled.code);
            built.hosted = Some(assembled.hosted);
            built.filled = Some(assembled.filled);
            Ok(built)
        }
    }
}

pub fn codebook_text(b: &Built) -> String {
    b.code.as_ref().map(write_codebook).unwrap_or_default()
}
