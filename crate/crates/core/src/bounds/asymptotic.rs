//! Exponent-level conditions for large blocklengths, with distances and the
//! class-B rate given as fractions of `n`.

use super::gv::{gv_improved, uep_union_bound};
use super::two_level::{ts_allocation, SplitRule};
use super::TwoLevelParams;
use crate::combinatorics::{binary_entropy, binary_entropy_inv};
use crate::exact::{pow2, rational_to_f64};
use crate::{Error, Result};

/// Growth exponent of `V(n, xn)`: `h(x)` up to `x = 1/2`, then `1`.
fn volume_exponent(x: f64) -> f64 {
    if x >= 0.5 {
        1.0
    } else {
        binary_entropy(x.max(0.0)).expect("x in [0, 1/2)")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    /// `h⁻¹(R_B + h(β_B))`, the normalized hosting-ball radius; `None` when
    /// `R_B + h(β_B) > 1` and no hosting ball exists.
    pub eta: Option<f64>,
    /// `R_B + h(β_A) − h(β_A + η)`.
    pub gamma_exponent: Option<f64>,
    /// `R_B + h(β_A) − h(β_A + 2η)`.
    pub big_gamma_exponent: Option<f64>,
    /// `gamma_exponent > 0`: the enlargement gain over the union bound is a
    /// `1 − o(1)` fraction of the packing count.
    pub condition_db_small: bool,
    /// `big_gamma_exponent > 0`: the enlargement bound improves the rate.
    pub condition_rate_improve: bool,
    /// `B·V(n, d_A) ≤ 2ⁿ` at exponent level, `R_B + h(β_A) ≤ 1`.
    pub volume_hypothesis: bool,
    /// Time-sharing split `n_A / n` at the evaluated length, if one exists.
    pub alpha_star: Option<f64>,
    /// `α h(β_A/α) + (1−α) h(β_B/(1−α)) − h(β_A)`.
    pub gain_exponent: f64,
    /// Range hypotheses `β_A ≤ α/2`, `β_B ≤ min((1−α)/2, β_A)` together with
    /// a positive gain exponent: UEP beats time-sharing exponentially.
    pub condition_gain: bool,
    pub beta_a: f64,
    pub beta_b: f64,
    pub rate_b: f64,
}

/// Evaluates the exponent conditions for `d_A = β_A n`, `d_B = β_B n`,
/// `B = 2^{R_B n}`. The length `n` only enters through the time-sharing split `α*`.
pub fn asymptotic_check(beta_a: f64, beta_b: f64, rate_b: f64, n: u32) -> Result<AsymptoticReport> {
    let valid = beta_b > 0.0 && beta_b <= beta_a && beta_a < 0.5;
    if !valid {
        return Err(Error::Domain(format!(
            "need 0 < beta_B <= beta_A < 1/2, got beta_A = {beta_a}, beta_B = {beta_b}"
        )));
    }
    if !(0.0..=1.0).contains(&rate_b) {
        return Err(Error::Domain(format!("R_B = {rate_b} is outside [0, 1]")));
    }
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let target = rate_b + binary_entropy(beta_b)?;
    let eta = if target <= 1.0 {
        Some(binary_entropy_inv(target)?)
    } else {
        None
    };
    let h_a = binary_entropy(beta_a)?;
    let gamma_exponent = eta.map(|eta| rate_b + h_a - volume_exponent(beta_a + eta));
    let big_gamma_exponent = eta.map(|eta| rate_b + h_a - volume_exponent(beta_a + 2.0 * eta));

    let log2_b = (rate_b * n as f64).round() as u32;
    let d_b = ((beta_b * n as f64).round() as u32).max(1);
    let alpha_star = ts_allocation(n, &pow2(log2_b), d_b, SplitRule::Strict)
        .ok()
        .map(|a| a.alpha_star);
    let (gain_exponent, condition_gain) = match alpha_star {
        Some(alpha) if alpha > 0.0 && alpha < 1.0 => {
            let f = alpha * volume_exponent(beta_a / alpha)
                + (1.0 - alpha) * volume_exponent(beta_b / (1.0 - alpha))
                - h_a;
            let in_range = beta_a <= alpha / 2.0 && beta_b <= ((1.0 - alpha) / 2.0).min(beta_a);
            (f, in_range && f > 0.0)
        }
        _ => (f64::NAN, false),
    };

    Ok(AsymptoticReport {
        eta,
        gamma_exponent,
        big_gamma_exponent,
        condition_db_small: gamma_exponent.is_some_and(|g| g > 0.0),
        condition_rate_improve: big_gamma_exponent.is_some_and(|g| g > 0.0),
        volume_hypothesis: rate_b + h_a <= 1.0,
        alpha_star,
        gain_exponent,
        condition_gain,
        beta_a,
        beta_b,
        rate_b,
    })
}

/// Union-bound size over time-sharing size at fixed distances, exact and
/// via `(α*)^{d_A−1}(1−α*)^{d_B−1} n^{d_B−1} / (d_B−1)!`.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedDistanceRatio {
    pub exact: f64,
    pub approx: f64,
    pub alpha_star: f64,
}

pub fn ratio_fixed_distance(p: &TwoLevelParams) -> Result<FixedDistanceRatio> {
    let alloc = ts_allocation(p.n, &p.b, p.d_b, SplitRule::Strict)?;
    let ts = gv_improved(alloc.n_a, p.d_a)?;
    let union = uep_union_bound(p);
    let exact = rational_to_f64(&(union.exact_value / ts.exact_value));
    let alpha = alloc.alpha_star;
    let k = p.d_b - 1;
    let factorial: f64 = (1..=k).map(f64::from).product();
    let approx =
        alpha.powi(p.d_a as i32 - 1) * (1.0 - alpha).powi(k as i32) * (p.n as f64).powi(k as i32)
            / factorial;
    Ok(FixedDistanceRatio {
        exact,
        approx,
        alpha_star: alpha,
    })
}
