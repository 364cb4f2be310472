//! Empirical tables of `Δ_r(n, m)·n / (2rm)` for `m` just below `t_r(n)`.
//!
//! With `δ = ε²/32` the window is `t_r(n) - ⌈δn²⌉ < m ≤ t_r(n)`. The tables only
//! illustrate the asymptotic behaviour; no threshold `n_0(ε)` is known, so
//! nothing here is asserted.

use serde::Serialize;

use super::record::{Fraction, Mode};
use super::{delta_r_min, RunOptions};
use crate::error::{Error, Result};
use crate::turan::turan_size;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityParams {
    pub r: usize,
    pub n: usize,
    pub epsilon: Fraction,
    /// `ε²/32`.
    pub delta: Fraction,
    pub turan_size: u64,
    /// `t_r(n) - ⌈δn²⌉`, possibly negative.
    pub m_threshold: i64,
    /// `ε < 2/(r(r+1))`, the range in which `δ = ε²/32` is derived; larger `ε`
    /// are covered by any smaller one.
    pub in_normalized_range: bool,
}

impl StabilityParams {
    pub fn new(r: usize, n: usize, epsilon: Fraction) -> Result<Self> {
        if r < 2 || n < r {
            return Err(Error::Argument(format!("need n >= r >= 2, got n = {n}, r = {r}")));
        }
        if epsilon.num == 0 || epsilon.num >= epsilon.den {
            return Err(Error::Argument(format!("epsilon {epsilon} must lie in (0, 1)")));
        }
        let (a, b) = (epsilon.num as u128, epsilon.den as u128);
        let delta = Fraction::new(
            u64::try_from(a * a).map_err(|_| Error::Argument("epsilon too fine".into()))?,
            u64::try_from(32 * b * b).map_err(|_| Error::Argument("epsilon too fine".into()))?,
        )?;
        let t = turan_size(r, n)?;
        // ⌈δn²⌉ = ⌈a²n² / (32b²)⌉
        let n2 = (n * n) as u128;
        let cut = (a * a * n2).div_ceil(32 * b * b);
        let m_threshold = t as i64 - cut as i64;
        // ε < 2/(r(r+1))  ⇔  a·r(r+1) < 2b
        let rr = (r * (r + 1)) as u128;
        Ok(StabilityParams {
            r,
            n,
            epsilon,
            delta,
            turan_size: t,
            m_threshold,
            in_normalized_range: a * rr < 2 * b,
        })
    }

    /// Edge counts in the window, ascending; `m = 0` is left out.
    pub fn window(&self) -> std::ops::RangeInclusive<usize> {
        let lo = (self.m_threshold + 1).max(1) as usize;
        lo..=self.turan_size as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityRow {
    pub m: usize,
    pub delta_min: usize,
    /// `Δ·n / (2rm)`.
    pub ratio: Fraction,
    pub ratio_decimal: String,
    /// `ratio > 1 - ε`.
    pub above_one_minus_epsilon: bool,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub params: StabilityParams,
    pub mode: Mode,
    pub rows: Vec<StabilityRow>,
}

pub fn stability_experiment(params: &StabilityParams, opts: &RunOptions) -> Result<StabilityReport> {
    let (r, n) = (params.r, params.n);
    let eps = params.epsilon;
    let rows = params
        .window()
        .map(|m| {
            let rec = delta_r_min(n, m, r, opts)?;
            let top = (rec.delta_min * n) as u64;
            let bottom = (2 * r * m) as u64;
            let ratio = Fraction::new(top, bottom)?;
            // Δn/(2rm) > (den - num)/den  ⇔  Δn·den > 2rm·(den - num)
            let above = top as u128 * eps.den as u128 > bottom as u128 * (eps.den - eps.num) as u128;
            Ok(StabilityRow {
                m,
                delta_min: rec.delta_min,
                ratio,
                ratio_decimal: ratio.decimal(),
                above_one_minus_epsilon: above,
                witness: rec.witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilityReport {
        params: params.clone(),
        mode: opts.mode,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn parameters() {
        let p = StabilityParams::new(2, 7, frac("1/4")).unwrap();
        assert_eq!(p.delta, Fraction { num: 1, den: 512 });
        assert_eq!(p.turan_size, 12);
        // ⌈49/512⌉ = 1
        assert_eq!(p.m_threshold, 11);
        assert_eq!(p.window(), 12..=12);
        assert!(p.in_normalized_range);

        let p = StabilityParams::new(3, 7, frac("1/4")).unwrap();
        assert!(!p.in_normalized_range);
        assert!(StabilityParams::new(3, 7, frac("1/8")).unwrap().in_normalized_range);

        let p = StabilityParams::new(2, 40, frac("1/4")).unwrap();
        // ⌈1600/512⌉ = 4
        assert_eq!(p.m_threshold, 400 - 4);
    }

    #[test]
    fn epsilon_out_of_range() {
        assert!(StabilityParams::new(2, 7, frac("0")).is_err());
        assert!(StabilityParams::new(2, 7, frac("1")).is_err());
        assert!(StabilityParams::new(2, 7, frac("3/2")).is_err());
        assert!(StabilityParams::new(1, 7, frac("1/4")).is_err());
        assert!(StabilityParams::new(5, 4, frac("1/4")).is_err());
    }

    #[test]
    fn threshold_row_is_at_least_one() {
        let p = StabilityParams::new(2, 7, frac("1/4")).unwrap();
        let rep = stability_experiment(&p, &RunOptions::default()).unwrap();
        let last = rep.rows.last().unwrap();
        assert_eq!(last.m, 12);
        assert!(last.ratio.num >= last.ratio.den);
        assert!(last.above_one_minus_epsilon);
    }

    #[test]
    fn window_below_threshold() {
        // ⌈81·49/3200⌉ = 2, so m ∈ {11, 12}
        let p = StabilityParams::new(2, 7, frac("9/10")).unwrap();
        assert_eq!(p.window(), 11..=12);
        let rep = stability_experiment(&p, &RunOptions::default()).unwrap();
        assert_eq!(rep.rows.len(), 2);
        for row in &rep.rows {
            // independent route: minimum over labeled graphs of the best edge degree sum
            let oracle = crate::extremal::enumerate::enumerate_graphs(7, row.m)
                .unwrap()
                .map(|g| g.edges().map(|(u, v)| g.degree(u) + g.degree(v)).max().unwrap_or(0))
                .min()
                .unwrap();
            assert_eq!(row.delta_min, oracle);
            assert_eq!(row.ratio, Fraction::new((oracle * 7) as u64, (4 * row.m) as u64).unwrap());
        }
    }
}
