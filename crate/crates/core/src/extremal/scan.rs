use serde::Serialize;

use super::enumerate::check_edge_count;
use super::record::ScanRecord;
use super::{delta_r_min, RunOptions};
use crate::error::{Error, Result};
use crate::turan::turan_size;

/// Position of `m` relative to `t_r(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Below,
    At,
    Above,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    #[serde(flatten)]
    pub record: ScanRecord,
    pub regime: Regime,
    /// `2rm ≤ Δ·n < 2rm + rn`; checked only for exact values with `m ≥ t_r(n)`.
    pub band_holds: Option<bool>,
}

impl ScanRow {
    pub fn violates_band(&self) -> bool {
        self.band_holds == Some(false)
    }
}

/// One record per `m` in `m_from..=m_to`; an empty range gives no rows.
pub fn scan_m(n: usize, r: usize, m_from: usize, m_to: usize, opts: &RunOptions) -> Result<Vec<ScanRow>> {
    if m_from > m_to {
        return Ok(Vec::new());
    }
    check_edge_count(n, m_to)?;
    if r == 0 {
        return Err(Error::Argument("r must be at least 1".into()));
    }
    let t = turan_size(r, n)? as usize;
    (m_from..=m_to)
        .map(|m| {
            let record = delta_r_min(n, m, r, opts)?;
            let regime = match m.cmp(&t) {
                std::cmp::Ordering::Less => Regime::Below,
                std::cmp::Ordering::Equal => Regime::At,
                std::cmp::Ordering::Greater => Regime::Above,
            };
            let band_holds = (record.mode.is_exact() && m >= t && r >= 2 && n >= r)
                .then(|| record.meets_lower_bound() && record.below_upper_bound());
            Ok(ScanRow {
                record,
                regime,
                band_holds,
            })
        })
        .collect()
}

/// Whether the reported minima never decrease as `m` grows.
pub fn is_nondecreasing(rows: &[ScanRow]) -> bool {
    rows.windows(2)
        .all(|w| w[0].record.delta_min <= w[1].record.delta_min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::exact::ExactOptions;
    use crate::extremal::record::Mode;

    fn exhaustive(workers: usize) -> RunOptions {
        RunOptions {
            mode: Mode::Exhaustive,
            exact: ExactOptions { workers, max_graphs: None },
            ..RunOptions::default()
        }
    }

    #[test]
    fn six_vertices_triangles() {
        let rows = scan_m(6, 3, 9, 12, &exhaustive(1)).unwrap();
        let values: Vec<usize> = rows.iter().map(|r| r.record.delta_min).collect();
        assert_eq!(values.first(), Some(&0));
        assert_eq!(values.last(), Some(&12));
        assert_eq!(rows[3].regime, Regime::At);
        assert_eq!(rows[0].regime, Regime::Below);
        assert_eq!(rows[3].band_holds, Some(true));
        assert_eq!(rows[0].band_holds, None);
    }

    #[test]
    fn four_vertices_edges() {
        let rows = scan_m(4, 2, 4, 6, &exhaustive(2)).unwrap();
        let values: Vec<usize> = rows.iter().map(|r| r.record.delta_min).collect();
        assert_eq!(values.last(), Some(&6));
        assert!(rows.iter().all(|r| r.band_holds == Some(true)));
        assert!(is_nondecreasing(&rows));
    }

    #[test]
    fn empty_and_invalid_ranges() {
        assert!(scan_m(4, 2, 5, 4, &exhaustive(1)).unwrap().is_empty());
        assert!(scan_m(4, 2, 0, 7, &exhaustive(1)).is_err());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let a = scan_m(6, 2, 5, 15, &exhaustive(1)).unwrap();
        let b = scan_m(6, 2, 5, 15, &exhaustive(6)).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
