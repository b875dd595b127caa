//! Ordinary least squares for the timing model
//! `time = per_quadric·quadrics + per_comparison·comparisons + constant`.

use thiserror::Error;

use crate::experiment::TimingRecord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FitError {
    #[error("regressors are constant or collinear")]
    RankDeficient,
    #[error("need at least {0} records")]
    TooFewRecords(usize),
}

/// Coefficients in milliseconds; residual in ms².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitResult {
    pub per_comparison: f64,
    pub per_quadric: Option<f64>,
    pub constant: f64,
    pub residual: f64,
    pub samples: usize,
}

impl FitResult {
    pub fn predict(&self, quadrics: f64, comparisons: f64) -> f64 {
        self.per_quadric.unwrap_or(0.0) * quadrics
            + self.per_comparison * comparisons
            + self.constant
    }
}

const NS_PER_MS: f64 = 1e6;

/// Least squares `y ≈ X·β + c` on centered data. Returns `(β, c, Σ residual²)`.
pub fn least_squares(xs: &[Vec<f64>], ys: &[f64]) -> Result<(Vec<f64>, f64, f64), FitError> {
    let n = ys.len();
    let k = xs.first().map_or(0, Vec::len);
    if n < k + 2 {
        return Err(FitError::TooFewRecords(k + 2));
    }
    let mean = |f: &dyn Fn(usize) -> f64| (0..n).map(f).sum::<f64>() / n as f64;
    let xm: Vec<f64> = (0..k).map(|j| mean(&|i| xs[i][j])).collect();
    let ym = mean(&|i| ys[i]);

    // normal equations on centered regressors
    let mut m = vec![vec![0.0; k + 1]; k];
    for i in 0..n {
        for a in 0..k {
            let da = xs[i][a] - xm[a];
            for b in 0..k {
                m[a][b] += da * (xs[i][b] - xm[b]);
            }
            m[a][k] += da * (ys[i] - ym);
        }
    }
    let scale: Vec<f64> = (0..k).map(|a| m[a][a].sqrt()).collect();
    if scale.iter().any(|&s| s == 0.0 || !s.is_finite()) {
        return Err(FitError::RankDeficient);
    }
    // work with the correlation matrix so the pivot test is scale free
    for a in 0..k {
        for b in 0..k {
            m[a][b] /= scale[a] * scale[b];
        }
        m[a][k] /= scale[a];
    }
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&p, &q| m[p][col].abs().total_cmp(&m[q][col].abs()))
            .unwrap();
        if m[pivot][col].abs() < 1e-10 {
            return Err(FitError::RankDeficient);
        }
        m.swap(col, pivot);
        for row in 0..k {
            if row != col {
                let f = m[row][col] / m[col][col];
                for c in col..=k {
                    m[row][c] -= f * m[col][c];
                }
            }
        }
    }
    let beta: Vec<f64> = (0..k).map(|a| m[a][k] / m[a][a] / scale[a]).collect();
    let constant = ym - (0..k).map(|a| beta[a] * xm[a]).sum::<f64>();
    let residual = (0..n)
        .map(|i| {
            let pred = constant + (0..k).map(|a| beta[a] * xs[i][a]).sum::<f64>();
            (ys[i] - pred).powi(2)
        })
        .sum();
    Ok((beta, constant, residual))
}

fn times_ms(records: &[TimingRecord]) -> Vec<f64> {
    records
        .iter()
        .map(|r| r.elapsed_ns as f64 / NS_PER_MS)
        .collect()
}

/// Time against comparison count.
pub fn fit_line(records: &[TimingRecord]) -> Result<FitResult, FitError> {
    let xs: Vec<Vec<f64>> = records
        .iter()
        .map(|r| vec![r.comparisons_escalated as f64])
        .collect();
    let (beta, constant, residual) = least_squares(&xs, &times_ms(records))?;
    Ok(FitResult {
        per_comparison: beta[0],
        per_quadric: None,
        constant,
        residual,
        samples: records.len(),
    })
}

/// Time against quadric count and comparison count.
pub fn fit_plane(records: &[TimingRecord]) -> Result<FitResult, FitError> {
    let xs: Vec<Vec<f64>> = records
        .iter()
        .map(|r| vec![r.quadrics as f64, r.comparisons_escalated as f64])
        .collect();
    let (beta, constant, residual) = least_squares(&xs, &times_ms(records))?;
    Ok(FitResult {
        per_comparison: beta[1],
        per_quadric: Some(beta[0]),
        constant,
        residual,
        samples: records.len(),
    })
}

/// Coefficient of determination of the simple regression of `ys` on `xs`.
pub fn r_squared(xs: &[f64], ys: &[f64]) -> Result<f64, FitError> {
    let cols: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x]).collect();
    let (_, _, residual) = least_squares(&cols, ys)?;
    let ym = ys.iter().sum::<f64>() / ys.len() as f64;
    let total: f64 = ys.iter().map(|y| (y - ym).powi(2)).sum();
    if total == 0.0 {
        return Err(FitError::RankDeficient);
    }
    Ok(1.0 - residual / total)
}

/// `(comparisons, time − per_quadric·quadrics)` in milliseconds.
pub fn adjusted_times(records: &[TimingRecord], fit: &FitResult) -> Vec<(u64, f64)> {
    let q = fit.per_quadric.unwrap_or(0.0);
    records
        .iter()
        .map(|r| {
            (
                r.comparisons_escalated,
                r.elapsed_ns as f64 / NS_PER_MS - q * r.quadrics as f64,
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(quadrics: usize, comps: u64, ms: f64) -> TimingRecord {
        TimingRecord {
            line_index: 0,
            quadrics,
            comparisons_escalated: comps,
            elapsed_ns: (ms * NS_PER_MS).round() as u64,
            error_flag: false,
        }
    }

    #[test]
    fn exact_line() {
        let r: Vec<_> = (0..10).map(|c| rec(5, c, 2.0 * c as f64 + 5.0)).collect();
        let f = fit_line(&r).unwrap();
        assert!((f.per_comparison - 2.0).abs() < 1e-10);
        assert!((f.constant - 5.0).abs() < 1e-10);
        assert!(f.residual < 1e-18);
    }

    #[test]
    fn exact_plane() {
        let mut r = Vec::new();
        for q in [10, 50, 100] {
            for c in 0..7 {
                r.push(rec(q, c, 0.01 * q as f64 + 0.5 * c as f64 + 1.0));
            }
        }
        let f = fit_plane(&r).unwrap();
        assert!((f.per_quadric.unwrap() - 0.01).abs() < 1e-10);
        assert!((f.per_comparison - 0.5).abs() < 1e-10);
        assert!((f.constant - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rank_deficiency() {
        let r: Vec<_> = (0..10).map(|i| rec(5, 3, i as f64)).collect();
        assert_eq!(fit_line(&r), Err(FitError::RankDeficient));
        let r: Vec<_> = (0..10).map(|i| rec(i, i as u64 * 2, i as f64)).collect();
        assert_eq!(fit_plane(&r), Err(FitError::RankDeficient));
        assert_eq!(fit_line(&r[..2]), Err(FitError::TooFewRecords(3)));
    }

    #[test]
    fn perfect_correlation() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [3.0, 5.0, 7.0, 9.0];
        assert!((r_squared(&xs, &ys).unwrap() - 1.0).abs() < 1e-12);
    }
}
