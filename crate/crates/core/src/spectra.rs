//! Skew energy, closed-form spectrum predictions for the oriented Kronecker
//! and strong products, and predicted-vs-computed comparison.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{skew_spectrum, IntMatrix};

/// Values at or below this are treated as zero eigenvalues.
pub const NONZERO_THRESHOLD: f64 = 1e-9;
/// Default tolerance for [`compare`].
pub const DEFAULT_TOL: f64 = 1e-8;
// relative gap under which two predicted values are merged
const MERGE_TOL: f64 = 1e-12;

/// Skew eigenvalues `λi` stored by their imaginary parts `λ`, ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkewSpectrum {
    values: Vec<f64>,
}

impl SkewSpectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Sum of `|λ|`.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// The positive members `μ₁ ≥ μ₂ ≥ …` of the `±μ` pairs.
    pub fn positive_values(&self) -> Vec<f64> {
        self.values
            .iter()
            .rev()
            .copied()
            .filter(|&v| v > NONZERO_THRESHOLD)
            .collect()
    }

    /// `{"values": [...], "multiplicity_paired": true}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "values": self.values, "multiplicity_paired": true })
    }
}

/// Predicted spectrum: each entry `(v, k)` stands for `+v` and `-v`, each `k` times.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumPrediction {
    entries: Vec<(f64, usize)>,
    zero_multiplicity: usize,
}

impl SpectrumPrediction {
    /// Merges equal values; zero values fold into the zero multiplicity.
    pub fn new(pairs: impl IntoIterator<Item = (f64, usize)>, zero_multiplicity: usize) -> Self {
        let mut raw: Vec<(f64, usize)> = pairs.into_iter().filter(|&(_, k)| k > 0).collect();
        raw.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut zeros = zero_multiplicity;
        let mut entries: Vec<(f64, usize)> = Vec::new();
        for (v, k) in raw {
            if v == 0.0 {
                zeros += 2 * k;
                continue;
            }
            match entries.last_mut() {
                Some((last, count)) if (v - *last).abs() <= MERGE_TOL * v.abs().max(1.0) => {
                    *count += k
                }
                _ => entries.push((v, k)),
            }
        }
        Self {
            entries,
            zero_multiplicity: zeros,
        }
    }

    pub fn entries(&self) -> &[(f64, usize)] {
        &self.entries
    }

    pub fn zero_multiplicity(&self) -> usize {
        self.zero_multiplicity
    }

    /// `2·Σ multiplicities + zero multiplicity`.
    pub fn order(&self) -> usize {
        2 * self.entries.iter().map(|&(_, k)| k).sum::<usize>() + self.zero_multiplicity
    }

    pub fn energy(&self) -> f64 {
        self.entries.iter().map(|&(v, k)| 2.0 * v * k as f64).sum()
    }

    /// The full multiset, ascending.
    pub fn expand(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order());
        for &(v, k) in &self.entries {
            out.extend(std::iter::repeat_n(v, k));
            out.extend(std::iter::repeat_n(-v, k));
        }
        out.extend(std::iter::repeat_n(0.0, self.zero_multiplicity));
        out.sort_by(f64::total_cmp);
        out
    }
}

/// Sum of the absolute values of the skew eigenvalues of `s`.
pub fn skew_energy(s: &IntMatrix) -> Result<f64> {
    Ok(skew_spectrum(s)?.energy())
}

fn check_inputs(name: &str, values: &[f64], order: usize) -> Result<()> {
    if 2 * values.len() > order {
        return Err(Error::InvalidSpectrum(format!(
            "{} nonzero pairs in {name} exceed order {order}",
            values.len()
        )));
    }
    if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        return Err(Error::InvalidSpectrum(format!(
            "{name} value {v} is not positive"
        )));
    }
    Ok(())
}

/// Spectrum of the oriented Kronecker product from the positive skew
/// eigenvalues `mu` of `H` (order `m`) and `lambda` of `G` (order `n`):
/// `±μⱼλₖ` twice each and `mn − 4rt` zeros.
pub fn predict_kronecker(
    mu: &[f64],
    m: usize,
    lambda: &[f64],
    n: usize,
) -> Result<SpectrumPrediction> {
    check_inputs("mu", mu, m)?;
    check_inputs("lambda", lambda, n)?;
    let (t, r) = (mu.len(), lambda.len());
    let pairs = mu
        .iter()
        .flat_map(|&a| lambda.iter().map(move |&b| (a * b, 2)));
    Ok(SpectrumPrediction::new(pairs, m * n - 4 * r * t))
}

/// Spectrum of the oriented strong product:
/// `±√((μⱼ²+1)(λₖ²+1)−1)` twice each, `±μⱼ` with multiplicity `n − 2r`,
/// `±λₖ` with multiplicity `m − 2t`, and `(m − 2t)(n − 2r)` zeros.
pub fn predict_strong(
    mu: &[f64],
    m: usize,
    lambda: &[f64],
    n: usize,
) -> Result<SpectrumPrediction> {
    check_inputs("mu", mu, m)?;
    check_inputs("lambda", lambda, n)?;
    let (t, r) = (mu.len(), lambda.len());
    let mixed = mu.iter().flat_map(|&a| {
        lambda
            .iter()
            .map(move |&b| (((a * a + 1.0) * (b * b + 1.0) - 1.0).sqrt(), 2))
    });
    let from_h = mu.iter().map(|&a| (a, n - 2 * r));
    let from_g = lambda.iter().map(|&b| (b, m - 2 * t));
    Ok(SpectrumPrediction::new(
        mixed.chain(from_h).chain(from_g),
        (m - 2 * t) * (n - 2 * r),
    ))
}

/// Outcome of [`compare`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub pass: bool,
    pub max_abs_dev: f64,
    pub order: usize,
    pub predicted: Vec<f64>,
    pub computed: Vec<f64>,
}

/// Matches the expanded prediction against the computed spectrum elementwise
/// after sorting both.
pub fn compare(
    prediction: &SpectrumPrediction,
    computed: &SkewSpectrum,
    tol: f64,
) -> Result<ComparisonReport> {
    let predicted = prediction.expand();
    if predicted.len() != computed.order() {
        return Err(Error::OrderMismatch {
            predicted: predicted.len(),
            computed: computed.order(),
        });
    }
    let max_abs_dev = predicted
        .iter()
        .zip(computed.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(ComparisonReport {
        pass: max_abs_dev <= tol,
        max_abs_dev,
        order: predicted.len(),
        predicted,
        computed: computed.values().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const R2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn energy_examples() {
        let c4 =
            IntMatrix::from_rows(&[[0, 1, 0, 1], [-1, 0, 1, 0], [0, -1, 0, 1], [-1, 0, -1, 0]])
                .unwrap();
        assert!((skew_energy(&c4).unwrap() - 4.0 * R2).abs() < 1e-12);
        let k4 =
            IntMatrix::from_rows(&[[0, 1, 1, 1], [-1, 0, -1, 1], [-1, 1, 0, -1], [-1, -1, 1, 0]])
                .unwrap();
        assert!((skew_energy(&k4).unwrap() - 4.0 * 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(skew_energy(&IntMatrix::zeros(5, 5)).unwrap(), 0.0);
    }

    #[test]
    fn kronecker_prediction_for_c4_and_k4() {
        let r3 = 3f64.sqrt();
        let p = predict_kronecker(&[R2, R2], 4, &[r3, r3], 4).unwrap();
        assert_eq!(p.entries().len(), 1);
        assert!((p.entries()[0].0 - 6f64.sqrt()).abs() < 1e-14);
        assert_eq!(p.entries()[0].1, 8);
        assert_eq!(p.zero_multiplicity(), 0);
        assert!((p.energy() - 16.0 * 6f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn kronecker_prediction_small_cases() {
        let p = predict_kronecker(&[], 4, &[1.0], 3).unwrap();
        assert!(p.entries().is_empty());
        assert_eq!(p.zero_multiplicity(), 12);

        let p = predict_kronecker(&[2.0], 2, &[1.0], 2).unwrap();
        assert_eq!(p.entries(), &[(2.0, 2)]);
        assert_eq!(p.zero_multiplicity(), 0);
    }

    #[test]
    fn prediction_rejects_bad_counts() {
        assert!(matches!(
            predict_kronecker(&[1.0, 1.0], 3, &[1.0], 2),
            Err(Error::InvalidSpectrum(_))
        ));
        assert!(matches!(
            predict_strong(&[1.0], 2, &[0.0], 2),
            Err(Error::InvalidSpectrum(_))
        ));
    }

    #[test]
    fn strong_prediction_for_c4_and_k4() {
        let r3 = 3f64.sqrt();
        let p = predict_strong(&[R2, R2], 4, &[r3, r3], 4).unwrap();
        assert_eq!(p.entries().len(), 1);
        assert!((p.entries()[0].0 - 11f64.sqrt()).abs() < 1e-14);
        assert_eq!(p.entries()[0].1, 8);
        assert_eq!(p.zero_multiplicity(), 0);
    }

    #[test]
    fn strong_prediction_with_edgeless_g() {
        let p = predict_strong(&[R2], 3, &[], 4).unwrap();
        assert_eq!(p.entries(), &[(R2, 4)]);
        assert_eq!(p.zero_multiplicity(), 4);
        assert_eq!(p.order(), 12);

        let p = predict_strong(&[], 3, &[], 4).unwrap();
        assert!(p.entries().is_empty());
        assert_eq!(p.zero_multiplicity(), 12);
    }

    #[test]
    fn compare_against_self_is_exact() {
        let p = predict_strong(&[1.5, 0.5], 5, &[2.0], 3).unwrap();
        let report = compare(&p, &SkewSpectrum::from_values(p.expand()), DEFAULT_TOL).unwrap();
        assert!(report.pass);
        assert_eq!(report.max_abs_dev, 0.0);
    }

    #[test]
    fn compare_zero_prediction_with_zero_matrix() {
        let p = SpectrumPrediction::new([], 16);
        let computed = skew_spectrum(&IntMatrix::zeros(16, 16)).unwrap();
        assert!(compare(&p, &computed, DEFAULT_TOL).unwrap().pass);
    }

    #[test]
    fn compare_order_mismatch() {
        let p = SpectrumPrediction::new([], 3);
        let computed = SkewSpectrum::from_values(vec![0.0; 4]);
        assert_eq!(
            compare(&p, &computed, DEFAULT_TOL),
            Err(Error::OrderMismatch {
                predicted: 3,
                computed: 4
            })
        );
    }

    #[test]
    fn compare_detects_deviation() {
        let p = SpectrumPrediction::new([(1.0, 1)], 0);
        let computed = SkewSpectrum::from_values(vec![-1.1, 1.1]);
        let report = compare(&p, &computed, DEFAULT_TOL).unwrap();
        assert!(!report.pass);
        assert!((report.max_abs_dev - 0.1).abs() < 1e-12);
    }

    #[test]
    fn merging_sums_multiplicities() {
        let p = SpectrumPrediction::new([(2.0, 2), (1.0, 1), (2.0, 2), (0.0, 1)], 1);
        assert_eq!(p.entries(), &[(1.0, 1), (2.0, 4)]);
        assert_eq!(p.zero_multiplicity(), 3);
        assert_eq!(p.order(), 13);
    }

    #[test]
    fn positive_values_descending() {
        let s = SkewSpectrum::from_values(vec![-2.0, 1.0, 0.0, 1e-12, 2.0, -1.0]);
        assert_eq!(s.positive_values(), vec![2.0, 1.0]);
    }
}
