use crate::error::{Error, Result};
use crate::spectra::SkewSpectrum;

use super::IntMatrix;

/// Stop once the off-diagonal Frobenius norm drops below this.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Sweep budget before reporting non-convergence.
pub const MAX_SWEEPS: usize = 100;
/// Eigenvalues of a PSD matrix below this are reported as exactly zero.
pub const PSD_CLAMP: f64 = 1e-10;
/// Entrywise asymmetry accepted by the solver.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Dense row-major `f64` matrix; workspace for the eigensolver.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self::from_fn(rows.len(), cols, |i, j| rows[i].as_ref()[j]))
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i] } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    let v = self.get(i, j);
                    sum += v * v;
                }
            }
        }
        sum.sqrt()
    }

    fn check_symmetric(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "eigenvalues of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if (self.get(i, j) - self.get(j, i)).abs() > SYMMETRY_TOL {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }
}

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(m: &FloatMatrix) -> Result<Vec<f64>> {
    m.check_symmetric()?;
    let n = m.rows();
    // work on the exactly symmetrized copy
    let mut a = FloatMatrix::from_fn(n, n, |i, j| 0.5 * (m.get(i, j) + m.get(j, i)));

    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        let off = a.off_diagonal_norm();
        if off < OFF_DIAGONAL_TOL {
            converged = true;
            break;
        }
        // early sweeps skip small pivots; later sweeps flush negligible ones
        let threshold = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let guard = 100.0 * apq.abs();
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                if sweep > 3 && app.abs() + guard == app.abs() && aqq.abs() + guard == aqq.abs() {
                    a.set(p, q, 0.0);
                    a.set(q, p, 0.0);
                    continue;
                }
                if apq.abs() <= threshold || apq == 0.0 {
                    continue;
                }
                rotate(&mut a, p, q);
            }
        }
    }
    if !converged {
        let residual = a.off_diagonal_norm();
        if residual >= OFF_DIAGONAL_TOL {
            return Err(Error::NonConvergence { residual });
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Zero out `a[p][q]` with one Jacobi rotation.
fn rotate(a: &mut FloatMatrix, p: usize, q: usize) {
    let n = a.rows();
    let apq = a.get(p, q);
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a.set(k, p, new_kp);
        a.set(p, k, new_kp);
        a.set(k, q, new_kq);
        a.set(q, k, new_kq);
    }
}

/// Eigenvalues of a positive semidefinite matrix, with values below
/// [`PSD_CLAMP`] (including small negative rounding noise) set to zero.
pub fn psd_eigenvalues(m: &FloatMatrix) -> Result<Vec<f64>> {
    let mut values = symmetric_eigenvalues(m)?;
    for v in &mut values {
        if *v < PSD_CLAMP {
            *v = 0.0;
        }
    }
    Ok(values)
}

/// Imaginary parts of the eigenvalues of a skew-symmetric integer matrix.
///
/// The eigenvalues of `SᵀS` are the squared singular values, each nonzero one
/// with even multiplicity. Taking them in descending pairs gives the `±σ`
/// couples of the skew spectrum; an odd order leaves one trailing zero.
pub fn skew_spectrum(s: &IntMatrix) -> Result<SkewSpectrum> {
    s.ensure_skew_symmetric()?;
    let n = s.rows();
    let gram = s.gram()?.to_f64();
    let mut squares = psd_eigenvalues(&gram)?;
    squares.reverse();

    let mut values = Vec::with_capacity(n);
    for pair in squares.chunks(2) {
        if let [a, b] = pair {
            let sigma = (0.5 * (a + b)).sqrt();
            values.push(sigma);
            values.push(if sigma == 0.0 { 0.0 } else { -sigma });
        } else {
            values.push(0.0);
        }
    }
    Ok(SkewSpectrum::from_values(values))
}
