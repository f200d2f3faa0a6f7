use std::fmt;

use crate::error::{Error, Result};

/// Dense row-major matrix of exact integers.
///
/// All arithmetic is checked; any intermediate that leaves the `i64` range
/// surfaces as [`Error::Overflow`] instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    /// `value` times the `n × n` identity.
    pub fn scalar(n: usize, value: i64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = value;
        }
        m
    }

    /// `diag(+1, …, +1, −1, …, −1)` with `m1` positive and `m2` negative entries.
    pub fn signed_identity(m1: usize, m2: usize) -> Self {
        Self::diagonal(std::iter::repeat_n(1, m1).chain(std::iter::repeat_n(-1, m2)))
    }

    pub fn diagonal(entries: impl IntoIterator<Item = i64>) -> Self {
        let entries: Vec<i64> = entries.into_iter().collect();
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.into_iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|&v| v.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { data, ..*self })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "sub", i64::checked_sub)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &str,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { data, ..*self })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "matmul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    let p = a.checked_mul(b).ok_or(Error::Overflow)?;
                    *slot = slot.checked_add(p).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(out)
    }

    /// `result[(i·p+k)][(j·q+l)] = self[i][j] · other[k][l]` where `other` is `p × q`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        let (p, q) = (other.rows, other.cols);
        let rows = self.rows.checked_mul(p).ok_or(Error::Overflow)?;
        let cols = self.cols.checked_mul(q).ok_or(Error::Overflow)?;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        out.data[(i * p + k) * cols + j * q + l] =
                            a.checked_mul(other.get(k, l)).ok_or(Error::Overflow)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Assemble `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch(
                "from_blocks: blocks do not tile".into(),
            ));
        }
        let (top, left) = (a.rows, a.cols);
        Ok(Self::from_fn(
            a.rows + c.rows,
            a.cols + b.cols,
            |i, j| match (i < top, j < left) {
                (true, true) => a.get(i, j),
                (true, false) => b.get(i, j - left),
                (false, true) => c.get(i - top, j),
                (false, false) => d.get(i - top, j - left),
            },
        ))
    }

    /// Copy of the rectangular block starting at `(row, col)`.
    pub fn submatrix(&self, row: usize, col: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(row + i, col + j))
    }

    /// Block-diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_fn(
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j),
                (false, false) => other.get(i - self.rows, j - self.cols),
                _ => 0,
            },
        )
    }

    /// First `(i, j)` in row-major order with `self[i][j] != -self[j][i]`.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if self.get(i, j) != -self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.skew_violation().is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn ensure_skew_symmetric(&self) -> Result<()> {
        match self.skew_violation() {
            None => Ok(()),
            Some((i, j)) => Err(Error::NotSkewSymmetric(i, j)),
        }
    }

    pub fn trace(&self) -> Result<i64> {
        (0..self.rows.min(self.cols)).try_fold(0i64, |acc, i| {
            acc.checked_add(self.get(i, i)).ok_or(Error::Overflow)
        })
    }

    /// Row `i` of `selfᵀ · self`, accumulated from the column supports only.
    ///
    /// `columns[c]` lists the nonzero `(row, value)` pairs of column `c`.
    fn gram_row(&self, i: usize, columns: &[Vec<(usize, i64)>], acc: &mut [i64]) -> Result<()> {
        acc.iter_mut().for_each(|v| *v = 0);
        for &(k, a) in &columns[i] {
            for (j, &b) in self.row(k).iter().enumerate() {
                if b != 0 {
                    let p = a.checked_mul(b).ok_or(Error::Overflow)?;
                    acc[j] = acc[j].checked_add(p).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(())
    }

    fn column_supports(&self) -> Vec<Vec<(usize, i64)>> {
        let mut columns = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, &v) in self.row(i).iter().enumerate() {
                if v != 0 {
                    columns[j].push((i, v));
                }
            }
        }
        columns
    }

    /// `selfᵀ · self`.
    pub fn gram(&self) -> Result<Self> {
        let columns = self.column_supports();
        let mut out = Self::zeros(self.cols, self.cols);
        let mut acc = vec![0; self.cols];
        for i in 0..self.cols {
            self.gram_row(i, &columns, &mut acc)?;
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(&acc);
        }
        Ok(out)
    }

    /// First entry in row-major order where `selfᵀ · self` differs from
    /// `value · I`, as `(i, j, actual)`.
    ///
    /// Works row by row in O(cols) memory, so it stays cheap for large sparse
    /// ±1 matrices.
    pub fn gram_scalar_violation(&self, value: i64) -> Result<Option<(usize, usize, i64)>> {
        let columns = self.column_supports();
        let mut acc = vec![0; self.cols];
        for i in 0..self.cols {
            self.gram_row(i, &columns, &mut acc)?;
            for (j, &v) in acc.iter().enumerate() {
                let expected = if i == j { value } else { 0 };
                if v != expected {
                    return Ok(Some((i, j, v)));
                }
            }
        }
        Ok(None)
    }

    /// Rows as comma-separated integers, one per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_f64(&self) -> super::FloatMatrix {
        super::FloatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) as f64)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}
