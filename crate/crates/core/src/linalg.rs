//! Dense exact matrices: rank, null spaces, solves and inverses.
//!
//! Over the rationals rows are first cleared of denominators and reduced
//! with fraction-free (Bareiss) elimination, so intermediate entries stay
//! integral. Prime fields use ordinary Gaussian elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from row-major entries; `entries.len()` must equal `rows * cols`.
    pub fn from_entries(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(LinalgError::DimensionMismatch(format!(
                "entry over {} in a matrix over {field}",
                bad.field()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Matrix::from_entries(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("well-formed literal matrix")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch("vstack column count".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::from_entries(self.field, self.rows + other.rows, self.cols, entries)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{ v : M v = 0 }`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let ech = self.echelon();
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        free_cols
            .iter()
            .map(|&free| ech.back_substitute(self.field, self.cols, free))
            .collect()
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch("right-hand side length".into()));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&(_, c)| c == self.cols) {
            return Ok(None);
        }
        // With the augmented column fixed to 1 the kernel vector solves M x = -b.
        let x = ech.back_substitute(self.field, self.cols + 1, self.cols);
        Ok(Some(x[..self.cols].iter().map(|v| -v).collect()))
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for c in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[c] = self.field.one();
            let x = self.solve(&e)?.ok_or(LinalgError::Singular)?;
            cols.push(x);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for (c, col) in cols.into_iter().enumerate() {
            for (r, v) in col.into_iter().enumerate() {
                inv.set(r, c, v);
            }
        }
        Ok(inv)
    }

    fn echelon(&self) -> Echelon {
        match self.field {
            Field::Rational => self.bareiss_echelon(),
            Field::Prime(_) => self.gauss_echelon(),
        }
    }

    /// Row echelon form over GF(p), pivots normalized to 1.
    fn gauss_echelon(&self) -> Echelon {
        let mut m: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(sel) = (prow..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(prow, sel);
            let inv = m[prow][col].inverse().expect("nonzero pivot");
            for v in m[prow][col..].iter_mut() {
                *v = &*v * &inv;
            }
            for r in prow + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for c in col..self.cols {
                    let sub = &factor * &m[prow][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
            pivots.push((prow, col));
            prow += 1;
        }
        Echelon { rows: m, pivots }
    }

    /// Fraction-free elimination over Z after clearing denominators row by
    /// row. Row scaling does not change the row space, so rank and kernel
    /// are those of the original matrix.
    fn bareiss_echelon(&self) -> Echelon {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, s| {
                    let (_, d) = s.to_fraction();
                    acc.lcm(&d)
                });
                row.iter()
                    .map(|s| {
                        let (n, d) = s.to_fraction();
                        n * (&lcm / d)
                    })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(sel) = (prow..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(prow, sel);
            let pivot = m[prow][col].clone();
            for r in prow + 1..self.rows {
                let lead = m[r][col].clone();
                for c in col..self.cols {
                    let v = (&pivot * &m[r][c] - &lead * &m[prow][c]) / &prev;
                    m[r][c] = v;
                }
            }
            // Columns left of `col` in rows below are already zero.
            prev = pivot;
            pivots.push((prow, col));
            prow += 1;
        }
        let rows = m
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|n| Scalar::Rational(BigRational::from_integer(n)))
                    .collect()
            })
            .collect();
        Echelon { rows, pivots }
    }
}

/// Row echelon form; `pivots` holds `(row, col)` pairs in increasing order.
struct Echelon {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<(usize, usize)>,
}

impl Echelon {
    /// Solve the echelon system with the variable at `free` set to one and
    /// all other non-pivot variables set to zero.
    fn back_substitute(&self, field: Field, width: usize, free: usize) -> Vec<Scalar> {
        let mut x = vec![field.zero(); width];
        x[free] = field.one();
        for &(r, c) in self.pivots.iter().rev() {
            let row = &self.rows[r];
            let mut acc = field.zero();
            for k in c + 1..width {
                if !row[k].is_zero() && !x[k].is_zero() {
                    acc += &(&row[k] * &x[k]);
                }
            }
            x[c] = (-acc).div(&row[c]).expect("pivot is nonzero");
        }
        x
    }
}

/// Whether `vectors` are linearly independent.
pub fn independent(field: Field, vectors: &[Vec<Scalar>]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    let m = Matrix::from_rows(field, vectors.to_vec()).expect("equal-length vectors");
    m.rank() == vectors.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn identity_has_trivial_kernel() {
        for f in [q(), Field::Prime(101)] {
            let m = Matrix::identity(f, 2);
            assert!(m.null_space().is_empty());
            assert_eq!(m.rank(), 2);
        }
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = Matrix::zeros(q(), 2, 2);
        assert_eq!(m.null_space().len(), 2);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn all_ones_rank_one() {
        for f in [q(), Field::Prime(7)] {
            let m = Matrix::from_i64_rows(f, &[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
            assert_eq!(m.rank(), 1);
            assert_eq!(m.null_space().len(), 2);
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_i64_rows(q(), &[&[2, 4, -2, 1], &[1, 2, 3, 0], &[3, 6, 1, 1]]);
        let ns = m.null_space();
        assert_eq!(m.rank() + ns.len(), 4);
        for v in &ns {
            assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
        assert!(independent(q(), &ns));
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_i64_rows(q(), &[&[2, 1], &[1, 1]]);
        let b = vec![q().from_i64(3), q().from_i64(2)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(x, vec![q().from_i64(1), q().from_i64(1)]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let sing = Matrix::from_i64_rows(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
        assert_eq!(sing.solve(&b).unwrap(), None);
    }

    #[test]
    fn fractional_entries() {
        let f = q();
        let half = f.ratio(1, 2).unwrap();
        let m = Matrix::from_rows(
            f,
            vec![vec![half.clone(), f.from_i64(1)], vec![f.from_i64(1), f.from_i64(2)]],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Matrix::from_entries(q(), 2, 2, vec![q().one()]).is_err());
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(q(), 3);
        assert!(a.mul(&b).is_err());
    }
}
