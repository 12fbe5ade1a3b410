//! Dense matrices of arbitrary-precision integers.
//!
//! Everything here is exact: entries are [`BigInt`], determinants come from
//! fraction-free elimination, and the Kronecker product keeps the block
//! arrangement `(b_ij · A)` used throughout the invertibility analysis.

mod det;
mod invertibility;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use det::{determinant, determinant_oracle, MAX_ORACLE_SIZE};
pub use invertibility::{
    check_invertibility_classification, dependency_witness, is_star, predicted_invertible,
    star_block, star_product_determinant_probe, tree_edge_power_matrix, InvertibilityCheck, RowDependency, StarProbe,
    MAX_MATRIX_SIDE,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Input("matrix dimensions must be positive".into()));
        }
        Ok(IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] })
    }

    pub fn identity(size: usize) -> Result<Self> {
        let mut m = Self::zeros(size, size)?;
        for i in 0..size {
            m.data[i * size + i] = BigInt::one();
        }
        Ok(m)
    }

    pub fn from_fn<F, T>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> T,
        T: Into<BigInt>,
    {
        let mut m = Self::zeros(rows, cols)?;
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j).into();
            }
        }
        Ok(m)
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self>
    where
        T: Clone + Into<BigInt>,
    {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Input("rows have different lengths".into()));
        }
        Self::from_fn(rows.len(), cols, |i, j| rows[i][j].clone())
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.data[i * self.cols + j] = value.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, factor: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Entries of every row as decimal strings.
    pub fn to_decimal_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }

    pub(crate) fn entries(&self) -> &[BigInt] {
        &self.data
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// Kronecker product in block form: block `(i, j)` of the result is `b[i][j] · a`.
///
/// For `a` of shape `m×n` and `b` of shape `p×q` the result is `mp×nq`. This
/// places the blocks by the entries of the *second* factor, which is the
/// transpose of the more common arrangement; determinant identities do not
/// depend on the choice.
pub fn kronecker_matrix(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut data = Vec::with_capacity(rows * cols);
    for bi in 0..b.rows {
        for ai in 0..a.rows {
            for bj in 0..b.cols {
                let scale = b.get(bi, bj);
                data.extend(a.row(ai).iter().map(|x| x * scale));
            }
        }
    }
    IntMatrix { rows, cols, data }
}

/// `size × size` matrix with ones on the antidiagonal.
pub fn antidiagonal_j(size: usize) -> Result<IntMatrix> {
    IntMatrix::from_fn(size, size, |i, j| u8::from(i + j + 1 == size))
}
