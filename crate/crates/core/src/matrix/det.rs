use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Largest side length accepted by [`determinant_oracle`].
pub const MAX_ORACLE_SIZE: usize = 9;

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every division in the elimination is exact, so no remainders or fractions
/// ever appear. Zero pivots are handled by row swaps.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Input(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let value = &row[j] * pivot - &lead * &pivot_row[j];
                // exact by Sylvester's identity
                row[j] = value / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant by signed permutation expansion, for cross-checking
/// [`determinant`] on matrices up to [`MAX_ORACLE_SIZE`].
///
/// Permutations are walked depth first, row by row; branches through a zero
/// entry are skipped since they contribute nothing to the sum.
pub fn determinant_oracle(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Input("determinant of a non-square matrix".into()));
    }
    let n = m.rows();
    if n > MAX_ORACLE_SIZE {
        return Err(Error::UnsupportedSize(format!(
            "permutation expansion is limited to {MAX_ORACLE_SIZE}x{MAX_ORACLE_SIZE}"
        )));
    }
    let mut total = BigInt::zero();
    expand(m, 0, 0, false, &BigInt::one(), &mut total);
    Ok(total)
}

fn expand(m: &IntMatrix, row: usize, used: u32, odd: bool, partial: &BigInt, total: &mut BigInt) {
    let n = m.rows();
    if row == n {
        if odd {
            *total -= partial;
        } else {
            *total += partial;
        }
        return;
    }
    for col in 0..n {
        if used >> col & 1 == 1 {
            continue;
        }
        let entry = m.get(row, col);
        if entry.is_zero() {
            continue;
        }
        // inversions added: earlier rows that took a larger column
        let inversions = (used >> (col + 1)).count_ones();
        let parity = odd ^ (inversions % 2 == 1);
        expand(m, row + 1, used | 1 << col, parity, &(partial * entry), total);
    }
}
