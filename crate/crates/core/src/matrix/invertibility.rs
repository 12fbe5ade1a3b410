//! Invertibility of eccentricity matrices of products of trees.
//!
//! The matrix of `T_1 □ … □ T_k` is invertible exactly when one factor is a
//! star or `P_4` and all others are `P_2`. The routines here compute both
//! sides of that statement, and expose the row dependencies that make the
//! remaining products singular.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{antidiagonal_j, determinant, IntMatrix};
use crate::eccentric::eccentricity_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::cartesian_product_capped;
use crate::tree::{diametrical_paths, Tree};

/// Largest matrix side length (product vertex count) accepted here.
pub const MAX_MATRIX_SIDE: usize = 4096;

/// A star `S_n` (`n >= 1`): some vertex is adjacent to every other. Includes `P_2` and `P_3`.
pub fn is_star(t: &Tree) -> bool {
    let n = t.num_vertices();
    (0..n).any(|v| t.graph().degree(v) == n - 1)
}

fn is_p2(t: &Tree) -> bool {
    t.num_vertices() == 2
}

fn is_p4(t: &Tree) -> bool {
    t.num_vertices() == 4 && t.is_path()
}

/// True iff some factor is a star or `P_4` and every other factor is `P_2`.
pub fn predicted_invertible(factors: &[&Tree]) -> bool {
    (0..factors.len()).any(|i| {
        (is_star(factors[i]) || is_p4(factors[i]))
            && factors.iter().enumerate().all(|(j, t)| j == i || is_p2(t))
    })
}

fn product_matrix(factors: &[&Tree]) -> Result<IntMatrix> {
    let side = factors.iter().try_fold(1usize, |acc, t| acc.checked_mul(t.num_vertices()));
    match side {
        Some(s) if s <= MAX_MATRIX_SIDE => {}
        _ => {
            return Err(Error::Resource(format!(
                "eccentricity matrix side exceeds {MAX_MATRIX_SIDE}"
            )))
        }
    }
    match factors {
        [] => Err(Error::Input("at least one tree is required".into())),
        [single] => eccentricity_matrix(single.graph()),
        _ => {
            let graphs: Vec<&Graph> = factors.iter().map(|t| t.graph()).collect();
            let (g, _) = cartesian_product_capped(&graphs, MAX_MATRIX_SIDE)?;
            eccentricity_matrix(&g)
        }
    }
}

/// Predicted and computed invertibility of the eccentricity matrix of a tree product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibilityCheck {
    pub predicted: bool,
    pub computed: bool,
    pub agree: bool,
}

pub fn check_invertibility_classification(factors: &[&Tree]) -> Result<InvertibilityCheck> {
    let matrix = product_matrix(factors)?;
    let predicted = predicted_invertible(factors);
    let computed = !determinant(&matrix)?.is_zero();
    Ok(InvertibilityCheck { predicted, computed, agree: predicted == computed })
}

fn star_tree(leaves: usize) -> Tree {
    Tree::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("stars are trees")
}

fn p2() -> Tree {
    Tree::from_edges(2, [(0, 1)]).expect("P_2 is a tree")
}

/// `(n+1)×(n+1)` block of `S_n □ P_2^j`: the center row carries `j + 1`,
/// leaf pairs carry `j + 2`, the diagonal is zero.
pub fn star_block(leaves: usize, num_p2: usize) -> Result<IntMatrix> {
    let (near, far) = (num_p2 as u64 + 1, num_p2 as u64 + 2);
    IntMatrix::from_fn(leaves + 1, leaves + 1, |i, j| match (i, j) {
        _ if i == j => 0,
        (0, _) | (_, 0) => near,
        _ => far,
    })
}

/// Determinant of the eccentricity matrix of `S_n □ P_2^j` set against the
/// factored form `(-1)^n · n · a² · b^(n-1)` of its star block, where `a` and
/// `b` are the smallest nonzero and the largest entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarProbe {
    pub computed_det: BigInt,
    pub min_entry: BigInt,
    pub max_entry: BigInt,
    /// `n · a² · b^(n-1)`.
    pub block_magnitude: BigInt,
    /// `((-1)^n · n · a² · b^(n-1))^(2^j) · det(J_{2^j})^(n+1)`.
    pub predicted_det: BigInt,
    pub matches: bool,
}

pub fn star_product_determinant_probe(leaves: usize, num_p2: usize) -> Result<StarProbe> {
    if leaves < 2 {
        return Err(Error::Input("the probe needs a star with at least two leaves".into()));
    }
    if num_p2 > 3 {
        return Err(Error::UnsupportedSize("at most three P_2 factors".into()));
    }
    let star = star_tree(leaves);
    let edge = p2();
    let mut factors = vec![&star];
    factors.extend(std::iter::repeat_n(&edge, num_p2));
    let matrix = product_matrix(&factors)?;
    let computed_det = determinant(&matrix)?;

    let nonzero = matrix.entries().iter().filter(|x| !x.is_zero());
    let min_entry = nonzero.clone().min().cloned().unwrap_or_default();
    let max_entry = nonzero.max().cloned().unwrap_or_default();
    let exponent = u32::try_from(leaves - 1).expect("leaf count fits in u32");
    let block_magnitude = BigInt::from(leaves) * &min_entry * &min_entry * max_entry.pow(exponent);
    let block_det = if leaves % 2 == 0 { block_magnitude.clone() } else { -block_magnitude.clone() };
    let copies = 1usize << num_p2;
    let j_det = determinant(&antidiagonal_j(copies)?)?;
    let predicted_det = block_det.pow(copies as u32) * j_det.pow(leaves as u32 + 1);
    let matches = predicted_det == computed_det;
    Ok(StarProbe { computed_det, min_entry, max_entry, block_magnitude, predicted_det, matches })
}

/// A linear dependency among rows of an eccentricity matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowDependency {
    /// Two nonzero rows that are scalar multiples of each other.
    Proportional { row: usize, other: usize },
    /// A row that is a scalar multiple of the sum of other rows.
    MultipleOfSum { row: usize, summands: Vec<usize> },
}

impl RowDependency {
    /// Checks the dependency on `m` exactly.
    pub fn holds(&self, m: &IntMatrix) -> bool {
        match self {
            RowDependency::Proportional { row, other } => {
                row != other && proportional(m.row(*row), m.row(*other))
            }
            RowDependency::MultipleOfSum { row, summands } => {
                if summands.is_empty() || summands.contains(row) {
                    return false;
                }
                let mut sum = vec![BigInt::zero(); m.cols()];
                for &s in summands {
                    for (acc, x) in sum.iter_mut().zip(m.row(s)) {
                        *acc += x;
                    }
                }
                proportional(m.row(*row), &sum)
            }
        }
    }
}

fn proportional(x: &[BigInt], y: &[BigInt]) -> bool {
    let Some(k) = y.iter().position(|v| !v.is_zero()) else {
        return false;
    };
    if x[k].is_zero() {
        return false;
    }
    x.iter().zip(y).all(|(xi, yi)| xi * &y[k] == yi * &x[k])
}

/// The row dependency that makes `𝓔(t □ P_2^j)` singular when `t` is neither
/// a star nor `P_4`, built from a diametrical path of `t`.
///
/// Rows are flat indices of `t □ P_2^j` with every `P_2` coordinate at 0.
pub fn dependency_witness(t: &Tree, num_p2: usize) -> Result<RowDependency> {
    if is_star(t) || is_p4(t) {
        return Err(Error::Precondition("stars and P_4 have invertible matrices".into()));
    }
    let scale = 1usize << num_p2;
    let row = |v: usize| v * scale;
    let path = diametrical_paths(t).remove(0);
    let p = path.vertices();
    let g = t.graph();
    match path.len() {
        3 => {
            let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
            // a leaf besides a and d hangs off b or c
            let extra = |hub: usize, skip: usize| {
                g.neighbors(hub).iter().copied().find(|&x| x != skip && g.degree(x) == 1)
            };
            if let Some(e) = extra(b, a) {
                Ok(RowDependency::Proportional { row: row(a), other: row(e) })
            } else {
                let e = extra(c, d).ok_or_else(|| {
                    Error::Precondition("diameter-3 tree without an extra leaf is P_4".into())
                })?;
                Ok(RowDependency::Proportional { row: row(d), other: row(e) })
            }
        }
        4 => {
            let center = p[2];
            let summands = g.neighbors(center).iter().map(|&x| row(x)).collect();
            Ok(RowDependency::MultipleOfSum { row: row(center), summands })
        }
        _ => Ok(RowDependency::Proportional { row: row(p[1]), other: row(p[2]) }),
    }
}

/// `𝓔` of `t □ P_2^j` (just `t` when `j = 0`).
pub fn tree_edge_power_matrix(t: &Tree, num_p2: usize) -> Result<IntMatrix> {
    let edge = p2();
    let mut factors = vec![t];
    factors.extend(std::iter::repeat_n(&edge, num_p2));
    product_matrix(&factors)
}
