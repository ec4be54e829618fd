use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::det::{determinant, PolyMatrix};
use super::{normalize_alexander, KnotError, ALEXANDER_VAR};
use crate::laurent::LaurentPoly;

/// Seifert matrix of a genus-`h` Seifert surface, size `2h x 2h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    rows: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    /// Validates shape and unimodularity of `V - V^T`.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, KnotError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(KnotError::NotSquare);
        }
        if !n.is_multiple_of(2) {
            return Err(KnotError::OddSize(n));
        }
        let v = Self { rows };
        let skew: PolyMatrix = (0..n)
            .map(|i| (0..n).map(|j| LaurentPoly::constant(ALEXANDER_VAR, v.rows[i][j] - v.rows[j][i])).collect())
            .collect();
        let det = determinant(&skew, ALEXANDER_VAR)?.coeff(0);
        if !det.abs().is_one() {
            return Err(KnotError::NotUnimodular(det));
        }
        Ok(v)
    }

    pub fn unknot() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Genus of the Seifert surface, an upper bound for the knot genus.
    pub fn surface_genus(&self) -> u64 {
        (self.rows.len() / 2) as u64
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `-V^T`, a Seifert matrix for the mirror image.
    pub fn mirror(&self) -> Self {
        let n = self.size();
        Self { rows: (0..n).map(|i| (0..n).map(|j| -self.rows[j][i]).collect()).collect() }
    }

    /// Block sum, a Seifert matrix for the connected sum.
    pub fn block_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.size(), other.size());
        let rows = (0..n + m)
            .map(|i| {
                (0..n + m)
                    .map(|j| match (i < n, j < n) {
                        (true, true) => self.rows[i][j],
                        (false, false) => other.rows[i - n][j - n],
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// Raw `det(tV - V^T)` before normalization.
    pub fn raw_alexander(&self) -> Result<LaurentPoly, KnotError> {
        let n = self.size();
        let m: PolyMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        LaurentPoly::from_terms(
                            ALEXANDER_VAR,
                            [(1, BigInt::from(self.rows[i][j])), (0, BigInt::from(-self.rows[j][i]))],
                        )
                    })
                    .collect()
            })
            .collect();
        Ok(determinant(&m, ALEXANDER_VAR)?)
    }
}

/// Symmetrized Alexander polynomial from a Seifert matrix.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> Result<LaurentPoly, KnotError> {
    normalize_alexander(v.raw_alexander()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(ALEXANDER_VAR, terms.iter().copied())
    }

    #[test]
    fn left_trefoil() {
        let v = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(alexander_from_seifert(&v).unwrap(), lp(&[(1, 1), (0, -1), (-1, 1)]));
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(alexander_from_seifert(&SeifertMatrix::unknot()).unwrap(), LaurentPoly::one(ALEXANDER_VAR));
        assert_eq!(SeifertMatrix::new(vec![]).unwrap(), SeifertMatrix::unknot());
    }

    #[test]
    fn figure_eight() {
        // det [[t-1, t], [-1, 1-t]] = -t^2 + 3t - 1
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap();
        assert_eq!(v.raw_alexander().unwrap(), lp(&[(2, -1), (1, 3), (0, -1)]));
        assert_eq!(alexander_from_seifert(&v).unwrap(), lp(&[(1, -1), (0, 3), (-1, -1)]));
    }

    #[test]
    fn five_two() {
        // det [[t-1, t], [-1, 2t-2]] = 2t^2 - 3t + 2
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, 2]]).unwrap();
        assert_eq!(v.raw_alexander().unwrap(), lp(&[(2, 2), (1, -3), (0, 2)]));
        assert_eq!(alexander_from_seifert(&v).unwrap(), lp(&[(1, 2), (0, -3), (-1, 2)]));
    }

    #[test]
    fn whitehead_double_has_trivial_polynomial() {
        // det [[1-t, t], [-1, 0]] = t, a unit
        let v = SeifertMatrix::new(vec![vec![-1, 1], vec![0, 0]]).unwrap();
        assert_eq!(v.raw_alexander().unwrap(), lp(&[(1, 1)]));
        assert_eq!(alexander_from_seifert(&v).unwrap(), LaurentPoly::one(ALEXANDER_VAR));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(SeifertMatrix::new(vec![vec![1, 2]]), Err(KnotError::NotSquare));
        assert_eq!(SeifertMatrix::new(vec![vec![1]]), Err(KnotError::OddSize(1)));
        assert_eq!(SeifertMatrix::new(vec![vec![1, 2], vec![0, 1]]), Err(KnotError::NotUnimodular(BigInt::from(4))));
        assert_eq!(SeifertMatrix::new(vec![vec![1, 0], vec![0, 1]]), Err(KnotError::NotUnimodular(BigInt::from(0))));
    }

    #[test]
    fn mirror_and_block_sum() {
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, 2]]).unwrap();
        let mirror = v.mirror();
        assert_eq!(mirror.rows(), &[vec![-1, 0], vec![-1, -2]]);
        assert_eq!(alexander_from_seifert(&mirror).unwrap(), alexander_from_seifert(&v).unwrap());
        let sum = v.block_sum(&v);
        assert_eq!(sum.surface_genus(), 2);
        let d = alexander_from_seifert(&v).unwrap();
        assert_eq!(alexander_from_seifert(&sum).unwrap(), d.checked_mul(&d).unwrap());
    }
}
