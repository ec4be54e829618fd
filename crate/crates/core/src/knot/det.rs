//! Fraction-free (Bareiss) determinant over `Z[t, t^-1]`.

use alloc::vec::Vec;

use crate::laurent::{LaurentError, LaurentPoly};

/// Square matrix of Laurent polynomials in a shared variable, row-major.
pub type PolyMatrix = Vec<Vec<LaurentPoly>>;

/// Determinant of a square matrix. Every intermediate division is exact in
/// an integral domain; a nonzero remainder surfaces as
/// [`LaurentError::InexactDivision`].
pub fn determinant(m: &PolyMatrix, var: &str) -> Result<LaurentPoly, LaurentError> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one(var));
    }
    let mut a = m.clone();
    let mut prev = LaurentPoly::one(var);
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero(var)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].checked_mul(&a[k][k])?.checked_sub(&a[i][k].checked_mul(&a[k][j])?)?;
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Leibniz expansion over all permutations.
    fn leibniz(m: &PolyMatrix, var: &str) -> LaurentPoly {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        let mut acc = LaurentPoly::zero(var);
        for p in perms(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = LaurentPoly::one(var);
            for (i, &pi) in p.iter().enumerate() {
                term = term.checked_mul(&m[i][pi]).unwrap();
            }
            if inversions % 2 == 1 {
                term = term.neg();
            }
            acc = acc.checked_add(&term).unwrap();
        }
        acc
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms("t", terms.iter().copied())
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(determinant(&vec![], "t").unwrap(), LaurentPoly::one("t"));
    }

    #[test]
    fn matches_leibniz_on_mixed_matrices() {
        let m = vec![
            vec![lp(&[(1, -1), (0, 1)]), lp(&[(1, 1)]), lp(&[(-1, 2)])],
            vec![lp(&[]), lp(&[(0, 3), (2, -1)]), lp(&[(1, 1), (-1, 1)])],
            vec![lp(&[(0, 1)]), lp(&[(0, -1)]), lp(&[])],
        ];
        assert_eq!(determinant(&m, "t").unwrap(), leibniz(&m, "t"));
    }

    #[test]
    fn pivot_swap_flips_sign() {
        let m = vec![vec![lp(&[]), lp(&[(0, 1)])], vec![lp(&[(0, 1)]), lp(&[])]];
        assert_eq!(determinant(&m, "t").unwrap(), lp(&[(0, -1)]));
        assert_eq!(leibniz(&m, "t"), lp(&[(0, -1)]));
    }

    #[test]
    fn singular_column_gives_zero() {
        let m = vec![vec![lp(&[]), lp(&[(0, 1)])], vec![lp(&[]), lp(&[(1, 1)])]];
        assert!(determinant(&m, "t").unwrap().is_zero());
    }

    #[test]
    fn four_by_four_tridiagonal() {
        // diagonal 1 - t, superdiagonal t, subdiagonal -1
        let n = 4;
        let m: PolyMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            lp(&[(0, 1), (1, -1)])
                        } else if j == i + 1 {
                            lp(&[(1, 1)])
                        } else if i == j + 1 {
                            lp(&[(0, -1)])
                        } else {
                            lp(&[])
                        }
                    })
                    .collect()
            })
            .collect();
        let d = determinant(&m, "t").unwrap();
        assert_eq!(d, leibniz(&m, "t"));
        assert_eq!(d, lp(&[(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)]));
    }
}
