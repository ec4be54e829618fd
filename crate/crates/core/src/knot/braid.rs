//! Braid words and the reduced Burau route to the Alexander polynomial.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::det::{determinant, PolyMatrix};
use super::{normalize_alexander, KnotError, ALEXANDER_VAR};
use crate::laurent::{LaurentError, LaurentPoly};

/// Word in the Artin generators of the braid group on `strands` strands.
/// Letter `±i` is `σ_i^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates generator indices and that the closure has one component.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, KnotError> {
        if strands < 2 {
            return Err(KnotError::BraidParse { token: strands.to_string(), message: "need at least 2 strands" });
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(KnotError::GeneratorOutOfRange { letter: bad, strands });
        }
        let word = Self { strands, letters };
        let components = word.closure_components();
        if components != 1 {
            return Err(KnotError::NotAKnot { components });
        }
        Ok(word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Number of cycles of the underlying permutation.
    pub fn closure_components(&self) -> usize {
        closure_components(self.strands, &self.letters)
    }

    /// Reduced Burau image, an `(n-1) x (n-1)` matrix.
    pub fn reduced_burau(&self) -> PolyMatrix {
        let size = self.strands - 1;
        self.letters.iter().fold(identity(size), |acc, &l| mat_mul(&acc, &generator_matrix(size, l)))
    }
}

fn closure_components(strands: usize, letters: &[i32]) -> usize {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
        }
    }
    cycles
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// `"n: w1 w2 ..."`.
impl FromStr for BraidWord {
    type Err = KnotError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (head, body) = text
            .split_once(':')
            .ok_or(KnotError::BraidParse { token: text.trim().to_string(), message: "missing `n:` strand prefix" })?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| KnotError::BraidParse { token: head.trim().to_string(), message: "bad strand count" })?;
        let letters = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| KnotError::BraidParse { token: tok.to_string(), message: "not an integer" })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }
}

pub fn parse_braid(text: &str) -> Result<BraidWord, KnotError> {
    text.parse()
}

fn c(e: i64, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(ALEXANDER_VAR, e, k)
}

fn zero() -> LaurentPoly {
    LaurentPoly::zero(ALEXANDER_VAR)
}

fn identity(n: usize) -> PolyMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { c(0, 1) } else { zero() }).collect()).collect()
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(zero(), |acc, k| {
                        if a[i][k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            acc.checked_add(&a[i][k].mul_unchecked(&b[k][j])).expect("shared variable")
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of `σ_i^{±1}` acting on `size = n - 1` coordinates.
///
/// `σ_i` is the identity except for the block on rows/columns `i-1, i, i+1`
/// (1-based, clipped at the boundary):
///
/// ```text
/// [1  t  0]
/// [0 -t  0]
/// [0  1  1]
/// ```
fn generator_matrix(size: usize, letter: i32) -> PolyMatrix {
    let i = letter.unsigned_abs() as usize - 1; // 0-based diagonal slot
    let mut m = identity(size);
    if letter > 0 {
        m[i][i] = c(1, -1);
        if i > 0 {
            m[i - 1][i] = c(1, 1);
        }
        if i + 1 < size {
            m[i + 1][i] = c(0, 1);
        }
    } else {
        m[i][i] = c(-1, -1);
        if i > 0 {
            m[i - 1][i] = c(0, 1);
        }
        if i + 1 < size {
            m[i + 1][i] = c(-1, 1);
        }
    }
    m
}

/// Symmetrized Alexander polynomial of the braid closure, from
/// `det(I - ρ(b)) = ±t^j Δ(t) (1 + t + ... + t^{n-1})`.
pub fn alexander_from_braid(b: &BraidWord) -> Result<LaurentPoly, KnotError> {
    let rho = b.reduced_burau();
    let size = rho.len();
    let id = identity(size);
    let diff: PolyMatrix = (0..size)
        .map(|i| (0..size).map(|j| id[i][j].checked_sub(&rho[i][j])).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let det = determinant(&diff, ALEXANDER_VAR)?;
    let cyclotomic = LaurentPoly::from_terms(ALEXANDER_VAR, (0..b.strands as i64).map(|e| (e, 1)));
    let raw = det.div_exact(&cyclotomic).map_err(|e| match e {
        LaurentError::InexactDivision => KnotError::InexactBurauDivision,
        other => KnotError::Laurent(other),
    })?;
    normalize_alexander(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(ALEXANDER_VAR, terms.iter().copied())
    }

    #[test]
    fn parse_examples() {
        let b = parse_braid("2: -1 -1 -1").unwrap();
        assert_eq!((b.strands(), b.letters()), (2, &[-1, -1, -1][..]));
        let b = parse_braid("3: 1 -2 1 -2").unwrap();
        assert_eq!((b.strands(), b.letters()), (3, &[1, -2, 1, -2][..]));
        // σ1² permutes nothing: Hopf link plus a split unknot
        assert_eq!(parse_braid("3: 1 1"), Err(KnotError::NotAKnot { components: 3 }));
        assert_eq!(parse_braid("3: 1"), Err(KnotError::NotAKnot { components: 2 }));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_braid("-1 -1"), Err(KnotError::BraidParse { .. })));
        assert!(matches!(parse_braid("x: 1"), Err(KnotError::BraidParse { .. })));
        assert!(matches!(parse_braid("2: 1 a"), Err(KnotError::BraidParse { .. })));
        assert!(matches!(parse_braid("1: "), Err(KnotError::BraidParse { .. })));
        assert_eq!(parse_braid("2: 1 2"), Err(KnotError::GeneratorOutOfRange { letter: 2, strands: 2 }));
        assert_eq!(parse_braid("3: 0 1 2"), Err(KnotError::GeneratorOutOfRange { letter: 0, strands: 3 }));
        assert_eq!(parse_braid("2:"), Err(KnotError::NotAKnot { components: 2 }));
    }

    #[test]
    fn display_round_trips() {
        let b = parse_braid(" 3 :1  -2 1 -2 ").unwrap();
        assert_eq!(b.to_string(), "3: 1 -2 1 -2");
        assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn generators_invert() {
        for size in 1..5 {
            for i in 1..=size as i32 {
                let prod = mat_mul(&generator_matrix(size, i), &generator_matrix(size, -i));
                assert_eq!(prod, identity(size), "size {size} generator {i}");
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        let size = 3;
        let g = |l| generator_matrix(size, l);
        // σ1 σ2 σ1 = σ2 σ1 σ2
        assert_eq!(mat_mul(&mat_mul(&g(1), &g(2)), &g(1)), mat_mul(&mat_mul(&g(2), &g(1)), &g(2)));
        assert_eq!(mat_mul(&mat_mul(&g(2), &g(3)), &g(2)), mat_mul(&mat_mul(&g(3), &g(2)), &g(3)));
        // σ1 σ3 = σ3 σ1
        assert_eq!(mat_mul(&g(1), &g(3)), mat_mul(&g(3), &g(1)));
    }

    #[test]
    fn trefoil_from_braid() {
        let expected = lp(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(alexander_from_braid(&parse_braid("2: -1 -1 -1").unwrap()).unwrap(), expected);
        assert_eq!(alexander_from_braid(&parse_braid("2: 1 1 1").unwrap()).unwrap(), expected);
    }

    #[test]
    fn unknot_from_braid() {
        assert_eq!(alexander_from_braid(&parse_braid("2: 1").unwrap()).unwrap(), LaurentPoly::one(ALEXANDER_VAR));
        assert_eq!(alexander_from_braid(&parse_braid("3: 1 2").unwrap()).unwrap(), LaurentPoly::one(ALEXANDER_VAR));
    }

    #[test]
    fn figure_eight_from_braid() {
        let b = parse_braid("3: 1 -2 1 -2").unwrap();
        assert_eq!(alexander_from_braid(&b).unwrap(), lp(&[(1, -1), (0, 3), (-1, -1)]));
    }

    #[test]
    fn torus_knot_five_one() {
        let b = parse_braid("2: 1 1 1 1 1").unwrap();
        assert_eq!(alexander_from_braid(&b).unwrap(), lp(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]));
    }
}
