//! Exact short-vector enumeration in positive definite integer lattices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Cartan matrix of `E8` (Bourbaki labelling: chain 1-3-4-5-6-7-8, node 2
/// attached to 4).
pub fn e8_cartan() -> Vec<Vec<i64>> {
    let edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    let mut m = vec![vec![0i64; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a - 1][b - 1] = -1;
        m[b - 1][a - 1] = -1;
    }
    m
}

/// Block diagonal sum of `copies` copies of `block`.
pub fn block_diagonal(block: &[Vec<i64>], copies: usize) -> Vec<Vec<i64>> {
    let k = block.len();
    let n = k * copies;
    let mut m = vec![vec![0i64; n]; n];
    for c in 0..copies {
        for i in 0..k {
            for j in 0..k {
                m[c * k + i][c * k + j] = block[i][j];
            }
        }
    }
    m
}

pub fn quadratic_form(gram: &[Vec<i64>], x: &[i64]) -> i64 {
    gram.iter().zip(x).map(|(row, xi)| xi * row.iter().zip(x).map(|(g, xj)| g * xj).sum::<i64>()).sum()
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// All integer vectors `x` with `x^T G x <= max_norm`, for a positive
/// definite Gram matrix `G`.
///
/// Completes the square exactly over the rationals and walks the
/// coordinates from last to first, keeping only values inside each
/// remaining ellipsoid slice. Returns `None` if `G` is not positive
/// definite.
pub fn short_vectors(gram: &[Vec<i64>], max_norm: i64) -> Option<Vec<Vec<i64>>> {
    let n = gram.len();
    if max_norm < 0 {
        return Some(Vec::new());
    }
    // q[i][i] = d_i, q[i][j] (j > i) = mu_ij
    let mut q: Vec<Vec<BigRational>> = gram.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
    for i in 0..n {
        if !q[i][i].is_positive() {
            return None;
        }
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let delta = &q[k][i] * &q[i][l];
                q[k][l] -= delta;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    if n == 0 {
        out.push(Vec::new());
        return Some(out);
    }
    descend(&q, n - 1, rat(max_norm), &mut x, &mut out);
    Some(out)
}

fn descend(q: &[Vec<BigRational>], i: usize, budget: BigRational, x: &mut [i64], out: &mut Vec<Vec<i64>>) {
    let n = q.len();
    let center = -(i + 1..n).fold(BigRational::zero(), |acc, j| acc + &q[i][j] * rat(x[j]));
    let cost = |v: i64| {
        let d = rat(v) - &center;
        &q[i][i] * &d * &d
    };
    let start = center.floor().to_integer();
    let start: i64 = i64::try_from(start).expect("coordinate fits in i64");
    let visit = |v: i64, x: &mut [i64], out: &mut Vec<Vec<i64>>| -> bool {
        let c = cost(v);
        if c > budget {
            return false;
        }
        x[i] = v;
        if i == 0 {
            out.push(x.to_vec());
        } else {
            descend(q, i - 1, &budget - &c, x, out);
        }
        true
    };
    let mut v = start;
    while visit(v, x, out) {
        v -= 1;
    }
    let mut v = start + 1;
    while visit(v, x, out) {
        v += 1;
    }
    x[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_by_norm(gram: &[Vec<i64>], max: i64) -> Vec<usize> {
        let vs = short_vectors(gram, max).unwrap();
        let mut counts = vec![0usize; max as usize + 1];
        for v in &vs {
            counts[quadratic_form(gram, v) as usize] += 1;
        }
        counts
    }

    #[test]
    fn e8_is_unimodular_and_even() {
        let g = e8_cartan();
        // integer determinant via short elimination on rationals
        let mut m: Vec<Vec<BigRational>> = g.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
        let mut det = rat(1);
        for i in 0..8 {
            det *= m[i][i].clone();
            for r in i + 1..8 {
                let f = &m[r][i] / &m[i][i];
                let pivot = m[i].clone();
                for (dst, src) in m[r].iter_mut().zip(&pivot).skip(i) {
                    *dst -= &f * src;
                }
            }
        }
        assert_eq!(det, rat(1));
        assert!((0..8).all(|i| g[i][i] % 2 == 0));
    }

    #[test]
    fn e8_theta_series() {
        // 1 + 240 q + 2160 q^2 in norm/2
        let counts = count_by_norm(&e8_cartan(), 4);
        assert_eq!(counts, vec![1, 0, 240, 0, 2160]);
    }

    #[test]
    fn two_e8_small_vectors() {
        let g = block_diagonal(&e8_cartan(), 2);
        let counts = count_by_norm(&g, 2);
        assert_eq!(counts, vec![1, 0, 480]);
        assert_eq!(short_vectors(&g, 0).unwrap(), vec![vec![0i64; 16]]);
        assert_eq!(short_vectors(&g, 1).unwrap(), vec![vec![0i64; 16]]);
    }

    #[test]
    fn z2_circle_counts() {
        let id = vec![vec![1, 0], vec![0, 1]];
        // lattice points with x^2 + y^2 <= 5: 1 + 4 + 4 + 0 + 4 + 8
        assert_eq!(short_vectors(&id, 5).unwrap().len(), 21);
        assert!(short_vectors(&id, -1).unwrap().is_empty());
    }

    #[test]
    fn indefinite_form_is_rejected() {
        let h = vec![vec![0, 1], vec![1, 0]];
        assert!(short_vectors(&h, 4).is_none());
    }
}
