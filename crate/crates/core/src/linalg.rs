//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
/// Row-major.
pub type Matrix = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Option<Q> {
    s.trim().parse().ok()
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Q> {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

pub fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![zeros(cols); rows]
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

pub fn from_ints(rows: &[&[i64]]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(u: &[Q], v: &[Q]) -> Vec<Q> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Q], v: &[Q]) -> Vec<Q> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Q, v: &[Q]) -> Vec<Q> {
    v.iter().map(|x| c * x).collect()
}

pub fn add_scaled(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

pub fn cols(m: &Matrix) -> usize {
    m.first().map_or(0, Vec::len)
}

pub fn mat_vec(m: &Matrix, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = cols(b);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(Q::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(r, s)| sub(r, s)).collect()
}

pub fn transpose(m: &Matrix, ncols: usize) -> Matrix {
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Column `j` of `m`.
pub fn column(m: &Matrix, j: usize) -> Vec<Q> {
    m.iter().map(|row| row[j].clone()).collect()
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(m: &Matrix, ncols: usize) -> usize {
    let mut work = m.clone();
    rref(&mut work, ncols).len()
}

/// Outcome of solving `m x = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    None,
    Unique(Vec<Q>),
    /// A particular solution and the dimension of the solution space.
    Many(Vec<Q>, usize),
}

pub fn solve(m: &Matrix, ncols: usize, rhs: &[Q]) -> Solution {
    let mut aug: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return Solution::None;
    }
    let mut x = zeros(ncols);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    if pivots.len() == ncols {
        Solution::Unique(x)
    } else {
        Solution::Many(x, ncols - pivots.len())
    }
}

/// Some `x` with `m x = rhs`, if one exists.
pub fn solve_any(m: &Matrix, ncols: usize, rhs: &[Q]) -> Option<Vec<Q>> {
    match solve(m, ncols, rhs) {
        Solution::None => None,
        Solution::Unique(x) | Solution::Many(x, _) => Some(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_solve() {
        let m = from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&m, 2), 1);
        assert_eq!(solve(&m, 2, &[q(1), q(3)]), Solution::None);
        assert!(matches!(solve(&m, 2, &[q(1), q(2)]), Solution::Many(_, 1)));
        let m = from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(solve(&m, 2, &[q(3), q(2)]), Solution::Unique(vec![q(1), q(1)]));
    }

    #[test]
    fn fractions() {
        let m = from_ints(&[&[3]]);
        assert_eq!(solve_any(&m, 1, &[q(1)]), Some(vec![q_frac(1, 3)]));
        assert_eq!(parse_q("-2/4"), Some(q_frac(-1, 2)));
        assert_eq!(parse_q("x"), None);
    }

    #[test]
    fn products() {
        let a = from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(mat_mul(&a, &a), from_ints(&[&[1, 2], &[0, 1]]));
        assert_eq!(mat_vec(&a, &[q(1), q(1)]), vec![q(2), q(1)]);
        assert_eq!(transpose(&a, 2), from_ints(&[&[1, 0], &[1, 1]]));
    }
}
