//! Exact dense linear algebra over the rationals.

use num_traits::Zero;

use crate::poly::Coeff;

pub type Matrix = Vec<Vec<Coeff>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Coeff::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = num_traits::One::one();
    }
    m
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (r, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for c in 0..cols {
                if !b[k][c].is_zero() {
                    out[r][c] += x * &b[k][c];
                }
            }
        }
    }
    out
}

/// Rank by Gaussian elimination.
pub fn rank(mut m: Matrix) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for k in r + 1..rows {
            if m[k][c].is_zero() {
                continue;
            }
            let f = &m[k][c] / &pivot;
            for cc in c..cols {
                let delta = &f * &m[r][cc];
                m[k][cc] -= delta;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solution `x` of `a x = b` for square invertible `a`, or `None` when `a` is singular.
pub fn solve(a: &Matrix, b: &[Coeff]) -> Option<Vec<Coeff>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&k| !m[k][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for v in m[c].iter_mut() {
            *v /= &pivot;
        }
        for k in 0..n {
            if k == c || m[k][c].is_zero() {
                continue;
            }
            let f = m[k][c].clone();
            for cc in c..=n {
                let delta = &f * &m[c][cc];
                m[k][cc] -= delta;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn ranks() {
        assert_eq!(rank(identity(3)), 3);
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(rank(m), 1);
        assert_eq!(rank(zeros(2, 3)), 0);
    }

    #[test]
    fn solves() {
        let a = vec![vec![int(0), int(2)], vec![int(1), int(1)]];
        assert_eq!(solve(&a, &[int(4), int(3)]), Some(vec![int(1), int(2)]));
        let s = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&s, &[int(1), int(1)]), None);
    }

    #[test]
    fn products() {
        let a = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(mul(&a, &a), identity(2));
    }
}
