//! Small exact linear algebra over the integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

pub(crate) fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        n => {
            let mut acc = BigInt::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * det(&minor);
                if col % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Vector orthogonal to `dirs` (generalized cross product), `dirs.len() == dim - 1`.
pub(crate) fn orthogonal(dirs: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
    debug_assert_eq!(dirs.len() + 1, dim);
    (0..dim)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = dirs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Divides by the gcd of the entries. The zero vector is returned unchanged.
pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank via fraction-free elimination.
#[allow(clippy::needless_range_loop)]
pub(crate) fn rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let (a, b) = (m[r][c].clone(), m[i][c].clone());
                for j in 0..cols {
                    let v = &m[i][j] * &a - &m[r][j] * &b;
                    m[i][j] = v;
                }
                let row = std::mem::take(&mut m[i]);
                m[i] = primitive(row);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    rank(&big)
}

/// Solves the square system `a x = b`; `None` when singular.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            row.iter()
                .chain(std::iter::once(bi))
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &pivot;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let v = &m[c][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub(crate) fn is_nonneg(x: &BigInt) -> bool {
    !x.is_negative()
}
