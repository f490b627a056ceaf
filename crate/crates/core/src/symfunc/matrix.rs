//! Dense exact linear algebra over Q and Q(v).

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratfun::RatFun;

pub(crate) type QMatrix = Vec<Vec<BigRational>>;

pub(crate) fn q_identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn q_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = BigRational::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &row[k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` if singular.
pub(crate) fn q_inverse(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.clone();
    let mut inv = q_identity(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let (mc, ic) = (m[col][j].clone(), inv[col][j].clone());
                m[r][j] -= &f * mc;
                inv[r][j] -= &f * ic;
            }
        }
    }
    Some(inv)
}

pub(crate) type RMatrix = Vec<Vec<RatFun>>;

pub(crate) fn r_identity(n: usize) -> RMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatFun::one() } else { RatFun::zero() })
                .collect()
        })
        .collect()
}

pub(crate) fn r_mul(a: &RMatrix, b: &RMatrix) -> RMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero() && !b[k][j].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub(crate) fn r_inverse(a: &RMatrix) -> Result<RMatrix> {
    let n = a.len();
    let mut m = a.clone();
    let mut inv = r_identity(n);
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Inconsistent("singular matrix".into()))?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].inv()?;
        for j in 0..n {
            m[col][j] = &m[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let mc = &f * &m[col][j];
                let ic = &f * &inv[col][j];
                m[r][j] -= mc;
                inv[r][j] -= ic;
            }
        }
    }
    Ok(inv)
}
