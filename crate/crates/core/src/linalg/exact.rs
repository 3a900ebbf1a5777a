//! Exact integer linear algebra: fraction-free (Bareiss) elimination for
//! determinants and positive-semidefiniteness, and the division-free
//! Berkowitz characteristic polynomial.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{DenseMatrix, ExactInt};
use crate::error::Result;

/// One step of symmetric elimination. The Schur-complement pivot is
/// `numerator / denominator`; `denominator` is the previous accepted
/// Bareiss pivot and is always positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot<T> {
    pub index: usize,
    pub numerator: T,
    pub denominator: T,
}

impl<T: ExactInt> Pivot<T> {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdFailure {
    /// Schur pivot at `index` is negative.
    NegativePivot { index: usize },
    /// Zero pivot at `index` whose residual row is nonzero at column `col`.
    ZeroPivotNonzeroRow { index: usize, col: usize },
}

/// Outcome of an exact positive-semidefiniteness test, with the pivots
/// processed before stopping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsdCertificate<T = BigInt> {
    pub pivots: Vec<Pivot<T>>,
    pub failure: Option<PsdFailure>,
}

impl<T> PsdCertificate<T> {
    pub fn is_psd(&self) -> bool {
        self.failure.is_none()
    }

    fn widen(self) -> PsdCertificate<BigInt>
    where
        BigInt: From<T>,
    {
        PsdCertificate {
            pivots: self
                .pivots
                .into_iter()
                .map(|p| Pivot {
                    index: p.index,
                    numerator: p.numerator.into(),
                    denominator: p.denominator.into(),
                })
                .collect(),
            failure: self.failure,
        }
    }
}

/// Decides whether a symmetric integer matrix is positive semidefinite,
/// trying 128-bit arithmetic first and falling back to big integers.
pub fn certify_psd(m: &DenseMatrix<i64>) -> Result<PsdCertificate> {
    m.check_symmetric()?;
    if let Some(cert) = certify_psd_with(&m.map(|&x| i128::from(x)))? {
        return Ok(cert.widen());
    }
    let cert = certify_psd_with(&m.map(|&x| BigInt::from(x)))?;
    Ok(cert.expect("arbitrary precision cannot overflow"))
}

/// Symmetric fraction-free elimination in `T`. Returns `Ok(None)` if `T`
/// overflows.
///
/// Entries of the working matrix are bordered minors `det M[E+i, E+j]` where
/// `E` is the set of eliminated indices, so each update divides exactly by
/// the previous pivot. A zero pivot is accepted only when its whole residual
/// row vanishes, in which case the index is dropped without changing `E`.
pub fn certify_psd_with<T: ExactInt>(m: &DenseMatrix<T>) -> Result<Option<PsdCertificate<T>>> {
    m.check_symmetric()?;
    let n = m.rows();
    let mut a = m.clone();
    let mut prev = T::one();
    let mut pivots = Vec::new();

    for k in 0..n {
        let p = a[(k, k)].clone();
        pivots.push(Pivot {
            index: k,
            numerator: p.clone(),
            denominator: prev.clone(),
        });
        if p.is_negative() {
            let failure = PsdFailure::NegativePivot { index: k };
            return Ok(Some(PsdCertificate {
                pivots,
                failure: Some(failure),
            }));
        }
        if p.is_zero() {
            if let Some(col) = ((k + 1)..n).find(|&j| !a[(k, j)].is_zero()) {
                let failure = PsdFailure::ZeroPivotNonzeroRow { index: k, col };
                return Ok(Some(PsdCertificate {
                    pivots,
                    failure: Some(failure),
                }));
            }
            continue;
        }
        for i in (k + 1)..n {
            let aik = a[(i, k)].clone();
            for j in i..n {
                let Some(lhs) = p.checked_mul(&a[(i, j)]) else {
                    return Ok(None);
                };
                let Some(rhs) = aik.checked_mul(&a[(k, j)]) else {
                    return Ok(None);
                };
                let Some(diff) = lhs.checked_sub(&rhs) else {
                    return Ok(None);
                };
                let Some(v) = diff.checked_div(&prev) else {
                    return Ok(None);
                };
                a[(i, j)] = v.clone();
                a[(j, i)] = v;
            }
        }
        prev = p;
    }
    Ok(Some(PsdCertificate {
        pivots,
        failure: None,
    }))
}

/// Exact determinant, 128-bit first with a big-integer fallback.
pub fn determinant(m: &DenseMatrix<i64>) -> BigInt {
    if let Some(d) = determinant_with(&m.map(|&x| i128::from(x))) {
        return d.into();
    }
    determinant_with(&m.map(|&x| BigInt::from(x))).expect("arbitrary precision cannot overflow")
}

/// Bareiss determinant with row pivoting; `None` on overflow.
pub fn determinant_with<T: ExactInt>(m: &DenseMatrix<T>) -> Option<T> {
    assert!(m.is_square(), "determinant needs a square matrix");
    let n = m.rows();
    let mut a = m.clone();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n {
        if a[(k, k)].is_zero() {
            let Some(swap) = ((k + 1)..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Some(T::zero());
            };
            for j in 0..n {
                let t = a[(k, j)].clone();
                a[(k, j)] = a[(swap, j)].clone();
                a[(swap, j)] = t;
            }
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let lhs = a[(k, k)].checked_mul(&a[(i, j)])?;
                let rhs = a[(i, k)].checked_mul(&a[(k, j)])?;
                a[(i, j)] = lhs.checked_sub(&rhs)?.checked_div(&prev)?;
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = if n == 0 {
        T::one()
    } else {
        a[(n - 1, n - 1)].clone()
    };
    Some(if negate { -det } else { det })
}

/// Coefficients of `det(tI - A)` by ascending degree, via Berkowitz's
/// division-free recurrence.
pub fn characteristic_polynomial<T>(m: &DenseMatrix<T>) -> Vec<T>
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    assert!(
        m.is_square(),
        "characteristic polynomial needs a square matrix"
    );
    let n = m.rows();
    // descending-degree coefficients of the leading r x r block
    let mut c = vec![T::one()];
    for r in 0..n {
        let mut q = Vec::with_capacity(r + 2);
        q.push(T::one());
        q.push(-m[(r, r)].clone());
        let mut v: Vec<T> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for _ in 0..r {
            let dot = (0..r).fold(T::zero(), |acc, j| acc + m[(r, j)].clone() * v[j].clone());
            q.push(-dot);
            v = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, j| acc + m[(i, j)].clone() * v[j].clone()))
                .collect();
        }
        let next: Vec<T> = (0..r + 2)
            .map(|i| (0..=i.min(r)).fold(T::zero(), |acc, j| acc + q[i - j].clone() * c[j].clone()))
            .collect();
        c = next;
    }
    c.reverse();
    c
}
