//! Smallest eigenvalues: floating estimates and exact lower-bound certificates.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{certify_psd, symmetric_eigenvalues, DenseMatrix, PsdCertificate, RealScalar};

/// Absolute accuracy of eigenvalues computed for 0/1 and small-integer matrices.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// An exact verdict on `lambda_min >= -bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub bound: i64,
    pub holds: bool,
    /// Always set by this crate: the verdict comes from integer elimination.
    pub exact: bool,
}

/// Smallest eigenvalue together with the accuracy it was computed to and,
/// optionally, an exact check against an integer bound.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenResult<F = f64> {
    pub lambda_min: F,
    pub tolerance: F,
    pub certified_at_least: Option<BoundCertificate>,
}

/// Exact answer to "is `M + bound * I` positive semidefinite", with its pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub holds: bool,
    pub certificate: PsdCertificate,
}

pub fn lambda_min(g: &Graph) -> Result<EigenResult> {
    lambda_min_with(g, DEFAULT_TOLERANCE)
}

pub fn lambda_min_with<F: RealScalar>(g: &Graph, tol: F) -> Result<EigenResult<F>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    smallest_eigenvalue(&g.adjacency_matrix::<i64>(), tol)
}

/// Smallest eigenvalue of a symmetric integer matrix.
pub fn smallest_eigenvalue<F: RealScalar>(m: &DenseMatrix<i64>, tol: F) -> Result<EigenResult<F>> {
    m.check_symmetric()?;
    if m.rows() == 0 {
        return Err(Error::EmptyGraph);
    }
    let real = m.map(|&x| F::from_f64(x as f64));
    let lambda_min = symmetric_eigenvalues(&real, tol)[0];
    Ok(EigenResult {
        lambda_min,
        tolerance: tol,
        certified_at_least: None,
    })
}

/// Exact test of `lambda_min(m) >= -bound`, i.e. `m + bound * I` is PSD.
pub fn certify_lambda_min_at_least(m: &DenseMatrix<i64>, bound: i64) -> Result<BoundCheck> {
    if bound < 0 {
        return Err(Error::InvalidParameter(format!(
            "bound must be nonnegative, got {bound}"
        )));
    }
    m.check_symmetric()?;
    let certificate = certify_psd(&m.shift_diagonal(bound))?;
    Ok(BoundCheck {
        holds: certificate.is_psd(),
        certificate,
    })
}

/// [`lambda_min`] plus an exact certificate against `-bound`.
pub fn lambda_min_certified(g: &Graph, bound: i64, tol: f64) -> Result<EigenResult> {
    let mut res = lambda_min_with(g, tol)?;
    let check = certify_lambda_min_at_least(&g.adjacency_matrix(), bound)?;
    res.certified_at_least = Some(BoundCertificate {
        bound,
        holds: check.holds,
        exact: true,
    });
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        complete, cycle, gen_hat, gen_ktilde, ktilde_quotient, ktilde_quotient_symmetric, path,
    };

    #[test]
    fn small_graphs() {
        assert!((lambda_min(&complete(3)).unwrap().lambda_min + 1.0).abs() < 1e-9);
        assert!((lambda_min(&path(3)).unwrap().lambda_min + 2f64.sqrt()).abs() < 1e-9);
        assert!((lambda_min(&cycle(4)).unwrap().lambda_min + 2.0).abs() < 1e-9);
        assert_eq!(lambda_min(&Graph::empty(1)).unwrap().lambda_min, 0.0);
        assert_eq!(lambda_min(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn certification_examples() {
        let k3 = complete(3).adjacency_matrix();
        assert!(certify_lambda_min_at_least(&k3, 1).unwrap().holds);
        assert!(!certify_lambda_min_at_least(&k3, 0).unwrap().holds);
        // K~_8 = H(4,4) sits strictly below -2
        let kt8 = gen_hat(4, 4).unwrap().adjacency_matrix();
        assert!(!certify_lambda_min_at_least(&kt8, 2).unwrap().holds);
        let bad = DenseMatrix::from_rows(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(certify_lambda_min_at_least(&bad, 1).is_err());
    }

    #[test]
    fn quotient_matrix_of_ktilde() {
        // lambda = 3, (lambda-1)^2 = 4
        let m = ktilde_quotient_symmetric(3);
        assert!(certify_lambda_min_at_least(&m, 3).unwrap().holds);
        assert!(
            certify_lambda_min_at_least(&gen_ktilde(4).unwrap().adjacency_matrix(), 3)
                .unwrap()
                .holds
        );
        assert!(certify_lambda_min_at_least(&ktilde_quotient(3), 3).is_err());
    }

    #[test]
    fn certified_result_carries_bound() {
        let r = lambda_min_certified(&cycle(4), 2, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(
            r.certified_at_least,
            Some(BoundCertificate {
                bound: 2,
                holds: true,
                exact: true
            })
        );
    }
}
