//! Numerical kernels: dense symmetric generalized eigensolver, exact integer
//! rank, and the Glazman subspace certificate.
//!
//! The dense path is Cholesky reduction to standard form, Householder
//! tridiagonalization, and implicit-shift QL. It is deterministic: no
//! randomized starting vectors, fixed deflation order, and eigenvector signs
//! normalized so the first nonzero component is positive.

mod dense;
mod rank;

pub use dense::{generalized_symmetric_eig, symmetric_eig};
pub use rank::{integer_rank, integer_rank_checked};

use crate::error::{Error, Result};
use crate::scalar::Real;
use ndarray::Array2;

/// Solution of `A v = λ B v`: eigenvalues sorted ascending, B-orthonormal
/// eigenvectors as columns, and per-pair relative residuals.
#[derive(Debug, Clone)]
pub struct EigenResult<T> {
    pub values: Vec<T>,
    pub vectors: Array2<T>,
    pub residuals: Vec<T>,
    /// Number of slightly negative eigenvalues clamped to zero by the PSD
    /// guard (each was within `1e-10` of zero relative to the spectral scale).
    pub clamped: usize,
}

/// Certificate that the trial subspace spanned by the columns of `v` sits
/// under `lambda` in Rayleigh-quotient sense: when `certified` is true the
/// pencil `(a, b)` has at least `dim` eigenvalues `≤ lambda` at the matrix
/// level.
pub fn glazman_certificate<T: Real>(
    a: &Array2<T>,
    b: &Array2<T>,
    v: &Array2<T>,
    lambda: T,
) -> Result<(bool, usize)> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n || b.ncols() != n || v.nrows() != n {
        return Err(Error::ShapeMismatch(format!(
            "glazman: a {:?}, b {:?}, v {:?}",
            a.dim(),
            b.dim(),
            v.dim()
        )));
    }
    let m = v.ncols();
    if m == 0 {
        return Ok((true, 0));
    }
    let compressed_a = v.t().dot(&a.dot(v));
    let compressed_b = v.t().dot(&b.dot(v));

    // independence check: the B-Gram matrix must be safely positive definite
    let scale = (0..m)
        .map(|i| compressed_b[(i, i)].abs())
        .fold(T::zero(), T::max);
    match dense::cholesky(&compressed_b) {
        Ok(factor) => {
            let tol = T::of(1e-12) * scale;
            for i in 0..m {
                if factor[(i, i)] * factor[(i, i)] <= tol {
                    return Err(Error::DependentSubspace {
                        pivot: (factor[(i, i)] * factor[(i, i)]).to_f64_lossy(),
                    });
                }
            }
        }
        Err(Error::NotPositiveDefinite { pivot, .. }) => {
            return Err(Error::DependentSubspace { pivot })
        }
        Err(e) => return Err(e),
    }

    let result = generalized_symmetric_eig(&compressed_a, &compressed_b, m)?;
    let top = *result.values.last().expect("m > 0");
    let slack = T::of(1e-12) * lambda.abs();
    Ok((top <= lambda + slack, m))
}
