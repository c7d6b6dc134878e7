//! Dense symmetric kernels: Cholesky factorization, Householder reduction to
//! tridiagonal form with accumulated transformations, and implicit-shift QL.

use crate::error::{Error, Result};
use crate::scalar::Real;
use ndarray::Array2;

use super::EigenResult;

const MAX_QL_ITERATIONS: usize = 50;
const PSD_GUARD: f64 = 1e-10;

/// Lower-triangular Cholesky factor `L` with `L Lᵀ = B`.
pub(crate) fn cholesky<T: Real>(b: &Array2<T>) -> Result<Array2<T>> {
    let n = b.nrows();
    let mut l: Array2<T> = Array2::zeros((n, n));
    for j in 0..n {
        let mut diag = b[(j, j)];
        for k in 0..j {
            diag = diag - l[(j, k)] * l[(j, k)];
        }
        if diag <= T::zero() {
            return Err(Error::NotPositiveDefinite {
                row: j,
                pivot: diag.to_f64_lossy(),
            });
        }
        let root = diag.sqrt();
        l[(j, j)] = root;
        for i in j + 1..n {
            let mut s = b[(i, j)];
            for k in 0..j {
                s = s - l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / root;
        }
    }
    Ok(l)
}

/// Solve `L X = M` in place for lower-triangular `L`.
fn solve_lower_inplace<T: Real>(l: &Array2<T>, m: &mut Array2<T>) {
    let n = l.nrows();
    let cols = m.ncols();
    for c in 0..cols {
        for i in 0..n {
            let mut s = m[(i, c)];
            for k in 0..i {
                s = s - l[(i, k)] * m[(k, c)];
            }
            m[(i, c)] = s / l[(i, i)];
        }
    }
}

/// Solve `Lᵀ X = M` in place for lower-triangular `L`.
fn solve_lower_transpose_inplace<T: Real>(l: &Array2<T>, m: &mut Array2<T>) {
    let n = l.nrows();
    let cols = m.ncols();
    for c in 0..cols {
        for i in (0..n).rev() {
            let mut s = m[(i, c)];
            for k in i + 1..n {
                s = s - l[(k, i)] * m[(k, c)];
            }
            m[(i, c)] = s / l[(i, i)];
        }
    }
}

fn hypot<T: Real>(a: T, b: T) -> T {
    let (a, b) = (a.abs(), b.abs());
    if a > b {
        let r = b / a;
        a * (T::one() + r * r).sqrt()
    } else if b > T::zero() {
        let r = a / b;
        b * (T::one() + r * r).sqrt()
    } else {
        T::zero()
    }
}

/// Householder reduction of a symmetric matrix to tridiagonal form.
///
/// On return `z` holds the accumulated orthogonal transformation, `d` the
/// diagonal and `e` the subdiagonal (with `e[0] = 0`).
fn tridiagonalize<T: Real>(z: &mut Array2<T>, d: &mut [T], e: &mut [T]) {
    let n = z.nrows();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = T::zero();
        if l > 0 {
            let mut scale = T::zero();
            for k in 0..=l {
                scale = scale + z[(i, k)].abs();
            }
            if scale == T::zero() {
                e[i] = z[(i, l)];
            } else {
                for k in 0..=l {
                    z[(i, k)] = z[(i, k)] / scale;
                    h = h + z[(i, k)] * z[(i, k)];
                }
                let f = z[(i, l)];
                let g = if f >= T::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                z[(i, l)] = f - g;
                let mut f_acc = T::zero();
                for j in 0..=l {
                    z[(j, i)] = z[(i, j)] / h;
                    let mut g_acc = T::zero();
                    for k in 0..=j {
                        g_acc = g_acc + z[(j, k)] * z[(i, k)];
                    }
                    for k in j + 1..=l {
                        g_acc = g_acc + z[(k, j)] * z[(i, k)];
                    }
                    e[j] = g_acc / h;
                    f_acc = f_acc + e[j] * z[(i, j)];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = z[(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        let delta = f * e[k] + g * z[(i, k)];
                        z[(j, k)] = z[(j, k)] - delta;
                    }
                }
            }
        } else {
            e[i] = z[(i, l)];
        }
        d[i] = h;
    }
    d[0] = T::zero();
    e[0] = T::zero();
    for i in 0..n {
        if d[i] != T::zero() {
            for j in 0..i {
                let mut g = T::zero();
                for k in 0..i {
                    g = g + z[(i, k)] * z[(k, j)];
                }
                for k in 0..i {
                    let delta = g * z[(k, i)];
                    z[(k, j)] = z[(k, j)] - delta;
                }
            }
        }
        d[i] = z[(i, i)];
        z[(i, i)] = T::one();
        for j in 0..i {
            z[(j, i)] = T::zero();
            z[(i, j)] = T::zero();
        }
    }
}

/// Implicit-shift QL on a tridiagonal matrix, rotations accumulated into `z`.
fn ql_implicit_shift<T: Real>(d: &mut [T], e: &mut [T], z: &mut Array2<T>) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = T::zero();
    for l in 0..n {
        let mut iterations = 0usize;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() + dd == dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence {
                    index: l,
                    iterations,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (T::of(2.0) * e[l]);
            let mut r = hypot(g, T::one());
            let denom = g + if g >= T::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / denom;
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut i = m;
            let mut underflow_break = false;
            while i > l {
                let idx = i - 1;
                let mut f = s * e[idx];
                let b = c * e[idx];
                r = hypot(f, g);
                e[i] = r;
                if r == T::zero() {
                    d[i] = d[i] - p;
                    e[m] = T::zero();
                    underflow_break = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i] - p;
                r = (d[idx] - g) * s + T::of(2.0) * c * b;
                p = s * r;
                d[i] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[(k, i)];
                    z[(k, i)] = s * z[(k, idx)] + c * f;
                    z[(k, idx)] = c * z[(k, idx)] - s * f;
                }
                i -= 1;
            }
            if underflow_break {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}

/// Full eigendecomposition of a symmetric matrix, eigenvalues ascending and
/// eigenvectors as columns with a fixed sign convention.
pub fn symmetric_eig<T: Real>(a: &Array2<T>) -> Result<(Vec<T>, Array2<T>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::ShapeMismatch(format!("symmetric_eig on {:?}", a.dim())));
    }
    // symmetrize to remove accumulation roundoff from upstream products
    let mut z: Array2<T> = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            z[(i, j)] = (a[(i, j)] + a[(j, i)]) / T::of(2.0);
        }
    }
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    tridiagonalize(&mut z, &mut d, &mut e);
    ql_implicit_shift(&mut d, &mut e, &mut z)?;

    // sort ascending with a stable permutation
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("non-finite eigenvalue"));
    let values: Vec<T> = order.iter().map(|&i| d[i]).collect();
    let mut vectors: Array2<T> = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        let scale = (0..n).map(|r| z[(r, src)].abs()).fold(T::zero(), T::max);
        let threshold = scale * T::of(1e-12);
        let mut flip = false;
        for r in 0..n {
            let v = z[(r, src)];
            if v.abs() > threshold {
                flip = v < T::zero();
                break;
            }
        }
        for r in 0..n {
            vectors[(r, dst)] = if flip { -z[(r, src)] } else { z[(r, src)] };
        }
    }
    Ok((values, vectors))
}

/// Lowest `m` eigenpairs of `A v = λ B v` for symmetric PSD `A` and SPD `B`.
pub fn generalized_symmetric_eig<T: Real>(
    a: &Array2<T>,
    b: &Array2<T>,
    m: usize,
) -> Result<EigenResult<T>> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n || b.ncols() != n {
        return Err(Error::ShapeMismatch(format!(
            "pencil shapes {:?}, {:?}",
            a.dim(),
            b.dim()
        )));
    }
    if m > n {
        return Err(Error::ShapeMismatch(format!("requested {m} pairs from size {n}")));
    }
    let l = cholesky(b)?;
    // C = L⁻¹ A L⁻ᵀ via two triangular solves
    let mut y = a.clone();
    solve_lower_inplace(&l, &mut y);
    let mut c = y.t().to_owned();
    solve_lower_inplace(&l, &mut c);

    let (mut values, standard_vectors) = symmetric_eig(&c)?;

    // PSD guard: tiny negative values are roundoff, anything worse is an
    // assembly bug upstream.
    let scale = values
        .iter()
        .map(|v| v.abs())
        .fold(T::zero(), T::max)
        .max(T::one());
    let guard = T::of(PSD_GUARD) * scale;
    let mut clamped = 0usize;
    for v in values.iter_mut() {
        if *v < T::zero() {
            if *v < -guard {
                return Err(Error::NegativeEigenvalue {
                    value: v.to_f64_lossy(),
                    guard: guard.to_f64_lossy(),
                });
            }
            *v = T::zero();
            clamped += 1;
        }
    }

    let mut vectors = standard_vectors.slice(ndarray::s![.., 0..m]).to_owned();
    solve_lower_transpose_inplace(&l, &mut vectors);
    let values: Vec<T> = values.into_iter().take(m).collect();

    // relative residuals ‖Av − λBv‖ / ‖Bv‖
    let av = a.dot(&vectors);
    let bv = b.dot(&vectors);
    let mut residuals = Vec::with_capacity(m);
    for (j, lambda) in values.iter().enumerate() {
        let mut num = T::zero();
        let mut den = T::zero();
        for i in 0..n {
            let r = av[(i, j)] - *lambda * bv[(i, j)];
            num = num + r * r;
            den = den + bv[(i, j)] * bv[(i, j)];
        }
        residuals.push(num.sqrt() / den.sqrt().max(T::min_positive_value()));
    }

    Ok(EigenResult {
        values,
        vectors,
        residuals,
        clamped,
    })
}
