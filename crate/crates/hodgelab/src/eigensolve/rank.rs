//! Exact matrix rank over the integers via fraction-free (Bareiss)
//! elimination. A checked `i128` pass handles the common case; on overflow
//! the computation is redone with arbitrary-width integers.

use crate::error::{Error, Result};
use ndarray::Array2;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exact rank of an integer matrix. Never wrong: falls back to big-integer
/// arithmetic if the fixed-width pass overflows.
pub fn integer_rank(z: &Array2<i64>) -> usize {
    match integer_rank_checked(z) {
        Ok(r) => r,
        Err(_) => bareiss_bigint(z),
    }
}

/// Fixed-width Bareiss elimination; errors on `i128` overflow so the caller
/// can retry with wide arithmetic.
pub fn integer_rank_checked(z: &Array2<i64>) -> Result<usize> {
    let (rows, cols) = z.dim();
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..cols).map(|j| z[(i, j)] as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut rank = 0usize;
    let steps = rows.min(cols);
    for _ in 0..steps {
        // pivot with smallest magnitude to limit entry growth
        let mut pivot: Option<(usize, usize)> = None;
        for i in rank..rows {
            for j in rank..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(rank, pi);
        if pj != rank {
            for row in m.iter_mut() {
                row.swap(rank, pj);
            }
        }
        let p = m[rank][rank];
        for i in rank + 1..rows {
            for j in rank + 1..cols {
                let a = p.checked_mul(m[i][j]).ok_or(Error::IntegerOverflow)?;
                let b = m[i][rank]
                    .checked_mul(m[rank][j])
                    .ok_or(Error::IntegerOverflow)?;
                let num = a.checked_sub(b).ok_or(Error::IntegerOverflow)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                m[i][j] = num / prev;
            }
            m[i][rank] = 0;
        }
        prev = p;
        rank += 1;
    }
    Ok(rank)
}

fn bareiss_bigint(z: &Array2<i64>) -> usize {
    let (rows, cols) = z.dim();
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigInt::from(z[(i, j)])).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0usize;
    let steps = rows.min(cols);
    for _ in 0..steps {
        let mut pivot: Option<(usize, usize)> = None;
        for i in rank..rows {
            for j in rank..cols {
                if !m[i][j].is_zero()
                    && pivot
                        .map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(rank, pi);
        if pj != rank {
            for row in m.iter_mut() {
                row.swap(rank, pj);
            }
        }
        let p = m[rank][rank].clone();
        for i in rank + 1..rows {
            let lead = m[i][rank].clone();
            for j in rank + 1..cols {
                let num = &p * &m[i][j] - &lead * &m[rank][j];
                m[i][j] = num / &prev;
            }
            m[i][rank] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigensolve::symmetric_eig;
    use ndarray::Array2;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_has_full_rank() {
        let z: Array2<i64> = Array2::from_diag_elem(5, 1);
        assert_eq!(integer_rank(&z), 5);
    }

    #[test]
    fn path_graph_incidence_rank() {
        // signed incidence of a path on n vertices has rank n-1
        for n in 2..12usize {
            let mut d: Array2<i64> = Array2::zeros((n - 1, n));
            for e in 0..n - 1 {
                d[(e, e)] = -1;
                d[(e, e + 1)] = 1;
            }
            assert_eq!(integer_rank(&d), n - 1);
        }
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z: Array2<i64> = Array2::zeros((7, 4));
        assert_eq!(integer_rank(&z), 0);
    }

    #[test]
    fn overflow_falls_back_to_wide_arithmetic() {
        // Large entries overflow the i128 pass but the public entry point
        // still answers exactly.
        let big = (1i64) << 62;
        let mut z: Array2<i64> = Array2::zeros((3, 3));
        z[(0, 0)] = big;
        z[(0, 1)] = big - 1;
        z[(1, 0)] = big - 1;
        z[(1, 1)] = big;
        z[(2, 2)] = 1;
        assert!(integer_rank_checked(&z).is_err());
        assert_eq!(integer_rank(&z), 3);
        assert_eq!(bareiss_bigint(&z), 3);
    }

    /// Floating-point rank oracle: singular values via the symmetric
    /// eigendecomposition of ZᵀZ, threshold `1e-8 · σ_max`.
    fn float_svd_rank(z: &Array2<i64>) -> usize {
        let (rows, cols) = z.dim();
        let zf = Array2::from_shape_fn((rows, cols), |(i, j)| z[(i, j)] as f64);
        let gram = zf.t().dot(&zf);
        let (vals, _) = symmetric_eig(&gram).unwrap();
        let smax2 = vals.last().copied().unwrap_or(0.0).max(0.0);
        if smax2 <= 0.0 {
            return 0;
        }
        let threshold = 1e-16 * smax2; // (1e-8 σ_max)² on squared singular values
        vals.iter().filter(|&&v| v > threshold).count()
    }

    #[test]
    fn agrees_with_float_svd_rank_on_random_sign_matrices() {
        let mut rng = StdRng::seed_from_u64(2024);
        for trial in 0..40 {
            let rows = 1 + (trial * 7) % 40;
            let cols = 1 + (trial * 11) % 40;
            let z = Array2::from_shape_fn((rows, cols), |_| rng.gen_range(-1i64..=1));
            assert_eq!(integer_rank(&z), float_svd_rank(&z), "{rows}x{cols}");
        }
    }

    #[test]
    fn checked_and_bigint_paths_agree() {
        let mut rng = StdRng::seed_from_u64(77);
        for _ in 0..20 {
            let z = Array2::from_shape_fn((12, 9), |_| rng.gen_range(-3i64..=3));
            assert_eq!(integer_rank_checked(&z).unwrap(), bareiss_bigint(&z));
        }
    }
}
