//! Exterior algebra over Euclidean space: multi-index bases for k-forms,
//! wedge signs, the Hodge star on basis forms, and the codifferential sign.
//!
//! All signs are computed by counting inversions in integer arithmetic.
//! The lexicographic basis order fixed by [`basis`] is the coordinate frame
//! for every matrix built downstream.

use crate::error::{Error, Result};

/// Ordered index set `I = {i1 < i2 < ... < ik}` labeling the basis k-form
/// `dx_I = dx_{i1} ∧ ... ∧ dx_{ik}` on d-dimensional space. Indices are
/// 1-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    indices: Vec<usize>,
    dim: usize,
}

impl MultiIndex {
    pub fn new(indices: Vec<usize>, dim: usize) -> Result<Self> {
        if indices.len() > dim {
            return Err(Error::DegreeOutOfRange {
                degree: indices.len() as isize,
                dim,
            });
        }
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "multi-index {indices:?} not strictly increasing"
                )));
            }
        }
        if indices.iter().any(|&i| i < 1 || i > dim) {
            return Err(Error::InvalidInput(format!(
                "multi-index {indices:?} outside 1..={dim}"
            )));
        }
        Ok(Self { indices, dim })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Form degree k.
    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }

    /// Complementary index set in `{1..d}`, sorted.
    pub fn complement(&self) -> MultiIndex {
        let indices = (1..=self.dim).filter(|j| !self.contains(*j)).collect();
        MultiIndex {
            indices,
            dim: self.dim,
        }
    }
}

/// Lexicographically ordered basis of k-forms on d-space; length `C(d,k)`.
pub fn basis(dim: usize, degree: usize) -> Result<Vec<MultiIndex>> {
    if degree > dim {
        return Err(Error::DegreeOutOfRange {
            degree: degree as isize,
            dim,
        });
    }
    let mut out = Vec::with_capacity(num_integer::binomial(dim, degree));
    let mut current: Vec<usize> = (1..=degree).collect();
    loop {
        out.push(MultiIndex {
            indices: current.clone(),
            dim,
        });
        // advance to the next combination in lexicographic order
        let k = degree;
        if k == 0 {
            break;
        }
        let mut i = k;
        while i > 0 && current[i - 1] == dim - (k - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        current[i - 1] += 1;
        for j in i..k {
            current[j] = current[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Sign produced by wedging `dx_j` onto a multi-index.
///
/// For `j ∉ I` returns `s` with `dx_j ∧ dx_I = s · dx_{I ∪ {j}}`; for `j ∈ I`
/// returns `sign(j, I)` with `dx_j ∧ dx_{I \ {j}} = sign(j, I) · dx_I`. Both
/// cases reduce to the parity of the number of indices in `I` below `j`
/// (excluding `j` itself).
pub fn insertion_sign(j: usize, index: &MultiIndex) -> i32 {
    debug_assert!(j >= 1 && j <= index.dim());
    let below = index.indices.iter().filter(|&&i| i < j).count();
    if below % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Hodge star of a basis form: returns `(J, s)` with `⋆ dx_I = s · dx_J`,
/// where `J` is the complement of `I` and the sign makes
/// `dx_I ∧ (s · dx_J) = dx_1 ∧ ... ∧ dx_d` the volume form.
pub fn hodge_star(index: &MultiIndex) -> (MultiIndex, i32) {
    let complement = index.complement();
    let mut concat: Vec<usize> = index.indices.clone();
    concat.extend_from_slice(&complement.indices);
    (complement, permutation_parity(&concat))
}

/// Sign `(−1)^{k+1}` relating the codifferential on k-forms to the Hodge
/// star conjugate of the exterior derivative.
pub fn codifferential_sign(dim: usize, degree: usize) -> Result<i32> {
    if degree + 1 > dim {
        return Err(Error::DegreeOutOfRange {
            degree: degree as isize,
            dim,
        });
    }
    Ok(if degree % 2 == 0 { -1 } else { 1 })
}

/// Parity of the permutation sorting `perm` (a permutation of distinct
/// values) into increasing order, via inversion count.
fn permutation_parity(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn mi(indices: &[usize], dim: usize) -> MultiIndex {
        MultiIndex::new(indices.to_vec(), dim).unwrap()
    }

    /// Independent sign oracle: bubble-sort the concatenated index list and
    /// count swaps.
    fn parity_by_bubble_sort(seq: &[usize]) -> i32 {
        let mut v = seq.to_vec();
        let mut swaps = 0usize;
        loop {
            let mut changed = false;
            for i in 0..v.len().saturating_sub(1) {
                if v[i] > v[i + 1] {
                    v.swap(i, i + 1);
                    swaps += 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if swaps % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn basis_enumerations() {
        let b = basis(2, 1).unwrap();
        assert_eq!(b, vec![mi(&[1], 2), mi(&[2], 2)]);

        let b = basis(3, 2).unwrap();
        assert_eq!(b, vec![mi(&[1, 2], 3), mi(&[1, 3], 3), mi(&[2, 3], 3)]);

        assert_eq!(basis(4, 2).unwrap().len(), 6);
    }

    #[test]
    fn basis_counts_match_binomials() {
        for d in 0..=6 {
            for k in 0..=d {
                let b = basis(d, k).unwrap();
                assert_eq!(b.len(), num_integer::binomial(d, k));
                // lexicographic order
                for w in b.windows(2) {
                    assert!(w[0].indices() < w[1].indices());
                }
            }
        }
    }

    #[test]
    fn basis_rejects_out_of_range_degree() {
        assert!(basis(3, 4).is_err());
    }

    #[test]
    fn insertion_sign_examples() {
        assert_eq!(insertion_sign(1, &mi(&[2, 3], 3)), 1);
        // one transposition moves dx_2 past dx_1
        assert_eq!(insertion_sign(2, &mi(&[1, 3], 3)), -1);
        // j inside I: dx_2 ∧ dx_1 = −dx_1 ∧ dx_2
        assert_eq!(insertion_sign(2, &mi(&[1, 2], 2)), -1);
    }

    #[test]
    fn insertion_signs_compose_to_permutation_parity() {
        // Building dx_I by inserting its elements in any order accumulates
        // the parity of the permutation taking insertion order to sorted
        // order, independent of the order chosen.
        for d in 1..=5usize {
            for k in 0..=d {
                for combo in (1..=d).combinations(k) {
                    for perm in combo.iter().copied().permutations(k) {
                        let mut acc = 1i32;
                        let mut have: Vec<usize> = Vec::new();
                        for &j in &perm {
                            let partial = MultiIndex::new(
                                have.iter().copied().sorted().collect(),
                                d,
                            )
                            .unwrap();
                            acc *= insertion_sign(j, &partial);
                            have.push(j);
                        }
                        assert_eq!(acc, parity_by_bubble_sort(&perm));
                    }
                }
            }
        }
    }

    #[test]
    fn hodge_star_examples() {
        let (j, s) = hodge_star(&mi(&[], 2));
        assert_eq!((j.indices(), s), (&[1, 2][..], 1));

        // solve dx_2 ∧ s·dx_1 = dx_1 ∧ dx_2
        let (j, s) = hodge_star(&mi(&[2], 2));
        assert_eq!((j.indices(), s), (&[1][..], -1));

        let (j, s) = hodge_star(&mi(&[1], 3));
        assert_eq!((j.indices(), s), (&[2, 3][..], 1));
    }

    #[test]
    fn hodge_star_involution_and_normalization() {
        for d in 0..=6usize {
            for k in 0..=d {
                for index in basis(d, k).unwrap() {
                    let (dual, s1) = hodge_star(&index);
                    let (back, s2) = hodge_star(&dual);
                    assert_eq!(back, index);
                    let expected = if (k * (d - k)) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(s1 * s2, expected, "⋆⋆ on {index:?}");

                    // dx_I ∧ ⋆dx_I = +dV: parity of (I, J) times s1 is +1
                    let mut concat = index.indices().to_vec();
                    concat.extend_from_slice(dual.indices());
                    assert_eq!(parity_by_bubble_sort(&concat) * s1, 1);
                }
            }
        }
    }

    #[test]
    fn codifferential_signs() {
        assert_eq!(codifferential_sign(4, 0).unwrap(), -1);
        assert_eq!(codifferential_sign(4, 1).unwrap(), 1);
        assert_eq!(codifferential_sign(4, 3).unwrap(), 1);
        assert!(codifferential_sign(2, 2).is_err());
    }
}
