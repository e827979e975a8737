//! Symmetric matrices over GF(2) and the binary delta-matroids they define.

use super::set_system::{SetSystem, GROUND_CAP};
use crate::error::{Error, Result};
use crate::subset::{is_valid_label, Subset};

/// Square bit matrix indexed by labels; row `i` is a bitmask of its columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    index: Vec<String>,
    rows: Vec<u32>,
}

impl Gf2Matrix {
    /// Checks squareness, symmetry and label validity.
    pub fn new(index: Vec<String>, rows: Vec<u32>) -> Result<Self> {
        let n = index.len();
        if n > GROUND_CAP {
            return Err(Error::CapExceeded {
                what: "matrix",
                size: n,
                cap: GROUND_CAP,
            });
        }
        if rows.len() != n {
            return Err(Error::Invalid(format!(
                "{} rows for {n} labels",
                rows.len()
            )));
        }
        for (i, l) in index.iter().enumerate() {
            if !is_valid_label(l) || index[..i].contains(l) {
                return Err(Error::Invalid(format!("bad or duplicate label `{l}`")));
            }
        }
        let full = Subset::full(n).0;
        for (i, &r) in rows.iter().enumerate() {
            if r & !full != 0 {
                return Err(Error::Invalid(format!("row {i} has columns beyond {n}")));
            }
            for (j, &rj) in rows.iter().enumerate().take(i) {
                if (r >> j & 1) != (rj >> i & 1) {
                    return Err(Error::NotSymmetric(j, i));
                }
            }
        }
        Ok(Gf2Matrix { index, rows })
    }

    /// Builds from a dense 0/1 table.
    pub fn from_table<S: AsRef<str>>(index: &[S], table: &[&[u8]]) -> Result<Self> {
        let rows = table
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &b)| acc | u32::from(b & 1) << j)
            })
            .collect();
        Self::new(index.iter().map(|s| s.as_ref().to_string()).collect(), rows)
    }

    pub fn index(&self) -> &[String] {
        &self.index
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    /// Whether the principal submatrix on `x` is nonsingular. The empty
    /// submatrix counts as nonsingular.
    pub fn principal_nonsingular(&self, x: Subset) -> bool {
        let mut rows: Vec<u32> = x.iter().map(|i| self.rows[i] & x.0).collect();
        for (rank, col) in x.iter().enumerate() {
            let bit = 1u32 << col;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                return false;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
        }
        true
    }

    /// The set system of nonsingular principal submatrices.
    pub fn delta_matroid(&self) -> SetSystem {
        let n = self.size();
        let feasible: Vec<Subset> = Subset::all(n)
            .filter(|&x| self.principal_nonsingular(x))
            .collect();
        // Index labels may not be in natural order; from_masks sorts them.
        SetSystem::from_masks(self.index.clone(), feasible)
            .expect("matrix labels already validated")
    }
}

/// Delta-matroid of a symmetric GF(2) matrix.
pub fn from_gf2_matrix(m: &Gf2Matrix) -> SetSystem {
    m.delta_matroid()
}

/// The unique binary delta-matroid with the given sets of size at most two.
///
/// Diagonal entries record the feasible singletons. An off-diagonal entry
/// is chosen so the 2x2 determinant `m_xx m_yy + m_xy` matches feasibility
/// of `{x, y}`.
pub fn reconstruct_binary(small: &SetSystem) -> Result<SetSystem> {
    if !small.contains(Subset::EMPTY) {
        return Err(Error::NotNormal);
    }
    let n = small.ground_size();
    let mut rows = vec![0u32; n];
    for (x, row) in rows.iter_mut().enumerate() {
        if small.contains(Subset::singleton(x)) {
            *row |= 1 << x;
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            let pair = small.contains(Subset::singleton(x).with(y));
            let diag = rows[x] >> x & rows[y] >> y & 1 == 1;
            if pair ^ diag {
                rows[x] |= 1 << y;
                rows[y] |= 1 << x;
            }
        }
    }
    let m = Gf2Matrix::new(small.ground().to_vec(), rows)?;
    Ok(m.delta_matroid())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Determinant mod 2 by permutation expansion.
    fn det_mod2(m: &Gf2Matrix, x: Subset) -> bool {
        let idx: Vec<usize> = x.iter().collect();
        let mut perm: Vec<usize> = (0..idx.len()).collect();
        let mut total = false;
        loop {
            if perm.iter().enumerate().all(|(i, &p)| m.get(idx[i], idx[p])) {
                total = !total;
            }
            // next permutation
            let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..perm.len())
                .rev()
                .find(|&j| perm[j] > perm[i - 1])
                .unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        total
    }

    fn all_symmetric(n: usize) -> impl Iterator<Item = Gf2Matrix> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        (0u32..1 << pairs.len()).map(move |bits| {
            let mut rows = vec![0u32; n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
            Gf2Matrix::new(labels.clone(), rows).unwrap()
        })
    }

    #[test]
    fn elimination_matches_permutation_expansion() {
        for n in 0..=4 {
            for m in all_symmetric(n) {
                for x in Subset::all(n) {
                    let expect = x.is_empty() || det_mod2(&m, x);
                    assert_eq!(m.principal_nonsingular(x), expect, "{m:?} {x:?}");
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let z = Gf2Matrix::from_table(&["e"], &[&[0]]).unwrap();
        assert_eq!(
            from_gf2_matrix(&z),
            SetSystem::from_labels(&["e"], &[&[]]).unwrap()
        );
        let o = Gf2Matrix::from_table(&["e"], &[&[1]]).unwrap();
        assert_eq!(
            from_gf2_matrix(&o),
            SetSystem::from_labels(&["e"], &[&[], &["e"]]).unwrap()
        );
        let ab = Gf2Matrix::from_table(&["a", "b"], &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(
            from_gf2_matrix(&ab),
            SetSystem::from_labels(&["a", "b"], &[&[], &["a", "b"]]).unwrap()
        );
        let k3 =
            Gf2Matrix::from_table(&["a", "b", "c"], &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        assert_eq!(
            from_gf2_matrix(&k3),
            SetSystem::from_labels(
                &["a", "b", "c"],
                &[&[], &["a", "b"], &["a", "c"], &["b", "c"]]
            )
            .unwrap()
        );
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(
            Gf2Matrix::from_table(&["a", "b"], &[&[0, 1], &[0, 0]]),
            Err(Error::NotSymmetric(0, 1))
        );
    }

    #[test]
    fn binary_outputs_are_normal_delta_matroids() {
        for n in 0..=4 {
            for m in all_symmetric(n) {
                let d = from_gf2_matrix(&m);
                let c = d.classify();
                assert!(c.normal && c.is_delta_matroid);
                assert_eq!(c.even, (0..n).all(|i| !m.get(i, i)));
            }
        }
    }

    #[test]
    fn reconstruction_is_unique() {
        for n in 0..=4 {
            for m in all_symmetric(n) {
                let d = from_gf2_matrix(&m);
                assert_eq!(reconstruct_binary(&d.small_sets()).unwrap(), d);
            }
        }
    }

    #[test]
    fn reconstruct_examples() {
        let s = SetSystem::from_labels(&["a", "b"], &[&[], &["a"], &["a", "b"]]).unwrap();
        assert_eq!(reconstruct_binary(&s).unwrap(), s);
        let s = SetSystem::from_labels(&["a", "b"], &[&[]]).unwrap();
        assert_eq!(reconstruct_binary(&s).unwrap(), s);
        let s = SetSystem::from_labels(&["a", "b"], &[&["a"]]).unwrap();
        assert_eq!(reconstruct_binary(&s), Err(Error::NotNormal));
    }
}
