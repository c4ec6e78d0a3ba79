use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

/// A square complex matrix stored as a sorted list of nonzero entries.
///
/// Basis elements of `sp(n)` have at most four nonzero entries, so brackets of
/// basis elements are computed without ever forming dense `2n x 2n` products.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    size: usize,
    entries: Vec<(usize, usize, Complex64)>,
}

impl SparseMatrix {
    pub fn from_entries(
        size: usize,
        entries: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Self {
        let mut acc: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
        for (r, c, v) in entries {
            assert!(
                r < size && c < size,
                "entry ({r}, {c}) outside {size}x{size}"
            );
            *acc.entry((r, c)).or_default() += v;
        }
        let entries = acc
            .into_iter()
            .filter(|(_, v)| v.norm_sqr() != 0.0)
            .map(|((r, c), v)| (r, c, v))
            .collect();
        SparseMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[(usize, usize, Complex64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        debug_assert_eq!(self.size, rhs.size);
        let products = self.entries.iter().flat_map(|&(r, k, a)| {
            rhs.entries
                .iter()
                .filter(move |&&(k2, _, _)| k2 == k)
                .map(move |&(_, c, b)| (r, c, a * b))
        });
        SparseMatrix::from_entries(self.size, products)
    }

    /// `[self, rhs] = self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let ab = self.mul(rhs);
        let ba = rhs.mul(self);
        SparseMatrix::from_entries(
            self.size,
            ab.entries
                .into_iter()
                .chain(ba.entries.into_iter().map(|(r, c, v)| (r, c, -v))),
        )
    }

    /// Real Frobenius pairing `Re tr(self * other^H)`.
    pub fn frobenius_dot(&self, other: &SparseMatrix) -> f64 {
        let mut sum = 0.0;
        for &(r, c, a) in &self.entries {
            if let Ok(pos) = other
                .entries
                .binary_search_by(|&(r2, c2, _)| (r2, c2).cmp(&(r, c)))
            {
                sum += (a * other.entries[pos].2.conj()).re;
            }
        }
        sum
    }

    /// Conjugation by the real diagonal matrix `diag(signs)`, i.e. entry
    /// `(r, c)` is multiplied by `signs[r] * signs[c]`.
    pub fn conjugate_by_diagonal(&self, signs: &[f64]) -> SparseMatrix {
        assert_eq!(signs.len(), self.size);
        SparseMatrix::from_entries(
            self.size,
            self.entries
                .iter()
                .map(|&(r, c, v)| (r, c, v * (signs[r] * signs[c]))),
        )
    }

    pub fn scale(&self, factor: f64) -> SparseMatrix {
        SparseMatrix::from_entries(
            self.size,
            self.entries.iter().map(|&(r, c, v)| (r, c, v * factor)),
        )
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.size, self.size);
        for &(r, c, v) in &self.entries {
            m[(r, c)] += v;
        }
        m
    }
}
