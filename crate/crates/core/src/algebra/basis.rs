use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::matrix::SparseMatrix;
use crate::{Error, Result};

/// Sparse coordinate vector over the raw basis, sorted by index.
pub type SparseVec = Vec<(usize, f64)>;

/// Real dimension of `sp(n)`.
pub fn sp_dim(n: usize) -> usize {
    n * (2 * n + 1)
}

/// Structure constants of the raw basis in compressed row form:
/// `[e_a, e_b] = sum_c coeff * e_c` for the entries stored at `a * dim + b`.
#[derive(Clone, Debug)]
struct BracketTable {
    dim: usize,
    offsets: Vec<usize>,
    entries: Vec<(u32, f64)>,
}

impl BracketTable {
    fn get(&self, a: usize, b: usize) -> &[(u32, f64)] {
        let row = a * self.dim + b;
        &self.entries[self.offsets[row]..self.offsets[row + 1]]
    }
}

/// The compact Lie algebra `sp(n)` realised as `2n x 2n` complex matrices
/// `X` with `X^H = -X` and `X^T J + J X = 0`, `J = [[0, I], [-I, 0]]`.
///
/// Raw basis elements are attached to a quaternionic index pair `(p, q)`,
/// `p <= q`: three elements for `p == q` and four for `p < q`. The raw basis is
/// orthogonal for the real Frobenius pairing, which makes coordinates of a
/// matrix a plain projection. The Gram matrix of `B = -Killing` is computed
/// from `-tr(ad x ad y)` over the bracket table.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    n: usize,
    elements: Vec<SparseMatrix>,
    pairs: Vec<(usize, usize)>,
    brackets: BracketTable,
    gram_rows: Vec<SparseVec>,
}

/// Builds the raw basis of `sp(n)` together with its bracket table and the
/// Gram matrix of the negative Killing form.
pub fn build_sp_basis(n: usize) -> Result<AlgebraBasis> {
    if n == 0 {
        return Err(Error::InvalidRank(n));
    }
    let (elements, pairs) = raw_elements(n);
    let brackets = bracket_table(&elements);
    let gram_rows = killing_gram(&brackets);
    Ok(AlgebraBasis {
        n,
        elements,
        pairs,
        brackets,
        gram_rows,
    })
}

fn raw_elements(n: usize) -> (Vec<SparseMatrix>, Vec<(usize, usize)>) {
    let size = 2 * n;
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mut elements = Vec::with_capacity(sp_dim(n));
    let mut pairs = Vec::with_capacity(sp_dim(n));
    for p in 0..n {
        for q in p..n {
            let (pp, qq) = (n + p, n + q);
            let group: Vec<Vec<(usize, usize, Complex64)>> = if p == q {
                vec![
                    // A = iE_pp, D = conj(A)
                    vec![(p, p, i), (pp, pp, -i)],
                    // B = E_pp, C = -conj(B)
                    vec![(p, pp, one), (pp, p, -one)],
                    // B = iE_pp, C = -conj(B)
                    vec![(p, pp, i), (pp, p, i)],
                ]
            } else {
                vec![
                    // A = E_pq - E_qp
                    vec![(p, q, one), (q, p, -one), (pp, qq, one), (qq, pp, -one)],
                    // A = i(E_pq + E_qp)
                    vec![(p, q, i), (q, p, i), (pp, qq, -i), (qq, pp, -i)],
                    // B = E_pq + E_qp
                    vec![(p, qq, one), (q, pp, one), (pp, q, -one), (qq, p, -one)],
                    // B = i(E_pq + E_qp)
                    vec![(p, qq, i), (q, pp, i), (pp, q, i), (qq, p, i)],
                ]
            };
            for entries in group {
                elements.push(SparseMatrix::from_entries(size, entries));
                pairs.push((p, q));
            }
        }
    }
    (elements, pairs)
}

fn bracket_table(elements: &[SparseMatrix]) -> BracketTable {
    let dim = elements.len();
    let norms: Vec<f64> = elements.iter().map(|e| e.frobenius_dot(e)).collect();
    let mut support: HashMap<(usize, usize), Vec<(usize, Complex64)>> = HashMap::new();
    for (g, e) in elements.iter().enumerate() {
        for &(r, c, v) in e.entries() {
            support.entry((r, c)).or_default().push((g, v));
        }
    }

    let rows: Vec<Vec<Vec<(u32, f64)>>> = (0..dim)
        .into_par_iter()
        .map(|a| {
            (0..dim)
                .map(|b| {
                    if a == b {
                        return Vec::new();
                    }
                    let m = elements[a].commutator(&elements[b]);
                    let mut coords: Vec<(u32, f64)> = Vec::new();
                    for &(r, c, v) in m.entries() {
                        let Some(hits) = support.get(&(r, c)) else {
                            panic!("bracket leaves sp(n): entry ({r}, {c}) not spanned");
                        };
                        for &(g, e) in hits {
                            let contribution = (v * e.conj()).re / norms[g];
                            match coords.iter_mut().find(|(idx, _)| *idx as usize == g) {
                                Some(slot) => slot.1 += contribution,
                                None => coords.push((g as u32, contribution)),
                            }
                        }
                    }
                    coords.retain(|&(_, x)| x != 0.0);
                    coords.sort_by_key(|&(g, _)| g);
                    coords
                })
                .collect()
        })
        .collect();

    let mut offsets = Vec::with_capacity(dim * dim + 1);
    let mut entries = Vec::new();
    offsets.push(0);
    for row in rows {
        for coords in row {
            entries.extend(coords);
            offsets.push(entries.len());
        }
    }
    BracketTable {
        dim,
        offsets,
        entries,
    }
}

/// `B(x, y) = -tr(ad x ad y) = -sum_{b,c} C_{xb}^c C_{yc}^b`.
fn killing_gram(table: &BracketTable) -> Vec<SparseVec> {
    let dim = table.dim;
    // (c, b) -> [(y, C_{yc}^b)]
    let mut inverse: HashMap<(u32, u32), Vec<(u32, f64)>> = HashMap::new();
    for y in 0..dim {
        for c in 0..dim {
            for &(b, v) in table.get(y, c) {
                inverse
                    .entry((c as u32, b))
                    .or_default()
                    .push((y as u32, v));
            }
        }
    }
    (0..dim)
        .into_par_iter()
        .map(|x| {
            let mut row = vec![0.0; dim];
            for b in 0..dim {
                for &(c, v) in table.get(x, b) {
                    if let Some(hits) = inverse.get(&(c, b as u32)) {
                        for &(y, w) in hits {
                            row[y as usize] -= v * w;
                        }
                    }
                }
            }
            row.into_iter()
                .enumerate()
                .filter(|&(_, v)| v != 0.0)
                .collect()
        })
        .collect()
}

impl AlgebraBasis {
    /// Quaternionic rank `n`.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SparseMatrix] {
        &self.elements
    }

    /// Quaternionic index pair `(p, q)`, `p <= q`, carrying raw element `a`.
    pub fn pair(&self, a: usize) -> (usize, usize) {
        self.pairs[a]
    }

    /// Raw structure constants `[e_a, e_b] = sum coeff * e_c`.
    pub fn raw_bracket(&self, a: usize, b: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.brackets
            .get(a, b)
            .iter()
            .map(|&(c, v)| (c as usize, v))
    }

    /// Sparse row `a` of the Gram matrix of `B`.
    pub fn gram_row(&self, a: usize) -> &[(usize, f64)] {
        &self.gram_rows[a]
    }

    /// Dense Gram matrix of `B` on the raw basis.
    pub fn gram(&self) -> DMatrix<f64> {
        let dim = self.dim();
        let mut g = DMatrix::zeros(dim, dim);
        for (a, row) in self.gram_rows.iter().enumerate() {
            for &(b, v) in row {
                g[(a, b)] = v;
            }
        }
        g
    }

    /// `G u` for a sparse coordinate vector, returned sorted.
    pub fn gram_apply(&self, u: &[(usize, f64)]) -> SparseVec {
        let mut acc: Vec<(usize, f64)> = Vec::new();
        for &(a, ua) in u {
            for &(b, g) in &self.gram_rows[a] {
                acc.push((b, g * ua));
            }
        }
        merge_sorted(acc)
    }

    /// `B(u, v)` for sparse coordinate vectors.
    pub fn killing_sparse(&self, u: &[(usize, f64)], v: &[(usize, f64)]) -> f64 {
        sparse_dot(&self.gram_apply(u), v)
    }

    /// `[u, v]` for sparse coordinate vectors.
    pub fn bracket_sparse(&self, u: &[(usize, f64)], v: &[(usize, f64)]) -> SparseVec {
        let mut acc = Vec::new();
        for &(a, ua) in u {
            for &(b, vb) in v {
                let w = ua * vb;
                for (c, coeff) in self.raw_bracket(a, b) {
                    acc.push((c, w * coeff));
                }
            }
        }
        merge_sorted(acc)
    }

    /// `B(u, v)` for dense coordinate vectors.
    pub fn killing(&self, u: &[f64], v: &[f64]) -> f64 {
        self.killing_sparse(&to_sparse(u), &to_sparse(v))
    }

    /// `[u, v]` for dense coordinate vectors.
    pub fn bracket(&self, u: &[f64], v: &[f64]) -> Vec<f64> {
        to_dense(
            &self.bracket_sparse(&to_sparse(u), &to_sparse(v)),
            self.dim(),
        )
    }

    /// Coordinates of a matrix in the span of the raw basis.
    pub fn coordinates(&self, m: &SparseMatrix) -> Vec<f64> {
        self.elements
            .iter()
            .map(|e| m.frobenius_dot(e) / e.frobenius_dot(e))
            .collect()
    }

    /// The matrix `sum_a coords[a] e_a`.
    pub fn matrix_of(&self, coords: &[(usize, f64)]) -> SparseMatrix {
        SparseMatrix::from_entries(
            2 * self.n,
            coords.iter().flat_map(|&(a, w)| {
                self.elements[a]
                    .entries()
                    .iter()
                    .map(move |&(r, c, v)| (r, c, v * w))
            }),
        )
    }
}

pub(crate) fn merge_sorted(mut acc: Vec<(usize, f64)>) -> SparseVec {
    acc.sort_by_key(|&(i, _)| i);
    let mut out: SparseVec = Vec::with_capacity(acc.len());
    for (i, v) in acc {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|&(_, v)| v != 0.0);
    out
}

pub(crate) fn sparse_dot(u: &[(usize, f64)], v: &[(usize, f64)]) -> f64 {
    let (mut i, mut j, mut sum) = (0, 0, 0.0);
    while i < u.len() && j < v.len() {
        match u[i].0.cmp(&v[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                sum += u[i].1 * v[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    sum
}

pub fn to_sparse(u: &[f64]) -> SparseVec {
    u.iter()
        .enumerate()
        .filter(|&(_, &v)| v != 0.0)
        .map(|(i, &v)| (i, v))
        .collect()
}

pub fn to_dense(u: &[(usize, f64)], dim: usize) -> Vec<f64> {
    let mut out = vec![0.0; dim];
    for &(i, v) in u {
        out[i] += v;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn symplectic_form(n: usize) -> DMatrix<Complex64> {
        let mut j = DMatrix::zeros(2 * n, 2 * n);
        for p in 0..n {
            j[(p, n + p)] = Complex64::new(1.0, 0.0);
            j[(n + p, p)] = Complex64::new(-1.0, 0.0);
        }
        j
    }

    #[test]
    fn rank_zero_is_rejected() {
        assert_eq!(build_sp_basis(0).unwrap_err(), Error::InvalidRank(0));
    }

    #[test]
    fn element_counts() {
        assert_eq!(build_sp_basis(1).unwrap().dim(), 3);
        assert_eq!(build_sp_basis(4).unwrap().dim(), 36);
        for n in 1..=5 {
            assert_eq!(build_sp_basis(n).unwrap().dim(), n * (2 * n + 1));
        }
    }

    #[test]
    fn elements_are_antihermitian_and_symplectic() {
        for n in 1..=3 {
            let basis = build_sp_basis(n).unwrap();
            let j = symplectic_form(n);
            for e in basis.elements() {
                let x = e.to_dense();
                assert!((x.adjoint() + &x).norm() < 1e-15);
                assert!((x.transpose() * &j + &j * &x).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn raw_basis_is_frobenius_orthogonal() {
        let basis = build_sp_basis(3).unwrap();
        let els = basis.elements();
        for a in 0..els.len() {
            for b in 0..els.len() {
                let d = els[a].frobenius_dot(&els[b]);
                if a == b {
                    assert!(d > 0.0);
                } else {
                    assert_eq!(d, 0.0);
                }
            }
        }
    }

    #[test]
    fn bracket_table_reconstructs_commutators() {
        let basis = build_sp_basis(3).unwrap();
        let els = basis.elements();
        for a in 0..els.len() {
            for b in 0..els.len() {
                let exact = els[a].commutator(&els[b]).to_dense();
                let coords: SparseVec = basis.raw_bracket(a, b).collect();
                let rebuilt = basis.matrix_of(&coords).to_dense();
                assert!((exact - rebuilt).norm() < 1e-13, "pair ({a}, {b})");
            }
        }
    }

    #[test]
    fn killing_form_is_symmetric_and_positive() {
        let basis = build_sp_basis(2).unwrap();
        let g = basis.gram();
        assert!((g.transpose() - &g).norm() < 1e-12);
        for a in 0..basis.dim() {
            assert!(g[(a, a)] > 0.0);
        }
        let eig = g.symmetric_eigenvalues();
        assert!(eig.iter().all(|&l| l > 0.0));
    }

    #[test]
    fn killing_form_matches_trace_form() {
        // Independent route: for sp(n) the Killing form is (2n + 2) Re tr(XY).
        for n in 1..=3 {
            let basis = build_sp_basis(n).unwrap();
            let g = basis.gram();
            let els = basis.elements();
            for a in 0..basis.dim() {
                for b in 0..basis.dim() {
                    let tr = (els[a].to_dense() * els[b].to_dense()).trace().re;
                    let expected = -(2.0 * n as f64 + 2.0) * tr;
                    assert!((g[(a, b)] - expected).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn killing_form_is_ad_invariant() {
        let basis = build_sp_basis(3).unwrap();
        let dim = basis.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let unit = |i: usize| {
            let mut v = vec![0.0; dim];
            v[i] = 1.0;
            v
        };
        for _ in 0..200 {
            let (x, y, z) = (
                unit(rng.random_range(0..dim)),
                unit(rng.random_range(0..dim)),
                unit(rng.random_range(0..dim)),
            );
            let lhs = basis.killing(&basis.bracket(&x, &y), &z)
                + basis.killing(&y, &basis.bracket(&x, &z));
            assert!(lhs.abs() < 1e-10);
        }
    }
}
