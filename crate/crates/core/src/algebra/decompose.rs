use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::basis::{build_sp_basis, merge_sorted, sparse_dot, AlgebraBasis, SparseVec};
use crate::{Error, Result};

/// Three positive quaternionic block sizes; the subgroup is
/// `Sp(k1) x Sp(k2) x Sp(k3)` inside `Sp(k1 + k2 + k3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TripleShape {
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
}

impl TripleShape {
    pub fn new(k1: usize, k2: usize, k3: usize) -> Result<Self> {
        if k1 == 0 || k2 == 0 || k3 == 0 {
            return Err(Error::InvalidArgument(format!(
                "block sizes must be positive, got ({k1}, {k2}, {k3})"
            )));
        }
        Ok(TripleShape { k1, k2, k3 })
    }

    pub fn n(&self) -> usize {
        self.k1 + self.k2 + self.k3
    }

    /// True when `k1 <= k2`, the order used for the canonical presentation.
    pub fn is_canonical_order(&self) -> bool {
        self.k1 <= self.k2
    }

    pub fn blocks(&self) -> [usize; 3] {
        [self.k1, self.k2, self.k3]
    }
}

impl fmt::Display for TripleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.k1, self.k2, self.k3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    SubalgebraFactor,
    OffDiagonal,
}

/// One summand of a decomposition, with a `B`-orthonormal basis stored as
/// sparse coordinate vectors over the raw basis of the parent algebra.
#[derive(Clone, Debug)]
pub struct Module {
    pub label: String,
    pub kind: ModuleKind,
    /// Diagonal block pairs `(a, b)`, `a <= b`, 0-based, spanned by the module.
    pub block_pairs: Vec<(usize, usize)>,
    pub sign_pattern: Option<Vec<i8>>,
    basis: Vec<SparseVec>,
}

impl Module {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }
}

/// A `B`-orthogonal decomposition of `sp(n)` into modules.
#[derive(Clone, Debug)]
pub struct Decomposition {
    parent: Arc<AlgebraBasis>,
    modules: Vec<Module>,
    absent_patterns: Vec<Vec<i8>>,
}

impl Decomposition {
    pub fn parent(&self) -> &AlgebraBasis {
        &self.parent
    }

    pub fn modules(&self) -> &[Module] {
        &self.modules
    }

    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(Module::dim).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.modules.iter().map(|m| m.label.clone()).collect()
    }

    /// Nontrivial sign patterns whose joint eigenspace is zero.
    pub fn absent_patterns(&self) -> &[Vec<i8>] {
        &self.absent_patterns
    }

    /// Replaces the basis of one module. The new basis is not validated here;
    /// consumers such as the structure table check orthonormality.
    pub fn with_module_basis(&self, index: usize, basis: Vec<SparseVec>) -> Result<Decomposition> {
        if index >= self.modules.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.modules.len(),
            });
        }
        let mut out = self.clone();
        out.modules[index].basis = basis.into_iter().map(merge_sorted).collect();
        Ok(out)
    }

    /// Largest deviation of the module bases from a `B`-orthonormal system,
    /// split into (within-module deviation, cross-module overlap).
    pub fn orthonormality_defect(&self) -> (f64, f64) {
        let parent = &self.parent;
        let images: Vec<Vec<SparseVec>> = self
            .modules
            .iter()
            .map(|m| m.basis.iter().map(|u| parent.gram_apply(u)).collect())
            .collect();
        let mut within = 0.0f64;
        let mut cross = 0.0f64;
        for (i, mi) in self.modules.iter().enumerate() {
            for (a, gu) in images[i].iter().enumerate() {
                for (j, mj) in self.modules.iter().enumerate() {
                    for (b, v) in mj.basis.iter().enumerate() {
                        let value = sparse_dot(gu, v);
                        if i == j {
                            let target = if a == b { 1.0 } else { 0.0 };
                            within = within.max((value - target).abs());
                        } else {
                            cross = cross.max(value.abs());
                        }
                    }
                }
            }
            let _ = mi;
        }
        (within, cross)
    }
}

/// Conjugation by `diag(s, s)` with `s_p = +1` for quaternionic index
/// `p < boundary` and `-1` otherwise.
#[derive(Clone, Copy, Debug)]
struct BlockSignInvolution {
    boundary: usize,
}

impl BlockSignInvolution {
    fn signs(&self, n: usize) -> Vec<f64> {
        (0..2 * n)
            .map(|r| if r % n < self.boundary { 1.0 } else { -1.0 })
            .collect()
    }
}

/// Eigenvalue of a raw element under an involution; raw elements are joint
/// eigenvectors of every block-sign involution.
fn eigenvalue(parent: &AlgebraBasis, a: usize, signs: &[f64]) -> i8 {
    let e = &parent.elements()[a];
    let image = e.conjugate_by_diagonal(signs);
    if image == *e {
        1
    } else if image == e.scale(-1.0) {
        -1
    } else {
        panic!("raw element {a} is not an eigenvector of a block-sign involution");
    }
}

fn block_index(block_sizes: &[usize]) -> Vec<usize> {
    block_sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| std::iter::repeat_n(b, size))
        .collect()
}

/// Modified Gram-Schmidt in the `B` inner product, starting from the raw
/// coordinate axes `support`.
fn orthonormalize(parent: &AlgebraBasis, support: &[usize]) -> Vec<SparseVec> {
    let mut out: Vec<SparseVec> = Vec::with_capacity(support.len());
    let mut images: Vec<SparseVec> = Vec::with_capacity(support.len());
    for &a in support {
        let mut v: SparseVec = vec![(a, 1.0)];
        for (q, gq) in out.iter().zip(&images) {
            let proj = sparse_dot(gq, &v);
            if proj != 0.0 {
                let mut acc = v.clone();
                acc.extend(q.iter().map(|&(i, x)| (i, -proj * x)));
                v = merge_sorted(acc);
            }
        }
        let gv = parent.gram_apply(&v);
        let norm = sparse_dot(&gv, &v).sqrt();
        assert!(norm > 1e-12, "degenerate direction in module support");
        let v: SparseVec = v.into_iter().map(|(i, x)| (i, x / norm)).collect();
        images.push(parent.gram_apply(&v));
        out.push(v);
    }
    out
}

/// Splits `sp(n)` into the diagonal `sp(k_b)` blocks and the joint eigenspaces
/// of the given block-sign involutions on the off-diagonal part.
type PatternGroup = (Vec<usize>, Vec<(usize, usize)>);

fn decompose_by_involutions(
    parent: Arc<AlgebraBasis>,
    block_sizes: &[usize],
    boundaries: &[usize],
    factor_label: impl Fn(usize) -> String,
    off_label: impl Fn(&[i8], &[(usize, usize)]) -> String,
) -> Decomposition {
    let n = parent.rank();
    let block_of = block_index(block_sizes);
    let involutions: Vec<Vec<f64>> = boundaries
        .iter()
        .map(|&boundary| BlockSignInvolution { boundary }.signs(n))
        .collect();

    let mut factors: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    // pattern -> (raw elements, block pairs)
    let mut patterns: BTreeMap<Vec<i8>, PatternGroup> = BTreeMap::new();
    for a in 0..parent.dim() {
        let (p, q) = parent.pair(a);
        let blocks = (block_of[p], block_of[q]);
        let pattern: Vec<i8> = involutions
            .iter()
            .map(|signs| eigenvalue(&parent, a, signs))
            .collect();
        if blocks.0 == blocks.1 {
            assert!(
                pattern.iter().all(|&s| s == 1),
                "diagonal block not fixed by the involutions"
            );
            factors.entry(blocks.0).or_default().push(a);
        } else {
            let slot = patterns.entry(pattern).or_default();
            slot.0.push(a);
            if !slot.1.contains(&blocks) {
                slot.1.push(blocks);
            }
        }
    }

    let mut modules: Vec<Module> = factors
        .into_iter()
        .map(|(b, support)| Module {
            label: factor_label(b),
            kind: ModuleKind::SubalgebraFactor,
            block_pairs: vec![(b, b)],
            sign_pattern: Some(vec![1; boundaries.len()]),
            basis: orthonormalize(&parent, &support),
        })
        .collect();

    let mut off: Vec<Module> = patterns
        .iter()
        .map(|(pattern, (support, pairs))| {
            let mut pairs = pairs.clone();
            pairs.sort();
            Module {
                label: off_label(pattern, &pairs),
                kind: ModuleKind::OffDiagonal,
                block_pairs: pairs,
                sign_pattern: Some(pattern.clone()),
                basis: orthonormalize(&parent, support),
            }
        })
        .collect();
    off.sort_by(|a, b| a.block_pairs.cmp(&b.block_pairs));
    modules.extend(off);

    let absent_patterns = all_patterns(boundaries.len())
        .into_iter()
        .filter(|p| p.contains(&-1) && !patterns.contains_key(p))
        .collect();

    Decomposition {
        parent,
        modules,
        absent_patterns,
    }
}

fn all_patterns(len: usize) -> Vec<Vec<i8>> {
    (0..1usize << len)
        .map(|bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect()
}

/// Decomposition of `sp(k1 + k2 + k3)` into `sp(k1), sp(k2), sp(k3)` and the
/// three joint eigenspaces `m1, m2, m3` of the involution pair `(theta, tau)`,
/// where `theta` flips sign across the boundary `k1 + k2` and `tau` across `k1`.
///
/// `m1` couples blocks 1-2, `m2` blocks 1-3 and `m3` blocks 2-3.
pub fn decompose_triple(shape: TripleShape) -> Result<Decomposition> {
    let shape = TripleShape::new(shape.k1, shape.k2, shape.k3)?;
    let parent = Arc::new(build_sp_basis(shape.n())?);
    decompose_triple_with(parent, shape)
}

/// As [`decompose_triple`], reusing an existing basis of `sp(n)`.
pub fn decompose_triple_with(
    parent: Arc<AlgebraBasis>,
    shape: TripleShape,
) -> Result<Decomposition> {
    if parent.rank() != shape.n() {
        return Err(Error::InvalidArgument(format!(
            "shape {shape} needs sp({}), got sp({})",
            shape.n(),
            parent.rank()
        )));
    }
    let theta = shape.k1 + shape.k2;
    let tau = shape.k1;
    let factor_names = ["sp(k1)", "sp(k2)", "sp(k3)"];
    let mut dec = decompose_by_involutions(
        parent,
        &shape.blocks(),
        &[theta, tau],
        |b| factor_names[b].to_string(),
        |pattern, _| match pattern {
            [1, -1] => "m1".to_string(),
            [-1, -1] => "m2".to_string(),
            [-1, 1] => "m3".to_string(),
            other => panic!("unexpected sign pattern {other:?} in a triple decomposition"),
        },
    );
    // Off-diagonal modules are sorted by block pair: (0,1), (0,2), (1,2) is
    // exactly m1, m2, m3.
    dec.absent_patterns.clear();
    Ok(dec)
}

/// Decomposition of `sp(2 n1 n2)` under the `2 n2 - 1` commuting involutions
/// `theta_i` flipping sign across the quaternionic boundary `n1 * i`.
///
/// The result lists the `2 n2` diagonal `sp(n1)` blocks first, followed by one
/// module per nonzero sign pattern, ordered by the pair of blocks it couples.
pub fn enumerate_sign_modules(n1: usize, n2: usize) -> Result<Decomposition> {
    if n1 == 0 || n2 < 2 {
        return Err(Error::InvalidArgument(format!(
            "need n1 >= 1 and n2 >= 2, got n1 = {n1}, n2 = {n2}"
        )));
    }
    let blocks = 2 * n2;
    let parent = Arc::new(build_sp_basis(n1 * blocks)?);
    let boundaries: Vec<usize> = (1..blocks).map(|i| n1 * i).collect();
    Ok(decompose_by_involutions(
        parent,
        &vec![n1; blocks],
        &boundaries,
        |b| format!("sp({n1})^{}", b + 1),
        |pattern, _| format_pattern(pattern),
    ))
}

pub fn format_pattern(pattern: &[i8]) -> String {
    let parts: Vec<String> = pattern.iter().map(|s| s.to_string()).collect();
    format!("m({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_112_dimensions() {
        let dec = decompose_triple(TripleShape::new(1, 1, 2).unwrap()).unwrap();
        assert_eq!(dec.dims(), vec![3, 3, 10, 4, 8, 8]);
        assert_eq!(
            dec.labels(),
            vec!["sp(k1)", "sp(k2)", "sp(k3)", "m1", "m2", "m3"]
        );
    }

    #[test]
    fn invalid_shapes() {
        assert!(TripleShape::new(0, 1, 1).is_err());
        assert!(enumerate_sign_modules(0, 2).is_err());
        assert!(enumerate_sign_modules(1, 1).is_err());
    }

    #[test]
    fn off_diagonal_dimension_is_four_ka_kb() {
        let shape = TripleShape::new(2, 1, 3).unwrap();
        let dec = decompose_triple(shape).unwrap();
        assert_eq!(dec.dims(), vec![10, 3, 21, 8, 24, 12]);
    }

    #[test]
    fn sp4_has_ten_modules_and_missing_pattern() {
        let dec = enumerate_sign_modules(1, 2).unwrap();
        assert_eq!(dec.modules().len(), 10);
        assert_eq!(dec.absent_patterns(), &[vec![-1, 1, -1]]);
        assert_eq!(dec.dims().iter().sum::<usize>(), 36);
    }

    #[test]
    fn module_bases_are_orthonormal() {
        let dec = decompose_triple(TripleShape::new(1, 2, 2).unwrap()).unwrap();
        let (within, cross) = dec.orthonormality_defect();
        assert!(within < 1e-12, "{within}");
        assert!(cross < 1e-12, "{cross}");
    }

    #[test]
    fn replacing_a_basis_checks_the_index() {
        let dec = decompose_triple(TripleShape::new(1, 1, 1).unwrap()).unwrap();
        assert!(matches!(
            dec.with_module_basis(6, vec![]),
            Err(Error::IndexOutOfRange { index: 6, len: 6 })
        ));
    }
}
