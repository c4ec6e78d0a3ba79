use nalgebra::DMatrix;
use sp_einstein::algebra::{
    build_sp_basis, decompose_triple, enumerate_sign_modules, sp_dim, AlgebraBasis, Decomposition,
    ModuleKind, SparseVec, TripleShape,
};

fn shapes_up_to(n: usize) -> Vec<TripleShape> {
    let mut out = Vec::new();
    for k1 in 1..n {
        for k2 in 1..n {
            for k3 in 1..n {
                if k1 + k2 + k3 <= n {
                    out.push(TripleShape::new(k1, k2, k3).unwrap());
                }
            }
        }
    }
    out
}

fn dot(u: &[(usize, f64)], v: &[(usize, f64)]) -> f64 {
    u.iter()
        .map(|&(i, a)| {
            v.iter()
                .find(|&&(j, _)| j == i)
                .map_or(0.0, |&(_, b)| a * b)
        })
        .sum()
}

/// Norm of the B-projection of `w` onto module `j`.
fn projection_norm(dec: &Decomposition, w: &SparseVec, j: usize) -> f64 {
    let gw = dec.parent().gram_apply(w);
    dec.modules()[j]
        .basis()
        .iter()
        .map(|e| dot(&gw, e).powi(2))
        .sum::<f64>()
        .sqrt()
}

fn check_bracket_invariance(dec: &Decomposition) {
    let parent = dec.parent();
    let h: Vec<&SparseVec> = dec
        .modules()
        .iter()
        .filter(|m| m.kind == ModuleKind::SubalgebraFactor)
        .flat_map(|m| m.basis())
        .collect();
    for (i, m) in dec.modules().iter().enumerate() {
        for x in &h {
            for e in m.basis() {
                let w = parent.bracket_sparse(x, e);
                for j in 0..dec.modules().len() {
                    if j != i {
                        let p = projection_norm(dec, &w, j);
                        assert!(
                            p < 1e-10,
                            "[h, {}] leaks into {}: {p}",
                            m.label,
                            dec.modules()[j].label
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn triple_decompositions_are_complete_orthogonal_and_invariant() {
    for shape in shapes_up_to(5) {
        let dec = decompose_triple(shape).unwrap();
        let n = shape.n();
        assert_eq!(dec.dims().iter().sum::<usize>(), sp_dim(n));
        let [k1, k2, k3] = shape.blocks();
        assert_eq!(
            dec.dims(),
            vec![
                sp_dim(k1),
                sp_dim(k2),
                sp_dim(k3),
                4 * k1 * k2,
                4 * k1 * k3,
                4 * k2 * k3
            ]
        );
        let (within, cross) = dec.orthonormality_defect();
        assert!(within < 1e-12 && cross < 1e-10, "{shape}: {within} {cross}");
        check_bracket_invariance(&dec);
    }
}

#[test]
fn sign_module_decompositions_are_invariant() {
    for (n1, n2) in [(1, 2), (1, 3), (2, 2)] {
        let dec = enumerate_sign_modules(n1, n2).unwrap();
        let (within, cross) = dec.orthonormality_defect();
        assert!(within < 1e-12 && cross < 1e-10);
        check_bracket_invariance(&dec);
    }
}

/// Matrix of `X -> D X D` on raw coordinates, via explicit conjugation and
/// projection of matrices.
fn involution_matrix(parent: &AlgebraBasis, boundary: usize) -> DMatrix<f64> {
    let n = parent.rank();
    let signs: Vec<f64> = (0..2 * n)
        .map(|r| if r % n < boundary { 1.0 } else { -1.0 })
        .collect();
    let d = parent.dim();
    let mut t = DMatrix::zeros(d, d);
    for (a, e) in parent.elements().iter().enumerate() {
        let image = e.conjugate_by_diagonal(&signs);
        for (b, c) in parent.coordinates(&image).into_iter().enumerate() {
            t[(b, a)] = c;
        }
    }
    t
}

fn rank(m: &DMatrix<f64>) -> usize {
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .filter(|&&s| s > 1e-9)
        .count()
}

/// Dimension of the joint eigenspace of the involutions with the given
/// eigenvalues, as the rank of the product of spectral projectors.
fn eigenspace_dim(ts: &[DMatrix<f64>], pattern: &[i8]) -> usize {
    let d = ts[0].nrows();
    let id = DMatrix::<f64>::identity(d, d);
    let p = ts
        .iter()
        .zip(pattern)
        .fold(id.clone(), |acc, (t, &s)| acc * (&id + t * s as f64) * 0.5);
    rank(&p)
}

#[test]
fn sign_pattern_dimensions_match_brute_force() {
    for (n1, n2) in [(1, 2), (1, 3), (2, 2)] {
        let dec = enumerate_sign_modules(n1, n2).unwrap();
        let parent = build_sp_basis(2 * n1 * n2).unwrap();
        let ts: Vec<DMatrix<f64>> = (1..2 * n2)
            .map(|i| involution_matrix(&parent, n1 * i))
            .collect();
        let len = ts.len();
        let mut nonzero = 0;
        for bits in 0..(1usize << len) {
            let pattern: Vec<i8> = (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .collect();
            let dim = eigenspace_dim(&ts, &pattern);
            if pattern.iter().all(|&s| s == 1) {
                // Fixed points of every involution: the diagonal blocks.
                assert_eq!(dim, 2 * n2 * sp_dim(n1));
                continue;
            }
            let module = dec.modules().iter().find(|m| {
                m.kind == ModuleKind::OffDiagonal && m.sign_pattern.as_deref() == Some(&pattern[..])
            });
            match module {
                Some(m) => {
                    assert_eq!(m.dim(), dim, "pattern {pattern:?}");
                    nonzero += 1;
                }
                None => {
                    assert_eq!(dim, 0, "pattern {pattern:?} omitted but nonzero");
                    assert!(dec.absent_patterns().contains(&pattern));
                }
            }
        }
        // Nonzero patterns correspond to pairs of distinct blocks.
        let blocks = 2 * n2;
        assert_eq!(nonzero, blocks * (blocks - 1) / 2);
    }
}

#[test]
fn every_raw_element_lies_in_exactly_one_module() {
    for (n1, n2) in [(1, 2), (1, 3), (2, 2)] {
        let dec = enumerate_sign_modules(n1, n2).unwrap();
        let d = dec.parent().dim();
        let mut owner = vec![0usize; d];
        for m in dec.modules() {
            for u in m.basis() {
                for &(i, _) in u {
                    owner[i] += 1;
                }
            }
        }
        assert!(owner.iter().all(|&c| c == 1));
        let diag = dec
            .modules()
            .iter()
            .filter(|m| m.kind == ModuleKind::SubalgebraFactor)
            .count();
        assert_eq!(diag, 2 * n2);
    }
}

#[test]
fn module_table_examples() {
    let dec = enumerate_sign_modules(2, 2).unwrap();
    for m in dec
        .modules()
        .iter()
        .filter(|m| m.kind == ModuleKind::SubalgebraFactor)
    {
        assert_eq!(m.dim(), 10);
    }
    let dec = enumerate_sign_modules(1, 3).unwrap();
    let off = dec
        .modules()
        .iter()
        .filter(|m| m.kind == ModuleKind::OffDiagonal)
        .count();
    assert_eq!((dec.modules().len() - off, off), (6, 15));
}
