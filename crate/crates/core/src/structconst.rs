//! Squared bracket coefficients `(ijk)` between orthonormal module bases.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Decomposition;
use crate::{Error, Result};

/// Orthonormality tolerance for module bases.
pub const BASIS_TOL: f64 = 1e-9;
/// Entries below this are stored as exact zeros.
pub const ZERO_CUTOFF: f64 = 1e-12;

/// Dense, fully symmetric table of `(ijk) = sum B([e_a^i, e_b^j], e_c^k)^2`.
#[derive(Clone, Debug, Serialize)]
pub struct StructureTable {
    labels: Vec<String>,
    dims: Vec<usize>,
    values: Vec<f64>,
    asymmetry: f64,
}

impl StructureTable {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Largest deviation between permuted entries before symmetrisation.
    pub fn asymmetry(&self) -> f64 {
        self.asymmetry
    }

    /// Symmetrised `(ijk)`; errors on an out-of-range index.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> Result<f64> {
        let len = self.len();
        for index in [i, j, k] {
            if index >= len {
                return Err(Error::IndexOutOfRange { index, len });
            }
        }
        Ok(self.get(i, j, k))
    }

    /// Unchecked access, for inner loops.
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        let m = self.len();
        self.values[(i * m + j) * m + k]
    }

    /// Writes the nonzero entries as CSV with columns `i,j,k,value`, using
    /// module labels as indices.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["i", "j", "k", "value"])?;
        let m = self.len();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let v = self.get(i, j, k);
                    if v != 0.0 {
                        w.write_record([
                            self.labels[i].as_str(),
                            self.labels[j].as_str(),
                            self.labels[k].as_str(),
                            &format!("{v:.16e}"),
                        ])?;
                    }
                }
            }
        }
        w.flush()
    }
}

/// Computes the structure table of a decomposition.
///
/// Each `(i, j)` row is evaluated independently (in parallel) with a fixed
/// summation order, so the result does not depend on the thread schedule.
pub fn compute_table(dec: &Decomposition) -> Result<StructureTable> {
    let (within, cross) = dec.orthonormality_defect();
    if within > BASIS_TOL {
        return Err(Error::BasisQuality {
            what: "module basis is not B-orthonormal".into(),
            deviation: within,
            tolerance: BASIS_TOL,
        });
    }
    if cross > BASIS_TOL {
        return Err(Error::BasisQuality {
            what: "modules are not mutually B-orthogonal".into(),
            deviation: cross,
            tolerance: BASIS_TOL,
        });
    }

    let parent = dec.parent();
    let modules = dec.modules();
    let m = modules.len();

    // Global numbering of module basis vectors, and for every raw index the
    // basis vectors with a nonzero coefficient there.
    let mut module_of = Vec::new();
    let mut inverse: Vec<Vec<(usize, f64)>> = vec![Vec::new(); parent.dim()];
    for (k, module) in modules.iter().enumerate() {
        for u in module.basis() {
            let g = module_of.len();
            module_of.push(k);
            for &(raw, coeff) in u {
                inverse[raw].push((g, coeff));
            }
        }
    }
    let total = module_of.len();

    let rows: Vec<Vec<f64>> = (0..m * m)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / m, ij % m);
            let mut row = vec![0.0; m];
            let mut coeffs = vec![0.0; total];
            let mut touched: Vec<usize> = Vec::new();
            for ea in modules[i].basis() {
                for eb in modules[j].basis() {
                    let w = parent.bracket_sparse(ea, eb);
                    if w.is_empty() {
                        continue;
                    }
                    for &(raw, value) in &parent.gram_apply(&w) {
                        for &(g, f) in &inverse[raw] {
                            if coeffs[g] == 0.0 {
                                touched.push(g);
                            }
                            coeffs[g] += value * f;
                        }
                    }
                    touched.sort_unstable();
                    touched.dedup();
                    for &g in &touched {
                        row[module_of[g]] += coeffs[g] * coeffs[g];
                        coeffs[g] = 0.0;
                    }
                    touched.clear();
                }
            }
            row
        })
        .collect();

    let raw = |i: usize, j: usize, k: usize| rows[i * m + j][k];
    let mut values = vec![0.0; m * m * m];
    let mut asymmetry = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let perms = [
                    raw(i, j, k),
                    raw(j, i, k),
                    raw(j, k, i),
                    raw(i, k, j),
                    raw(k, i, j),
                    raw(k, j, i),
                ];
                let lo = perms.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = perms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                asymmetry = asymmetry.max(hi - lo);
                let mean = perms.iter().sum::<f64>() / 6.0;
                values[(i * m + j) * m + k] = if mean < ZERO_CUTOFF { 0.0 } else { mean };
            }
        }
    }

    Ok(StructureTable {
        labels: dec.labels(),
        dims: dec.dims(),
        values,
        asymmetry,
    })
}
