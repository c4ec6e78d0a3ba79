//! Einstein metrics for the three-factor ansatz on `Sp(k1 + k2 + k3)`.
//!
//! Two producers feed a common [`SolutionSet`]: the exact symmetric pipeline
//! (roots of `h(y4)` with `y1 = y2`, `y5 = y6 = 1`) and a multistart Newton
//! solver on the full six-parameter system. Solutions are identified up to
//! scale and the swap of two equal-rank factors.

mod classify;
mod existence;
mod newton;
mod sp4;
mod symmetric;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

pub use classify::{classify, Classification, DEFAULT_CLASSIFY_TOL};
pub use existence::{
    concrete_count_check, count_lower_bound, verify_existence, CountCheck, ExistenceReport,
};
pub use newton::{
    newton_from, solve_general, NewtonOutcome, NewtonStats, NEWTON_LOWER, NEWTON_UPPER,
};
pub use sp4::{expand_sp4_metric, sp4_slot};
pub use symmetric::{solve_symmetric, symmetric_candidates, SymmetricCandidate};

use crate::algebra::{decompose_triple, TripleShape};
use crate::ricci::{ricci_closed_form, ricci_general, MetricParams};
use crate::structconst::{compute_table, StructureTable};
use crate::Result;

/// Default Einstein residual tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Required residual of the structure-constant Ricci path.
pub const GENERAL_PATH_TOL: f64 = 1e-8;
/// Canonical forms closer than this (max-norm, max component 1) are the same.
pub const DEDUP_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    SymmetricPipeline,
    Newton,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EinsteinSolution {
    pub shape: TripleShape,
    pub y: [f64; 6],
    /// Common Ricci value of the canonical form.
    pub einstein_constant: f64,
    /// Closed-form Einstein residual of `y`.
    pub residual: f64,
    /// Einstein residual from the structure table, when computed.
    pub general_residual: Option<f64>,
    pub classification: Classification,
    pub source: Source,
    pub canonical: [f64; 6],
}

impl EinsteinSolution {
    /// Builds a solution record from a metric, evaluating residual,
    /// canonical form, Einstein constant and classification.
    pub fn from_metric(
        shape: TripleShape,
        y: [f64; 6],
        source: Source,
        classify_tol: f64,
    ) -> Result<Self> {
        let r = ricci_closed_form(shape, &MetricParams::new(y.to_vec())?)?;
        let canonical = canonical_form(shape, &y);
        let lambda = ricci_closed_form(shape, &MetricParams::new(canonical.to_vec())?)?
            .einstein_constant_estimate;
        Ok(EinsteinSolution {
            shape,
            y,
            einstein_constant: lambda,
            residual: r.residual,
            general_residual: None,
            classification: classify(&y, classify_tol),
            source,
            canonical,
        })
    }

    pub fn is_naturally_reductive(&self) -> bool {
        self.classification.naturally_reductive
    }

    /// Max-norm distance between canonical forms.
    pub fn distance(&self, other: &EinsteinSolution) -> f64 {
        canonical_distance(&self.canonical, &other.canonical)
    }
}

pub fn canonical_distance(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Lexicographic comparison treating entries within `1e-9` as equal.
fn lex_less(a: &[f64; 6], b: &[f64; 6]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() > 1e-9 {
            return x < y;
        }
    }
    false
}

/// Scales so the largest component is 1; when `k1 = k2` also applies the
/// factor swap `(y2, y1, y3, y4, y6, y5)` if that is lexicographically smaller.
pub fn canonical_form(shape: TripleShape, y: &[f64; 6]) -> [f64; 6] {
    let max = y.iter().copied().fold(f64::MIN, f64::max);
    let scaled = y.map(|v| v / max);
    if shape.k1 == shape.k2 {
        let swapped = [
            scaled[1], scaled[0], scaled[2], scaled[3], scaled[5], scaled[4],
        ];
        if lex_less(&swapped, &scaled) {
            return swapped;
        }
    }
    scaled
}

/// Deduplicated solutions, sorted by canonical form.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SolutionSet {
    pub solutions: Vec<EinsteinSolution>,
}

impl SolutionSet {
    /// Adds solutions in order, skipping any whose canonical form is within
    /// [`DEDUP_TOL`] of one already kept, then sorts.
    pub fn from_candidates(candidates: impl IntoIterator<Item = EinsteinSolution>) -> Self {
        let mut solutions: Vec<EinsteinSolution> = Vec::new();
        for c in candidates {
            if !solutions.iter().any(|s| s.distance(&c) < DEDUP_TOL) {
                solutions.push(c);
            }
        }
        solutions.sort_by(|a, b| {
            a.canonical
                .iter()
                .zip(&b.canonical)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        SolutionSet { solutions }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn non_naturally_reductive(&self) -> impl Iterator<Item = &EinsteinSolution> {
        self.solutions
            .iter()
            .filter(|s| !s.is_naturally_reductive())
    }

    pub fn count_non_naturally_reductive(&self) -> usize {
        self.non_naturally_reductive().count()
    }
}

/// Structure table of `decompose_triple(shape)`, built once per shape.
pub fn triple_table(shape: TripleShape) -> Result<Arc<StructureTable>> {
    static CACHE: OnceLock<Mutex<HashMap<TripleShape, Arc<StructureTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache poisoned").get(&shape) {
        return Ok(t.clone());
    }
    let table = Arc::new(compute_table(&decompose_triple(shape)?)?);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(shape, table.clone());
    Ok(table)
}

/// Fills `general_residual` of every solution from the structure-constant
/// Ricci path on the matching decomposition.
pub fn attach_general_residuals(set: &mut SolutionSet) -> Result<()> {
    for s in &mut set.solutions {
        let table = triple_table(s.shape)?;
        let r = ricci_general(&table, &MetricParams::new(s.y.to_vec())?)?;
        s.general_residual = Some(r.residual);
    }
    Ok(())
}
