use nalgebra::{SMatrix, SVector};
use rayon::prelude::*;
use serde::Serialize;

use super::{
    attach_general_residuals, EinsteinSolution, SolutionSet, Source, DEFAULT_CLASSIFY_TOL,
};
use crate::algebra::TripleShape;
use crate::ricci::closed_form_components;
use crate::Result;

/// Lower end of the start box for each free parameter.
pub const NEWTON_LOWER: f64 = 0.05;
/// Upper end of the start box for each free parameter.
pub const NEWTON_UPPER: f64 = 2.0;

const MAX_ITER: usize = 100;
const FD_STEP: f64 = 1e-6;
const HALTON_BASES: [u32; 5] = [2, 3, 5, 7, 11];

type Vec5 = SVector<f64, 5>;
type Mat5 = SMatrix<f64, 5, 5>;

/// How one Newton run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NewtonOutcome {
    Converged,
    SingularJacobian,
    /// A component left `(1e-8, 1e8)` or became non-finite.
    Diverged,
    /// The line search could not reduce the residual.
    Stalled,
    MaxIterations,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NewtonStats {
    pub starts: usize,
    pub converged: usize,
    pub singular_jacobian: usize,
    pub diverged: usize,
    pub stalled: usize,
    pub max_iterations: usize,
    /// Distinct canonical classes among the converged runs.
    pub distinct: usize,
}

impl NewtonStats {
    fn record(&mut self, outcome: NewtonOutcome) {
        self.starts += 1;
        match outcome {
            NewtonOutcome::Converged => self.converged += 1,
            NewtonOutcome::SingularJacobian => self.singular_jacobian += 1,
            NewtonOutcome::Diverged => self.diverged += 1,
            NewtonOutcome::Stalled => self.stalled += 1,
            NewtonOutcome::MaxIterations => self.max_iterations += 1,
        }
    }
}

fn full(x: &Vec5) -> [f64; 6] {
    [x[0], x[1], x[2], x[3], x[4], 1.0]
}

/// `r_i - r_6` for `i = 1..5`, gauge `y6 = 1`.
fn equations(shape: TripleShape, x: &Vec5) -> Vec5 {
    let r = closed_form_components(shape, &full(x));
    Vec5::from_fn(|i, _| r[i] - r[5])
}

fn jacobian(shape: TripleShape, x: &Vec5) -> Mat5 {
    let mut j = Mat5::zeros();
    for c in 0..5 {
        let h = FD_STEP * x[c].abs().max(1e-3);
        let mut plus = *x;
        let mut minus = *x;
        plus[c] += h;
        minus[c] -= h;
        let col = (equations(shape, &plus) - equations(shape, &minus)) / (2.0 * h);
        j.set_column(c, &col);
    }
    j
}

fn einstein_residual(shape: TripleShape, y: &[f64; 6]) -> f64 {
    let r = closed_form_components(shape, y);
    let mean = r.iter().sum::<f64>() / 6.0;
    r.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max) / mean.abs()
}

fn in_range(x: &Vec5) -> bool {
    x.iter().all(|&v| v.is_finite() && v > 1e-8 && v < 1e8)
}

/// Damped Newton iteration from `start` (six components; rescaled so
/// `y6 = 1`). Returns the final metric and how the run ended; convergence
/// means Einstein residual below `tol`.
pub fn newton_from(shape: TripleShape, start: &[f64; 6], tol: f64) -> ([f64; 6], NewtonOutcome) {
    let mut x = Vec5::from_fn(|i, _| start[i] / start[5]);
    if !in_range(&x) {
        return (full(&x), NewtonOutcome::Diverged);
    }
    let mut f = equations(shape, &x);
    for _ in 0..MAX_ITER {
        if einstein_residual(shape, &full(&x)) < tol {
            // A couple of extra steps tighten the point well below `tol`.
            for _ in 0..2 {
                match jacobian(shape, &x).lu().solve(&(-f)) {
                    Some(dx) if in_range(&(x + dx)) => {
                        let next = x + dx;
                        let fn_ = equations(shape, &next);
                        if fn_.norm() < f.norm() {
                            x = next;
                            f = fn_;
                        }
                    }
                    _ => break,
                }
            }
            return (full(&x), NewtonOutcome::Converged);
        }
        let j = jacobian(shape, &x);
        let Some(dx) = j.lu().solve(&(-f)) else {
            return (full(&x), NewtonOutcome::SingularJacobian);
        };
        if !dx.iter().all(|v| v.is_finite()) {
            return (full(&x), NewtonOutcome::SingularJacobian);
        }
        let norm = f.norm();
        let mut step = 1.0;
        loop {
            let next = x + dx * step;
            if in_range(&next) {
                let fn_ = equations(shape, &next);
                if fn_.norm() <= (1.0 - 1e-4 * step) * norm {
                    x = next;
                    f = fn_;
                    break;
                }
            }
            step *= 0.5;
            if step < 1e-10 {
                let outcome = if in_range(&(x + dx)) {
                    NewtonOutcome::Stalled
                } else {
                    NewtonOutcome::Diverged
                };
                return (full(&x), outcome);
            }
        }
    }
    let outcome = if einstein_residual(shape, &full(&x)) < tol {
        NewtonOutcome::Converged
    } else {
        NewtonOutcome::MaxIterations
    };
    (full(&x), outcome)
}

fn radical_inverse(mut i: u64, base: u32) -> f64 {
    let b = base as u64;
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % b) as f64;
        i /= b;
    }
    r
}

/// The `i`-th start (1-based Halton index), log-uniform in `[0.05, 2]^5`
/// with `y6 = 1`.
pub(crate) fn halton_start(i: usize) -> [f64; 6] {
    let ratio = (NEWTON_UPPER / NEWTON_LOWER).ln();
    let mut y = [1.0; 6];
    for (slot, &base) in y.iter_mut().zip(&HALTON_BASES) {
        *slot = NEWTON_LOWER * (ratio * radical_inverse(i as u64, base)).exp();
    }
    y
}

/// Multistart Newton on the five equations `r_i = r_6`.
///
/// Starts are the first `starts` points of a Halton sequence mapped
/// log-uniformly into `[0.05, 2]^5`. Runs execute in parallel; results are
/// collected in start order, so the output does not depend on scheduling.
pub fn solve_general(
    shape: TripleShape,
    starts: usize,
    tol: f64,
) -> Result<(SolutionSet, NewtonStats)> {
    let runs: Vec<([f64; 6], NewtonOutcome)> = (1..=starts)
        .into_par_iter()
        .map(|i| newton_from(shape, &halton_start(i), tol))
        .collect();
    let mut stats = NewtonStats::default();
    let mut found = Vec::new();
    for (y, outcome) in runs {
        stats.record(outcome);
        if outcome == NewtonOutcome::Converged {
            found.push(EinsteinSolution::from_metric(
                shape,
                y,
                Source::Newton,
                DEFAULT_CLASSIFY_TOL,
            )?);
        }
    }
    let mut set = SolutionSet::from_candidates(found);
    stats.distinct = set.len();
    attach_general_residuals(&mut set)?;
    Ok((set, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_symmetric;

    fn shape(k1: usize, k2: usize, k3: usize) -> TripleShape {
        TripleShape::new(k1, k2, k3).unwrap()
    }

    #[test]
    fn halton_points_stay_in_box() {
        for i in 1..500 {
            let y = halton_start(i);
            assert!(y[..5]
                .iter()
                .all(|&v| (NEWTON_LOWER..=NEWTON_UPPER).contains(&v)));
            assert_eq!(y[5], 1.0);
        }
        assert!((radical_inverse(5, 2) - 0.625).abs() < 1e-15);
    }

    #[test]
    fn bi_invariant_start_is_a_fixed_point() {
        let (y, outcome) = newton_from(shape(1, 1, 2), &[1.0; 6], 1e-9);
        assert_eq!(outcome, NewtonOutcome::Converged);
        assert!(y.iter().all(|&v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn symmetric_solutions_are_newton_fixed_points() {
        for (k, l) in [(1, 2), (2, 3)] {
            let s = shape(k, k, l);
            for sol in solve_symmetric(k as u64, l as u64).unwrap().solutions {
                let (y, outcome) = newton_from(s, &sol.y, 1e-9);
                assert_eq!(outcome, NewtonOutcome::Converged);
                let a = crate::solver::canonical_form(s, &y);
                assert!(crate::solver::canonical_distance(&a, &sol.canonical) < 1e-8);
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let a = solve_general(shape(1, 1, 2), 40, 1e-9).unwrap();
        let b = solve_general(shape(1, 1, 2), 40, 1e-9).unwrap();
        assert_eq!(a, b);
    }
}
