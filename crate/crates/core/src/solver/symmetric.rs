use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::{
    attach_general_residuals, EinsteinSolution, SolutionSet, Source, DEFAULT_CLASSIFY_TOL,
    DEFAULT_TOL,
};
use crate::algebra::TripleShape;
use crate::poly::{
    build_g, build_h, build_h_bivar, refine_root, sturm_isolate, y2_branch, Domain, RootInterval,
};
use crate::Result;

/// Maximum relative residual of `g1`, `g3` for a candidate to survive.
pub const G_RESIDUAL_TOL: f64 = 1e-9;

/// One positive root of `h` and the metric it determines.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetricCandidate {
    pub interval: RootInterval,
    pub y4: f64,
    pub y: [f64; 6],
    pub g_residual: f64,
    /// Rejection reason, `None` when the candidate survives.
    pub rejected: Option<String>,
}

/// All positive roots of `h(y4)` for `(k, l)` turned into candidate metrics on
/// shape `(k, k, l)`, with the reasons for rejecting any of them.
pub fn symmetric_candidates(k: u64, l: u64) -> Result<Vec<SymmetricCandidate>> {
    let h = build_h(k, l)?;
    let hb = build_h_bivar(k, l)?;
    let g = build_g(k, l)?;
    let one = BigRational::one();
    let iso = sturm_isolate(&h, &Domain::above(0))?;
    let mut out = Vec::new();
    for interval in iso.intervals {
        let at_one = interval.lo <= one
            && one <= interval.hi
            && h.eval_rational(&one) == BigRational::from_integer(0.into());
        let t = refine_root(&h, &interval, 1e-12)?;
        let y3 = hb.solve_y3(t);
        let y2 = y2_branch(k, l, t);
        let y = [y2, y2, y3, t, 1.0, 1.0];
        let g_residual = g.residual(y3, t);
        let rejected = if at_one {
            Some("y4 = 1 lies on the naturally reductive branch y2 = y4".to_string())
        } else if y.iter().any(|&v| v.is_nan() || v <= 0.0) {
            Some("non-positive component".to_string())
        } else if g_residual.is_nan() || g_residual >= G_RESIDUAL_TOL {
            Some(format!("g residual {g_residual:e} too large"))
        } else {
            None
        };
        out.push(SymmetricCandidate {
            interval,
            y4: t,
            y,
            g_residual,
            rejected,
        });
    }
    Ok(out)
}

/// Einstein metrics on shape `(k, k, l)` from the exact symmetric pipeline.
///
/// Every emitted solution has closed-form residual below `1e-9`; its
/// structure-constant residual is attached as well.
pub fn solve_symmetric(k: u64, l: u64) -> Result<SolutionSet> {
    let shape = TripleShape::new(k as usize, k as usize, l as usize)?;
    let mut kept = Vec::new();
    for c in symmetric_candidates(k, l)? {
        if c.rejected.is_some() {
            continue;
        }
        let s = EinsteinSolution::from_metric(
            shape,
            c.y,
            Source::SymmetricPipeline,
            DEFAULT_CLASSIFY_TOL,
        )?;
        if s.residual < DEFAULT_TOL {
            kept.push(s);
        }
    }
    let mut set = SolutionSet::from_candidates(kept);
    attach_general_residuals(&mut set)?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::GENERAL_PATH_TOL;

    #[test]
    fn one_two_has_a_root_on_each_side_of_one() {
        let set = solve_symmetric(1, 2).unwrap();
        assert_eq!(set.count_non_naturally_reductive(), 2);
        let mut below = 0;
        let mut above = 0;
        for s in &set.solutions {
            assert!(s.residual < 1e-9);
            assert!(s.general_residual.unwrap() < GENERAL_PATH_TOL);
            if s.y[3] < 1.0 {
                below += 1;
            } else {
                above += 1;
            }
        }
        assert_eq!((below, above), (1, 1));
    }

    #[test]
    fn equal_parameters_skip_the_unit_root() {
        let cands = symmetric_candidates(2, 2).unwrap();
        assert!(cands
            .iter()
            .any(|c| c.rejected.is_some() && (c.y4 - 1.0).abs() < 1e-12));
        for s in solve_symmetric(2, 2).unwrap().solutions {
            assert!((s.y[3] - 1.0).abs() > 1e-6);
        }
    }

    #[test]
    fn no_positive_roots_for_four_one() {
        assert!(solve_symmetric(4, 1).unwrap().is_empty());
    }
}
