use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{solve_symmetric, SolutionSet};
use crate::poly::{build_h, ser_big, sturm_isolate, Domain};
use crate::{Error, Result};

/// `2 * floor((n - 1) / 3)`, the guaranteed number of non-naturally reductive
/// Einstein metrics on `Sp(n)` from the symmetric family.
pub fn count_lower_bound(n: u64) -> Result<u64> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "the count needs n >= 4, got {n}"
        )));
    }
    Ok(2 * ((n - 1) / 3))
}

/// Intermediate values of the existence argument for one `(k, l)`, `k < l`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExistenceReport {
    pub k: u64,
    pub l: u64,
    #[serde(serialize_with = "ser_big")]
    pub h0: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub h1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub leading: BigInt,
    pub signs_ok: bool,
    pub roots_in_0_1: usize,
    pub roots_above_1: usize,
    pub non_naturally_reductive: usize,
    pub solutions: SolutionSet,
    pub passed: bool,
}

/// Checks `h(0) > 0`, `h(1) < 0` and a positive leading coefficient exactly,
/// counts roots in `(0, 1)` and `(1, inf)` by Sturm, and runs the symmetric
/// pipeline expecting at least two non-naturally reductive solutions.
pub fn verify_existence(k: u64, l: u64) -> Result<ExistenceReport> {
    if k == 0 || k >= l {
        return Err(Error::Precondition(format!(
            "the sign argument needs 1 <= k < l, got k = {k}, l = {l}"
        )));
    }
    let h = build_h(k, l)?;
    let h0 = h.eval_int(&BigInt::zero());
    let h1 = h.eval_int(&BigInt::one());
    let leading = h.leading().cloned().unwrap_or_default();
    let signs_ok = h0.is_positive() && h1.is_negative() && leading.is_positive();
    let roots_in_0_1 = sturm_isolate(&h, &Domain::between(0, 1))?.count();
    let roots_above_1 = sturm_isolate(&h, &Domain::above(1))?.count();
    let solutions = solve_symmetric(k, l)?;
    let non_naturally_reductive = solutions.count_non_naturally_reductive();
    let passed =
        signs_ok && roots_in_0_1 >= 1 && roots_above_1 >= 1 && non_naturally_reductive >= 2;
    Ok(ExistenceReport {
        k,
        l,
        h0,
        h1,
        leading,
        signs_ok,
        roots_in_0_1,
        roots_above_1,
        non_naturally_reductive,
        solutions,
        passed,
    })
}

/// Concrete count for `Sp(n)`: runs the symmetric pipeline for every
/// `k = 1..=floor((n-1)/3)` with `l = n - 2k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountCheck {
    pub n: u64,
    pub bound: u64,
    /// `(k, l, non-naturally-reductive solutions found)`.
    pub per_k: Vec<(u64, u64, usize)>,
    pub found: usize,
    pub passed: bool,
}

pub fn concrete_count_check(n: u64) -> Result<CountCheck> {
    let bound = count_lower_bound(n)?;
    let mut per_k = Vec::new();
    for k in 1..=(n - 1) / 3 {
        let l = n - 2 * k;
        let found = solve_symmetric(k, l)?.count_non_naturally_reductive();
        per_k.push((k, l, found));
    }
    let found: usize = per_k.iter().map(|t| t.2).sum();
    Ok(CountCheck {
        n,
        bound,
        passed: found as u64 >= bound && per_k.iter().all(|t| t.2 >= 2),
        per_k,
        found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bound_values() {
        assert_eq!(count_lower_bound(4).unwrap(), 2);
        assert_eq!(count_lower_bound(7).unwrap(), 4);
        assert_eq!(count_lower_bound(10).unwrap(), 6);
        assert!(count_lower_bound(3).is_err());
    }

    #[test]
    fn existence_at_one_two() {
        let r = verify_existence(1, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.h0, BigInt::from(5832));
        assert_eq!(r.h1, BigInt::from(-432));
    }

    #[test]
    fn existence_precondition() {
        assert!(matches!(
            verify_existence(3, 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            verify_existence(2, 2),
            Err(Error::Precondition(_))
        ));
    }
}
