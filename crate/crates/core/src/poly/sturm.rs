use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use super::int_poly::{square_free_factors, square_free_part, IntPoly, QPoly};
use crate::{Error, Result};

/// One end of a search domain.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    Finite(BigRational),
    Unbounded,
}

/// Open search interval `(lo, hi)`; unbounded ends are replaced by the
/// Cauchy root bound of the polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Domain {
    pub lo: Bound,
    pub hi: Bound,
}

impl Domain {
    pub fn real_line() -> Self {
        Domain {
            lo: Bound::Unbounded,
            hi: Bound::Unbounded,
        }
    }

    /// `(a, +inf)`.
    pub fn above(a: i64) -> Self {
        Domain {
            lo: Bound::Finite(BigRational::from_integer(a.into())),
            hi: Bound::Unbounded,
        }
    }

    /// `(a, b)` for integers.
    pub fn between(a: i64, b: i64) -> Self {
        Domain {
            lo: Bound::Finite(BigRational::from_integer(a.into())),
            hi: Bound::Finite(BigRational::from_integer(b.into())),
        }
    }
}

/// An isolating interval. `lo == hi` marks a root found exactly; otherwise
/// the open interval contains exactly one distinct real root and neither
/// endpoint is a root.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rational")]
    pub lo: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: BigRational,
    pub multiplicity: usize,
}

fn ser_rational<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        let lo = self.lo.to_f64().unwrap_or(f64::NEG_INFINITY);
        let hi = self.hi.to_f64().unwrap_or(f64::INFINITY);
        lo <= x && x <= hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// Real roots of a polynomial inside a domain, sorted by lower endpoint.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Isolation {
    pub intervals: Vec<RootInterval>,
}

impl Isolation {
    pub fn count(&self) -> usize {
        self.intervals.len()
    }
}

/// Sturm chain of a square-free polynomial.
struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    fn new(p: &IntPoly) -> Self {
        let p0 = p.to_rational();
        let p1 = p0.derivative();
        let mut chain = vec![p0];
        if !p1.is_zero() {
            chain.push(p1);
        }
        while chain.len() >= 2 {
            let (_, r) = chain[chain.len() - 2].div_rem(&chain[chain.len() - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        SturmChain { chain }
    }

    /// Sign variations at `x`, zeros skipped.
    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for q in &self.chain {
            let v = q.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

fn sign(p: &IntPoly, x: &BigRational) -> i8 {
    let v = p.eval_rational(x);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// `1 + max |c_i / c_lead|`, rounded up to an integer.
fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    let q = BigRational::new(max, lead).ceil();
    q + BigRational::one()
}

/// Isolates the distinct real roots of `p` in the open domain.
///
/// The square-free part is taken via an exact GCD; its Sturm chain counts
/// roots in `(a, b]` as `V(a) - V(b)`, so the open-interval count subtracts
/// one when `b` itself is a root. Intervals are bisected until each holds one
/// root; a midpoint that is a root is recorded as an exact interval.
pub fn sturm_isolate(p: &IntPoly, domain: &Domain) -> Result<Isolation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = square_free_part(p);
    if sf.degree() == Some(0) {
        return Ok(Isolation {
            intervals: Vec::new(),
        });
    }
    let factors = square_free_factors(p);
    let cap = cauchy_bound(&sf);
    let lo = match &domain.lo {
        Bound::Finite(a) => a.clone().max(-cap.clone()),
        Bound::Unbounded => -cap.clone(),
    };
    let hi = match &domain.hi {
        Bound::Finite(b) => b.clone().min(cap),
        Bound::Unbounded => cap,
    };
    let mut intervals = Vec::new();
    if lo < hi {
        let chain = SturmChain::new(&sf);
        let two = BigRational::from_integer(2.into());
        let count_open = |a: &BigRational, b: &BigRational| -> usize {
            let at_b = usize::from(sign(&sf, b) == 0);
            chain.variations(a) - chain.variations(b) - at_b
        };
        let mut stack = vec![(lo, hi)];
        while let Some((a, b)) = stack.pop() {
            match count_open(&a, &b) {
                0 => {}
                1 => intervals.push(separate(&sf, &chain, a, b)),
                _ => {
                    let m = (&a + &b) / &two;
                    if sign(&sf, &m) == 0 {
                        intervals.push((m.clone(), m.clone()));
                    }
                    stack.push((a, m.clone()));
                    stack.push((m, b));
                }
            }
        }
    }
    intervals.sort_by(|x, y| x.0.cmp(&y.0));
    let intervals = intervals
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = multiplicity(&factors, &lo, &hi);
            RootInterval {
                lo,
                hi,
                multiplicity,
            }
        })
        .collect();
    Ok(Isolation { intervals })
}

/// Shrinks a one-root open interval until neither endpoint is a root.
fn separate(
    sf: &IntPoly,
    chain: &SturmChain,
    mut a: BigRational,
    mut b: BigRational,
) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(2.into());
    while sign(sf, &a) == 0 || sign(sf, &b) == 0 {
        let m = (&a + &b) / &two;
        if sign(sf, &m) == 0 {
            return (m.clone(), m);
        }
        let left = chain.variations(&a) - chain.variations(&m);
        if left == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    (a, b)
}

fn multiplicity(factors: &[(usize, IntPoly)], lo: &BigRational, hi: &BigRational) -> usize {
    for (i, f) in factors {
        let root_here = if lo == hi {
            sign(f, lo) == 0
        } else {
            sign(f, lo) * sign(f, hi) < 0
        };
        if root_here {
            return *i;
        }
    }
    1
}

/// Refines the single simple root inside `interval`: exact bisection to width
/// below `1e-12`, then a safeguarded Newton polish in `f64`. The result must
/// satisfy `|p(x)| / sum |c_i| |x|^i < tol`.
pub fn refine_root(p: &IntPoly, interval: &RootInterval, tol: f64) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (interval.lo.clone(), interval.hi.clone());
    let x = if a == b {
        a.to_f64().unwrap_or(f64::NAN)
    } else {
        let sa = sign(p, &a);
        let sb = sign(p, &b);
        if sa == 0 {
            a.to_f64().unwrap_or(f64::NAN)
        } else if sb == 0 {
            b.to_f64().unwrap_or(f64::NAN)
        } else if sa == sb {
            return Err(Error::NonIsolating {
                lo_sign: sa,
                hi_sign: sb,
            });
        } else {
            let two = BigRational::from_integer(2.into());
            let width = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12));
            let mut exact = None;
            while &b - &a >= width {
                let m = (&a + &b) / &two;
                match sign(p, &m) {
                    0 => {
                        exact = Some(m);
                        break;
                    }
                    s if s == sa => a = m,
                    _ => b = m,
                }
            }
            match exact {
                Some(m) => m.to_f64().unwrap_or(f64::NAN),
                None => newton_polish(p, a.to_f64().unwrap(), b.to_f64().unwrap()),
            }
        }
    };
    let scale = p.magnitude_f64(x);
    let residual = if scale == 0.0 {
        0.0
    } else {
        p.eval_f64(x).abs() / scale
    };
    if residual.is_nan() || residual >= tol {
        return Err(Error::RefinementFailed {
            residual,
            tolerance: tol,
        });
    }
    Ok(x)
}

fn newton_polish(p: &IntPoly, lo: f64, hi: f64) -> f64 {
    let mut x = 0.5 * (lo + hi);
    let mut best = (p.eval_f64(x).abs(), x);
    for _ in 0..8 {
        let (v, dv) = p.eval_with_derivative(x);
        if v == 0.0 || dv == 0.0 {
            break;
        }
        let next = x - v / dv;
        if !(lo..=hi).contains(&next) {
            break;
        }
        x = next;
        let r = p.eval_f64(x).abs();
        if r < best.0 {
            best = (r, x);
        }
    }
    best.1
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn poly_from_roots(roots: &[i64], extra: &[i64]) -> IntPoly {
        let mut coeffs = vec![BigInt::one()];
        let mul = |coeffs: Vec<BigInt>, factor: &[i64]| {
            let mut next = vec![BigInt::zero(); coeffs.len() + factor.len() - 1];
            for (i, c) in coeffs.iter().enumerate() {
                for (j, f) in factor.iter().enumerate() {
                    next[i + j] += c * BigInt::from(*f);
                }
            }
            next
        };
        for &r in roots {
            coeffs = mul(coeffs, &[-r, 1]);
        }
        if !extra.is_empty() {
            coeffs = mul(coeffs, extra);
        }
        IntPoly::new(coeffs)
    }

    #[test]
    fn sqrt_two_on_positive_axis() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let iso = sturm_isolate(&p, &Domain::above(0)).unwrap();
        assert_eq!(iso.count(), 1);
        let x = refine_root(&p, &iso.intervals[0], 1e-14).unwrap();
        assert!((x - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(iso.intervals[0].contains(x));
    }

    #[test]
    fn refine_on_given_interval() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let iv = RootInterval {
            lo: BigRational::from_integer(1.into()),
            hi: BigRational::from_integer(2.into()),
            multiplicity: 1,
        };
        let x = refine_root(&p, &iv, 1e-14).unwrap();
        assert!((x - std::f64::consts::SQRT_2).abs() < 1e-15);
        let bad = RootInterval {
            lo: BigRational::from_integer(2.into()),
            hi: BigRational::from_integer(3.into()),
            multiplicity: 1,
        };
        assert!(matches!(
            refine_root(&p, &bad, 1e-14),
            Err(Error::NonIsolating { .. })
        ));
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(
            sturm_isolate(&IntPoly::zero(), &Domain::real_line()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn roots_on_boundaries_and_midpoints() {
        // Roots at 0, 1, 2 with (0, 2) open: only 1 is inside, found exactly.
        let p = poly_from_roots(&[0, 1, 2], &[]);
        let iso = sturm_isolate(&p, &Domain::between(0, 2)).unwrap();
        assert_eq!(iso.count(), 1);
        assert!(iso.intervals[0].is_exact());
        assert_eq!(iso.intervals[0].lo, BigRational::from_integer(1.into()));
    }

    #[test]
    fn multiplicities_are_reported() {
        let p = poly_from_roots(&[-3, 2, 2, 5, 5, 5], &[1, 0, 1]);
        let iso = sturm_isolate(&p, &Domain::real_line()).unwrap();
        let mult: Vec<usize> = iso.intervals.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mult, vec![1, 2, 3]);
    }

    proptest! {
        // Polynomials built from known integer roots (with repeats) times a
        // positive-definite quadratic: the distinct real roots are known.
        #[test]
        fn counts_match_constructed_roots(
            roots in proptest::collection::vec(-6i64..=6, 0..6),
            c in 1i64..5,
        ) {
            let p = poly_from_roots(&roots, &[c, 0, 1]);
            let iso = sturm_isolate(&p, &Domain::real_line()).unwrap();
            let mut distinct = roots.clone();
            distinct.sort_unstable();
            distinct.dedup();
            prop_assert_eq!(iso.count(), distinct.len());
            for (iv, r) in iso.intervals.iter().zip(&distinct) {
                let x = BigRational::from_integer((*r).into());
                prop_assert!(iv.lo <= x && x <= iv.hi);
                let m = roots.iter().filter(|&&v| v == *r).count();
                prop_assert_eq!(iv.multiplicity, m);
            }
        }

        // Random integer polynomials: every sign change of p on a fine grid
        // lies in a distinct isolating interval, and each open interval shows
        // a sign change of the square-free part at its endpoints.
        #[test]
        fn counts_dominate_grid_scan(coeffs in proptest::collection::vec(-20i64..=20, 2..=9)) {
            let p = IntPoly::from_i64(&coeffs);
            prop_assume!(p.degree().unwrap_or(0) >= 1);
            let iso = sturm_isolate(&p, &Domain::between(-25, 25)).unwrap();
            let sf = square_free_part(&p);
            let mut changes = 0;
            let mut prev = sf.eval_f64(-25.0).signum();
            let steps = 200_000;
            for s in 1..=steps {
                let x = -25.0 + 50.0 * s as f64 / steps as f64;
                let v = sf.eval_f64(x).signum();
                if v != 0.0 && prev != 0.0 && v != prev {
                    changes += 1;
                }
                if v != 0.0 {
                    prev = v;
                }
            }
            prop_assert!(iso.count() >= changes);
            // Derivative analysis: distinct real roots <= 1 + critical points.
            let crit = sturm_isolate(&sf.derivative(), &Domain::between(-25, 25))
                .map(|i| i.count())
                .unwrap_or(0);
            prop_assert!(iso.count() <= crit + 1);
            for iv in &iso.intervals {
                if !iv.is_exact() {
                    prop_assert!(sign(&sf, &iv.lo) * sign(&sf, &iv.hi) < 0);
                }
            }
        }
    }
}
