use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Univariate polynomial with exact big-integer coefficients, ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero (empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // Horner on numerator/denominator to stay in integers:
        // p(a/b) * b^d = sum c_i a^i b^(d-i).
        if self.is_zero() {
            return BigRational::zero();
        }
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        // acc = sum c_i a^i b^(d-i); bpow = b^(d+1).
        BigRational::new(acc, bpow / b)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `(p(x), p'(x))` in floating point.
    pub fn eval_with_derivative(&self, x: f64) -> (f64, f64) {
        let mut p = 0.0;
        let mut dp = 0.0;
        for c in self.coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c.to_f64().unwrap_or(f64::NAN);
        }
        (p, dp)
    }

    /// `sum |c_i| |x|^i`, the natural scale for relative residuals.
    pub fn magnitude_f64(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * ax + c.to_f64().unwrap_or(f64::NAN).abs()
        })
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Coefficients as decimal strings, lowest degree first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    pub(crate) fn to_rational(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let coeff = if a.is_one() && i > 0 {
                String::new()
            } else {
                format!("{a}*")
            };
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Dense polynomial over the rationals, used for exact division and GCDs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub(crate) fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub(crate) fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub(crate) fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub(crate) fn sub(&self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPoly::new(
            (0..len)
                .map(|i| {
                    let a = self
                        .coeffs
                        .get(i)
                        .cloned()
                        .unwrap_or_else(BigRational::zero);
                    let b = other
                        .coeffs
                        .get(i)
                        .cloned()
                        .unwrap_or_else(BigRational::zero);
                    a - b
                })
                .collect(),
        )
    }

    pub(crate) fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Euclidean division `self = q * d + r`, `deg r < deg d`.
    pub(crate) fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap_or(0);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (QPoly::new(Vec::new()), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        let lead = d.leading();
        for i in (0..q.len()).rev() {
            let factor = &r[i + dd] / lead;
            if !factor.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &factor * c;
                }
            }
            q[i] = factor;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub(crate) fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading().clone();
        QPoly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub(crate) fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub(crate) fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub(crate) fn to_int(&self) -> IntPoly {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }
}

/// Yun's square-free factorisation: returns `(i, f_i)` with `p = c * prod f_i^i`,
/// each `f_i` square-free and non-constant, pairwise coprime.
pub(crate) fn square_free_factors(p: &IntPoly) -> Vec<(usize, IntPoly)> {
    let f = p.to_rational();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let mut c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((i, a.to_int()));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// `p / gcd(p, p')` as a primitive integer polynomial.
pub fn square_free_part(p: &IntPoly) -> IntPoly {
    let f = p.to_rational();
    if f.is_constant() {
        return p.primitive();
    }
    let g = f.gcd(&f.derivative());
    f.div_rem(&g).0.to_int()
}
