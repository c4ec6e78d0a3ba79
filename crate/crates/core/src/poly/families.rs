use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::int_poly::IntPoly;
use super::tables::{
    KlCoeff, SysTerm, F1_TERMS, F2_TERMS, F3_TERMS, G1_TERMS, G3_TERMS, HB_Y3_COEFF, HB_Y3_FREE,
    H_COEFFS, T_COEFFS,
};
use crate::{Error, Result};

fn check_kl(k: u64, l: u64) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidArgument(format!(
            "k and l must be positive, got k = {k}, l = {l}"
        )));
    }
    Ok(())
}

fn pow(base: u64, e: u32) -> BigInt {
    BigInt::from(base).pow(e)
}

impl KlCoeff {
    fn eval(&self, k: u64, l: u64) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::from(self.scale), |acc, factor| {
                let f: BigInt = factor
                    .iter()
                    .map(|&(c, a, b)| BigInt::from(c) * pow(k, a) * pow(l, b))
                    .sum();
                acc * f
            })
    }
}

fn build(table: &[KlCoeff], k: u64, l: u64) -> IntPoly {
    IntPoly::new(table.iter().map(|c| c.eval(k, l)).collect())
}

/// `h(y4)`: the degree-8 elimination polynomial of the symmetric ansatz.
pub fn build_h(k: u64, l: u64) -> Result<IntPoly> {
    check_kl(k, l)?;
    Ok(build(&H_COEFFS, k, l))
}

/// `t(y3)`: the degree-8 polynomial in `y3` from the same ideal.
pub fn build_t(k: u64, l: u64) -> Result<IntPoly> {
    check_kl(k, l)?;
    Ok(build(&T_COEFFS, k, l))
}

/// `h(y3, y4) = C y3 + A(y4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateH {
    pub c: BigInt,
    pub a: IntPoly,
}

impl BivariateH {
    /// The unique `y3` with `h(y3, t) = 0`.
    pub fn solve_y3(&self, t: f64) -> f64 {
        -self.a.eval_f64(t) / self.c.to_f64().unwrap_or(f64::NAN)
    }
}

pub fn build_h_bivar(k: u64, l: u64) -> Result<BivariateH> {
    check_kl(k, l)?;
    Ok(BivariateH {
        c: HB_Y3_COEFF.eval(k, l),
        a: build(&HB_Y3_FREE, k, l),
    })
}

/// A polynomial in `(y2, y3, y4)` with coefficients fixed at some `(k, l)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SysPoly {
    terms: Vec<(f64, [i32; 3])>,
}

impl SysPoly {
    fn from_terms(terms: &[SysTerm], k: u64, l: u64) -> Self {
        let mut out: Vec<(BigInt, [i32; 3])> = Vec::new();
        for t in terms {
            let c = BigInt::from(t.coeff) * pow(k, t.k) * pow(l, t.l);
            let y = t.y.map(|e| e as i32);
            match out.iter_mut().find(|(_, m)| *m == y) {
                Some(slot) => slot.0 += c,
                None => out.push((c, y)),
            }
        }
        SysPoly {
            terms: out
                .into_iter()
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, y)| (c.to_f64().unwrap_or(f64::NAN), y))
                .collect(),
        }
    }

    fn monomials(&self, y: [f64; 3]) -> impl Iterator<Item = f64> + '_ {
        self.terms
            .iter()
            .map(move |(c, e)| c * y[0].powi(e[0]) * y[1].powi(e[1]) * y[2].powi(e[2]))
    }

    /// Value at `y = [y2, y3, y4]`. Inputs are used as given; the
    /// polynomials are not homogeneous.
    pub fn eval(&self, y: [f64; 3]) -> f64 {
        self.monomials(y).sum()
    }

    /// `|p(y)| / sum |term(y)|`.
    pub fn relative_residual(&self, y: [f64; 3]) -> f64 {
        let (value, scale) = self
            .monomials(y)
            .fold((0.0, 0.0), |(v, s), m| (v + m, s + m.abs()));
        if scale == 0.0 {
            0.0
        } else {
            value.abs() / scale
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// `f1, f2, f3` in `(y2, y3, y4)` with `y1 = y2`, `y5 = y6 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct EinsteinSystem {
    pub f1: SysPoly,
    pub f2: SysPoly,
    pub f3: SysPoly,
}

pub fn build_system(k: u64, l: u64) -> Result<EinsteinSystem> {
    check_kl(k, l)?;
    Ok(EinsteinSystem {
        f1: SysPoly::from_terms(F1_TERMS, k, l),
        f2: SysPoly::from_terms(F2_TERMS, k, l),
        f3: SysPoly::from_terms(F3_TERMS, k, l),
    })
}

/// `g1, g3` in `(y3, y4)`; evaluate with `[_, y3, y4]`, the first slot unused.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedSystem {
    pub g1: SysPoly,
    pub g3: SysPoly,
}

impl ReducedSystem {
    /// Largest relative residual of `g1`, `g3` at `(y3, y4)`.
    pub fn residual(&self, y3: f64, y4: f64) -> f64 {
        let y = [1.0, y3, y4];
        self.g1
            .relative_residual(y)
            .max(self.g3.relative_residual(y))
    }
}

pub fn build_g(k: u64, l: u64) -> Result<ReducedSystem> {
    check_kl(k, l)?;
    Ok(ReducedSystem {
        g1: SysPoly::from_terms(G1_TERMS, k, l),
        g3: SysPoly::from_terms(G3_TERMS, k, l),
    })
}

/// `y2 = (k+1) y4 / (l y4^2 + 3k + 1)`, the non-trivial branch of `f2 = 0`.
pub fn y2_branch(k: u64, l: u64, y4: f64) -> f64 {
    let (k, l) = (k as f64, l as f64);
    (k + 1.0) * y4 / (l * y4 * y4 + 3.0 * k + 1.0)
}

/// `2(2k+1)^2 (5k+1)^2 (4k+2l+1)`, the expected `h(0)`.
pub fn h0_closed_form(k: u64, l: u64) -> BigInt {
    let (k, l) = (BigInt::from(k), BigInt::from(l));
    let a = BigInt::from(2) * &k + 1;
    let b = BigInt::from(5) * &k + 1;
    BigInt::from(2) * &a * &a * &b * &b * (BigInt::from(4) * &k + BigInt::from(2) * &l + 1)
}

/// `(2k+1)(4k+2l+1)(k-l)(2k+l)^2`, the expected `h(1)`.
pub fn h1_closed_form(k: u64, l: u64) -> BigInt {
    let (k, l) = (BigInt::from(k), BigInt::from(l));
    let s = BigInt::from(2) * &k + &l;
    (BigInt::from(2) * &k + 1)
        * (BigInt::from(4) * &k + BigInt::from(2) * &l + 1)
        * (&k - &l)
        * &s
        * &s
}

/// `2 l^2 (l+k) (4k^2 + 4kl + 2l^2 + l)`, the expected leading coefficient of `h`.
pub fn h_leading_closed_form(k: u64, l: u64) -> BigInt {
    let (k, l) = (BigInt::from(k), BigInt::from(l));
    BigInt::from(2)
        * &l
        * &l
        * (&l + &k)
        * (BigInt::from(4) * &k * &k + BigInt::from(4) * &k * &l + BigInt::from(2) * &l * &l + &l)
}

/// `4 (l+1)^4 (l+k) (2l+1+3k)^2`, the expected constant term of `t`.
pub fn t0_closed_form(k: u64, l: u64) -> BigInt {
    let (k, l) = (BigInt::from(k), BigInt::from(l));
    let a: BigInt = &l + 1;
    let b = BigInt::from(2) * &l + 1 + BigInt::from(3) * &k;
    BigInt::from(4) * a.pow(4) * (&l + &k) * &b * &b
}

/// True when even-degree coefficients are positive and odd-degree ones negative.
pub fn has_alternating_signs(p: &IntPoly) -> bool {
    p.coeffs().iter().enumerate().all(|(i, c)| {
        if i % 2 == 0 {
            c.is_positive()
        } else {
            c.is_negative()
        }
    })
}

/// Exact sign data of `h` at one `(k, l)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HSigns {
    pub k: u64,
    pub l: u64,
    #[serde(serialize_with = "ser_big")]
    pub h0: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub h1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub leading: BigInt,
    pub matches_closed_forms: bool,
}

pub(crate) fn ser_big<S: serde::Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn h_signs(k: u64, l: u64) -> Result<HSigns> {
    let h = build_h(k, l)?;
    let h0 = h.eval_int(&BigInt::zero());
    let h1 = h.eval_int(&BigInt::one());
    let leading = h.leading().cloned().unwrap_or_default();
    let matches_closed_forms = h0 == h0_closed_form(k, l)
        && h1 == h1_closed_form(k, l)
        && leading == h_leading_closed_form(k, l);
    Ok(HSigns {
        k,
        l,
        h0,
        h1,
        leading,
        matches_closed_forms,
    })
}
