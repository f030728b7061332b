//! Integer-coefficient polynomials in `t` with exact rational exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// A finite sum `Σ c_e t^e` with `c_e ∈ ℤ` and `e ∈ ℚ`. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    terms: BTreeMap<BigRational, BigInt>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), BigRational::zero())
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), BigRational::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), BigRational::zero())
    }

    pub fn monomial(coeff: BigInt, exp: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    /// `t − a`.
    pub fn linear(a: impl Into<BigInt>) -> Self {
        Self::t() - Self::constant(a)
    }

    /// Polynomial with integer exponents from ascending coefficients.
    pub fn from_coeffs<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(c.into(), BigRational::from_integer(e.into()));
        }
        p
    }

    /// `∏ (t − a_i)`.
    pub fn from_roots<I: Into<BigInt>>(roots: impl IntoIterator<Item = I>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, a| acc * Self::linear(a))
    }

    pub fn add_term(&mut self, coeff: BigInt, exp: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &BigRational) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Coefficient of `t^0`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&BigRational::zero())
    }

    /// Terms with exponents descending.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&BigRational, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn degree(&self) -> Option<&BigRational> {
        self.terms.keys().next_back()
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: &BigRational) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + e, v.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self.clone())
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.is_integer())
    }

    /// Exact value at an integer point. `None` when a fractional exponent
    /// makes the value irrational in general, or `t = 0` meets a negative
    /// exponent.
    pub fn eval(&self, t: &BigInt) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if !e.is_integer() {
                if t.is_one() {
                    acc += BigRational::from_integer(c.clone());
                } else if !(t.is_zero() && e.is_positive()) {
                    return None;
                }
                continue;
            }
            let k = e.to_integer();
            if t.is_zero() {
                if k.is_zero() {
                    acc += BigRational::from_integer(c.clone());
                } else if k.is_negative() {
                    return None;
                }
                continue;
            }
            let mag = k.abs().to_u32()?;
            let p = num_traits::pow(t.clone(), mag as usize);
            let v = if k.is_negative() {
                BigRational::new(c.clone(), p)
            } else {
                BigRational::from_integer(c * p)
            };
            acc += v;
        }
        Some(acc)
    }

    /// `coeff * t^(exp)` terms, descending. Integer exponents print bare.
    pub fn to_term_strings(&self) -> Vec<String> {
        self.terms_desc()
            .map(|(e, c)| format!("{c} * t^({e})"))
            .collect()
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms_desc()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exp: e.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub exp: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms_desc().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !mag.is_one() || e.is_zero();
            match (show_coeff, e.is_zero()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => write!(f, "{mag}*")?,
                (false, false) => {}
            }
            if !e.is_zero() {
                if e.is_one() {
                    write!(f, "t")?;
                } else if e.is_integer() && e.is_positive() {
                    write!(f, "t^{e}")?;
                } else {
                    write!(f, "t^({e})")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, rhs: ExactPoly) -> ExactPoly {
        for (e, c) in rhs.terms {
            self.add_term(c, e);
        }
        self
    }
}

impl Add<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        self.clone() + rhs.clone()
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: ExactPoly) -> ExactPoly {
        self + (-rhs)
    }
}

impl Mul for ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: ExactPoly) -> ExactPoly {
        &self * &rhs
    }
}

impl Mul<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl std::iter::Sum for ExactPoly {
    fn sum<I: Iterator<Item = ExactPoly>>(iter: I) -> ExactPoly {
        iter.fold(ExactPoly::zero(), |a, b| a + b)
    }
}

/// Binomial coefficient `C(a, b)`, zero when `b > a`.
pub fn binom(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Catalan number from the closed form `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    let (q, r) = binom(2 * n, n).div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

/// Catalan numbers `C_0..=C_n` from `C_n = Σ_{i<n} C_i C_{n−1−i}`.
pub fn catalan_by_recurrence(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for k in 1..=n {
        let v = (0..k).map(|i| &c[i] * &c[k - 1 - i]).sum();
        c.push(v);
    }
    c
}
