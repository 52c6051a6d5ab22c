//! Exact integer polynomials and truncated power series.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial in `t`, coefficients in ascending degree with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::from_i64(&[1])
    }

    /// `t^d`.
    pub fn monomial(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[d] = BigInt::one();
        Polynomial::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coeff(d) - other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// Power series expansion of `self / den` through degree `n`.
    pub fn divide_series(&self, den: &Polynomial, n: usize) -> Result<Vec<BigInt>> {
        let c0 = den.coeff(0);
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for i in 1..=k.min(den.coeffs.len().saturating_sub(1)) {
                acc -= &den.coeffs[i] * &out[k - i];
            }
            out.push(acc * &c0);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    /// Ascending-degree rendering such as `1-5t^2-5t^3+t^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = c.abs();
            let var = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            if d == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&var)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the format produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { line: 1, column: 0, message: format!("{msg} in polynomial {s:?}") };
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let (num, deg) = match term.find('t') {
                None => (term, 0),
                Some(p) => {
                    let deg = match &term[p + 1..] {
                        "" => 1,
                        e => e.strip_prefix('^').ok_or_else(|| bad("bad exponent"))?.parse().map_err(|_| bad("bad exponent"))?,
                    };
                    (&term[..p], deg)
                }
            };
            let c: BigInt = if num.is_empty() { BigInt::one() } else { num.parse().map_err(|_| bad("bad coefficient"))? };
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            coeffs[deg] += c * sign;
        }
        Ok(Polynomial::new(coeffs))
    }
}

pub(crate) fn serialize_big_ints<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match x.to_i64() {
            Some(v) => seq.serialize_element(&v)?,
            None => {
                let n = serde_json::Number::from_str(&x.to_string()).map_err(serde::ser::Error::custom)?;
                seq.serialize_element(&n)?
            }
        }
    }
    seq.end()
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_big_ints(&self.coeffs, s)
    }
}

/// An exact rational generating function `numerator / denominator` with its
/// expansion through a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    pub rational: String,
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    #[serde(serialize_with = "serialize_big_ints")]
    pub expansion: Vec<BigInt>,
}

impl PoincareSeries {
    /// The denominator's constant term must be `±1`.
    pub fn new(numerator: Polynomial, denominator: Polynomial, truncation: usize) -> Result<Self> {
        let expansion = numerator.divide_series(&denominator, truncation)?;
        let rational = if numerator == Polynomial::one() {
            format!("1/({denominator})")
        } else {
            format!("({numerator})/({denominator})")
        };
        Ok(PoincareSeries { rational, numerator, denominator, expansion })
    }

    pub fn truncation(&self) -> usize {
        self.expansion.len() - 1
    }

    pub fn coefficient(&self, d: usize) -> Option<&BigInt> {
        self.expansion.get(d)
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rational)
    }
}

/// `1 / (1 - Σ t^d)` over a multiset of generator degrees.
pub fn free_algebra_series(generator_degrees: &[usize], truncation: usize) -> Result<PoincareSeries> {
    if generator_degrees.contains(&0) {
        return Err(Error::ZeroDegree);
    }
    let sum = generator_degrees.iter().fold(Polynomial::zero(), |acc, &d| acc.add(&Polynomial::monomial(d)));
    PoincareSeries::new(Polynomial::one(), Polynomial::one().sub(&sum), truncation)
}
