//! Sparse univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.
//!
//! Every enumerator in the crate is a [`QPoly`]; identities between them are
//! checked as exact equality of normalized term maps. The canonical text
//! rendering is ascending by exponent (`"2 + q + 3*q^2"`), with `"0"` for the
//! zero polynomial, so golden tests can compare output byte for byte.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Polynomial in `q`, stored as a sorted exponent-to-coefficient map with no
/// zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<u64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::monomial(0, c)
    }

    /// `c * q^exp`.
    pub fn monomial(exp: u64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QPoly { terms }
    }

    /// `q^exp`.
    pub fn q_power(exp: u64) -> Self {
        QPoly::monomial(exp, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: u64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: u64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, q0: &BigInt) -> BigInt {
        // Horner over the sparse terms, highest exponent first.
        let mut acc = BigInt::zero();
        let mut last_exp: Option<u64> = None;
        for (&e, c) in self.terms.iter().rev() {
            if let Some(prev) = last_exp {
                acc *= q0.pow((prev - e) as u32);
            }
            acc += c;
            last_exp = Some(e);
        }
        if let Some(e) = last_exp {
            acc *= q0.pow(e as u32);
        }
        acc
    }

    /// Sum of all coefficients, i.e. the evaluation at `q = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, k: usize) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `q^exp`.
    pub fn shift(&self, exp: u64) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + exp, c.clone())).collect(),
        }
    }

    /// `{"terms": [[exp, "coeff"], ...]}` sorted ascending by exponent.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&e, c)| serde_json::json!([e, c.to_string()]))
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Json("expected {\"terms\": [[exp, coeff], ...]}".into()))?;
        let mut poly = QPoly::zero();
        for t in terms {
            let pair = t
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Json("each term must be [exp, coeff]".into()))?;
            let exp = pair[0]
                .as_u64()
                .ok_or_else(|| Error::Json("exponent must be a nonnegative integer".into()))?;
            let coeff: BigInt = pair[1]
                .as_str()
                .and_then(|s| s.parse().ok())
                .or_else(|| pair[1].as_i64().map(BigInt::from))
                .ok_or_else(|| Error::Json("coefficient must be a decimal string".into()))?;
            poly.add_term(exp, &coeff);
        }
        Ok(poly)
    }
}

/// The q-number `[k]_q = 1 + q + q^2 + ... + q^{k-1}`; `[0]_q = 0`.
pub fn q_number(k: u64) -> QPoly {
    let mut terms = BTreeMap::new();
    for e in 0..k {
        terms.insert(e, BigInt::one());
    }
    QPoly { terms }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                _ => {
                    if c.is_one() {
                        // coefficient 1 is left implicit
                    } else {
                        write!(f, "{c}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(u64, i64)]) -> QPoly {
        let mut out = QPoly::zero();
        for &(e, c) in pairs {
            out.add_term(e, &BigInt::from(c));
        }
        out
    }

    #[test]
    fn add_basics() {
        // (1+q) + q = 1 + 2q
        assert_eq!(&p(&[(0, 1), (1, 1)]) + &p(&[(1, 1)]), p(&[(0, 1), (1, 2)]));
        // additive identity
        let poly = p(&[(0, 2), (3, 5)]);
        assert_eq!(&poly + &QPoly::zero(), poly);
        // mixed overlap: (2+q) + (1+q^2) = 3 + q + q^2
        assert_eq!(
            &p(&[(0, 2), (1, 1)]) + &p(&[(0, 1), (2, 1)]),
            p(&[(0, 3), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn mul_basics() {
        // (1+q)^2 = 1 + 2q + q^2
        let one_q = p(&[(0, 1), (1, 1)]);
        assert_eq!(&one_q * &one_q, p(&[(0, 1), (1, 2), (2, 1)]));
        let poly = p(&[(0, 3), (2, 7)]);
        assert_eq!(&poly * &QPoly::one(), poly);
        assert_eq!(&poly * &QPoly::zero(), QPoly::zero());
    }

    #[test]
    fn q_number_basics() {
        assert_eq!(q_number(0), QPoly::zero());
        assert_eq!(q_number(1), QPoly::one());
        assert_eq!(q_number(3), p(&[(0, 1), (1, 1), (2, 1)]));
        for k in 0..=100u64 {
            assert_eq!(q_number(k).eval(&BigInt::one()), BigInt::from(k));
        }
    }

    #[test]
    fn eval_points() {
        let poly = p(&[(0, 2), (1, 1)]); // 2 + q
        assert_eq!(poly.eval(&BigInt::from(1)), BigInt::from(3));
        assert_eq!(poly.eval(&BigInt::from(0)), BigInt::from(2));
        assert_eq!(poly.eval(&BigInt::from(-1)), BigInt::from(1));
    }

    #[test]
    fn display_canonical() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[(0, 2), (1, 1)]).to_string(), "2 + q");
        assert_eq!(p(&[(0, 1), (1, 2), (3, 1)]).to_string(), "1 + 2*q + q^3");
        assert_eq!(p(&[(2, 5)]).to_string(), "5*q^2");
    }

    #[test]
    fn json_roundtrip() {
        let poly = p(&[(0, 6), (1, 9), (7, 1)]);
        let back = QPoly::from_json(&poly.to_json()).unwrap();
        assert_eq!(back, poly);
        assert_eq!(
            poly.to_json().to_string(),
            r#"{"terms":[[0,"6"],[1,"9"],[7,"1"]]}"#
        );
    }
}
