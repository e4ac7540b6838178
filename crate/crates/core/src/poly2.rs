//! Sparse bivariate polynomials with exact rational coefficients, enough to
//! expand and compare the degree-six parameter identities symbolically.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in two variables; keys are (exponent of a, exponent of b),
/// zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl Poly2 {
    pub fn zero() -> Poly2 {
        Poly2::default()
    }

    pub fn constant(c: i64) -> Poly2 {
        Poly2::from_terms(&[(0, 0, c)])
    }

    /// `a^i b^j` with an integer coefficient.
    pub fn term(i: u32, j: u32, c: i64) -> Poly2 {
        Poly2::from_terms(&[(i, j, c)])
    }

    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Poly2 {
        let mut out = Poly2::zero();
        for &(i, j, c) in terms {
            out.add_term(i, j, BigRational::from_integer(BigInt::from(c)));
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn product(factors: &[Poly2]) -> Poly2 {
        let mut acc = Poly2::constant(1);
        for f in factors {
            acc = acc.mul(f);
        }
        acc
    }

    pub fn eval(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..*i {
                t *= a;
            }
            for _ in 0..*j {
                t *= b;
            }
            acc += t;
        }
        acc
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| {
                let mut s = String::new();
                s.push_str(&c.to_string());
                if *i > 0 {
                    s.push_str(&format!("*a^{i}"));
                }
                if *j > 0 {
                    s.push_str(&format!("*b^{j}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        // (a + b)(a - b) = a^2 - b^2
        let sum = Poly2::from_terms(&[(1, 0, 1), (0, 1, 1)]);
        let diff = Poly2::from_terms(&[(1, 0, 1), (0, 1, -1)]);
        let prod = sum.mul(&diff);
        assert_eq!(prod, Poly2::from_terms(&[(2, 0, 1), (0, 2, -1)]));
        assert!(prod.sub(&prod).is_zero());
    }

    #[test]
    fn cancellation_prunes_terms() {
        let p = Poly2::term(1, 1, 3).add(&Poly2::term(1, 1, -3));
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn evaluation() {
        let p = Poly2::from_terms(&[(2, 1, 1), (0, 0, -5)]);
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        assert_eq!(p.eval(&two, &three), BigRational::from_integer(7.into()));
    }
}
