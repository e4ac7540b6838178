//! Exact field arithmetic: odd prime fields F_p and the rationals.
//!
//! Every element is kept in a canonical representation (residue in `[0, p)`
//! or a reduced fraction), so equality of values is equality of
//! representations. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest modulus accepted for a prime field. Products of two residues must
/// fit in a `u64` without overflow.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// Default ceiling for the exhaustive k-th root search over F_p.
pub const DEFAULT_ROOT_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {0} exceeds the supported maximum {MAX_MODULUS}")]
    ModulusTooLarge(u64),
    #[error("k-th root search over F_{p} exceeds the configured bound {bound}")]
    RootBoundExceeded { p: u64, bound: u64 },
    #[error("root index k must be positive")]
    ZeroRootIndex,
    #[error("cannot parse {0:?} as an element of {1}")]
    Parse(String, Field),
    #[error("element does not belong to {0}")]
    WrongField(Field),
}

/// An exact ground field: F_p for an odd prime p, or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Fp { p: u64 },
    Rational,
}

/// A field element in canonical form.
///
/// `Fp` values are residues in `[0, p)`; the modulus lives on the [`Field`]
/// that owns the element. `Rat` values are reduced fractions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Fp(u64),
    Rat(BigRational),
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Field {
    /// The prime field F_p. Characteristic 2 is rejected: the automorphism
    /// conditions handled downstream degenerate under the Frobenius there.
    pub fn fp(p: u64) -> Result<Field, FieldError> {
        if p > MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_odd_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(Field::Fp { p })
    }

    pub fn rational() -> Field {
        Field::Rational
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Fp { .. })
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Field::Fp { p } => Some(*p),
            Field::Rational => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Field::Fp { .. } => Elem::Fp(0),
            Field::Rational => Elem::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            Field::Fp { .. } => Elem::Fp(1),
            Field::Rational => Elem::Rat(BigRational::one()),
        }
    }

    /// Embeds a signed integer.
    pub fn from_i64(&self, n: i64) -> Elem {
        match self {
            Field::Fp { p } => {
                let r = n.rem_euclid(*p as i64) as u64;
                Elem::Fp(r)
            }
            Field::Rational => Elem::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    fn fp_val(&self, a: &Elem) -> u64 {
        match (self, a) {
            (Field::Fp { .. }, Elem::Fp(v)) => *v,
            _ => panic!("element/field mismatch: {a:?} in {self}"),
        }
    }

    fn rat_val<'a>(&self, a: &'a Elem) -> &'a BigRational {
        match (self, a) {
            (Field::Rational, Elem::Rat(v)) => v,
            _ => panic!("element/field mismatch: {a:?} in {self}"),
        }
    }

    /// Checks that `a` is a canonical element of this field.
    pub fn owns(&self, a: &Elem) -> bool {
        match (self, a) {
            (Field::Fp { p }, Elem::Fp(v)) => v < p,
            (Field::Rational, Elem::Rat(_)) => true,
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Fp(v) => *v == 0,
            Elem::Rat(v) => v.is_zero(),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Field::Fp { p } => Elem::Fp((self.fp_val(a) + self.fp_val(b)) % p),
            Field::Rational => Elem::Rat(self.rat_val(a) + self.rat_val(b)),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Field::Fp { p } => Elem::Fp((p + self.fp_val(a) - self.fp_val(b)) % p),
            Field::Rational => Elem::Rat(self.rat_val(a) - self.rat_val(b)),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match self {
            Field::Fp { p } => {
                let v = self.fp_val(a);
                Elem::Fp(if v == 0 { 0 } else { p - v })
            }
            Field::Rational => Elem::Rat(-self.rat_val(a)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Field::Fp { p } => Elem::Fp(self.fp_val(a) * self.fp_val(b) % p),
            Field::Rational => Elem::Rat(self.rat_val(a) * self.rat_val(b)),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            Field::Fp { p } => Ok(Elem::Fp(pow_mod(self.fp_val(a), p - 2, *p))),
            Field::Rational => Ok(Elem::Rat(self.rat_val(a).recip())),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem, FieldError> {
        let binv = self.inv(b)?;
        Ok(self.mul(a, &binv))
    }

    pub fn pow(&self, a: &Elem, k: u32) -> Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// All x with x^k = a, using [`DEFAULT_ROOT_BOUND`] for the F_p search.
    pub fn kth_roots(&self, a: &Elem, k: u32) -> Result<Vec<Elem>, FieldError> {
        self.kth_roots_bounded(a, k, DEFAULT_ROOT_BOUND)
    }

    /// All x with x^k = a. Over F_p the roots are found by exhaustion, which
    /// is refused when p exceeds `bound`. Over the rationals only rational
    /// roots are reported; an empty set signals non-existence.
    pub fn kth_roots_bounded(&self, a: &Elem, k: u32, bound: u64) -> Result<Vec<Elem>, FieldError> {
        if k == 0 {
            return Err(FieldError::ZeroRootIndex);
        }
        if self.is_zero(a) {
            return Ok(vec![self.zero()]);
        }
        match self {
            Field::Fp { p } => {
                if *p > bound {
                    return Err(FieldError::RootBoundExceeded { p: *p, bound });
                }
                let target = self.fp_val(a);
                let mut roots = Vec::new();
                for x in 1..*p {
                    if pow_mod(x, k as u64, *p) == target {
                        roots.push(Elem::Fp(x));
                    }
                }
                Ok(roots)
            }
            Field::Rational => {
                let v = self.rat_val(a);
                if k % 2 == 0 && v.is_negative() {
                    return Ok(vec![]);
                }
                let (num, den) = (v.numer(), v.denom());
                let num_abs = num.abs();
                let nroot = num_abs.nth_root(k);
                let droot = den.nth_root(k);
                if num_abs != pow_bigint(&nroot, k) || *den != pow_bigint(&droot, k) {
                    return Ok(vec![]);
                }
                let signed = if num.is_negative() { -nroot } else { nroot };
                let r = BigRational::new(signed, droot);
                if k % 2 == 0 {
                    Ok(vec![Elem::Rat(r.clone()), Elem::Rat(-r)])
                } else {
                    Ok(vec![Elem::Rat(r)])
                }
            }
        }
    }

    /// Whether some x satisfies x^k = a (within the root-search bound).
    pub fn has_kth_root(&self, a: &Elem, k: u32) -> bool {
        self.kth_roots(a, k).map(|r| !r.is_empty()).unwrap_or(false)
    }

    pub fn parse(&self, s: &str) -> Result<Elem, FieldError> {
        let s = s.trim();
        match self {
            Field::Fp { p } => {
                let n = BigInt::from_str(s)
                    .map_err(|_| FieldError::Parse(s.to_string(), *self))?;
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                let digits = r.to_string();
                Ok(Elem::Fp(digits.parse::<u64>().unwrap()))
            }
            Field::Rational => BigRational::from_str(s)
                .map(Elem::Rat)
                .map_err(|_| FieldError::Parse(s.to_string(), *self)),
        }
    }

    pub fn format(&self, a: &Elem) -> String {
        match a {
            Elem::Fp(v) => v.to_string(),
            Elem::Rat(v) => {
                if v.denom().is_one() {
                    v.numer().to_string()
                } else {
                    format!("{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}

fn pow_bigint(b: &BigInt, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..k {
        acc *= b;
    }
    acc
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp { p } => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}
