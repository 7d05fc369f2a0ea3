//! Exact coefficient fields: the rationals and prime fields `Z/pZ`.
//!
//! A [`FieldElement`] carries enough information to do arithmetic on its own.
//! Mixing elements of different fields is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

impl Field {
    /// Validates the field description. Prime moduli must be primes below 2^32
    /// so that products of residues fit in a `u64`.
    pub fn checked(self) -> Result<Self> {
        if let Field::Prime { p } = self {
            if !(2..(1 << 32)).contains(&p) || !is_prime(p) {
                return Err(Error::InvalidField(format!("{p} is not a prime below 2^32")));
            }
        }
        Ok(self)
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(n.into())),
            Field::Prime { p } => {
                FieldElement::Modular { residue: n.rem_euclid(p as i64) as u64, modulus: p }
            }
        }
    }

    /// Parses a decimal integer or a fraction `a/b`.
    pub fn parse(&self, text: &str) -> Result<FieldElement> {
        let text = text.trim();
        let bad = || Error::InvalidCoefficient(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match *self {
            Field::Rational => Ok(FieldElement::Rational(BigRational::new(num, den))),
            Field::Prime { p } => {
                let reduce = |n: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((n % &m) + &m) % &m;
                    r.try_into().expect("residue below modulus")
                };
                let d = FieldElement::Modular { residue: reduce(&den), modulus: p };
                if d.is_zero() {
                    return Err(bad());
                }
                let n = FieldElement::Modular { residue: reduce(&num), modulus: p };
                Ok(&n * &d.inv())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a coefficient field, always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Modular { modulus, .. } => Field::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Modular { residue, .. } => *residue == 1,
        }
    }

    /// True for rationals below zero; prime-field elements are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_negative(),
            FieldElement::Modular { .. } => false,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> FieldElement {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Modular { residue, modulus } => FieldElement::Modular {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Absolute value for rationals (used when printing signs separately).
    pub fn abs(&self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.abs()),
            m => m.clone(),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (
                FieldElement::Modular { residue: a, modulus: p },
                FieldElement::Modular { residue: b, modulus: q },
            ) if p == q => FieldElement::Modular { residue: (a + b) % p, modulus: *p },
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (
                FieldElement::Modular { residue: a, modulus: p },
                FieldElement::Modular { residue: b, modulus: q },
            ) if p == q => FieldElement::Modular { residue: a * b % p, modulus: *p },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular { residue, modulus } => FieldElement::Modular {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rational;
        assert_eq!(q.parse("4/-6").unwrap(), q.parse("-2/3").unwrap());
        assert_eq!(q.parse("-2/3").unwrap().to_string(), "-2/3");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime { p: 7 }.checked().unwrap();
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inv(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert!(Field::Prime { p: 8 }.checked().is_err());
        assert!(Field::Prime { p: 7 }.parse("3/7").is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime { p: 5 }.one();
    }
}
