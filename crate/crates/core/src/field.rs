//! Exact scalars over ℚ or a prime field GF(p).

use alloc::format;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported prime modulus.
pub const MAX_PRIME: u32 = (1 << 31) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// GF(p); `p` must be a prime below 2^31.
    pub fn prime(p: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::input(format!(
                "{p} is not a supported prime modulus"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(u64::from(p)),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(i64::from(p)) as u32,
                modulus: p,
            },
        }
    }

    /// The `index`-th element of a finite field in the order 0, 1, ..., p-1.
    pub fn element(self, index: u64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(index))),
            Field::Prime(p) => Scalar::Prime {
                value: (index % u64::from(p)) as u32,
                modulus: p,
            },
        }
    }

    /// Parses `a`, `-a` or `a/b`. Over GF(p) the value is reduced modulo p,
    /// so the canonical decimal in `[0, p)` and signed or fractional
    /// literals are all accepted.
    pub fn parse(self, literal: &str) -> Result<Scalar> {
        let s = literal.trim();
        let bad = || Error::input(format!("malformed scalar literal `{literal}`"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::input(format!("zero denominator in `{literal}`")));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let modulus = BigInt::from(p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &modulus) + &modulus) % &modulus;
                    r.to_u32().unwrap_or(0)
                };
                let n = Scalar::Prime {
                    value: reduce(&num),
                    modulus: p,
                };
                let d = Scalar::Prime {
                    value: reduce(&den),
                    modulus: p,
                };
                let inv = d.inverse().ok_or_else(|| {
                    Error::input(format!("denominator of `{literal}` vanishes mod {p}"))
                })?;
                Ok(&n * &inv)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of ℚ (lowest terms, positive denominator) or of GF(p)
/// (canonical representative in `[0, p)`).
///
/// Arithmetic between scalars of different fields is a programming error
/// and panics; [`crate::Matrix`] constructors reject mixed entries up front.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(
                    u64::from(*value),
                    u64::from(*modulus) - 2,
                    u64::from(*modulus),
                ) as u32,
                modulus: *modulus,
            },
        })
    }

    /// The value as a small integer, when it is one (used for dimension
    /// counts solved over ℚ).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Prime { value, .. } => Some(i64::from(*value)),
        }
    }

    /// Bit size of numerator plus denominator; 1 for prime-field values.
    pub fn height(&self) -> u64 {
        match self {
            Scalar::Rational(q) => q.numer().bits() + q.denom().bits(),
            Scalar::Prime { .. } => 1,
        }
    }

    fn binary(&self, rhs: &Scalar, op: &str) -> (Field, u64, u64) {
        match (self, rhs) {
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => (Field::Prime(*p), u64::from(*a), u64::from(*b)),
            _ => panic!(
                "field mismatch in scalar {op}: {} vs {}",
                self.field(),
                rhs.field()
            ),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
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

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a + b);
        }
        let (field, a, b) = self.binary(rhs, "addition");
        let Field::Prime(p) = field else {
            unreachable!()
        };
        Scalar::Prime {
            value: ((a + b) % u64::from(p)) as u32,
            modulus: p,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a - b);
        }
        let (field, a, b) = self.binary(rhs, "subtraction");
        let Field::Prime(p) = field else {
            unreachable!()
        };
        let p64 = u64::from(p);
        Scalar::Prime {
            value: ((a + p64 - b) % p64) as u32,
            modulus: p,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a * b);
        }
        let (field, a, b) = self.binary(rhs, "multiplication");
        let Field::Prime(p) = field else {
            unreachable!()
        };
        Scalar::Prime {
            value: (a * b % u64::from(p)) as u32,
            modulus: p,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => {
                let sign = if q.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
