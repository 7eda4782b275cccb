//! Exact scalars: rationals in lowest terms and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime modulus accepted for `GF(p)`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// Coefficient field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `0` selects the rationals, a prime `p` selects `GF(p)`.
    pub fn from_characteristic(p: u64) -> Result<Field> {
        if p == 0 {
            Ok(Field::Rational)
        } else if p <= MAX_PRIME && is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NonPrimeCharacteristic(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// True when the characteristic divides `n` (never for the rationals).
    pub fn char_divides(&self, n: u64) -> bool {
        match self {
            Field::Rational => false,
            Field::Prime(p) => n % p == 0,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => Coeff::Prime {
                value: reduce_mod(v, *p),
                p: *p,
            },
        }
    }

    /// `num/den` as an element of the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.from_bigint(num).checked_div(&d)
    }
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits in u64")
}

/// Trial division; moduli are capped at [`MAX_PRIME`].
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut i = 3u64;
    while i * i <= p {
        if p % i == 0 {
            return false;
        }
        i += 2;
    }
    true
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rational,
            Coeff::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Prime { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Coeff) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn try_add(&self, other: &Coeff) -> Result<Coeff> {
        self.check(other)?;
        Ok(match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Prime { value: a, p }, Coeff::Prime { value: b, .. }) => Coeff::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Coeff) -> Result<Coeff> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Coeff) -> Result<Coeff> {
        self.check(other)?;
        Ok(match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Prime { value: a, p }, Coeff::Prime { value: b, .. }) => Coeff::Prime {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Coeff::Rational(r) => Coeff::Rational(r.recip()),
            Coeff::Prime { value, p } => Coeff::Prime {
                value: inv_mod(*value, *p),
                p: *p,
            },
        })
    }

    pub fn checked_div(&self, other: &Coeff) -> Result<Coeff> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Coeff {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiply by a machine integer (exponents, binomials, etc.).
    pub fn mul_int(&self, k: i64) -> Coeff {
        self * &self.field().from_i64(k)
    }

    /// `"num/den"`, the serialized form (residues print as `"r/1"`).
    pub fn to_fraction_string(&self) -> String {
        match self {
            Coeff::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Coeff::Prime { value, .. } => format!("{}/1", value),
        }
    }

    /// Sign as seen by the printer: residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_negative(),
            Coeff::Prime { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(r) => Some(r),
            Coeff::Prime { .. } => None,
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i128) as u64
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Prime { value, .. } => write!(f, "{}", value),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rational(r) => Coeff::Rational(-r),
            Coeff::Prime { value, p } => Coeff::Prime {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

// Operators panic on mixed fields; the `try_*` methods report it instead.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Coeff> for &Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &Coeff) -> Coeff {
                self.$checked(rhs).expect("coefficients from different fields")
            }
        }
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $method(self, rhs: Coeff) -> Coeff {
                (&self).$checked(&rhs).expect("coefficients from different fields")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
