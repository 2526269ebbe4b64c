//! Exact scalars over Q or a prime field F_p.
//!
//! Rationals are the default. A rational meeting an F_p element is reduced
//! mod p, which is what lets literal constants like `Scalar::one()` act in
//! both fields.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod { v: v.rem_euclid(p as i64) as u64, p },
        }
    }

    /// Parses `"3"`, `"-2/5"` and casts into this field.
    pub fn parse(self, s: &str) -> Result<Scalar, CoreError> {
        let s = s.trim();
        let bad = || CoreError::Parse(s.to_string());
        let q = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(CoreError::DivisionByZero);
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        self.cast(&Scalar::Rat(q))
    }

    /// Moves a scalar into this field.
    pub fn cast(self, x: &Scalar) -> Result<Scalar, CoreError> {
        match (self, x) {
            (Field::Rational, Scalar::Rat(_)) => Ok(x.clone()),
            (Field::Rational, Scalar::Mod { .. }) => Err(CoreError::FieldMismatch),
            (Field::Prime(p), Scalar::Rat(q)) => reduce(q, p).ok_or(CoreError::DivisionByZero),
            (Field::Prime(p), Scalar::Mod { p: q, .. }) if p == *q => Ok(x.clone()),
            (Field::Prime(_), Scalar::Mod { .. }) => Err(CoreError::FieldMismatch),
        }
    }

    pub fn is_prime(p: u64) -> bool {
        p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
    }
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

fn reduce(q: &BigRational, p: u64) -> Option<Scalar> {
    let pb = BigInt::from(p);
    let n = (q.numer() % &pb + &pb) % &pb;
    let d = (q.denom() % &pb + &pb) % &pb;
    let d = d.to_u64()?;
    if d == 0 {
        return None;
    }
    let n = n.to_u64()?;
    Some(Scalar::Mod { v: mulmod(n, inv_mod(d, p), p), p })
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    result
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(v)))
    }

    /// `(-1)^e` as a scalar.
    pub fn sign(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn inv(&self) -> Result<Scalar, CoreError> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod { v, p } => Scalar::Mod { v: inv_mod(*v, *p), p: *p },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, CoreError> {
        Ok(self * &other.inv()?)
    }

    /// Brings two scalars into a common field. Mixing two different primes
    /// is a programming error.
    fn unify<'a>(a: &'a Scalar, b: &'a Scalar) -> (std::borrow::Cow<'a, Scalar>, std::borrow::Cow<'a, Scalar>) {
        use std::borrow::Cow;
        match (a, b) {
            (Scalar::Rat(_), Scalar::Rat(_)) => (Cow::Borrowed(a), Cow::Borrowed(b)),
            (Scalar::Mod { p, .. }, Scalar::Mod { p: q, .. }) => {
                assert_eq!(p, q, "scalars from different prime fields");
                (Cow::Borrowed(a), Cow::Borrowed(b))
            }
            (Scalar::Rat(q), Scalar::Mod { p, .. }) => {
                (Cow::Owned(reduce(q, *p).expect("denominator divisible by p")), Cow::Borrowed(b))
            }
            (Scalar::Mod { p, .. }, Scalar::Rat(q)) => {
                (Cow::Borrowed(a), Cow::Owned(reduce(q, *p).expect("denominator divisible by p")))
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Mod { v, p }, Scalar::Mod { v: w, p: q }) => p == q && v == w,
            (Scalar::Rat(a), m @ Scalar::Mod { p, .. }) | (m @ Scalar::Mod { p, .. }, Scalar::Rat(a)) => {
                reduce(a, *p).map_or(false, |r| &r == m)
            }
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Mod { v, .. } => write!(f, "{}", v),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Field::Rational.parse(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $rat:expr, $modp:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                let (a, b) = Scalar::unify(self, rhs);
                match (a.as_ref(), b.as_ref()) {
                    (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat($rat(x, y)),
                    (Scalar::Mod { v, p }, Scalar::Mod { v: w, .. }) => {
                        Scalar::Mod { v: $modp(*v, *w, *p), p: *p }
                    }
                    _ => unreachable!(),
                }
            }
        }

        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |x: &BigRational, y: &BigRational| x + y, |v: u64, w: u64, p: u64| ((v as u128 + w as u128) % p as u128) as u64);
binop!(Sub, sub, |x: &BigRational, y: &BigRational| x - y, |v: u64, w: u64, p: u64| ((v as u128 + p as u128 - w as u128) % p as u128) as u64);
binop!(Mul, mul, |x: &BigRational, y: &BigRational| x * y, mulmod);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(x), Scalar::Rat(y)) => *x += y,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(x), Scalar::Rat(y)) => *x -= y,
            _ => *self = &*self - rhs,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Mod { v, p } => Scalar::Mod { v: (p - v) % p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

