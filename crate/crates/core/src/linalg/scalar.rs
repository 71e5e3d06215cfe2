use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// The prime field with `p` elements. Rejects composite `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p <= u32::MAX as u64 {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    /// Parses `q` or `fp:<p>`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad prime in `{s}`: {e}")))?;
                Field::prime(p)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
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

/// An exact field element. Prime field values are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn from_i64(field: Field, v: i64) -> Self {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    /// Panics on division by zero or mixed fields.
    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self * &rhs.inverse().expect("division by zero")
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    fn same_field(&self, rhs: &Scalar) -> Result<()> {
        if self.field() == rhs.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), rhs.field()))
        }
    }

    /// Parses `n` or `n/d` into the given field.
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let bad = |e: &dyn fmt::Display| Error::Parse(format!("bad scalar `{s}`: {e}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|e| bad(&e))?,
                d.trim().parse::<BigInt>().map_err(|e| bad(&e))?,
            ),
            None => (
                s.trim().parse::<BigInt>().map_err(|e| bad(&e))?,
                BigInt::one(),
            ),
        };
        if den.is_zero() {
            return Err(bad(&"zero denominator"));
        }
        match field {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    u64::try_from(r).expect("residue fits in u64")
                };
                let d = Scalar::Mod {
                    value: reduce(&den),
                    p,
                };
                let n = Scalar::Mod {
                    value: reduce(&num),
                    p,
                };
                if d.is_zero() {
                    return Err(bad(&"denominator vanishes mod p"));
                }
                Ok(n.div(&d))
            }
        }
    }
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// Signed representative used for display: prime field values above p/2
    /// print as negatives.
    pub fn display_signed(&self) -> String {
        match self {
            Scalar::Mod { value, p } if *value > p / 2 => format!("-{}", p - value),
            _ => self.to_string(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: (a + b) % p,
                    p: *p,
                }
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: (a + p - b) % p,
                    p: *p,
                }
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: a * b % p,
                    p: *p,
                }
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}
