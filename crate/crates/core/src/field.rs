//! Exact scalar arithmetic: prime fields GF(p) and arbitrary-precision rationals.
//!
//! Every rank downstream reduces to arithmetic here, so there is no floating
//! point anywhere. Scalars are tagged with their field; mixing fields is a
//! programming error and panics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// The coefficient field for a computation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// Prime field GF(p).
    Fp(u64),
    /// The rationals with arbitrary-precision arithmetic.
    Rationals,
}

impl Field {
    /// GF(2), the default field for homology examples.
    pub const GF2: Field = Field::Fp(2);

    pub fn gf(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Fp(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Parses "GF(2)", "GF(p)" with a literal prime, or "Q".
    pub fn parse(spec: &str) -> Result<Field> {
        let s = spec.trim();
        if s == "Q" || s == "q" {
            return Ok(Field::Rationals);
        }
        if let Some(inner) = s
            .strip_prefix("GF(")
            .or_else(|| s.strip_prefix("gf("))
            .and_then(|t| t.strip_suffix(')'))
        {
            let p: u64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::BadField(spec.to_string()))?;
            return Field::gf(p);
        }
        Err(Error::BadField(spec.to_string()))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Embeds an integer, reducing mod p for prime fields.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Fp(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar(Repr::Fp { v: r, p })
            }
            Field::Rationals => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// Parses a scalar literal: an integer, or "num/den" (interpreted as
    /// num * den^-1 over a prime field).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::BadScalar(text.to_string(), self.to_string());
        let t = text.trim();
        match *self {
            Field::Fp(_) => {
                if let Some((n, d)) = t.split_once('/') {
                    let num: i64 = n.trim().parse().map_err(|_| bad())?;
                    let den: i64 = d.trim().parse().map_err(|_| bad())?;
                    let den = self.from_i64(den);
                    if den.is_zero() {
                        return Err(bad());
                    }
                    Ok(self.from_i64(num).mul(&den.inv()))
                } else {
                    let v: i64 = t.parse().map_err(|_| bad())?;
                    Ok(self.from_i64(v))
                }
            }
            Field::Rationals => {
                if let Some((n, d)) = t.split_once('/') {
                    let num: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let den: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if den.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar(Repr::Rat(BigRational::new(num, den))))
                } else {
                    let num: BigInt = t.parse().map_err(|_| bad())?;
                    Ok(Scalar(Repr::Rat(BigRational::from_integer(num))))
                }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Fp { v: u64, p: u64 },
    Rat(BigRational),
}

/// An exact field element, tagged with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Fp { p, .. } => Field::Fp(*p),
            Repr::Rat(_) => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Fp { v, .. } => *v == 0,
            Repr::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Fp { v, .. } => *v == 1,
            Repr::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar(Repr::Fp {
                    v: add_mod(*a, *b, *p),
                    p: *p,
                })
            }
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            _ => panic!("mixed fields in scalar addition"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar(Repr::Fp {
                    v: mul_mod(*a, *b, *p),
                    p: *p,
                })
            }
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            _ => panic!("mixed fields in scalar multiplication"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Fp { v, p } => Scalar(Repr::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            }),
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.0 {
            Repr::Fp { v, p } => Scalar(Repr::Fp {
                v: inv_mod(*v, *p),
                p: *p,
            }),
            Repr::Rat(r) => Scalar(Repr::Rat(r.recip())),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Fp { v, .. } => write!(f, "{v}"),
            Repr::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
