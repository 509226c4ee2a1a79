//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::{BigRational, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field of a computation. Every scalar carries its field, and
/// mixing fields inside one computation is a bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `GF(p)`; rejects composite or tiny moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Maps a rational number into this field. Fails when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &m) + &m) % &m;
                    r.to_u64().expect("residue fits in u64")
                };
                let num = Scalar::Mod {
                    value: reduce(q.numer()),
                    modulus: p,
                };
                let den = Scalar::Mod {
                    value: reduce(q.denom()),
                    modulus: p,
                };
                num.checked_div(&den)
            }
        }
    }

    /// Parses `"3/2"`, `"-4"` or `"0.25"` into this field.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rational") {
            return Ok(Field::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .or_else(|| t.strip_prefix("gf("))
            .and_then(|r| r.strip_suffix(')'));
        match inner.and_then(|n| n.trim().parse::<u64>().ok()) {
            Some(p) => Field::prime(p),
            None => Err(Error::Parse(format!("unknown field descriptor `{s}`"))),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if !(2..1 << 62).contains(&p) {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid coefficient `{s}`"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num::pow(BigInt::from(10), frac.len());
        let q = BigRational::new(n, d);
        return Ok(if neg { -q } else { q });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Mod { value, modulus } => {
                if *value == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Mod {
                    value: pow_mod(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                })
            }
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The value as a rational, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Mod { .. } => None,
        }
    }

    /// Representative in `0..p` for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Mod { value, .. } => Some(*value),
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128 % m as u128;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => field_mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Mod {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Convenience for tests and fixtures: `q(3, 2)` is 3/2 over the rationals.
pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic_is_exact() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(-&a, f.from_i64(4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            Field::Rational.zero().inv(),
            Err(Error::DivisionByZero)
        ));
        let f = Field::Prime(5);
        assert!(f.zero().inv().is_err());
        assert!(f.parse("1/5").is_err());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!("GF(11)".parse::<Field>().is_ok());
        assert!("GF(12)".parse::<Field>().is_err());
    }

    #[test]
    fn parses_and_prints_rationals() {
        let f = Field::Rational;
        assert_eq!(f.parse("3/2").unwrap(), q(3, 2));
        assert_eq!(f.parse("-0.25").unwrap(), q(-1, 4));
        assert_eq!(f.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(f.parse("-7").unwrap().to_string(), "-7");
        assert_eq!(
            Field::Prime(7).parse("1/2").unwrap(),
            Field::Prime(7).from_i64(4)
        );
    }
}
