//! Field scalars.
//!
//! Everything in this crate is generic over [`Scalar`], an exact field
//! element. The production instantiation is [`Rational`] (arbitrary precision
//! fractions); [`Fp`] is a word-sized prime field used for cheap modular rank
//! pre-checks. Floating point types are deliberately not scalars: ranks of
//! cohomology complexes are not stable under rounding.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, NumAssignRef, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// An exact field element.
pub trait Scalar: Num + NumAssignRef + Neg<Output = Self> + Clone + Debug + Display + Send + Sync + 'static {
    fn from_i64(n: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// The integer this scalar equals, if it is one that fits in an `i64`.
    fn to_i64_exact(&self) -> Option<i64>;

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out += rhs;
        out
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out -= rhs;
        out
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out /= rhs;
        out
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `1/n!`
    fn inv_factorial(n: usize) -> Self {
        let mut f = Self::one();
        for i in 2..=n {
            f *= &Self::from_i64(i as i64);
        }
        f.inv()
    }
}

impl Scalar for Rational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Shorthand for `num/den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `"num/den"` text form used in every serialized artifact.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Integers modulo the Mersenne prime `2^31 - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub const MODULUS: u64 = (1 << 31) - 1;

    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(Self::MODULUS as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Reduction of a rational; `None` when the denominator vanishes mod p.
    pub fn from_rational(q: &Rational) -> Option<Self> {
        let m = BigInt::from(Self::MODULUS);
        let n = (q.numer() % &m + &m) % &m;
        let d = (q.denom() % &m + &m) % &m;
        let d = Fp(d.to_u64()?);
        if d.0 == 0 {
            return None;
        }
        Some(Fp(n.to_u64()?) / d)
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod p)", self.0)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp((self.0 + rhs.0) % Self::MODULUS)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        Fp((self.0 + Self::MODULUS - rhs.0) % Self::MODULUS)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(self.0 * rhs.0 % Self::MODULUS)
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        assert!(rhs.0 != 0, "division by zero in Fp");
        self * rhs.pow(Self::MODULUS - 2)
    }
}

impl Rem for Fp {
    type Output = Fp;
    fn rem(self, _rhs: Fp) -> Fp {
        // every nonzero element divides every other one in a field
        Fp(0)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp((Self::MODULUS - self.0) % Self::MODULUS)
    }
}

macro_rules! fp_assign_ops {
    ($($tr:ident $m:ident $op:ident),*) => {$(
        impl $tr for Fp {
            fn $m(&mut self, rhs: Fp) {
                *self = self.$op(rhs);
            }
        }
        impl<'a> $tr<&'a Fp> for Fp {
            fn $m(&mut self, rhs: &'a Fp) {
                *self = self.$op(*rhs);
            }
        }
    )*};
}

fp_assign_ops!(
    AddAssign add_assign add,
    SubAssign sub_assign sub,
    MulAssign mul_assign mul,
    DivAssign div_assign div,
    RemAssign rem_assign rem
);

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Num for Fp {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl Scalar for Fp {
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }

    fn to_i64_exact(&self) -> Option<i64> {
        // symmetric lift
        let v = self.0 as i64;
        let p = Self::MODULUS as i64;
        Some(if v > p / 2 { v - p } else { v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        let q = rat(-6, 4);
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), q);
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn fp_field_laws() {
        let a = Fp::new(12345);
        let b = Fp::new(-77);
        assert_eq!(a / b * b, a);
        assert_eq!(a - a, Fp::zero());
        assert_eq!(-b + b, Fp::zero());
        assert_eq!(Fp::from_rational(&rat(1, 2)).unwrap() * Fp::new(2), Fp::one());
    }

    #[test]
    fn inverse_factorials() {
        assert_eq!(Rational::inv_factorial(0), rat(1, 1));
        assert_eq!(Rational::inv_factorial(4), rat(1, 24));
    }
}
