//! Gaussian rationals: the exact ground field for every computation.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact complex number with rational real and imaginary parts.
///
/// `BigRational` keeps both parts in canonical reduced form (coprime
/// numerator/denominator, positive denominator), so equality is plain
/// structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// Exact rational p/q. Panics if q = 0.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator in Scalar::ratio");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// Gaussian number p/q + (r/s)i. Panics if q = 0 or s = 0.
    pub fn gaussian(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "zero denominator in Scalar::gaussian");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::new(BigInt::from(r), BigInt::from(s)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Returns the value as a plain integer when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(a+bi) = (a-bi)/(a^2+b^2)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(Scalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow_i(&self, exp: i64) -> Result<Scalar> {
        if exp < 0 {
            return self.inv()?.pow_i(-exp);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    fn fmt_rational(r: &BigRational) -> String {
        if r.is_integer() {
            r.to_integer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    fn fmt_imag_magnitude(im: &BigRational) -> String {
        if im.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", Self::fmt_rational(im))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", Self::fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            if self.im.is_negative() {
                return write!(f, "-{}", Self::fmt_imag_magnitude(&(-&self.im)));
            }
            return write!(f, "{}", Self::fmt_imag_magnitude(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        let mag = if self.im.is_negative() {
            -&self.im
        } else {
            self.im.clone()
        };
        write!(
            f,
            "{}{}{}",
            Self::fmt_rational(&self.re),
            sign,
            Self::fmt_imag_magnitude(&mag)
        )
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidScalarLiteral(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Parses an imaginary term like "i", "-i", "2i", "2*i", "1/2i".
fn parse_imag(s: &str) -> Result<BigRational> {
    let body = s
        .strip_suffix('i')
        .ok_or_else(|| Error::InvalidScalarLiteral(s.to_string()))?;
    let body = body.strip_suffix('*').unwrap_or(body);
    match body {
        "" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        "+" => Ok(BigRational::one()),
        other => parse_rational(other),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts "p/q", "p/q+r/s i", "p/q+r/s*i", "i", "-i", "2i" and the like.
    /// Decimal literals are rejected: there is no inexact mode.
    fn from_str(raw: &str) -> Result<Scalar> {
        let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s.contains('.') {
            return Err(Error::InvalidScalarLiteral(raw.to_string()));
        }
        if !s.ends_with('i') {
            return Ok(Scalar::new(parse_rational(&s)?, BigRational::zero()));
        }
        // Split off a trailing imaginary term at the last top-level sign.
        let bytes = s.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-')
                && bytes[idx - 1] as char != '/'
                && bytes[idx - 1] as char != '*'
            {
                split = Some(idx);
                break;
            }
        }
        match split {
            None => Ok(Scalar::new(BigRational::zero(), parse_imag(&s)?)),
            Some(idx) => {
                let (re_part, im_part) = s.split_at(idx);
                let sign = if im_part.starts_with('-') { -1 } else { 1 };
                let mag = parse_imag(&im_part[1..])?;
                Ok(Scalar::new(
                    parse_rational(re_part)?,
                    if sign < 0 { -mag } else { mag },
                ))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Scalar {
    re: &a.re + &b.re,
    im: &a.im + &b.im
});
forward_binop!(Sub, sub, |a, b| Scalar {
    re: &a.re - &b.re,
    im: &a.im - &b.im
});
forward_binop!(Mul, mul, |a, b| Scalar {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});
forward_binop!(Div, div, |a, b| a.checked_div(b).expect(
    "scalar division by zero; use checked_div for fallible division"
));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_identity() {
        // (1/2 + i)(1/2 - i) = 1/4 + 1 = 5/4
        let a = Scalar::gaussian(1, 2, 1, 1);
        let b = Scalar::gaussian(1, 2, -1, 1);
        assert_eq!(&a * &b, Scalar::ratio(5, 4));
    }

    #[test]
    fn rational_addition() {
        assert_eq!(
            Scalar::ratio(2, 3) + Scalar::ratio(1, 6),
            Scalar::ratio(5, 6)
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_of_gaussian() {
        let z = Scalar::gaussian(1, 1, 2, 1); // 1 + 2i
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Scalar::one());
    }

    #[test]
    fn integer_powers() {
        let q = Scalar::ratio(1, 2);
        assert_eq!(q.pow_i(3).unwrap(), Scalar::ratio(1, 8));
        assert_eq!(q.pow_i(-2).unwrap(), Scalar::from_int(4));
        assert_eq!(q.pow_i(0).unwrap(), Scalar::one());
        assert!(Scalar::zero().pow_i(-1).is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in [
            Scalar::zero(),
            Scalar::from_int(-7),
            Scalar::ratio(3, 2),
            Scalar::i(),
            -Scalar::i(),
            Scalar::gaussian(1, 2, 1, 3),
            Scalar::gaussian(-2, 1, -1, 1),
            Scalar::gaussian(0, 1, -5, 4),
        ] {
            let printed = s.to_string();
            let back: Scalar = printed.parse().unwrap();
            assert_eq!(back, s, "failed round-trip through {printed:?}");
        }
    }

    #[test]
    fn parse_accepts_both_imag_spellings() {
        let with_space: Scalar = "1/2+1/3 i".parse().unwrap();
        let with_star: Scalar = "1/2+1/3*i".parse().unwrap();
        assert_eq!(with_space, with_star);
        assert_eq!(with_space, Scalar::gaussian(1, 2, 1, 3));
        let neg: Scalar = "-i".parse().unwrap();
        assert_eq!(neg, -Scalar::i());
        let plain: Scalar = "2i".parse().unwrap();
        assert_eq!(plain, Scalar::from_int(2) * Scalar::i());
    }

    #[test]
    fn parse_rejects_decimals_and_garbage() {
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x+i".parse::<Scalar>().is_err());
    }

    #[test]
    fn as_integer_detects_integers() {
        assert_eq!(Scalar::from_int(-3).as_integer(), Some(BigInt::from(-3)));
        assert_eq!(Scalar::ratio(1, 2).as_integer(), None);
        assert_eq!(Scalar::i().as_integer(), None);
    }
}
