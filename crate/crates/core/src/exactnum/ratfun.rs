//! Reduced rational functions, the carrier for q-dependent data in the
//! limit engine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Scalar, Var};

/// num/den with gcd(num, den) = 1 and den monic. Equality of values is
/// equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Builds and reduces num/den. Errors when den is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.var() != den.var() {
            return Err(Error::VariableMismatch {
                left: num.var().name(),
                right: den.var().name(),
            });
        }
        if num.is_zero() {
            return Ok(RatFun {
                num,
                den: Poly::one(den.var()),
            });
        }
        let g = Poly::gcd_monic(&num, &den)?;
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            let (n, _) = num.div_rem(&g)?;
            let (d, _) = den.div_rem(&g)?;
            (n, d)
        };
        let lead_inv = den.leading().unwrap().inv()?;
        Ok(RatFun {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: Poly) -> RatFun {
        let var = p.var();
        RatFun {
            num: p,
            den: Poly::one(var),
        }
    }

    pub fn constant(var: Var, c: Scalar) -> RatFun {
        RatFun::from_poly(Poly::constant(var, c))
    }

    pub fn zero(var: Var) -> RatFun {
        RatFun::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> RatFun {
        RatFun::from_poly(Poly::one(var))
    }

    /// Integer power of the variable; negative exponents give 1/var^|m|.
    pub fn var_pow(var: Var, exp: i64) -> RatFun {
        if exp >= 0 {
            RatFun::from_poly(Poly::monomial(var, Scalar::one(), exp as usize))
        } else {
            RatFun {
                num: Poly::one(var),
                den: Poly::monomial(var, Scalar::one(), (-exp) as usize),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn try_add(&self, rhs: &RatFun) -> Result<RatFun> {
        RatFun::new(
            self.num
                .try_mul(&rhs.den)?
                .try_add(&rhs.num.try_mul(&self.den)?)?,
            self.den.try_mul(&rhs.den)?,
        )
    }

    pub fn try_sub(&self, rhs: &RatFun) -> Result<RatFun> {
        RatFun::new(
            self.num
                .try_mul(&rhs.den)?
                .try_sub(&rhs.num.try_mul(&self.den)?)?,
            self.den.try_mul(&rhs.den)?,
        )
    }

    pub fn try_mul(&self, rhs: &RatFun) -> Result<RatFun> {
        RatFun::new(self.num.try_mul(&rhs.num)?, self.den.try_mul(&rhs.den)?)
    }

    pub fn try_div(&self, rhs: &RatFun) -> Result<RatFun> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(self.num.try_mul(&rhs.den)?, self.den.try_mul(&rhs.num)?)
    }

    pub fn scale(&self, c: &Scalar) -> RatFun {
        RatFun::new(self.num.scale(c), self.den.clone()).expect("den unchanged")
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn pow_i(&self, exp: i64) -> Result<RatFun> {
        if exp < 0 {
            return self.inv()?.pow_i(-exp);
        }
        let mut acc = RatFun::one(self.var());
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Exact value of the reduced function; errors when the reduced
    /// denominator vanishes at the point.
    pub fn eval(&self, at: &Scalar) -> Result<Scalar> {
        let den = self.den.eval(at);
        if den.is_zero() {
            return Err(Error::PoleAtPoint(at.to_string()));
        }
        self.num.eval(at).checked_div(&den)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        self.try_add(rhs)
            .expect("rational function addition failed")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.try_sub(rhs)
            .expect("rational function subtraction failed")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        self.try_mul(rhs)
            .expect("rational function multiplication failed")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Poly {
        Poly::monomial(Var::S, Scalar::one(), 1)
    }

    /// (1 - s^(2k)) / (1 - s^2) before reduction.
    fn q_integer(k: usize) -> RatFun {
        let num = Poly::one(Var::S)
            .try_sub(&Poly::monomial(Var::S, Scalar::one(), 2 * k))
            .unwrap();
        let den = Poly::one(Var::S)
            .try_sub(&Poly::monomial(Var::S, Scalar::one(), 2))
            .unwrap();
        RatFun::new(num, den).unwrap()
    }

    #[test]
    fn factor_cancellation() {
        // (s^2 - 1)/(s - 1) = s + 1
        let num = &(&s() * &s()) - &Poly::one(Var::S);
        let den = &s() - &Poly::one(Var::S);
        let f = RatFun::new(num, den).unwrap();
        assert_eq!(f.num(), &(&s() + &Poly::one(Var::S)));
        assert_eq!(f.den(), &Poly::one(Var::S));
    }

    #[test]
    fn q_integer_reduction_at_k2() {
        // (1 - s^4)/(1 - s^2) reduces to s^2 + 1.
        let f = q_integer(2);
        let want = &(&s() * &s()) + &Poly::one(Var::S);
        assert_eq!(f.num(), &want);
        assert!(f.den().is_monic() && f.den().degree() == Some(0));
    }

    #[test]
    fn zero_numerator() {
        let den = &s() - &Poly::one(Var::S);
        let f = RatFun::new(Poly::zero(Var::S), den).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.eval(&Scalar::from_int(7)).unwrap(), Scalar::zero());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(
            RatFun::new(Poly::one(Var::S), Poly::zero(Var::S)),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn q_integer_limits() {
        // After cancellation the value at s = 1 is k.
        for k in 1..=12usize {
            let f = q_integer(k);
            assert_eq!(f.eval(&Scalar::one()).unwrap(), Scalar::from_int(k as i64));
        }
    }

    #[test]
    fn q_integer_limit_agrees_with_approach_from_both_sides() {
        // Independent route to the k = 3 value: after reduction, the
        // function is continuous at 1, so evaluating at s = 1 +- 1/10^m
        // must approach 3. All arithmetic stays exact.
        let f = q_integer(3);
        let three = Scalar::from_int(3);
        assert_eq!(f.eval(&Scalar::one()).unwrap(), three);
        let mut last_gap: Option<Scalar> = None;
        for m in 1..=6 {
            let eps = Scalar::ratio(1, 10i64.pow(m));
            for s in [&Scalar::one() + &eps, &Scalar::one() - &eps] {
                let gap = &f.eval(&s).unwrap() - &three;
                let gap_sq = &gap * &gap; // nonnegative rational
                if let Some(prev) = &last_gap {
                    assert!(gap_sq.re() < prev.re(), "not shrinking at m = {m}");
                }
                last_gap = Some(gap_sq);
            }
        }
    }

    #[test]
    fn pole_detected_after_reduction() {
        let num = &s() + &Poly::one(Var::S);
        let den = &s() - &Poly::one(Var::S);
        let f = RatFun::new(num, den).unwrap();
        assert!(matches!(f.eval(&Scalar::one()), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn constant_evaluates_everywhere() {
        let f = RatFun::constant(Var::S, Scalar::from_int(5));
        assert_eq!(
            f.eval(&Scalar::gaussian(3, 7, 1, 2)).unwrap(),
            Scalar::from_int(5)
        );
    }

    #[test]
    fn field_ops_reduce() {
        let a = RatFun::var_pow(Var::S, -2); // 1/s^2
        let b = RatFun::var_pow(Var::S, 3);
        let prod = a.try_mul(&b).unwrap(); // s
        assert_eq!(prod, RatFun::var_pow(Var::S, 1));
        let sum = a.try_add(&(&RatFun::one(Var::S) - &a)).unwrap();
        assert_eq!(sum, RatFun::one(Var::S));
        let quot = b.try_div(&b).unwrap();
        assert_eq!(quot, RatFun::one(Var::S));
    }

    #[test]
    fn reduction_is_idempotent() {
        let f = q_integer(5);
        let again = RatFun::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }
}
