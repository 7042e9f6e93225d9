//! Dense univariate polynomials over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Formal variable label. Polynomials in different variables never mix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    /// Argument of the constructed polynomials u_n, v_k.
    X,
    /// Sequence index, for data given as polynomials in k.
    K,
    /// Limit variable with q = s^2.
    S,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::K => "k",
            Var::S => "s",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense polynomial: `coeffs[k]` multiplies the k-th power of the variable.
///
/// Canonical form never stores a trailing zero coefficient; the zero
/// polynomial has an empty coefficient list and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn from_coeffs(var: Var, coeffs: Vec<Scalar>) -> Self {
        let mut p = Poly { var, coeffs };
        p.trim();
        p
    }

    pub fn zero(var: Var) -> Self {
        Poly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Scalar::one())
    }

    pub fn constant(var: Var, c: Scalar) -> Self {
        Poly::from_coeffs(var, vec![c])
    }

    /// c times the k-th power of the variable.
    pub fn monomial(var: Var, c: Scalar, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Poly { var, coeffs }
    }

    /// The monic linear factor (var - root).
    pub fn linear_from_root(var: Var, root: &Scalar) -> Self {
        Poly::from_coeffs(var, vec![-root, Scalar::one()])
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the k-th power (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some(c) if c.is_one())
    }

    fn check_var(&self, other: &Poly) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch {
                left: self.var.name(),
                right: other.var.name(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * at + c;
        }
        acc
    }

    /// p(a·var + b), used to track the dilation/translation symmetries.
    pub fn compose_affine(&self, a: &Scalar, b: &Scalar) -> Poly {
        let inner = Poly::from_coeffs(self.var, vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(self.var, c.clone());
        }
        acc
    }

    /// Euclidean division: self = q·div + r with deg r < deg div.
    pub fn div_rem(&self, div: &Poly) -> Result<(Poly, Poly)> {
        self.check_var(div)?;
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = div.degree().unwrap();
        let lead_inv = div.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.var);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let shift = rd - dd;
            let term = Poly::monomial(self.var, factor, shift);
            rem = rem.try_sub(&term.try_mul(div)?)?;
            quot = quot.try_add(&term)?;
        }
        Ok((quot, rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd_monic(a: &Poly, b: &Poly) -> Result<Poly> {
        a.check_var(b)?;
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let inv = a.leading().unwrap().inv()?;
        Ok(a.scale(&inv))
    }

    fn fmt_term(coeff: &Scalar, var: Var, power: usize) -> (char, String) {
        // Sign is extracted when the coefficient is purely real or purely
        // imaginary; mixed complex coefficients print in parentheses.
        use num_traits::{Signed as _, Zero as _};
        let (sign, mag) = if coeff.is_real() {
            if coeff.re().is_negative() {
                ('-', -coeff)
            } else {
                ('+', coeff.clone())
            }
        } else if coeff.re().is_zero() {
            if coeff.im().is_negative() {
                ('-', -coeff)
            } else {
                ('+', coeff.clone())
            }
        } else {
            ('+', coeff.clone())
        };
        let var_part = match power {
            0 => String::new(),
            1 => var.name().to_string(),
            p => format!("{var}^{p}"),
        };
        let mag_str = if power == 0 {
            if mag.is_real() || mag.re().is_zero() {
                mag.to_string()
            } else {
                format!("({mag})")
            }
        } else if mag.is_one() {
            var_part.clone()
        } else if mag.is_real() && mag.re().is_integer() {
            format!("{mag}{var_part}")
        } else {
            format!("({mag}){var_part}")
        };
        let body = if power == 0 {
            mag_str
        } else if mag.is_one() {
            var_part
        } else {
            mag_str
        };
        (sign, body)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (sign, body) = Poly::fmt_term(c, self.var, k);
            if first {
                if sign == '-' {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial variable mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial variable mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}
