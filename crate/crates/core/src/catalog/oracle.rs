//! Independent hypergeometric oracles.
//!
//! Each family's normalized polynomial U_n is also a terminating
//! hypergeometric series in the classical parametrization. The sums below
//! are built from shifted-factorial coefficients of those series — not from
//! the data sequences or Newton coefficients — so agreement with the
//! spectral construction is a genuine cross-check of the catalog data.

use super::{get, Family, Params};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Rising factorial (base)_k = base (base+1) ... (base+k-1).
fn poch(base: &Scalar, k: usize) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..k {
        acc = &acc * &(base + &Scalar::from_int(j as i64));
    }
    acc
}

/// Division with vanishing denominators mapped to OracleUnavailable: the
/// classical series is undefined at such parameter points.
fn div_or_unavailable(num: Scalar, den: Scalar, family: &str) -> Result<Scalar> {
    num.checked_div(&den).map_err(|_| {
        Error::OracleUnavailable(format!(
            "{family}: a lower shifted factorial vanishes at these parameters"
        ))
    })
}

/// Evaluates the family's classical terminating series for U_n at a point.
///
/// The value matches `spectral::hypergeometric_u` on the family's data
/// triple; the normalization constant k_n never enters (U_n is
/// normalization-free).
pub fn kls_oracle(family: Family, params: &Params, n: usize, at: &Scalar) -> Result<Scalar> {
    let one = Scalar::one();
    let i = Scalar::i();
    let minus_n = Scalar::from_int(-(n as i64));

    // Per-family series data: coefficient c_k and node x_j with
    // U_n(at) = sum_k c_k prod_{j<k} (at - x_j).
    let node: Box<dyn Fn(i64) -> Scalar>;
    let coeff: Box<dyn Fn(usize) -> Result<Scalar>>;

    match family {
        Family::Wilson => {
            let (a, b, c, d) = (
                get(params, "a")?.clone(),
                get(params, "b")?.clone(),
                get(params, "c")?.clone(),
                get(params, "d")?.clone(),
            );
            let s = &(&a + &b) + &(&c + &d);
            let rising = &(Scalar::from_int(n as i64) + &s) - &one;
            let a0 = a.clone();
            node = Box::new(move |j| {
                let aj = &a0 + &Scalar::from_int(j);
                -(&aj * &aj)
            });
            coeff = Box::new(move |k| {
                let num = &poch(&minus_n, k) * &poch(&rising, k);
                let den = &(&poch(&(&a + &b), k) * &poch(&(&a + &c), k))
                    * &(&poch(&(&a + &d), k) * &poch(&one, k));
                div_or_unavailable(num, den, "wilson")
            });
        }
        Family::Racah => {
            let (alpha, beta, gamma, delta) = (
                get(params, "alpha")?.clone(),
                get(params, "beta")?.clone(),
                get(params, "gamma")?.clone(),
                get(params, "delta")?.clone(),
            );
            let rising = &(&(Scalar::from_int(n as i64) + &alpha) + &beta) + &one;
            let gd1 = &(&gamma + &delta) + &one;
            node = Box::new(move |j| {
                let j = Scalar::from_int(j);
                &j * &(&j + &gd1)
            });
            let (ap1, bd1, gp1) = (&alpha + &one, &(&beta + &delta) + &one, &gamma + &one);
            coeff = Box::new(move |k| {
                let sign = Scalar::from_int(if k % 2 == 0 { 1 } else { -1 });
                let num = &(&sign * &poch(&minus_n, k)) * &poch(&rising, k);
                let den = &(&poch(&ap1, k) * &poch(&bd1, k)) * &(&poch(&gp1, k) * &poch(&one, k));
                div_or_unavailable(num, den, "racah")
            });
        }
        Family::ContinuousDualHahn => {
            let (a, b, c) = (
                get(params, "a")?.clone(),
                get(params, "b")?.clone(),
                get(params, "c")?.clone(),
            );
            let a0 = a.clone();
            node = Box::new(move |j| {
                let aj = &a0 + &Scalar::from_int(j);
                -(&aj * &aj)
            });
            coeff = Box::new(move |k| {
                let num = poch(&minus_n, k);
                let den = &(&poch(&(&a + &b), k) * &poch(&(&a + &c), k)) * &poch(&one, k);
                div_or_unavailable(num, den, "continuous-dual-hahn")
            });
        }
        Family::DualHahn => {
            let (gamma, delta) = (get(params, "gamma")?.clone(), get(params, "delta")?.clone());
            let n_param = get(params, "N")?.clone();
            let gd1 = &(&gamma + &delta) + &one;
            node = Box::new(move |j| {
                let j = Scalar::from_int(j);
                &j * &(&j + &gd1)
            });
            let gp1 = &gamma + &one;
            coeff = Box::new(move |k| {
                let sign = Scalar::from_int(if k % 2 == 0 { 1 } else { -1 });
                let num = &sign * &poch(&minus_n, k);
                let den = &(&poch(&gp1, k) * &poch(&-&n_param, k)) * &poch(&one, k);
                div_or_unavailable(num, den, "dual-hahn")
            });
        }
        Family::ContinuousHahn => {
            let (a, b, c, d) = (
                get(params, "a")?.clone(),
                get(params, "b")?.clone(),
                get(params, "c")?.clone(),
                get(params, "d")?.clone(),
            );
            let s = &(&a + &b) + &(&c + &d);
            let rising = &(Scalar::from_int(n as i64) + &s) - &one;
            let a0 = a.clone();
            let i0 = i.clone();
            node = Box::new(move |j| &i0 * &(&a0 + &Scalar::from_int(j)));
            coeff = Box::new(move |k| {
                let num = &(&i.pow_i(k as i64).expect("i is nonzero") * &poch(&minus_n, k))
                    * &poch(&rising, k);
                let den = &(&poch(&(&a + &c), k) * &poch(&(&a + &d), k)) * &poch(&one, k);
                div_or_unavailable(num, den, "continuous-hahn")
            });
        }
        Family::Hahn => {
            let (alpha, beta) = (get(params, "alpha")?.clone(), get(params, "beta")?.clone());
            let n_param = get(params, "N")?.clone();
            let rising = &(&(Scalar::from_int(n as i64) + &alpha) + &beta) + &one;
            node = Box::new(Scalar::from_int);
            let ap1 = &alpha + &one;
            coeff = Box::new(move |k| {
                let sign = Scalar::from_int(if k % 2 == 0 { 1 } else { -1 });
                let num = &(&sign * &poch(&minus_n, k)) * &poch(&rising, k);
                let den = &(&poch(&ap1, k) * &poch(&-&n_param, k)) * &poch(&one, k);
                div_or_unavailable(num, den, "hahn")
            });
        }
        Family::MeixnerPollaczek => {
            let (lambda, t) = (get(params, "lambda")?.clone(), get(params, "t")?.clone());
            let lam0 = lambda.clone();
            let i0 = i.clone();
            node = Box::new(move |j| &i0 * &(&lam0 + &Scalar::from_int(j)));
            let z = &i * &(&one - &t);
            let two_lambda = &lambda + &lambda;
            coeff = Box::new(move |k| {
                let num = &z.pow_i(k as i64).expect("t differs from 1") * &poch(&minus_n, k);
                let den = &poch(&two_lambda, k) * &poch(&one, k);
                div_or_unavailable(num, den, "meixner-pollaczek")
            });
        }
        Family::Meixner => {
            let (beta, c) = (get(params, "beta")?.clone(), get(params, "c")?.clone());
            node = Box::new(Scalar::from_int);
            let z = -(&one - &c.inv()?);
            coeff = Box::new(move |k| {
                let num =
                    &z.pow_i(k as i64).unwrap_or_else(|_| Scalar::zero()) * &poch(&minus_n, k);
                let den = &poch(&beta, k) * &poch(&one, k);
                div_or_unavailable(num, den, "meixner")
            });
        }
        Family::Krawtchouk => {
            let p = get(params, "p")?.clone();
            let n_param = get(params, "N")?.clone();
            node = Box::new(Scalar::from_int);
            let z = -p.inv()?;
            coeff = Box::new(move |k| {
                let num = &z.pow_i(k as i64).expect("p is nonzero") * &poch(&minus_n, k);
                let den = &poch(&-&n_param, k) * &poch(&one, k);
                div_or_unavailable(num, den, "krawtchouk")
            });
        }
        Family::Jacobi => {
            let (alpha, beta) = (get(params, "alpha")?.clone(), get(params, "beta")?.clone());
            let rising = &(&(Scalar::from_int(n as i64) + &alpha) + &beta) + &one;
            node = Box::new(|_| Scalar::one());
            let z = Scalar::ratio(-1, 2);
            let ap1 = &alpha + &one;
            coeff = Box::new(move |k| {
                let num = &(&z.pow_i(k as i64).expect("half is nonzero") * &poch(&minus_n, k))
                    * &poch(&rising, k);
                let den = &poch(&ap1, k) * &poch(&one, k);
                div_or_unavailable(num, den, "jacobi")
            });
        }
        Family::Charlier => {
            let a = get(params, "a")?.clone();
            node = Box::new(Scalar::from_int);
            let z = a.inv()?;
            coeff = Box::new(move |k| {
                let num = &z.pow_i(k as i64).expect("a is nonzero") * &poch(&minus_n, k);
                div_or_unavailable(num, poch(&one, k), "charlier")
            });
        }
        Family::Laguerre => {
            let alpha = get(params, "alpha")?.clone();
            node = Box::new(|_| Scalar::zero());
            let ap1 = &alpha + &one;
            coeff = Box::new(move |k| {
                let num = poch(&minus_n, k);
                let den = &poch(&ap1, k) * &poch(&one, k);
                div_or_unavailable(num, den, "laguerre")
            });
        }
        Family::Bessel => {
            let a = get(params, "a")?.clone();
            let rising = &(Scalar::from_int(n as i64) + &a) + &one;
            node = Box::new(|_| Scalar::zero());
            let z = Scalar::ratio(-1, 2);
            coeff = Box::new(move |k| {
                let num = &(&z.pow_i(k as i64).expect("half is nonzero") * &poch(&minus_n, k))
                    * &poch(&rising, k);
                div_or_unavailable(num, poch(&one, k), "bessel")
            });
        }
        Family::Binomial => {
            node = Box::new(|_| Scalar::zero());
            coeff =
                Box::new(move |k| div_or_unavailable(poch(&minus_n, k), poch(&one, k), "binomial"));
        }
    }

    let mut sum = Scalar::zero();
    let mut node_product = Scalar::one();
    for k in 0..=n {
        sum = &sum + &(&coeff(k)? * &node_product);
        node_product = &node_product * &(at - &node(k as i64));
    }
    Ok(sum)
}
