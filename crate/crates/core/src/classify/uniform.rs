//! The four-parameter normal form: translations set a0 = b0 = 0, dilations
//! set a1 = d1 = 1, leaving (a2, b1, b2, d2) as the essential parameters.

use crate::classify::seqspec::SeqSpecQ1;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Essential parameters of a normalized q = 1 spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformParams {
    pub a2: Scalar,
    pub b1: Scalar,
    pub b2: Scalar,
    pub d2: Scalar,
}

impl UniformParams {
    /// The implied cubic and quartic g-coefficients.
    pub fn d3(&self) -> Scalar {
        let two = Scalar::from_int(2);
        &(&self.b2 + &(&self.a2 * &self.b1)) - &(&two * &(&self.a2 * &self.b2))
    }

    pub fn d4(&self) -> Scalar {
        &self.a2 * &self.b2
    }
}

/// Applies the two translations (a0 := 0, b0 := 0) and the two dilations
/// (a1 := 1, d1 := 1). Requires a1 and d1 nonzero; the degenerate bottom
/// box of the scheme (and g-data with no linear term) cannot be normalized.
pub fn normalize_uniform(s: &SeqSpecQ1) -> Result<UniformParams> {
    if s.a(1).is_zero() {
        return Err(Error::NotNormalizable(
            "a1 = 0 cannot be scaled to 1".into(),
        ));
    }
    if s.d(1).is_zero() {
        return Err(Error::NotNormalizable(
            "d1 = 0 cannot be scaled to 1".into(),
        ));
    }
    // h,g-dilation by 1/a1 makes a1 = 1 and sends d_i to d_i/a1; the
    // x,g-dilation by a1/d1 then makes d1 = 1 and sends b_i to b_i a1/d1.
    let a1_inv = s.a(1).inv()?;
    let d1_inv = s.d(1).inv()?;
    let x_factor = s.a(1) * &d1_inv;
    Ok(UniformParams {
        a2: s.a(2) * &a1_inv,
        b1: s.b(1) * &x_factor,
        b2: s.b(2) * &x_factor,
        d2: s.d(2) * &d1_inv,
    })
}

/// The normalized spec with a0 = b0 = 0, a1 = d1 = 1 and the implied
/// (d3, d4); it satisfies the recurrence constraints by construction.
pub fn reconstruct_spec(p: &UniformParams) -> SeqSpecQ1 {
    SeqSpecQ1::new(
        [Scalar::zero(), Scalar::one(), p.a2.clone()],
        [Scalar::zero(), p.b1.clone(), p.b2.clone()],
        [Scalar::one(), p.d2.clone(), p.d3(), p.d4()],
    )
    .expect("a1 = 1 and d1 = 1 make the spec structurally valid")
}

/// The uniform hypergeometric sum
///
/// U_n(x) = sum_{k=0}^n (-n)_k / k! *
///   prod_{j=0}^{k-1} (a2 (n+j) + 1)(b2 j^2 + b1 j - x)
///           / (d4 (j+1)^3 + d3 (j+1)^2 + d2 (j+1) + 1)
///
/// where each denominator factor is g_{j+1}/(j+1) of the normalized spec.
pub fn uniform_u(n: usize, p: &UniformParams, at: &Scalar) -> Result<Scalar> {
    let d3 = p.d3();
    let d4 = p.d4();
    let one = Scalar::one();
    let mut sum = Scalar::zero();
    let mut term = Scalar::one();
    for k in 0..=n {
        sum = &sum + &term;
        if k == n {
            break;
        }
        let j = Scalar::from_int(k as i64);
        let jp1 = Scalar::from_int(k as i64 + 1);
        let n_s = Scalar::from_int(n as i64);
        let den = &(&(&(&d4 * &jp1) + &d3) * &jp1 + &p.d2) * &jp1 + &one;
        if den.is_zero() {
            return Err(Error::ZeroDenominatorInProduct {
                factor_index: k + 1,
            });
        }
        // (-n)_k / k! advances by (k - n)/(k + 1).
        let pochhammer_step = (&j - &n_s).checked_div(&jp1)?;
        let top = &(&(&p.a2 * &(&n_s + &j)) + &one) * &(&(&(&p.b2 * &j) + &p.b1) * &j - at);
        term = &(&term * &pochhammer_step) * &top.checked_div(&den)?;
    }
    Ok(sum)
}
