//! Coefficient specs for the data sequences: the q = 1 polynomial form and
//! the q-Laurent form, their structural constraints, and the general
//! two-constraint theorem that characterizes the three-term recurrence.

use crate::classify::degrees::{BidegreeTriple, DegreeTriple};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::spectral::TripleData;

/// Identifier of one of the essential uniform parameters (a1 matters only
/// for the degenerate bottom box of the scheme).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum UniformParamId {
    A1,
    A2,
    B1,
    B2,
    D2,
}

impl UniformParamId {
    pub fn name(self) -> &'static str {
        match self {
            UniformParamId::A1 => "a1",
            UniformParamId::A2 => "a2",
            UniformParamId::B1 => "b1",
            UniformParamId::B2 => "b2",
            UniformParamId::D2 => "d2",
        }
    }
}

/// q = 1 form: h_k = a0 + a1 k + a2 k^2, x_k = b0 + b1 k + b2 k^2,
/// g_k = d1 k + d2 k^2 + d3 k^3 + d4 k^4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqSpecQ1 {
    a: [Scalar; 3],
    b: [Scalar; 3],
    d: [Scalar; 4],
}

impl SeqSpecQ1 {
    /// Requires a nonconstant h (a1 or a2 nonzero) and a nonzero g.
    pub fn new(a: [Scalar; 3], b: [Scalar; 3], d: [Scalar; 4]) -> Result<SeqSpecQ1> {
        if a[1].is_zero() && a[2].is_zero() {
            return Err(Error::InvalidSpec("a1 = a2 = 0 makes h_k constant".into()));
        }
        if d.iter().all(Scalar::is_zero) {
            return Err(Error::InvalidSpec("all g-coefficients vanish".into()));
        }
        Ok(SeqSpecQ1 { a, b, d })
    }

    pub fn from_ints(a: [i64; 3], b: [i64; 3], d: [i64; 4]) -> Result<SeqSpecQ1> {
        SeqSpecQ1::new(
            a.map(Scalar::from_int),
            b.map(Scalar::from_int),
            d.map(Scalar::from_int),
        )
    }

    pub fn a(&self, i: usize) -> &Scalar {
        &self.a[i]
    }

    pub fn b(&self, i: usize) -> &Scalar {
        &self.b[i]
    }

    /// d_i for i in 1..=4.
    pub fn d(&self, i: usize) -> &Scalar {
        &self.d[i - 1]
    }

    pub fn h_at(&self, k: i64) -> Scalar {
        let k = Scalar::from_int(k);
        &self.a[0] + &(&k * &(&self.a[1] + &(&k * &self.a[2])))
    }

    pub fn x_at(&self, k: i64) -> Scalar {
        let k = Scalar::from_int(k);
        &self.b[0] + &(&k * &(&self.b[1] + &(&k * &self.b[2])))
    }

    pub fn g_at(&self, k: i64) -> Scalar {
        let k = Scalar::from_int(k);
        let inner = &self.d[0] + &(&k * &(&self.d[1] + &(&k * &(&self.d[2] + &(&k * &self.d[3])))));
        &k * &inner
    }

    /// Evaluates the sequences for k = 0..=depth; fails when two
    /// eigenvalues collide within that range.
    pub fn evaluate(&self, depth: usize) -> Result<TripleData> {
        TripleData::new(
            (0..=depth as i64).map(|k| self.h_at(k)).collect(),
            (0..=depth as i64).map(|k| self.x_at(k)).collect(),
            (1..=depth as i64).map(|k| self.g_at(k)).collect(),
        )
    }

    /// The two closed-form constraints equivalent to the three-term
    /// recurrence for this shape of data:
    /// d3 = a1 b2 + a2 b1 - 2 a2 b2 and d4 = a2 b2.
    pub fn check_q1_constraints(&self) -> bool {
        let two = Scalar::from_int(2);
        let d3 = &(&(&self.a[1] * &self.b[2]) + &(&self.a[2] * &self.b[1]))
            - &(&two * &(&self.a[2] * &self.b[2]));
        let d4 = &self.a[2] * &self.b[2];
        *self.d(3) == d3 && *self.d(4) == d4
    }

    /// Highest indices carrying nonzero coefficients, validated against the
    /// scheme rules.
    pub fn degree_triple(&self) -> Result<DegreeTriple> {
        let dh = if !self.a[2].is_zero() { 2 } else { 1 };
        let dx = if !self.b[2].is_zero() {
            2
        } else if !self.b[1].is_zero() {
            1
        } else {
            0
        };
        let dg = (1..=4)
            .rev()
            .find(|&i| !self.d(i).is_zero())
            .expect("some d is nonzero");
        DegreeTriple::new(dx, dg as u8, dh)
    }

    /// Which of (a1, a2, b1, b2, d2) vanish.
    pub fn vanishing_pattern(&self) -> Vec<UniformParamId> {
        let mut zeros = Vec::new();
        if self.a[1].is_zero() {
            zeros.push(UniformParamId::A1);
        }
        if self.a[2].is_zero() {
            zeros.push(UniformParamId::A2);
        }
        if self.b[1].is_zero() {
            zeros.push(UniformParamId::B1);
        }
        if self.b[2].is_zero() {
            zeros.push(UniformParamId::B2);
        }
        if self.d(2).is_zero() {
            zeros.push(UniformParamId::D2);
        }
        zeros
    }

    /// Dilation h_k -> rho h_k, g_k -> rho g_k.
    pub fn scale_h(&self, rho: &Scalar) -> Result<SeqSpecQ1> {
        if rho.is_zero() {
            return Err(Error::InvalidSpec("dilation factor must be nonzero".into()));
        }
        SeqSpecQ1::new(
            self.a.clone().map(|c| &c * rho),
            self.b.clone(),
            self.d.clone().map(|c| &c * rho),
        )
    }

    /// Translation h_k -> h_k + sigma.
    pub fn shift_h(&self, sigma: &Scalar) -> SeqSpecQ1 {
        let mut a = self.a.clone();
        a[0] = &a[0] + sigma;
        SeqSpecQ1 {
            a,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Dilation x_k -> rho x_k, g_k -> rho g_k.
    pub fn scale_x(&self, rho: &Scalar) -> Result<SeqSpecQ1> {
        if rho.is_zero() {
            return Err(Error::InvalidSpec("dilation factor must be nonzero".into()));
        }
        SeqSpecQ1::new(
            self.a.clone(),
            self.b.clone().map(|c| &c * rho),
            self.d.clone().map(|c| &c * rho),
        )
    }

    /// Translation x_k -> x_k + sigma.
    pub fn shift_x(&self, sigma: &Scalar) -> SeqSpecQ1 {
        let mut b = self.b.clone();
        b[0] = &b[0] + sigma;
        SeqSpecQ1 {
            a: self.a.clone(),
            b,
            d: self.d.clone(),
        }
    }

    /// Returns a copy with d_i replaced by d_i + 1 (for fault injection).
    pub fn with_g_coefficient_bumped(&self, i: usize) -> Result<SeqSpecQ1> {
        assert!((1..=4).contains(&i), "g-coefficients are d1..d4");
        let mut d = self.d.clone();
        d[i - 1] = &d[i - 1] + &Scalar::one();
        SeqSpecQ1::new(self.a.clone(), self.b.clone(), d)
    }
}

/// q-Laurent form: `h_k = a(-1) q^-k + a(0) + a(1) q^k`, likewise x_k, and
/// `g_k = sum_{i=-2..2} d(i) q^{ik}` with zero coefficient sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqSpecQ {
    q: Scalar,
    /// a[-1], a[0], a[1] stored at indices 0, 1, 2.
    a: [Scalar; 3],
    b: [Scalar; 3],
    /// d[-2]..d[2] stored at indices 0..=4.
    d: [Scalar; 5],
}

impl SeqSpecQ {
    pub fn new(q: Scalar, a: [Scalar; 3], b: [Scalar; 3], d: [Scalar; 5]) -> Result<SeqSpecQ> {
        if q.is_zero() {
            return Err(Error::InvalidSpec("q must be nonzero".into()));
        }
        if d.iter().all(Scalar::is_zero) {
            return Err(Error::InvalidSpec("all g-coefficients vanish".into()));
        }
        let sum = d.iter().fold(Scalar::zero(), |acc, c| &acc + c);
        if !sum.is_zero() {
            return Err(Error::InvalidSpec("g-coefficients must sum to zero".into()));
        }
        Ok(SeqSpecQ { q, a, b, d })
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    /// a_i for i in -1..=1.
    pub fn a(&self, i: i32) -> &Scalar {
        &self.a[(i + 1) as usize]
    }

    /// b_i for i in -1..=1.
    pub fn b(&self, i: i32) -> &Scalar {
        &self.b[(i + 1) as usize]
    }

    /// d_i for i in -2..=2.
    pub fn d(&self, i: i32) -> &Scalar {
        &self.d[(i + 2) as usize]
    }

    pub fn h_at(&self, k: i64) -> Scalar {
        let qk = self.q.pow_i(k).expect("q is nonzero");
        let qmk = self.q.pow_i(-k).expect("q is nonzero");
        &(&(self.a(-1) * &qmk) + self.a(0)) + &(self.a(1) * &qk)
    }

    pub fn x_at(&self, k: i64) -> Scalar {
        let qk = self.q.pow_i(k).expect("q is nonzero");
        let qmk = self.q.pow_i(-k).expect("q is nonzero");
        &(&(self.b(-1) * &qmk) + self.b(0)) + &(self.b(1) * &qk)
    }

    pub fn g_at(&self, k: i64) -> Scalar {
        let mut acc = Scalar::zero();
        for i in -2..=2i64 {
            let qik = self.q.pow_i(i * k).expect("q is nonzero");
            acc = &acc + &(self.d(i as i32) * &qik);
        }
        acc
    }

    /// Evaluates for k = 0..=depth. Eigenvalue collisions (which also catch
    /// roots of unity within range) are the operative nondegeneracy check.
    pub fn evaluate(&self, depth: usize) -> Result<TripleData> {
        for m in 1..=depth as i64 {
            if self.q.pow_i(m).expect("q is nonzero").is_one() {
                return Err(Error::InvalidSpec(format!(
                    "q is a root of unity of order {m} within the working depth"
                )));
            }
        }
        TripleData::new(
            (0..=depth as i64).map(|k| self.h_at(k)).collect(),
            (0..=depth as i64).map(|k| self.x_at(k)).collect(),
            (1..=depth as i64).map(|k| self.g_at(k)).collect(),
        )
    }

    /// The q-case closed-form constraints: d2 = a1 b1 / q and
    /// d[-2] = q a[-1] b[-1], together with the zero coefficient sum.
    pub fn check_q_constraints(&self) -> bool {
        let d2 = &(self.a(1) * self.b(1)) * &self.q.inv().expect("q is nonzero");
        let dm2 = &(self.a(-1) * self.b(-1)) * &self.q;
        let sum = (-2..=2).fold(Scalar::zero(), |acc, i| &acc + self.d(i));
        *self.d(2) == d2 && *self.d(-2) == dm2 && sum.is_zero()
    }

    /// Laurent boundary indices of the nonzero coefficients.
    pub fn bidegree_triple(&self) -> Result<BidegreeTriple> {
        let bounds_ab = |c: &[Scalar; 3]| -> (i8, i8) {
            let lo = if !c[0].is_zero() { -1 } else { 0 };
            let hi = if !c[2].is_zero() { 1 } else { 0 };
            (lo, hi)
        };
        let x = bounds_ab(&self.b);
        let h = bounds_ab(&self.a);
        let lo_g = (-2..=2)
            .find(|&i| !self.d(i).is_zero())
            .expect("some d is nonzero") as i8;
        let hi_g = (-2..=2)
            .rev()
            .find(|&i| !self.d(i).is_zero())
            .expect("some d is nonzero") as i8;
        BidegreeTriple::new(x, (lo_g, hi_g), h)
    }
}

/// The unique (g_3, g_4) for which the monic system satisfies a three-term
/// recurrence, given the first values of the sequences and the difference
/// parameter xi:
///
/// g3 = xi ((x2-x0)(h2-h0) - (x1-x0)(h2-h0) - (x2-x0)(h1-h0) + g2 - g1)
/// g4 = xi(xi-1) ( (xi+1)((x1-x0)(h1-h0) - (x1-x0)(h2-h0) - (x2-x0)(h1-h0))
///      + xi (x2-x0)(h2-h0) + g2 ) + (1-xi^2) g1
pub fn general_constraints(
    h: [&Scalar; 3],
    x: [&Scalar; 3],
    g1: &Scalar,
    g2: &Scalar,
    xi: &Scalar,
) -> Result<(Scalar, Scalar)> {
    if xi.is_zero() {
        return Err(Error::ZeroXi);
    }
    let one = Scalar::one();
    let dx1 = x[1] - x[0];
    let dx2 = x[2] - x[0];
    let dh1 = h[1] - h[0];
    let dh2 = h[2] - h[0];

    let g3_inner = &(&(&(&dx2 * &dh2) - &(&dx1 * &dh2)) - &(&dx2 * &dh1)) + &(g2 - g1);
    let g3 = xi * &g3_inner;

    let bracket = &(&(&dx1 * &dh1) - &(&dx1 * &dh2)) - &(&dx2 * &dh1);
    let mut inner = &(xi + &one) * &bracket;
    inner = &inner + &(xi * &(&dx2 * &dh2));
    inner = &inner + g2;
    let g4 = &(&(xi * &(xi - &one)) * &inner) + &(&(&one - &(xi * xi)) * g1);
    Ok((g3, g4))
}
