//! Construction of the monic system from a data triple and verification of
//! its defining identities.
//!
//! A data triple consists of eigenvalues h_k, Newton nodes x_k and lowering
//! coefficients g_k. The operator L acts on the Newton basis v_k by
//! `L v_k = h_k v_k + g_k v_{k-1}`, and the monic eigenpolynomials are
//! `u_n = sum_k c_{n,k} v_k` with `c_{n,k} = prod_{j=k}^{n-1} g_{j+1}/(h_n - h_j)`.

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Scalar, Var};

/// Evaluated sequences h_0..h_K, x_0..x_K, g_1..g_K (g_0 = 0 by convention).
///
/// All h_k must be pairwise distinct up to the working depth; the Newton
/// coefficients divide by h_n - h_j, so a collision is a hard construction
/// error carrying the colliding indices.
#[derive(Clone, Debug)]
pub struct TripleData {
    h: Vec<Scalar>,
    x: Vec<Scalar>,
    /// g[k] is g_k; g[0] is pinned to zero.
    g: Vec<Scalar>,
}

impl TripleData {
    /// `h` and `x` hold indices 0..=K, `g_from_1` holds g_1..g_K.
    pub fn new(h: Vec<Scalar>, x: Vec<Scalar>, g_from_1: Vec<Scalar>) -> Result<TripleData> {
        assert_eq!(h.len(), x.len(), "h and x must cover the same depth");
        assert_eq!(g_from_1.len() + 1, h.len(), "g must cover indices 1..=K");
        assert!(h.len() >= 2, "need depth K >= 1");
        for i in 0..h.len() {
            for j in (i + 1)..h.len() {
                if h[i] == h[j] {
                    return Err(Error::EigenvalueCollision { i, j });
                }
            }
        }
        let mut g = Vec::with_capacity(h.len());
        g.push(Scalar::zero());
        g.extend(g_from_1);
        Ok(TripleData { h, x, g })
    }

    /// Working depth K (sequences are defined for indices 0..=K).
    pub fn depth(&self) -> usize {
        self.h.len() - 1
    }

    pub fn h(&self, k: usize) -> &Scalar {
        &self.h[k]
    }

    pub fn x(&self, k: usize) -> &Scalar {
        &self.x[k]
    }

    /// g_k, with g_0 = 0.
    pub fn g(&self, k: usize) -> &Scalar {
        &self.g[k]
    }

    fn check_depth(&self, requested: usize) -> Result<()> {
        if requested > self.depth() {
            return Err(Error::DepthExceeded {
                requested,
                depth: self.depth(),
            });
        }
        Ok(())
    }

    /// Smallest N with g_{N+1} = 0 within depth, if any: the system
    /// truncates to a finite family at degree N.
    pub fn effective_truncation(&self) -> Option<usize> {
        (1..=self.depth())
            .find(|&k| self.g[k].is_zero())
            .map(|k| k - 1)
    }

    /// Exchanges the h and x sequences; g is unchanged. The x-values become
    /// the new eigenvalues, so they must be pairwise distinct.
    pub fn dualize(&self) -> Result<TripleData> {
        for i in 0..self.x.len() {
            for j in (i + 1)..self.x.len() {
                if self.x[i] == self.x[j] {
                    return Err(Error::DualNotDefined { i, j });
                }
            }
        }
        Ok(TripleData {
            h: self.x.clone(),
            x: self.h.clone(),
            g: self.g.clone(),
        })
    }
}

/// Monic Newton polynomial v_k(x) = (x - x_0)...(x - x_{k-1}); v_0 = 1.
pub fn newton_basis(t: &TripleData, k: usize) -> Result<Poly> {
    t.check_depth(k)?;
    let mut p = Poly::one(Var::X);
    for j in 0..k {
        p = p.try_mul(&Poly::linear_from_root(Var::X, t.x(j)))?;
    }
    Ok(p)
}

/// Newton coefficient c_{n,k} = prod_{j=k}^{n-1} g_{j+1}/(h_n - h_j); c_{n,n} = 1.
pub fn coeff_c(t: &TripleData, n: usize, k: usize) -> Result<Scalar> {
    assert!(k <= n, "coeff_c requires k <= n");
    if n + 1 > t.depth() {
        return Err(Error::DepthExceeded {
            requested: n + 1,
            depth: t.depth(),
        });
    }
    let mut c = Scalar::one();
    for j in k..n {
        let den = t.h(n) - t.h(j);
        c = &c * &t.g(j + 1).checked_div(&den)?;
    }
    Ok(c)
}

/// The monic eigenpolynomial u_n(x) = sum_{k<=n} c_{n,k} v_k(x).
pub fn monic_u(t: &TripleData, n: usize) -> Result<Poly> {
    let mut acc = Poly::zero(Var::X);
    let mut v = Poly::one(Var::X);
    for k in 0..=n {
        acc = acc.try_add(&v.scale(&coeff_c(t, n, k)?))?;
        if k < n {
            v = v.try_mul(&Poly::linear_from_root(Var::X, t.x(k)))?;
        }
    }
    Ok(acc)
}

/// The monic polynomials u_0..u_N together with their Newton coefficients.
#[derive(Clone, Debug)]
pub struct MonicSystem {
    pub u: Vec<Poly>,
    /// `c[n][k]` = c_{n,k}, a triangular array with `c[n][n]` = 1.
    pub c: Vec<Vec<Scalar>>,
}

pub fn monic_system(t: &TripleData, n_max: usize) -> Result<MonicSystem> {
    let mut u = Vec::with_capacity(n_max + 1);
    let mut c = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        u.push(monic_u(t, n)?);
        c.push(
            (0..=n)
                .map(|k| coeff_c(t, n, k))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(MonicSystem { u, c })
}

/// The factor prod_{j<n} (h_n - h_j)/g_{j+1} with U_n = factor * u_n.
pub fn hypergeometric_factor(t: &TripleData, n: usize) -> Result<Scalar> {
    if n + 1 > t.depth() {
        return Err(Error::DepthExceeded {
            requested: n + 1,
            depth: t.depth(),
        });
    }
    let mut f = Scalar::one();
    for j in 0..n {
        if t.g(j + 1).is_zero() {
            return Err(Error::ZeroGInRange { index: j + 1 });
        }
        f = &f * &(t.h(n) - t.h(j)).checked_div(t.g(j + 1))?;
    }
    Ok(f)
}

/// Hypergeometric-normalized value
/// U_n(at) = sum_{k<=n} prod_{j<k} (h_n - h_j)(at - x_j)/g_{j+1}.
///
/// Needs g_1..g_n nonzero; a zero signals a finite-family truncation and is
/// reported as such.
pub fn hypergeometric_u(t: &TripleData, n: usize, at: &Scalar) -> Result<Scalar> {
    if n + 1 > t.depth() {
        return Err(Error::DepthExceeded {
            requested: n + 1,
            depth: t.depth(),
        });
    }
    for j in 0..n {
        if t.g(j + 1).is_zero() {
            return Err(Error::ZeroGInRange { index: j + 1 });
        }
    }
    let mut sum = Scalar::zero();
    let mut term = Scalar::one();
    for k in 0..=n {
        sum = &sum + &term;
        if k < n {
            let num = &(t.h(n) - t.h(k)) * &(at - t.x(k));
            term = &term * &num.checked_div(t.g(k + 1))?;
        }
    }
    Ok(sum)
}

/// The operator L restricted to span(v_0..v_N) in the Newton basis:
/// upper-bidiagonal with diagonal h_0..h_N and superdiagonal g_1..g_N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidiagonalOperator {
    pub diag: Vec<Scalar>,
    pub superdiag: Vec<Scalar>,
}

impl BidiagonalOperator {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Matrix-vector product on Newton coefficient vectors.
    pub fn apply(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        (0..self.dim())
            .map(|m| {
                let mut entry = &self.diag[m] * &coeffs[m];
                if m + 1 < self.dim() {
                    entry = &entry + &(&self.superdiag[m] * &coeffs[m + 1]);
                }
                entry
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut rows = vec![vec![Scalar::zero(); n]; n];
        for m in 0..n {
            rows[m][m] = self.diag[m].clone();
            if m + 1 < n {
                rows[m][m + 1] = self.superdiag[m].clone();
            }
        }
        rows
    }
}

pub fn operator_matrix(t: &TripleData, n_max: usize) -> Result<BidiagonalOperator> {
    if n_max + 1 > t.depth() {
        return Err(Error::DepthExceeded {
            requested: n_max + 1,
            depth: t.depth(),
        });
    }
    Ok(BidiagonalOperator {
        diag: (0..=n_max).map(|k| t.h(k).clone()).collect(),
        superdiag: (1..=n_max).map(|k| t.g(k).clone()).collect(),
    })
}

/// True iff M·c = lambda·c exactly, for M in the Newton basis.
pub fn eigen_holds_for(
    matrix: &BidiagonalOperator,
    coeffs: &[Scalar],
    eigenvalue: &Scalar,
) -> bool {
    matrix
        .apply(coeffs)
        .iter()
        .zip(coeffs)
        .all(|(got, c)| *got == eigenvalue * c)
}

/// Checks L u_n = h_n u_n via the bidiagonal matrix acting on the Newton
/// coefficient vector of u_n.
pub fn verify_eigen(t: &TripleData, n: usize) -> Result<bool> {
    let matrix = operator_matrix(t, n)?;
    let coeffs = (0..=n)
        .map(|k| coeff_c(t, n, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(eigen_holds_for(&matrix, &coeffs, t.h(n)))
}

/// Recurrence coefficients A_n (n >= 0) and B_n (n >= 1):
/// A_n = x_n + g_{n+1}/(h_n - h_{n+1}) - g_n/(h_{n-1} - h_n), with the
/// degenerate A_0 = x_0 - g_1/(h_1 - h_0), and
/// B_n = g_n/(h_{n-1} - h_n) * ( g_{n-1}/(h_{n-2} - h_n) - g_n/(h_{n-1} - h_n)
///       + g_{n+1}/(h_{n-1} - h_{n+1}) + x_n - x_{n-1} ),
/// where the g_{n-1} term drops at n = 1 because g_0 = 0.
pub fn recurrence(t: &TripleData, n: usize) -> Result<(Scalar, Option<Scalar>)> {
    if n + 1 > t.depth() {
        return Err(Error::DepthExceeded {
            requested: n + 1,
            depth: t.depth(),
        });
    }
    if n == 0 {
        let a0 = t.x(0) - &t.g(1).checked_div(&(t.h(1) - t.h(0)))?;
        return Ok((a0, None));
    }
    let a_n = &(t.x(n) + &t.g(n + 1).checked_div(&(t.h(n) - t.h(n + 1)))?)
        - &t.g(n).checked_div(&(t.h(n - 1) - t.h(n)))?;

    let outer = t.g(n).checked_div(&(t.h(n - 1) - t.h(n)))?;
    let mut inner = Scalar::zero();
    if n >= 2 {
        inner = &inner + &t.g(n - 1).checked_div(&(t.h(n - 2) - t.h(n)))?;
    }
    inner = &inner - &t.g(n).checked_div(&(t.h(n - 1) - t.h(n)))?;
    inner = &inner + &t.g(n + 1).checked_div(&(t.h(n - 1) - t.h(n + 1)))?;
    inner = &inner + &(t.x(n) - t.x(n - 1));
    Ok((a_n, Some(&outer * &inner)))
}

/// The recurrence coefficient table: `a[n]` = A_n for 0 <= n <= n_max and
/// `b[n-1]` = B_n for 1 <= n <= n_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
}

pub fn recurrence_table(t: &TripleData, n_max: usize) -> Result<RecurrenceCoeffs> {
    let mut a = Vec::with_capacity(n_max + 1);
    let mut b = Vec::with_capacity(n_max);
    for n in 0..=n_max {
        let (a_n, b_n) = recurrence(t, n)?;
        a.push(a_n);
        if let Some(b_n) = b_n {
            b.push(b_n);
        }
    }
    Ok(RecurrenceCoeffs { a, b })
}

/// Residual of the three-term recurrence at level n:
/// x·u_n - u_{n+1} - A_n·u_n - B_n·u_{n-1}. The zero polynomial certifies
/// the recurrence.
pub fn verify_ttrr(t: &TripleData, n: usize) -> Result<Poly> {
    assert!(n >= 1, "the recurrence residual is defined for n >= 1");
    if n + 2 > t.depth() {
        return Err(Error::DepthExceeded {
            requested: n + 2,
            depth: t.depth(),
        });
    }
    let u_prev = monic_u(t, n - 1)?;
    let u_n = monic_u(t, n)?;
    let u_next = monic_u(t, n + 1)?;
    let (a_n, b_n) = recurrence(t, n)?;
    let b_n = b_n.expect("B_n exists for n >= 1");
    let x = Poly::monomial(Var::X, Scalar::one(), 1);
    let mut res = x.try_mul(&u_n)?;
    res = res.try_sub(&u_next)?;
    res = res.try_sub(&u_n.scale(&a_n))?;
    res = res.try_sub(&u_prev.scale(&b_n))?;
    Ok(res)
}

/// The duality identity U_n(x_m) = dual-U_m(h_n), checked exactly.
pub fn dual_identity_check(t: &TripleData, n: usize, m: usize) -> Result<bool> {
    let dual = t.dualize()?;
    let lhs = hypergeometric_u(t, n, t.x(m))?;
    let rhs = hypergeometric_u(&dual, m, t.h(n))?;
    Ok(lhs == rhs)
}
