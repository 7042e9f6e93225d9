//! Exact q -> 1 limits of rescaled q-family data.
//!
//! Data entries live in Q(i)(s) with q = s^2, so half-integer q-powers are
//! monomials once the exponent parameters are integers. A limit is computed
//! by reducing the rational function and evaluating at s = 1 — cancellation
//! then evaluation, never numeric sampling — and certified by exact
//! comparison against the target family's catalog data.

use crate::catalog::{self, Params};
use crate::error::{Error, Result};
use crate::exactnum::{RatFun, Scalar, Var};
use crate::report::{CheckResult, Report};
use crate::spectral::TripleData;

/// Sequences h, x, g as rational functions of s, for indices 0..=K
/// (`g[0]` is the zero function).
#[derive(Clone, Debug)]
pub struct QDataSymbolic {
    pub h: Vec<RatFun>,
    pub x: Vec<RatFun>,
    pub g: Vec<RatFun>,
}

impl QDataSymbolic {
    pub fn depth(&self) -> usize {
        self.h.len() - 1
    }

    /// Evaluates every entry at a fixed s, yielding ordinary data.
    pub fn eval_at(&self, s: &Scalar) -> Result<TripleData> {
        let h = self
            .h
            .iter()
            .map(|f| f.eval(s))
            .collect::<Result<Vec<_>>>()?;
        let x = self
            .x
            .iter()
            .map(|f| f.eval(s))
            .collect::<Result<Vec<_>>>()?;
        let g = self.g[1..]
            .iter()
            .map(|f| f.eval(s))
            .collect::<Result<Vec<_>>>()?;
        TripleData::new(h, x, g)
    }
}

/// Which sequence a limit refers to, for diagnostics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sequence {
    H,
    X,
    G,
}

impl Sequence {
    fn name(self) -> &'static str {
        match self {
            Sequence::H => "h",
            Sequence::X => "x",
            Sequence::G => "g",
        }
    }
}

/// The algebraic q -> 1 limit of one datum: exact value at s = 1 after
/// cancellation. A surviving pole means the rescaling is wrong.
pub fn limit_q_to_1(data: &QDataSymbolic, seq: Sequence, k: usize) -> Result<Scalar> {
    let f = match seq {
        Sequence::H => &data.h[k],
        Sequence::X => &data.x[k],
        Sequence::G => &data.g[k],
    };
    limit_at_one(f).map_err(|_| Error::PoleAtQ1 {
        sequence: seq.name(),
        index: k,
    })
}

/// Exact value of a reduced rational function at s = 1.
pub fn limit_at_one(f: &RatFun) -> Result<Scalar> {
    f.eval(&Scalar::one())
}

/// A registered q -> 1 transition. Only the worked cases carry a
/// rescaling; the others are named rows awaiting one.
#[derive(Clone, Copy, Debug)]
pub struct LimitCase {
    pub name: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub param_names: &'static [&'static str],
    pub has_rescaling: bool,
    /// Whether the componentwise bidegree widths of the source equal the
    /// target degree triple. This fails when q^k and q^-k terms merge at
    /// q = 1 (the Al-Salam-Chihara x-sequence loses a degree that way).
    pub bidegree_rule_holds: bool,
}

static CASES: &[LimitCase] = &[
    LimitCase {
        name: "aw-to-wilson",
        source: "askey-wilson",
        target: "wilson",
        param_names: &["a", "b", "c", "d"],
        has_rescaling: true,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "asc-to-meixner-pollaczek",
        source: "al-salam-chihara",
        target: "meixner-pollaczek",
        param_names: &["lambda", "t"],
        has_rescaling: true,
        bidegree_rule_holds: false,
    },
    LimitCase {
        name: "asc1-to-charlier",
        source: "al-salam-carlitz-i",
        target: "charlier",
        param_names: &["a"],
        has_rescaling: true,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "sw-to-binomial",
        source: "q-stieltjes-wigert",
        target: "binomial",
        param_names: &[],
        has_rescaling: true,
        bidegree_rule_holds: true,
    },
    // Named rows whose rescalings are not worked out here.
    LimitCase {
        name: "dual-q-hahn-to-dual-hahn",
        source: "continuous-dual-q-hahn",
        target: "dual-hahn",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "q-hahn-to-hahn",
        source: "q-hahn",
        target: "hahn",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "q-meixner-to-meixner",
        source: "q-meixner",
        target: "meixner",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "affine-q-krawtchouk-to-krawtchouk",
        source: "affine-q-krawtchouk",
        target: "krawtchouk",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "little-q-jacobi-to-jacobi",
        source: "little-q-jacobi",
        target: "jacobi",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "q-charlier-to-charlier",
        source: "q-charlier",
        target: "charlier",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "little-q-laguerre-to-laguerre",
        source: "little-q-laguerre",
        target: "laguerre",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "q-bessel-to-bessel",
        source: "q-bessel",
        target: "bessel",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
    LimitCase {
        name: "q-binomial-to-binomial",
        source: "q-binomial",
        target: "binomial",
        param_names: &[],
        has_rescaling: false,
        bidegree_rule_holds: true,
    },
];

pub fn limit_cases() -> &'static [LimitCase] {
    CASES
}

pub fn find_case(name: &str) -> Result<&'static LimitCase> {
    CASES
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownLimitCase(name.to_string()))
}

fn spow(m: i64) -> RatFun {
    RatFun::var_pow(Var::S, m)
}

/// 1 - s^m, valid for any integer m.
fn one_minus_spow(m: i64) -> RatFun {
    &RatFun::one(Var::S) - &spow(m)
}

fn constant(c: Scalar) -> RatFun {
    RatFun::constant(Var::S, c)
}

/// 1 - q = 1 - s^2.
fn one_minus_q() -> RatFun {
    one_minus_spow(2)
}

fn integer_param(params: &Params, name: &str) -> Result<i64> {
    use num_traits::ToPrimitive;
    let v = params
        .get(name)
        .ok_or_else(|| Error::MissingParameter(name.to_string()))?;
    v.as_integer()
        .and_then(|n| n.to_i64())
        .ok_or_else(|| Error::NonIntegerExponent {
            name: name.to_string(),
            value: v.to_string(),
        })
}

fn scalar_param(params: &Params, name: &str) -> Result<Scalar> {
    params
        .get(name)
        .cloned()
        .ok_or_else(|| Error::MissingParameter(name.to_string()))
}

/// Post-limit normalization allowed by the symmetries: a common multiplier
/// on h and g, plus a translation of h.
struct Adjustment {
    multiplier: Scalar,
    h_shift: Scalar,
}

impl Adjustment {
    fn identity() -> Self {
        Adjustment {
            multiplier: Scalar::one(),
            h_shift: Scalar::zero(),
        }
    }
}

fn build_rescaled(case: &LimitCase, params: &Params, depth: usize) -> Result<QDataSymbolic> {
    match case.name {
        "aw-to-wilson" => {
            let a = integer_param(params, "a")?;
            let b = integer_param(params, "b")?;
            let c = integer_param(params, "c")?;
            let d = integer_param(params, "d")?;
            let s_total = a + b + c + d;
            let omq = one_minus_q();
            let omq2 = omq.try_mul(&omq)?;
            let omq4 = omq2.try_mul(&omq2)?;
            let mut h = Vec::new();
            let mut x = Vec::new();
            let mut g = vec![RatFun::zero(Var::S)];
            for k in 0..=depth as i64 {
                // h_k = -q^-k (1 - q^k)(1 - q^{k+a+b+c+d-1}) / (1-q)^2
                let hk = &(&spow(-2 * k) * &one_minus_spow(2 * k))
                    * &one_minus_spow(2 * (k + s_total - 1));
                h.push((-&hk).try_div(&omq2)?);
                // x_k = -(q^{(a+k)/2} - q^{-(a+k)/2})^2 / (1-q)^2
                let half_diff = &spow(a + k) - &spow(-(a + k));
                let xk = -&half_diff.try_mul(&half_diff)?;
                x.push(xk.try_div(&omq2)?);
                if k >= 1 {
                    // g_k = q^{-a-2k+1} (1-q^{k+a+b-1})(1-q^{k+a+c-1})
                    //       (1-q^{k+a+d-1})(1-q^k) / (1-q)^4
                    let gk = &(&(&spow(2 * (-a - 2 * k + 1))
                        * &one_minus_spow(2 * (k + a + b - 1)))
                        * &(&one_minus_spow(2 * (k + a + c - 1))
                            * &one_minus_spow(2 * (k + a + d - 1))))
                        * &one_minus_spow(2 * k);
                    g.push(gk.try_div(&omq4)?);
                }
            }
            Ok(QDataSymbolic { h, x, g })
        }
        "asc-to-meixner-pollaczek" => {
            let lambda = integer_param(params, "lambda")?;
            let t = scalar_param(params, "t")?;
            if t.is_zero() || t.is_one() {
                return Err(Error::InadmissibleParameters {
                    family: "asc-to-meixner-pollaczek".into(),
                    predicate: "t must differ from 0 and 1".into(),
                });
            }
            let i = Scalar::i();
            let omq = one_minus_q();
            let omq2 = omq.try_mul(&omq)?;
            let one_minus_t = constant(&Scalar::one() - &t);
            let mut h = Vec::new();
            let mut x = Vec::new();
            let mut g = vec![RatFun::zero(Var::S)];
            for k in 0..=depth as i64 {
                // h_k = -(1 - q^-k)/(1 - q)
                h.push((-&one_minus_spow(-2 * k)).try_div(&omq)?);
                // x_k = -i (1 - q^{-lambda-k})(1 - t q^{lambda+k})
                //       / ((1 - q)(1 - t))
                let top = &one_minus_spow(-2 * (lambda + k))
                    * &(&RatFun::one(Var::S) - &spow(2 * (lambda + k)).scale(&t));
                let xk = (-&top.scale(&i)).try_div(&omq.try_mul(&one_minus_t)?)?;
                x.push(xk);
                if k >= 1 {
                    // g_k = i q^{-lambda-2k+1} (1 - q^{2 lambda + k - 1})(1 - q^k)
                    //       / ((1 - t)(1 - q)^2);
                    // the q-power is pinned by d_{-2} = q a_{-1} b_{-1} on the
                    // rescaled coefficients.
                    let top = &(&spow(2 * (-lambda - 2 * k + 1))
                        * &one_minus_spow(2 * (2 * lambda + k - 1)))
                        * &one_minus_spow(2 * k);
                    g.push(top.scale(&i).try_div(&one_minus_t.try_mul(&omq2)?)?);
                }
            }
            Ok(QDataSymbolic { h, x, g })
        }
        "asc1-to-charlier" => {
            let a = scalar_param(params, "a")?;
            if a.is_zero() {
                return Err(Error::InadmissibleParameters {
                    family: "asc1-to-charlier".into(),
                    predicate: "a must be nonzero".into(),
                });
            }
            let ainv = a.inv()?;
            let omq = one_minus_q();
            let mut h = Vec::new();
            let mut x = Vec::new();
            let mut g = vec![RatFun::zero(Var::S)];
            for k in 0..=depth as i64 {
                // h_k = a^-1 (1 - q^-k)/(1 - q), x_k = (1 - q^k)/(1 - q),
                // g_k = -(1 - q^-k)/(1 - q)
                let ratio_neg = one_minus_spow(-2 * k).try_div(&omq)?;
                h.push(ratio_neg.scale(&ainv));
                x.push(one_minus_spow(2 * k).try_div(&omq)?);
                if k >= 1 {
                    g.push(-&ratio_neg);
                }
            }
            Ok(QDataSymbolic { h, x, g })
        }
        "sw-to-binomial" => {
            let omq = one_minus_q();
            let mut h = Vec::new();
            let mut x = Vec::new();
            let mut g = vec![RatFun::zero(Var::S)];
            for k in 0..=depth as i64 {
                // x_k = 0, h_k = -(1 - q^k)/(1 - q), g_k = -(1 - q^-k)/(1 - q)
                h.push((-&one_minus_spow(2 * k)).try_div(&omq)?);
                x.push(RatFun::zero(Var::S));
                if k >= 1 {
                    g.push((-&one_minus_spow(-2 * k)).try_div(&omq)?);
                }
            }
            Ok(QDataSymbolic { h, x, g })
        }
        _ => Err(Error::RescalingUnavailable(case.name.to_string())),
    }
}

fn adjustment(case: &LimitCase, params: &Params) -> Result<Adjustment> {
    match case.name {
        "asc-to-meixner-pollaczek" => {
            // The printed limit data differ from the catalog target by the
            // common multiplier -i(1-t) on h, g and a translation of h.
            let lambda = Scalar::from_int(integer_param(params, "lambda")?);
            let t = scalar_param(params, "t")?;
            let multiplier = -(&Scalar::i() * &(&Scalar::one() - &t));
            let h_shift = &multiplier * &lambda;
            Ok(Adjustment {
                multiplier,
                h_shift,
            })
        }
        _ => Ok(Adjustment::identity()),
    }
}

fn target_params(case: &LimitCase, params: &Params) -> Result<Params> {
    let mut out = Params::new();
    match case.name {
        "aw-to-wilson" => {
            for name in ["a", "b", "c", "d"] {
                out.insert(name.to_string(), scalar_param(params, name)?);
            }
        }
        "asc-to-meixner-pollaczek" => {
            out.insert("lambda".into(), scalar_param(params, "lambda")?);
            out.insert("t".into(), scalar_param(params, "t")?);
        }
        "asc1-to-charlier" => {
            out.insert("a".into(), scalar_param(params, "a")?);
        }
        "sw-to-binomial" => {}
        _ => return Err(Error::RescalingUnavailable(case.name.to_string())),
    }
    Ok(out)
}

/// Builds the rescaled symbolic data for a registered case.
pub fn rescale_qdata(case_name: &str, params: &Params, depth: usize) -> Result<QDataSymbolic> {
    let case = find_case(case_name)?;
    if !case.has_rescaling {
        return Err(Error::RescalingUnavailable(case.name.to_string()));
    }
    build_rescaled(case, params, depth)
}

/// Certifies one q -> 1 transition: every datum's limit must exist and
/// equal the target family's data exactly, for all indices up to `depth`.
/// The first discrepancy aborts with the offending index and both values.
pub fn certify_limit(case_name: &str, params: &Params, depth: usize) -> Result<Report> {
    let case = find_case(case_name)?;
    if !case.has_rescaling {
        return Err(Error::RescalingUnavailable(case.name.to_string()));
    }
    let data = build_rescaled(case, params, depth)?;
    let adjust = adjustment(case, params)?;
    let t_params = target_params(case, params)?;
    let target = catalog::build_family(case.target, &t_params, Some(depth))?;

    let mut report = Report::new(case.name);
    for seq in [Sequence::H, Sequence::X, Sequence::G] {
        let lo = if seq == Sequence::G { 1 } else { 0 };
        for k in lo..=depth {
            let raw = limit_q_to_1(&data, seq, k)?;
            let got = match seq {
                Sequence::H => &(&raw * &adjust.multiplier) + &adjust.h_shift,
                Sequence::G => &raw * &adjust.multiplier,
                Sequence::X => raw,
            };
            let want = match seq {
                Sequence::H => target.triple.h(k).clone(),
                Sequence::X => target.triple.x(k).clone(),
                Sequence::G => target.triple.g(k).clone(),
            };
            if got != want {
                return Err(Error::LimitMismatch {
                    sequence: seq.name(),
                    index: k,
                    got: got.to_string(),
                    want: want.to_string(),
                });
            }
        }
        report.push(CheckResult::pass(
            format!("{}-limits", seq.name()),
            format!("exact match with {} data for k <= {depth}", case.target),
        ));
    }

    // Componentwise bidegree widths against the target degree triple.
    if let Ok(src) = catalog::find_q(case.source) {
        let widths = src.bidegree_triple().widths();
        let target_label = target.entry.degree_label;
        if case.bidegree_rule_holds {
            if widths == target_label {
                report.push(CheckResult::pass(
                    "bidegree-rule",
                    format!("widths of {} reduce to {target_label:?}", src.key),
                ));
            } else {
                report.push(CheckResult::fail(
                    "bidegree-rule",
                    format!("widths {widths:?} differ from target {target_label:?}"),
                ));
            }
        } else {
            report.push(CheckResult::pass(
                "bidegree-rule",
                format!(
                    "not applicable: widths {widths:?} exceed {target_label:?} \
                     (opposite q-powers merge at q = 1)"
                ),
            ));
        }
    }
    Ok(report)
}

/// Recurrence coefficients of the symbolic data, evaluated at q = 1:
/// A_n and B_n are computed in the rational-function field first, then the
/// limit of each is taken.
pub fn recurrence_limits(data: &QDataSymbolic, n: usize) -> Result<(Scalar, Option<Scalar>)> {
    let h = |k: usize| &data.h[k];
    let x = |k: usize| &data.x[k];
    let g = |k: usize| &data.g[k];
    if n == 0 {
        let a0 = x(0).try_sub(&g(1).try_div(&h(1).try_sub(h(0))?)?)?;
        return Ok((limit_at_one(&a0)?, None));
    }
    let a_n = x(n)
        .try_add(&g(n + 1).try_div(&h(n).try_sub(h(n + 1))?)?)?
        .try_sub(&g(n).try_div(&h(n - 1).try_sub(h(n))?)?)?;
    let outer = g(n).try_div(&h(n - 1).try_sub(h(n))?)?;
    let mut inner = RatFun::zero(Var::S);
    if n >= 2 {
        inner = inner.try_add(&g(n - 1).try_div(&h(n - 2).try_sub(h(n))?)?)?;
    }
    inner = inner.try_sub(&g(n).try_div(&h(n - 1).try_sub(h(n))?)?)?;
    inner = inner.try_add(&g(n + 1).try_div(&h(n - 1).try_sub(h(n + 1))?)?)?;
    inner = inner.try_add(&x(n).try_sub(x(n - 1))?)?;
    let b_n = outer.try_mul(&inner)?;
    Ok((limit_at_one(&a_n)?, Some(limit_at_one(&b_n)?)))
}

/// The eigenvalue sequence of the original (unrescaled) top q-family, as a
/// function of s, for the degenerate-limit diagnostic: every entry tends to
/// zero at q = 1, which is why rescaling is needed.
pub fn unrescaled_askey_wilson_h(abcd: &Scalar, k: usize) -> RatFun {
    // h_k = q^-k (1 - q^k)(1 - abcd q^{k-1})
    let k = k as i64;
    let factor = &RatFun::one(Var::S) - &spow(2 * (k - 1)).scale(abcd);
    (&spow(-2 * k) * &one_minus_spow(2 * k))
        .try_mul(&factor)
        .expect("same variable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::params_from;
    use crate::classify::verify_difference_eqs;
    use crate::spectral::verify_ttrr;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn q_integer_ratio_limits() {
        // (1 - q^-k)/(1 - q) tends to -k; at k = 3 this is -3.
        let f = one_minus_spow(-6).try_div(&one_minus_q()).unwrap();
        assert_eq!(limit_at_one(&f).unwrap(), int(-3));
    }

    #[test]
    fn stieltjes_wigert_h_limits() {
        let data = rescale_qdata("sw-to-binomial", &Params::new(), 8).unwrap();
        for k in 0..=8usize {
            assert_eq!(
                limit_q_to_1(&data, Sequence::H, k).unwrap(),
                int(-(k as i64))
            );
        }
    }

    #[test]
    fn unrescaled_askey_wilson_degenerates() {
        let abcd = int(2 * 3 * 5 * 7);
        for k in 1..=8usize {
            let h = unrescaled_askey_wilson_h(&abcd, k);
            assert_eq!(limit_at_one(&h).unwrap(), Scalar::zero(), "k = {k}");
        }
    }

    #[test]
    fn pole_is_diagnosed() {
        // 1/(1-q) has a genuine pole at q = 1.
        let bad = QDataSymbolic {
            h: vec![RatFun::one(Var::S).try_div(&one_minus_q()).unwrap(); 2],
            x: vec![RatFun::zero(Var::S); 2],
            g: vec![RatFun::zero(Var::S); 2],
        };
        assert!(matches!(
            limit_q_to_1(&bad, Sequence::H, 0),
            Err(Error::PoleAtQ1 {
                sequence: "h",
                index: 0
            })
        ));
    }

    #[test]
    fn all_four_worked_cases_certify() {
        let cases: [(&str, Params); 4] = [
            (
                "aw-to-wilson",
                params_from(&[("a", int(2)), ("b", int(4)), ("c", int(6)), ("d", int(8))]),
            ),
            (
                "asc-to-meixner-pollaczek",
                params_from(&[("lambda", int(1)), ("t", int(3))]),
            ),
            ("asc1-to-charlier", params_from(&[("a", int(1))])),
            ("sw-to-binomial", Params::new()),
        ];
        for (name, params) in cases {
            let report = certify_limit(name, &params, 8).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(report.all_passed(), "{name}:\n{}", report.render());
        }
    }

    #[test]
    fn identity_rescaling_example() {
        // The q-Stieltjes-Wigert entry is already in rescaled form: the
        // symbolic data at a fixed q equals the catalog q-entry's data.
        let q = int(4); // s = 2
        let spec = catalog::q_spec(
            catalog::QFamily::StieltjesWigert,
            &params_from(&[("q", q.clone())]),
        )
        .unwrap();
        let data = rescale_qdata("sw-to-binomial", &Params::new(), 6).unwrap();
        let s = int(2);
        for k in 0..=6usize {
            assert_eq!(data.h[k].eval(&s).unwrap(), spec.h_at(k as i64));
            assert_eq!(data.x[k].eval(&s).unwrap(), spec.x_at(k as i64));
            if k >= 1 {
                assert_eq!(data.g[k].eval(&s).unwrap(), spec.g_at(k as i64));
            }
        }
    }

    #[test]
    fn rescaled_data_still_generates_recurrent_systems() {
        // Rescaling uses only the legal symmetries plus affine variable
        // changes, so at any fixed admissible q the rescaled data still
        // satisfies the difference equations at xi = 1 + q + 1/q and its
        // monic system still satisfies the three-term recurrence.
        let cases: [(&str, Params); 4] = [
            (
                "aw-to-wilson",
                params_from(&[("a", int(2)), ("b", int(4)), ("c", int(6)), ("d", int(8))]),
            ),
            (
                "asc-to-meixner-pollaczek",
                params_from(&[("lambda", int(2)), ("t", int(5))]),
            ),
            ("asc1-to-charlier", params_from(&[("a", int(2))])),
            ("sw-to-binomial", Params::new()),
        ];
        let s = int(2);
        let q = int(4);
        let xi = &(&Scalar::one() + &q) + &q.inv().unwrap();
        for (name, params) in cases {
            let data = rescale_qdata(name, &params, 10).unwrap();
            let triple = data.eval_at(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(
                verify_difference_eqs(&triple, &xi, 10).unwrap(),
                "difference equations fail for {name}"
            );
            for n in 1..=4 {
                assert!(
                    verify_ttrr(&triple, n).unwrap().is_zero(),
                    "recurrence fails for {name} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn aw_rescaled_x_spot_value() {
        // x_1 at s = 2 (q = 4), a = 2: -(s^3 - s^-3)^2/(1-q)^2 = -441/64.
        let params = params_from(&[("a", int(2)), ("b", int(4)), ("c", int(6)), ("d", int(8))]);
        let data = rescale_qdata("aw-to-wilson", &params, 4).unwrap();
        assert_eq!(data.x[1].eval(&int(2)).unwrap(), Scalar::ratio(-441, 64));
    }

    #[test]
    fn aw_case_handles_odd_parameters() {
        // Half-integer q-powers q^{(a+k)/2} are monomials in s for every
        // integer a, odd ones included.
        let params = params_from(&[("a", int(1)), ("b", int(2)), ("c", int(3)), ("d", int(5))]);
        let report = certify_limit("aw-to-wilson", &params, 6).unwrap();
        assert!(report.all_passed(), "{}", report.render());
    }

    #[test]
    fn certify_propagates_target_admissibility() {
        // a+b+c+d = 0 is inadmissible for the target family.
        let params = params_from(&[("a", int(2)), ("b", int(2)), ("c", int(-2)), ("d", int(-2))]);
        assert!(matches!(
            certify_limit("aw-to-wilson", &params, 6),
            Err(Error::InadmissibleParameters { .. })
        ));
    }

    #[test]
    fn recurrence_coefficients_commute_with_the_limit() {
        // For the Al-Salam-Carlitz I -> Charlier case: A_n, B_n computed on
        // the symbolic data and then sent to q = 1 equal A_n, B_n of the
        // limit data.
        let params = params_from(&[("a", int(1))]);
        let data = rescale_qdata("asc1-to-charlier", &params, 8).unwrap();
        let target = catalog::build_family("charlier", &params, None)
            .unwrap()
            .triple;
        for n in 0..=3usize {
            let (a_lim, b_lim) = recurrence_limits(&data, n).unwrap();
            let (a_t, b_t) = crate::spectral::recurrence(&target, n).unwrap();
            assert_eq!(a_lim, a_t, "A_{n}");
            assert_eq!(b_lim, b_t, "B_{n}");
        }
    }

    #[test]
    fn certify_reports_mismatches_with_both_values() {
        // Feeding the charlier case an inconsistent hand-built variant: the
        // a = 2 rescaling against the a = 1 target mismatches at h_1.
        let data_params = params_from(&[("a", int(2))]);
        let data = rescale_qdata("asc1-to-charlier", &data_params, 4).unwrap();
        let got = limit_q_to_1(&data, Sequence::H, 2).unwrap();
        assert_eq!(got, int(-1)); // -k/a at k = 2, a = 2
        let wrong_target =
            catalog::build_family("charlier", &params_from(&[("a", int(1))]), Some(4))
                .unwrap()
                .triple;
        assert_ne!(&got, wrong_target.h(2));
    }

    #[test]
    fn stretch_rows_are_registered_but_not_runnable() {
        assert_eq!(limit_cases().len(), 13);
        let err = certify_limit("q-hahn-to-hahn", &Params::new(), 6).unwrap_err();
        assert!(matches!(err, Error::RescalingUnavailable(_)));
        assert!(matches!(
            certify_limit("no-such-case", &Params::new(), 6),
            Err(Error::UnknownLimitCase(_))
        ));
    }
}
