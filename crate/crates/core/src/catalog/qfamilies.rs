//! The q-side catalog entries needed by the limit engine: original data in
//! q-Laurent coefficient form plus their bidegree labels.

use super::{get, inadmissible, Params};
use crate::classify::{BidegreeTriple, SeqSpecQ};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum QFamily {
    AskeyWilson,
    AlSalamChihara,
    AlSalamCarlitzI,
    StieltjesWigert,
}

pub struct QFamilyEntry {
    pub family: QFamily,
    pub key: &'static str,
    pub full_name: &'static str,
    pub param_names: &'static [&'static str],
    pub bidegree_label: ((i8, i8), (i8, i8), (i8, i8)),
}

impl QFamilyEntry {
    pub fn bidegree_triple(&self) -> BidegreeTriple {
        let (x, g, h) = self.bidegree_label;
        BidegreeTriple::new(x, g, h).expect("catalog labels are valid")
    }
}

static Q_ENTRIES: &[QFamilyEntry] = &[
    QFamilyEntry {
        family: QFamily::AskeyWilson,
        key: "askey-wilson",
        full_name: "Askey-Wilson",
        param_names: &["q", "a", "b", "c", "d"],
        bidegree_label: ((-1, 1), (-2, 2), (-1, 1)),
    },
    QFamilyEntry {
        family: QFamily::AlSalamChihara,
        key: "al-salam-chihara",
        full_name: "Al-Salam-Chihara",
        param_names: &["q", "a", "b"],
        bidegree_label: ((-1, 1), (-2, 0), (-1, 0)),
    },
    QFamilyEntry {
        family: QFamily::AlSalamCarlitzI,
        key: "al-salam-carlitz-i",
        full_name: "Al-Salam-Carlitz I",
        param_names: &["q", "a"],
        bidegree_label: ((0, 1), (-1, 0), (-1, 0)),
    },
    QFamilyEntry {
        family: QFamily::StieltjesWigert,
        key: "q-stieltjes-wigert",
        full_name: "q-Stieltjes-Wigert",
        param_names: &["q"],
        bidegree_label: ((0, 0), (-1, 0), (0, 1)),
    },
];

pub fn q_entries() -> &'static [QFamilyEntry] {
    Q_ENTRIES
}

fn require_q(params: &Params) -> Result<Scalar> {
    let q = get(params, "q")?.clone();
    if q.is_zero() || q.is_one() {
        return Err(inadmissible("q-family", "q must differ from 0 and 1"));
    }
    Ok(q)
}

/// Builds the q-Laurent coefficient spec of a q-family at given parameters.
pub fn q_spec(family: QFamily, params: &Params) -> Result<SeqSpecQ> {
    let one = Scalar::one();
    let zero = Scalar::zero();
    let q = require_q(params)?;
    match family {
        QFamily::AskeyWilson => {
            // h_k = q^-k (1 - q^k)(1 - abcd q^{k-1}),
            // x_k = a q^k + a^-1 q^-k,
            // g_k = a^-1 q^{-2k+1} (1-ab q^{k-1})(1-ac q^{k-1})(1-ad q^{k-1})(1-q^k).
            let (a, b, c, d) = (
                get(params, "a")?.clone(),
                get(params, "b")?.clone(),
                get(params, "c")?.clone(),
                get(params, "d")?.clone(),
            );
            if a.is_zero() {
                return Err(inadmissible("askey-wilson", "a must be nonzero"));
            }
            let qinv = q.inv()?;
            let abcd_q = &(&(&(&a * &b) * &c) * &d) * &qinv;
            let a_coeffs = [one.clone(), -(&abcd_q + &one), abcd_q];
            let b_coeffs = [a.inv()?, zero, a.clone()];
            // The g-expansion uses the elementary symmetric functions of
            // (ab/q, ac/q, ad/q, 1), with prefactor q/a on q^{-2k}.
            let e = [
                &(&a * &b) * &qinv,
                &(&a * &c) * &qinv,
                &(&a * &d) * &qinv,
                one,
            ];
            let e1 = &(&(&e[0] + &e[1]) + &e[2]) + &e[3];
            let e2 = &(&(&(&(&(&e[0] * &e[1]) + &(&e[0] * &e[2])) + &(&e[0] * &e[3]))
                + &(&e[1] * &e[2]))
                + &(&e[1] * &e[3]))
                + &(&e[2] * &e[3]);
            let e3 = &(&(&(&(&e[0] * &e[1]) * &e[2]) + &(&(&e[0] * &e[1]) * &e[3]))
                + &(&(&e[0] * &e[2]) * &e[3]))
                + &(&(&e[1] * &e[2]) * &e[3]);
            let e4 = &(&(&e[0] * &e[1]) * &e[2]) * &e[3];
            let front = &q * &a.inv()?;
            let d_coeffs = [
                front.clone(),
                -(&front * &e1),
                &front * &e2,
                -(&front * &e3),
                &front * &e4,
            ];
            SeqSpecQ::new(q, a_coeffs, b_coeffs, d_coeffs)
        }
        QFamily::AlSalamChihara => {
            // h_k = q^-k - 1, x_k = a q^k + a^-1 q^-k,
            // g_k = q^{-2k+1} a^-1 (1 - ab q^{k-1})(1 - q^k)
            //     = (q/a) q^{-2k} - (b + q/a) q^-k + b.
            let (a, b) = (get(params, "a")?.clone(), get(params, "b")?.clone());
            if a.is_zero() {
                return Err(inadmissible("al-salam-chihara", "a must be nonzero"));
            }
            let q_over_a = &q * &a.inv()?;
            SeqSpecQ::new(
                q,
                [one, -Scalar::one(), zero.clone()],
                [a.inv()?, zero.clone(), a.clone()],
                [q_over_a.clone(), -(&b + &q_over_a), b, zero.clone(), zero],
            )
        }
        QFamily::AlSalamCarlitzI => {
            // h_k = -a^-1 (1 - q^-k), x_k = q^k, g_k = 1 - q^-k.
            let a = get(params, "a")?.clone();
            if a.is_zero() {
                return Err(inadmissible("al-salam-carlitz-i", "a must be nonzero"));
            }
            let ainv = a.inv()?;
            SeqSpecQ::new(
                q,
                [ainv.clone(), -ainv, zero.clone()],
                [zero.clone(), zero.clone(), one.clone()],
                [zero.clone(), -one.clone(), one, zero.clone(), zero],
            )
        }
        QFamily::StieltjesWigert => {
            // x_k = 0, h_k = -(1 - q^k)/(1 - q), g_k = -(1 - q^-k)/(1 - q).
            let w = (&one - &q).inv()?;
            SeqSpecQ::new(
                q,
                [zero.clone(), -w.clone(), w.clone()],
                [zero.clone(), zero.clone(), zero.clone()],
                [zero.clone(), w.clone(), -w, zero.clone(), zero],
            )
        }
    }
}

pub fn find_q(name: &str) -> Result<&'static QFamilyEntry> {
    Q_ENTRIES
        .iter()
        .find(|e| e.key == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}
