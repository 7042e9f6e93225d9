//! Executable encyclopedia of the scheme families: builders from named
//! parameters to coefficient specs and evaluated data, normalization
//! metadata, independent hypergeometric oracles and a verification battery.

mod oracle;
mod qfamilies;
mod verify;

pub use oracle::kls_oracle;
pub use qfamilies::{find_q, q_entries, q_spec, QFamily, QFamilyEntry};
pub use verify::verify_family;

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};

use crate::classify::{DegreeTriple, SeqSpecQ1};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::spectral::TripleData;

/// Named parameter values, ordered for deterministic rendering.
pub type Params = BTreeMap<String, Scalar>;

pub fn params_from(pairs: &[(&str, Scalar)]) -> Params {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn get<'a>(params: &'a Params, name: &str) -> Result<&'a Scalar> {
    params
        .get(name)
        .ok_or_else(|| Error::MissingParameter(name.to_string()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    Wilson,
    Racah,
    ContinuousDualHahn,
    DualHahn,
    ContinuousHahn,
    Hahn,
    MeixnerPollaczek,
    Meixner,
    Krawtchouk,
    Jacobi,
    Charlier,
    Laguerre,
    Bessel,
    Binomial,
}

/// Catalog metadata for one family.
pub struct FamilyEntry {
    pub family: Family,
    /// Command-line key.
    pub key: &'static str,
    pub acronym: &'static str,
    pub full_name: &'static str,
    /// Reference-book chapter-9 section tag, carried as opaque metadata.
    pub kls_section: Option<u32>,
    pub degree_label: (u8, u8, u8),
    pub scheme_node: &'static str,
    pub param_names: &'static [&'static str],
    /// Normalization constant relating u_n to the classical polynomial,
    /// recorded as a closed-form description (it may contain non-rational
    /// factors, so it is never evaluated).
    pub kn_description: &'static str,
    /// Default parameter values (numerator, denominator pairs).
    pub defaults: &'static [(&'static str, (i64, i64))],
}

impl FamilyEntry {
    pub fn degree_triple(&self) -> DegreeTriple {
        let (x, g, h) = self.degree_label;
        DegreeTriple::new(x, g, h).expect("catalog labels are valid triples")
    }

    pub fn default_params(&self) -> Params {
        self.defaults
            .iter()
            .map(|(k, (p, q))| (k.to_string(), Scalar::ratio(*p, *q)))
            .collect()
    }
}

static ENTRIES: &[FamilyEntry] = &[
    FamilyEntry {
        family: Family::Wilson,
        key: "wilson",
        acronym: "W",
        full_name: "Wilson",
        kls_section: Some(1),
        degree_label: (2, 4, 2),
        scheme_node: "W/R",
        param_names: &["a", "b", "c", "d"],
        kn_description: "(-1)^n (n+a+b+c+d-1)_n",
        defaults: &[("a", (1, 1)), ("b", (2, 1)), ("c", (3, 1)), ("d", (4, 1))],
    },
    FamilyEntry {
        family: Family::Racah,
        key: "racah",
        acronym: "R",
        full_name: "Racah",
        kls_section: Some(2),
        degree_label: (2, 4, 2),
        scheme_node: "W/R",
        param_names: &["alpha", "beta", "gamma", "delta"],
        kn_description: "(n+alpha+beta+1)_n / ((alpha+1)_n (beta+delta+1)_n (gamma+1)_n)",
        defaults: &[
            ("alpha", (-9, 1)),
            ("beta", (9, 1)),
            ("gamma", (1, 1)),
            ("delta", (1, 1)),
        ],
    },
    FamilyEntry {
        family: Family::ContinuousDualHahn,
        key: "continuous-dual-hahn",
        acronym: "cdH",
        full_name: "continuous dual Hahn",
        kls_section: Some(3),
        degree_label: (2, 3, 1),
        scheme_node: "cdH/dH",
        param_names: &["a", "b", "c"],
        kn_description: "(-1)^n",
        defaults: &[("a", (1, 1)), ("b", (2, 1)), ("c", (3, 1))],
    },
    FamilyEntry {
        family: Family::DualHahn,
        key: "dual-hahn",
        acronym: "dH",
        full_name: "dual Hahn",
        kls_section: Some(6),
        degree_label: (2, 3, 1),
        scheme_node: "cdH/dH",
        param_names: &["gamma", "delta", "N"],
        kn_description: "1 / ((gamma+1)_n (-N)_n)",
        defaults: &[("gamma", (1, 1)), ("delta", (2, 1)), ("N", (8, 1))],
    },
    FamilyEntry {
        family: Family::ContinuousHahn,
        key: "continuous-hahn",
        acronym: "cH",
        full_name: "continuous Hahn",
        kls_section: Some(4),
        degree_label: (1, 3, 2),
        scheme_node: "cH/H",
        param_names: &["a", "b", "c", "d"],
        kn_description: "(n+a+b+c+d-1)_n / n!",
        defaults: &[("a", (1, 1)), ("b", (2, 1)), ("c", (3, 1)), ("d", (4, 1))],
    },
    FamilyEntry {
        family: Family::Hahn,
        key: "hahn",
        acronym: "H",
        full_name: "Hahn",
        kls_section: Some(5),
        degree_label: (1, 3, 2),
        scheme_node: "cH/H",
        param_names: &["alpha", "beta", "N"],
        kn_description: "(n+alpha+beta+1)_n / ((alpha+1)_n (-N)_n)",
        defaults: &[("alpha", (1, 1)), ("beta", (1, 1)), ("N", (8, 1))],
    },
    FamilyEntry {
        family: Family::MeixnerPollaczek,
        key: "meixner-pollaczek",
        acronym: "M-P",
        full_name: "Meixner-Pollaczek",
        kls_section: Some(7),
        degree_label: (1, 2, 1),
        scheme_node: "M-P/M/K",
        param_names: &["lambda", "t"],
        kn_description: "2^n (sin phi)^n / n!  (with t = e^{-2 i phi} kept as a free scalar)",
        defaults: &[("lambda", (1, 1)), ("t", (2, 1))],
    },
    FamilyEntry {
        family: Family::Meixner,
        key: "meixner",
        acronym: "M",
        full_name: "Meixner",
        kls_section: Some(10),
        degree_label: (1, 2, 1),
        scheme_node: "M-P/M/K",
        param_names: &["beta", "c"],
        kn_description: "(1-1/c)^n / (beta)_n",
        defaults: &[("beta", (1, 1)), ("c", (2, 1))],
    },
    FamilyEntry {
        family: Family::Krawtchouk,
        key: "krawtchouk",
        acronym: "K",
        full_name: "Krawtchouk",
        kls_section: Some(11),
        degree_label: (1, 2, 1),
        scheme_node: "M-P/M/K",
        param_names: &["p", "N"],
        kn_description: "1 / (p^n (-N)_n)",
        defaults: &[("p", (1, 2)), ("N", (8, 1))],
    },
    FamilyEntry {
        family: Family::Jacobi,
        key: "jacobi",
        acronym: "J",
        full_name: "Jacobi",
        kls_section: Some(8),
        degree_label: (0, 2, 2),
        scheme_node: "J",
        param_names: &["alpha", "beta"],
        kn_description: "(n+alpha+beta+1)_n / (2^n n!)",
        defaults: &[("alpha", (1, 1)), ("beta", (2, 1))],
    },
    FamilyEntry {
        family: Family::Charlier,
        key: "charlier",
        acronym: "Ch",
        full_name: "Charlier",
        kls_section: Some(14),
        degree_label: (1, 1, 1),
        scheme_node: "Ch",
        param_names: &["a"],
        kn_description: "(-a)^-n",
        defaults: &[("a", (1, 1))],
    },
    FamilyEntry {
        family: Family::Laguerre,
        key: "laguerre",
        acronym: "L",
        full_name: "Laguerre",
        kls_section: Some(12),
        degree_label: (0, 2, 1),
        scheme_node: "L",
        param_names: &["alpha"],
        kn_description: "(-1)^n / n!",
        defaults: &[("alpha", (2, 1))],
    },
    FamilyEntry {
        family: Family::Bessel,
        key: "bessel",
        acronym: "B",
        full_name: "Bessel",
        kls_section: Some(13),
        degree_label: (0, 1, 2),
        scheme_node: "B",
        param_names: &["a"],
        kn_description: "(n+a+1)_n / 2^n",
        defaults: &[("a", (1, 1))],
    },
    FamilyEntry {
        family: Family::Binomial,
        key: "binomial",
        acronym: "bin",
        full_name: "binomial",
        kls_section: None,
        degree_label: (0, 1, 1),
        scheme_node: "bin",
        param_names: &[],
        kn_description: "(-1)^n",
        defaults: &[],
    },
];

/// The fourteen q = 1 families in catalog order.
pub fn entries() -> &'static [FamilyEntry] {
    ENTRIES
}

/// Looks a family up by command-line key or exact acronym.
pub fn find(name: &str) -> Result<&'static FamilyEntry> {
    ENTRIES
        .iter()
        .find(|e| e.key == name || e.acronym == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

fn inadmissible(family: &str, predicate: &str) -> Error {
    Error::InadmissibleParameters {
        family: family.to_string(),
        predicate: predicate.to_string(),
    }
}

/// Returns N when the value is a positive integer.
fn positive_integer(v: &Scalar) -> Option<usize> {
    v.as_integer()
        .filter(|n| n.is_positive())
        .and_then(|n| n.to_usize())
}

/// Returns N >= 1 when the value equals -N.
fn negated_positive_integer(v: &Scalar) -> Option<usize> {
    (-v).as_integer()
        .filter(|n| n.is_positive())
        .and_then(|n| n.to_usize())
}

fn is_nonpositive_integer(v: &Scalar) -> bool {
    matches!(v.as_integer(), Some(n) if !n.is_positive())
}

/// Truncation degree N declared by the parameters, when the family is one
/// of the finite systems.
fn declared_truncation(family: Family, params: &Params) -> Result<Option<usize>> {
    match family {
        Family::Racah => {
            let alpha = get(params, "alpha")?;
            let beta = get(params, "beta")?;
            let gamma = get(params, "gamma")?;
            let delta = get(params, "delta")?;
            let one = Scalar::one();
            let candidates: Vec<usize> = [alpha + &one, &(beta + delta) + &one, gamma + &one]
                .iter()
                .filter_map(negated_positive_integer)
                .collect();
            let mut distinct = candidates.clone();
            distinct.sort_unstable();
            distinct.dedup();
            match distinct.len() {
                0 => Err(inadmissible(
                    "racah",
                    "one of alpha+1, beta+delta+1, gamma+1 must equal -N for a positive integer N",
                )),
                1 => Ok(Some(distinct[0])),
                _ => Err(inadmissible(
                    "racah",
                    "ambiguous truncation: two conditions hold with different N",
                )),
            }
        }
        Family::DualHahn | Family::Hahn | Family::Krawtchouk => {
            let n = positive_integer(get(params, "N")?)
                .ok_or_else(|| inadmissible("finite family", "N must be a positive integer"))?;
            Ok(Some(n))
        }
        _ => Ok(None),
    }
}

/// Builds the q = 1 coefficient spec for a family at given parameters,
/// checking the family's admissibility predicates.
pub fn q1_spec(family: Family, params: &Params) -> Result<SeqSpecQ1> {
    let zero = Scalar::zero();
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    match family {
        Family::Wilson => {
            let (a, b, c, d) = (
                get(params, "a")?,
                get(params, "b")?,
                get(params, "c")?,
                get(params, "d")?,
            );
            let s = &(a + b) + &(c + d);
            if is_nonpositive_integer(&s) {
                return Err(inadmissible(
                    "wilson",
                    "a+b+c+d must not be a nonpositive integer",
                ));
            }
            let (fa, fb, fc) = (&(a + b) - &one, &(a + c) - &one, &(a + d) - &one);
            SeqSpecQ1::new(
                [zero, -(&s - &one), -one.clone()],
                [-(a * a), -(&two * a), -one.clone()],
                cubic_factor_coeffs(&fa, &fb, &fc),
            )
        }
        Family::Racah => {
            let (alpha, beta, gamma, delta) = (
                get(params, "alpha")?,
                get(params, "beta")?,
                get(params, "gamma")?,
                get(params, "delta")?,
            );
            let (fa, fb, fc) = (alpha.clone(), beta + delta, gamma.clone());
            SeqSpecQ1::new(
                [zero, &(alpha + beta) + &one, one.clone()],
                [Scalar::zero(), &(gamma + delta) + &one, one],
                cubic_factor_coeffs(&fa, &fb, &fc),
            )
        }
        Family::ContinuousDualHahn => {
            let (a, b, c) = (get(params, "a")?, get(params, "b")?, get(params, "c")?);
            let (fa, fb) = (&(a + b) - &one, &(a + c) - &one);
            SeqSpecQ1::new(
                [zero, -one.clone(), Scalar::zero()],
                [-(a * a), -(&two * a), -one],
                [&fa * &fb, &fa + &fb, Scalar::one(), Scalar::zero()],
            )
        }
        Family::DualHahn => {
            let (gamma, delta) = (get(params, "gamma")?, get(params, "delta")?);
            let n = Scalar::from_int(
                positive_integer(get(params, "N")?)
                    .ok_or_else(|| inadmissible("dual-hahn", "N must be a positive integer"))?
                    as i64,
            );
            // g_k = k (k+gamma) (N+1-k)
            let np1 = &n + &one;
            SeqSpecQ1::new(
                [zero, -one.clone(), Scalar::zero()],
                [Scalar::zero(), &(gamma + delta) + &one, one.clone()],
                [gamma * &np1, &np1 - gamma, -one, Scalar::zero()],
            )
        }
        Family::ContinuousHahn => {
            let (a, b, c, d) = (
                get(params, "a")?,
                get(params, "b")?,
                get(params, "c")?,
                get(params, "d")?,
            );
            let s = &(a + b) + &(c + d);
            let i = Scalar::i();
            let (fa, fb) = (&(a + c) - &one, &(a + d) - &one);
            SeqSpecQ1::new(
                [zero, &s - &one, one],
                [&i * a, i.clone(), Scalar::zero()],
                [&i * &(&fa * &fb), &i * &(&fa + &fb), i, Scalar::zero()],
            )
        }
        Family::Hahn => {
            let (alpha, beta) = (get(params, "alpha")?, get(params, "beta")?);
            let n = Scalar::from_int(
                positive_integer(get(params, "N")?)
                    .ok_or_else(|| inadmissible("hahn", "N must be a positive integer"))?
                    as i64,
            );
            // g_k = k (k+alpha) (k-N-1)
            let fb = -(&n + &one);
            SeqSpecQ1::new(
                [zero, &(alpha + beta) + &one, one.clone()],
                [Scalar::zero(), one, Scalar::zero()],
                [alpha * &fb, alpha + &fb, Scalar::one(), Scalar::zero()],
            )
        }
        Family::MeixnerPollaczek => {
            let (lambda, t) = (get(params, "lambda")?, get(params, "t")?);
            if t.is_zero() || t.is_one() {
                return Err(inadmissible(
                    "meixner-pollaczek",
                    "t must differ from 0 and 1",
                ));
            }
            let i = Scalar::i();
            let slope = -(&i * &(&one - t));
            SeqSpecQ1::new(
                [&slope * lambda, slope.clone(), Scalar::zero()],
                [&i * lambda, i, Scalar::zero()],
                [&(&two * lambda) - &one, one, Scalar::zero(), Scalar::zero()],
            )
        }
        Family::Meixner => {
            let (beta, c) = (get(params, "beta")?, get(params, "c")?);
            if c.is_zero() || c.is_one() {
                return Err(inadmissible("meixner", "c must differ from 0 and 1"));
            }
            SeqSpecQ1::new(
                [zero, &one - &c.inv()?, Scalar::zero()],
                [Scalar::zero(), one.clone(), Scalar::zero()],
                [beta - &one, one, Scalar::zero(), Scalar::zero()],
            )
        }
        Family::Krawtchouk => {
            let p = get(params, "p")?;
            if p.is_zero() {
                return Err(inadmissible("krawtchouk", "p must be nonzero"));
            }
            let n = Scalar::from_int(
                positive_integer(get(params, "N")?)
                    .ok_or_else(|| inadmissible("krawtchouk", "N must be a positive integer"))?
                    as i64,
            );
            SeqSpecQ1::new(
                [zero, p.inv()?, Scalar::zero()],
                [Scalar::zero(), one.clone(), Scalar::zero()],
                [-(&n + &one), one, Scalar::zero(), Scalar::zero()],
            )
        }
        Family::Jacobi => {
            let (alpha, beta) = (get(params, "alpha")?, get(params, "beta")?);
            let half = Scalar::ratio(1, 2);
            SeqSpecQ1::new(
                [zero, &half * &(&(alpha + beta) + &one), half],
                [one.clone(), Scalar::zero(), Scalar::zero()],
                [alpha.clone(), one, Scalar::zero(), Scalar::zero()],
            )
        }
        Family::Charlier => {
            let a = get(params, "a")?;
            if a.is_zero() {
                return Err(inadmissible("charlier", "a must be nonzero"));
            }
            SeqSpecQ1::new(
                [zero, -a.inv()?, Scalar::zero()],
                [Scalar::zero(), one.clone(), Scalar::zero()],
                [one, Scalar::zero(), Scalar::zero(), Scalar::zero()],
            )
        }
        Family::Laguerre => {
            let alpha = get(params, "alpha")?;
            SeqSpecQ1::new(
                [zero, -one.clone(), Scalar::zero()],
                [Scalar::zero(), Scalar::zero(), Scalar::zero()],
                [alpha.clone(), one, Scalar::zero(), Scalar::zero()],
            )
        }
        Family::Bessel => {
            let a = get(params, "a")?;
            let half = Scalar::ratio(1, 2);
            SeqSpecQ1::new(
                [zero, &half * &(a + &one), half],
                [Scalar::zero(), Scalar::zero(), Scalar::zero()],
                [one, Scalar::zero(), Scalar::zero(), Scalar::zero()],
            )
        }
        Family::Binomial => SeqSpecQ1::new(
            [zero, -one.clone(), Scalar::zero()],
            [Scalar::zero(), Scalar::zero(), Scalar::zero()],
            [one, Scalar::zero(), Scalar::zero(), Scalar::zero()],
        ),
    }
}

/// Coefficients (d1..d4) of k (k+fa)(k+fb)(k+fc).
fn cubic_factor_coeffs(fa: &Scalar, fb: &Scalar, fc: &Scalar) -> [Scalar; 4] {
    let e1 = &(fa + fb) + fc;
    let e2 = &(&(fa * fb) + &(fa * fc)) + &(fb * fc);
    let e3 = &(fa * fb) * fc;
    [e3, e2, e1, Scalar::one()]
}

/// A family instance: its coefficient spec, evaluated data, and the
/// truncation degree when the system is finite.
pub struct BuiltFamily {
    pub entry: &'static FamilyEntry,
    pub params: Params,
    pub spec: SeqSpecQ1,
    pub triple: TripleData,
    pub finite_n: Option<usize>,
}

impl BuiltFamily {
    /// Largest degree n for which operations needing g_1..g_n nonzero are
    /// available, bounded by the requested maximum.
    pub fn cap(&self, n_max: usize) -> usize {
        match self.finite_n {
            Some(n) => n_max.min(n),
            None => n_max,
        }
    }
}

/// Builds a named family at the given parameters.
///
/// The working depth defaults to 12 and is always at least N+2 for a
/// declared-finite family (so recurrence checks at level N stay in range
/// and the truncation itself is observable).
pub fn build_family(name: &str, params: &Params, depth: Option<usize>) -> Result<BuiltFamily> {
    let entry = find(name)?;
    for required in entry.param_names {
        get(params, required)?;
    }
    let declared = declared_truncation(entry.family, params)?;
    let depth = depth.unwrap_or(12).max(declared.map_or(0, |n| n + 2));
    let spec = q1_spec(entry.family, params)?;
    let triple = spec.evaluate(depth)?;
    let effective = triple.effective_truncation();
    if let Some(n) = declared {
        if effective != Some(n) {
            return Err(inadmissible(
                entry.key,
                &format!(
                    "the lowering sequence must vanish first at k = N+1 = {} (found {:?})",
                    n + 1,
                    effective.map(|e| e + 1)
                ),
            ));
        }
    }
    Ok(BuiltFamily {
        entry,
        params: params.clone(),
        spec,
        triple,
        finite_n: effective,
    })
}
