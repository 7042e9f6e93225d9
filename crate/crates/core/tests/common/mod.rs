//! Shared helpers for the integration suites: a small deterministic
//! generator and admissible parameter samplers for every catalog family.

use askey_core::catalog::{params_from, Params};
use askey_core::Scalar;

/// Splitmix64: deterministic, seedable, good enough for sampling exact
/// rational test points.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform integer in lo..=hi.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn nonzero_int_in(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let v = self.int_in(lo, hi);
            if v != 0 {
                return v;
            }
        }
    }

    /// A small nonzero rational.
    pub fn nonzero_rational(&mut self) -> Scalar {
        Scalar::ratio(self.nonzero_int_in(-9, 9), self.int_in(1, 7))
    }

    /// A small Gaussian rational point for evaluations.
    pub fn sample_point(&mut self) -> Scalar {
        let re = Scalar::ratio(self.int_in(-9, 9), self.int_in(1, 5));
        if self.int_in(0, 2) == 0 {
            let im = Scalar::ratio(self.nonzero_int_in(-5, 5), self.int_in(1, 4));
            &re + &(&im * &Scalar::i())
        } else {
            re
        }
    }
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Random admissible integer parameters for a family. Finite families get
/// N >= 7 so that sweeps up to degree 6 or 7 stay inside the truncation.
pub fn sample_params(key: &str, rng: &mut Rng) -> Params {
    match key {
        "wilson" => params_from(&[
            ("a", int(rng.int_in(1, 5))),
            ("b", int(rng.int_in(1, 5))),
            ("c", int(rng.int_in(1, 5))),
            ("d", int(rng.int_in(1, 5))),
        ]),
        "racah" => {
            // Truncate through alpha + 1 = -N; beta >= N keeps the
            // eigenvalues h_k = k(k + alpha + beta + 1) collision-free.
            let n = rng.int_in(7, 9);
            params_from(&[
                ("alpha", int(-n - 1)),
                ("beta", int(n + rng.int_in(0, 2))),
                ("gamma", int(rng.int_in(1, 3))),
                ("delta", int(rng.int_in(1, 3))),
            ])
        }
        "continuous-dual-hahn" => params_from(&[
            ("a", int(rng.int_in(1, 5))),
            ("b", int(rng.int_in(1, 5))),
            ("c", int(rng.int_in(1, 5))),
        ]),
        "dual-hahn" => params_from(&[
            ("gamma", int(rng.int_in(1, 4))),
            ("delta", int(rng.int_in(1, 4))),
            ("N", int(rng.int_in(7, 10))),
        ]),
        "continuous-hahn" => params_from(&[
            ("a", int(rng.int_in(1, 5))),
            ("b", int(rng.int_in(1, 5))),
            ("c", int(rng.int_in(1, 5))),
            ("d", int(rng.int_in(1, 5))),
        ]),
        "hahn" => params_from(&[
            ("alpha", int(rng.int_in(1, 4))),
            ("beta", int(rng.int_in(1, 4))),
            ("N", int(rng.int_in(7, 10))),
        ]),
        "meixner-pollaczek" => params_from(&[
            ("lambda", int(rng.int_in(1, 4))),
            ("t", int(rng.int_in(2, 6))),
        ]),
        "meixner" => params_from(&[
            ("beta", int(rng.int_in(1, 5))),
            ("c", int(rng.int_in(2, 6))),
        ]),
        "krawtchouk" => params_from(&[("p", int(rng.int_in(2, 5))), ("N", int(rng.int_in(7, 10)))]),
        "jacobi" => params_from(&[
            ("alpha", int(rng.int_in(1, 5))),
            ("beta", int(rng.int_in(1, 5))),
        ]),
        "charlier" => params_from(&[("a", int(rng.int_in(1, 5)))]),
        "laguerre" => params_from(&[("alpha", int(rng.int_in(0, 5)))]),
        "bessel" => params_from(&[("a", int(rng.int_in(1, 5)))]),
        "binomial" => Params::new(),
        other => panic!("no sampler for family {other}"),
    }
}
