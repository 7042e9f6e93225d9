//! Degree triples (q = 1 scheme) and bidegree triples (q-scheme).

use std::fmt;

use crate::error::{Error, Result};

/// (deg x, deg g, deg h): the degrees in k of the data sequences, labelling
/// a node of the q = 1 scheme.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct DegreeTriple {
    pub x: u8,
    pub g: u8,
    pub h: u8,
}

impl DegreeTriple {
    /// Validates the scheme rules:
    /// deg(x) in {0,1,2}, deg(g) in {1..4}, deg(h) in {1,2};
    /// deg(g) = deg(x) + deg(h) when the sum is at least 3, else deg(g) <= 2.
    pub fn new(x: u8, g: u8, h: u8) -> Result<DegreeTriple> {
        if x > 2 || !(1..=4).contains(&g) || !(1..=2).contains(&h) {
            return Err(Error::RuleViolation(format!(
                "degrees ({x},{g},{h}) out of range"
            )));
        }
        if x + h >= 3 {
            if g != x + h {
                return Err(Error::RuleViolation(format!(
                    "deg(g) = {g} but deg(x) + deg(h) = {}",
                    x + h
                )));
            }
        } else if g > 2 {
            return Err(Error::RuleViolation(format!(
                "deg(g) = {g} > 2 while deg(x) + deg(h) = {}",
                x + h
            )));
        }
        Ok(DegreeTriple { x, g, h })
    }
}

impl fmt::Display for DegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.g, self.h)
    }
}

/// Laurent-degree boundaries of q-case data in powers of q^k:
/// (deg-(x), deg+(x); deg-(g), deg+(g); deg-(h), deg+(h)).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct BidegreeTriple {
    pub x: (i8, i8),
    pub g: (i8, i8),
    pub h: (i8, i8),
}

impl BidegreeTriple {
    pub fn new(x: (i8, i8), g: (i8, i8), h: (i8, i8)) -> Result<BidegreeTriple> {
        let range_err = |what: &str| Error::BidegreeInvalid(format!("{what} out of range"));
        if !(0..=1).contains(&x.1) || !(-1..=0).contains(&x.0) {
            return Err(range_err("deg(x)"));
        }
        if !(0..=1).contains(&h.1) || !(-1..=0).contains(&h.0) {
            return Err(range_err("deg(h)"));
        }
        if h.0 >= h.1 {
            return Err(Error::BidegreeInvalid("deg-(h) must be < deg+(h)".into()));
        }
        if g.0 < -2 || g.1 > 2 || g.0 >= g.1 {
            return Err(Error::BidegreeInvalid(
                "need -2 <= deg-(g) < deg+(g) <= 2".into(),
            ));
        }
        Ok(BidegreeTriple { x, g, h })
    }

    /// The q <-> 1/q duality: each pair (lo, hi) maps to (-hi, -lo).
    /// Applying it twice is the identity.
    pub fn q_dual(&self) -> BidegreeTriple {
        let flip = |(lo, hi): (i8, i8)| (-hi, -lo);
        BidegreeTriple {
            x: flip(self.x),
            g: flip(self.g),
            h: flip(self.h),
        }
    }

    /// Componentwise widths deg+ - deg-, the candidate q -> 1 degree triple.
    pub fn widths(&self) -> (u8, u8, u8) {
        (
            (self.x.1 - self.x.0) as u8,
            (self.g.1 - self.g.0) as u8,
            (self.h.1 - self.h.0) as u8,
        )
    }
}

impl fmt::Display for BidegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{};{},{};{},{}",
            self.x.0, self.x.1, self.g.0, self.g.1, self.h.0, self.h.1
        )
    }
}
