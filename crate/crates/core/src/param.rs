//! Real parameters that remember whether they were given exactly.
//!
//! `"3/2"` and `"-3"` parse to exact rationals; `"1.5"` or `"1e-3"` parse
//! to floating values. The degeneracy enumeration uses exact arithmetic
//! whenever both of its inputs are exact.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Real {
    Exact(Rational64),
    Approx(f64),
}

impl Real {
    pub fn value(&self) -> f64 {
        match *self {
            Real::Exact(q) => *q.numer() as f64 / *q.denom() as f64,
            Real::Approx(x) => x,
        }
    }

    pub fn exact(&self) -> Option<Rational64> {
        match *self {
            Real::Exact(q) => Some(q),
            Real::Approx(_) => None,
        }
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Real::Exact(Rational64::new(numer, denom))
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real::Approx(x)
    }
}

impl From<i64> for Real {
    fn from(x: i64) -> Self {
        Real::Exact(Rational64::from_integer(x))
    }
}

impl FromStr for Real {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::invalid(format!("cannot parse '{s}' as a number or fraction"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(Error::invalid(format!("zero denominator in '{s}'")));
            }
            return Ok(Real::ratio(num, den));
        }
        if let Ok(i) = s.parse::<i64>() {
            return Ok(Real::from(i));
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        Ok(Real::Approx(x))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(q) if *q.denom() == 1 => write!(f, "{}", q.numer()),
            Real::Exact(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Real::Approx(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value())
    }
}
