//! Exponents of sequence spaces.
//!
//! An [`Exponent`] is one of `1`, a finite value strictly above `1`, or `inf`.
//! The endpoints are symbolic so that conjugation is exact and powers never
//! go through a large float stand-in for infinity.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite exponent `1 < p < inf` stored together with its conjugate.
///
/// Storing the pair makes `conjugate` a swap, so conjugating twice returns the
/// original value bit for bit.
#[derive(Debug, Clone, Copy)]
pub struct FiniteExponent {
    value: f64,
    dual: f64,
}

impl FiniteExponent {
    pub fn new(value: f64) -> Result<Self> {
        if !(value.is_finite() && value > 1.0) {
            return Err(Error::InvalidExponent(value.to_string()));
        }
        let dual = value / (value - 1.0);
        // Very large p rounds p/(p-1) down to exactly 1.
        if !(dual.is_finite() && dual > 1.0) {
            return Err(Error::InvalidExponent(value.to_string()));
        }
        Ok(Self { value, dual })
    }

    pub fn value(self) -> f64 {
        self.value
    }

    /// The conjugate value `p / (p - 1)`.
    pub fn dual(self) -> f64 {
        self.dual
    }

    pub fn conjugate(self) -> Self {
        Self {
            value: self.dual,
            dual: self.value,
        }
    }
}

impl PartialEq for FiniteExponent {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    One,
    Finite(FiniteExponent),
    Infinity,
}

impl Exponent {
    /// Builds an exponent from a float; exactly `1.0` maps to [`Exponent::One`].
    pub fn new(value: f64) -> Result<Self> {
        if value == 1.0 {
            Ok(Exponent::One)
        } else if value == f64::INFINITY {
            Ok(Exponent::Infinity)
        } else {
            FiniteExponent::new(value).map(Exponent::Finite)
        }
    }

    /// Shorthand for a finite exponent; panics when `value <= 1`.
    pub fn finite(value: f64) -> Self {
        match FiniteExponent::new(value) {
            Ok(f) => Exponent::Finite(f),
            Err(e) => panic!("{e}"),
        }
    }

    pub fn conjugate(self) -> Self {
        match self {
            Exponent::One => Exponent::Infinity,
            Exponent::Infinity => Exponent::One,
            Exponent::Finite(f) => Exponent::Finite(f.conjugate()),
        }
    }

    pub fn is_finite_interior(self) -> bool {
        matches!(self, Exponent::Finite(_))
    }

    pub fn as_finite(self) -> Option<FiniteExponent> {
        match self {
            Exponent::Finite(f) => Some(f),
            _ => None,
        }
    }

    /// Numeric value, with `inf` as `f64::INFINITY`. For display and limits only.
    pub fn to_f64(self) -> f64 {
        match self {
            Exponent::One => 1.0,
            Exponent::Finite(f) => f.value(),
            Exponent::Infinity => f64::INFINITY,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::One => f.write_str("1"),
            Exponent::Infinity => f.write_str("inf"),
            Exponent::Finite(p) => write!(f, "{}", p.value()),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "∞" {
            return Ok(Exponent::Infinity);
        }
        let v: f64 = t
            .parse()
            .map_err(|_| Error::InvalidExponent(t.to_string()))?;
        if v.is_infinite() {
            // "1e400" and friends: only the explicit token spells infinity.
            return Err(Error::InvalidExponent(t.to_string()));
        }
        Exponent::new(v).map_err(|_| Error::InvalidExponent(t.to_string()))
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(Exponent::One.conjugate(), Exponent::Infinity);
        assert_eq!(Exponent::Infinity.conjugate(), Exponent::One);
        assert_eq!(Exponent::finite(2.0).conjugate(), Exponent::finite(2.0));
        assert_eq!(Exponent::finite(3.0).conjugate(), Exponent::finite(1.5));
    }

    #[test]
    fn parse_tokens() {
        assert_eq!("1".parse::<Exponent>().unwrap(), Exponent::One);
        assert_eq!("1.0".parse::<Exponent>().unwrap(), Exponent::One);
        assert_eq!("INF".parse::<Exponent>().unwrap(), Exponent::Infinity);
        assert_eq!(" inf ".parse::<Exponent>().unwrap(), Exponent::Infinity);
        assert_eq!("2.5".parse::<Exponent>().unwrap(), Exponent::finite(2.5));
        for bad in ["0.5", "1e400", "-3", "nan", "abc", ""] {
            assert!(bad.parse::<Exponent>().is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(FiniteExponent::new(1.0).is_err());
        assert!(FiniteExponent::new(f64::NAN).is_err());
        assert!(FiniteExponent::new(1e300).is_err());
    }

    #[test]
    fn display_roundtrips() {
        for e in [Exponent::One, Exponent::Infinity, Exponent::finite(1.5)] {
            assert_eq!(e.to_string().parse::<Exponent>().unwrap(), e);
        }
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(v in 1.0001f64..1e6) {
            let p = Exponent::finite(v);
            let back = p.conjugate().conjugate();
            prop_assert_eq!(back.to_f64().to_bits(), v.to_bits());
            let f = p.as_finite().unwrap();
            prop_assert!((1.0 / f.value() + 1.0 / f.dual() - 1.0).abs() < 1e-12);
        }
    }
}
