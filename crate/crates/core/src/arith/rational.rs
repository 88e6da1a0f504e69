//! Arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Parses `-3`, `7/2` or `0.5`-free integer fractions.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

/// `3`, `-7/2`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn pow(q: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

/// `serialize_with` helpers writing rationals as strings.
pub mod ser {
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    use super::{fmt_rational, Rational};

    pub fn one<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(q))
    }

    pub fn many<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&fmt_rational(q))?;
        }
        seq.end()
    }
}
