//! Symmetric polynomials in `lambda, mu, nu` and their elementary
//! coordinates `t = e1, s2 = e2, s3 = e3`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{MultiPoly, Var};
use crate::{Error, Result};

const ROOTS: [Var; 3] = [Var::Lambda, Var::Mu, Var::Nu];

/// A polynomial in `lambda, mu, nu`, symmetric under all permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly(MultiPoly);

impl SymPoly {
    pub fn new(p: MultiPoly) -> Result<Self> {
        if p.vars().iter().any(|v| !ROOTS.contains(v)) {
            return Err(Error::InvalidArgument(format!(
                "{p} uses variables other than lambda, mu, nu"
            )));
        }
        if !is_symmetric(&p) {
            return Err(Error::InvalidArgument(format!("{p} is not symmetric")));
        }
        Ok(Self(p))
    }

    /// From an expression in `t, s2, s3` (read as `e1, e2, e3`) and
    /// possibly `lambda, mu, nu`.
    pub fn from_elementary(p: &MultiPoly) -> Result<Self> {
        Self::new(expand_elementary(p))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn t() -> Self {
        Self(e(1))
    }

    pub fn e2() -> Self {
        Self(e(2))
    }

    pub fn e3() -> Self {
        Self(e(3))
    }

    pub fn one() -> Self {
        Self(MultiPoly::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self(&self.0 * &o.0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.0.degree().unwrap_or(0);
        self.0.terms().all(|(m, _)| m.iter().map(|&e| e as u32).sum::<u32>() == d)
    }

    /// Coordinates in `t, s2, s3`.
    pub fn elementary(&self) -> MultiPoly {
        to_elementary(&self.0)
    }

    /// `t` divides the polynomial.
    pub fn divisible_by_t(&self) -> bool {
        self.elementary()
            .substitute_rational(&[(Var::T, crate::arith::rat(0))])
            .is_zero()
    }

    pub fn eval(&self, l: MultiPoly, m: MultiPoly, n: MultiPoly) -> MultiPoly {
        self.0.substitute(&[(Var::Lambda, l), (Var::Mu, m), (Var::Nu, n)])
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn e(k: usize) -> MultiPoly {
    let v: Vec<MultiPoly> = ROOTS.iter().map(|&x| MultiPoly::var(x)).collect();
    match k {
        1 => &(&v[0] + &v[1]) + &v[2],
        2 => &(&(&v[0] * &v[1]) + &(&v[1] * &v[2])) + &(&v[2] * &v[0]),
        3 => &(&v[0] * &v[1]) * &v[2],
        _ => MultiPoly::one(),
    }
}

fn is_symmetric(p: &MultiPoly) -> bool {
    let swaps = [(Var::Lambda, Var::Mu), (Var::Mu, Var::Nu)];
    swaps
        .iter()
        .all(|&(a, b)| p.rename(&[(a, b), (b, a)]) == *p)
}

/// Rewrites a symmetric polynomial in elementary symmetric functions by
/// peeling off leading monomials.
pub fn to_elementary(p: &MultiPoly) -> MultiPoly {
    let (l, m, n) = (Var::Lambda.index(), Var::Mu.index(), Var::Nu.index());
    let mut rest = p.clone();
    let mut out = MultiPoly::zero();
    let gens = [e(1), e(2), e(3)];
    while let Some((mono, c)) = rest.leading_term() {
        let (a, b, cc) = (mono[l] as u32, mono[m] as u32, mono[n] as u32);
        debug_assert!(a >= b && b >= cc, "leading monomial of a symmetric polynomial");
        let c = c.clone();
        let mut key = [0u16; crate::arith::poly::NVARS];
        key[Var::T.index()] = (a - b) as u16;
        key[Var::S2.index()] = (b - cc) as u16;
        key[Var::S3.index()] = cc as u16;
        out.add_term(key, c.clone());
        let term = &(&gens[0].pow(a - b) * &gens[1].pow(b - cc)) * &gens[2].pow(cc);
        rest -= &term.scale(&c);
    }
    out
}

/// Substitutes `t, s2, s3` by the elementary symmetric functions.
pub fn expand_elementary(p: &MultiPoly) -> MultiPoly {
    p.substitute(&[(Var::T, e(1)), (Var::S2, e(2)), (Var::S3, e(3))])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = MultiPoly::parse("t^3*s2 - 2*s3^2 + 5*t*s3 + 7").unwrap();
        let s = SymPoly::from_elementary(&p).unwrap();
        assert_eq!(s.elementary(), p);
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SymPoly::new(MultiPoly::parse("lambda^2 + mu").unwrap()).is_err());
        assert!(SymPoly::new(MultiPoly::parse("alpha").unwrap()).is_err());
    }
}
