//! Rational functions over the global indeterminates.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::poly::{MultiPoly, Var};
use super::rational::Rational;
use super::univariate;

/// `numerator / denominator`, denominator nonzero with leading coefficient
/// one. When both parts are univariate in the same variable the fraction is
/// fully reduced; otherwise only constants are normalised.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Self { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    fn single_var(&self) -> Option<Var> {
        let mut vars = self.num.vars();
        vars.extend(self.den.vars());
        vars.sort();
        vars.dedup();
        match vars.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        if let Some(v) = self.single_var() {
            let a = self.num.to_univariate(v).unwrap();
            let b = self.den.to_univariate(v).unwrap();
            let g = univariate::gcd(&a, &b);
            if univariate::degree(&g).unwrap_or(0) > 0 {
                let (qa, _) = univariate::divrem(&a, &g);
                let (qb, _) = univariate::divrem(&b, &g);
                self.num = MultiPoly::from_univariate(v, &qa);
                self.den = MultiPoly::from_univariate(v, &qb);
            }
        }
        let lc = self.den.leading_coefficient();
        if !lc.is_one() {
            let inv = Rational::one() / lc;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn inv(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn substitute_rational(&self, assignment: &[(Var, Rational)]) -> Option<Self> {
        let d = self.den.substitute_rational(assignment);
        if d.is_zero() {
            return None;
        }
        Some(Self::new(self.num.substitute_rational(assignment), d))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Exact field operations used by the linear solver.
pub trait Field: Clone + PartialEq + fmt::Debug + Zero + One {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Rational {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
}

impl std::ops::Add for RationalFunction {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Field::add(&self, &o)
    }
}

impl std::ops::Mul for RationalFunction {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Field::mul(&self, &o)
    }
}

impl Field for RationalFunction {
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        Self::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.num.is_zero(), "division by zero rational function");
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }
    fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn reduces_univariate_fractions() {
        let r = RationalFunction::new(p("alpha^2 - 1"), p("2*alpha + 2"));
        assert_eq!(r.numerator(), &p("1/2*alpha - 1/2"));
        assert!(r.is_polynomial());
        let s = RationalFunction::new(p("2"), p("1 + alpha"));
        assert_eq!(s.to_string(), "(2)/(alpha + 1)");
        let prod = Field::mul(&s, &RationalFunction::from_poly(p("alpha+1")));
        assert_eq!(prod.as_polynomial(), Some(&p("2")));
    }

    #[test]
    fn field_identities() {
        let a = RationalFunction::new(p("alpha"), p("alpha + 1"));
        let b = RationalFunction::new(p("1"), p("alpha"));
        let s = Field::add(&a, &b);
        assert_eq!(s, RationalFunction::new(p("alpha^2 + alpha + 1"), p("alpha^2+alpha")));
        assert_eq!(Field::sub(&s, &b), a);
        assert_eq!(Field::div(&a, &a), RationalFunction::one());
    }
}
