//! Sparse multivariate polynomials with rational coefficients over a fixed
//! global set of indeterminates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{fmt_rational, parse_rational, Rational};

pub const NVARS: usize = 8;

/// The indeterminates used anywhere in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha,
    N,
    Lambda,
    Mu,
    Nu,
    T,
    S2,
    S3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Alpha,
        Var::N,
        Var::Lambda,
        Var::Mu,
        Var::Nu,
        Var::T,
        Var::S2,
        Var::S3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::N => "n",
            Var::Lambda => "lambda",
            Var::Mu => "mu",
            Var::Nu => "nu",
            Var::T => "t",
            Var::S2 => "s2",
            Var::S3 => "s3",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

pub type Monomial = [u16; NVARS];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

const ONE_MONO: Monomial = [0; NVARS];

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(ONE_MONO, c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        let mut m = ONE_MONO;
        m[v.index()] = 1;
        Self::monomial(m, Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == ONE_MONO)
    }

    /// The value if the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&ONE_MONO).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&ONE_MONO).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
    }

    /// Degree where `weights[i]` is the weight of variable `i`.
    pub fn weighted_degree(&self, weights: &[u32; NVARS]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum())
            .max()
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32; NVARS]) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m[v.index()] as u32).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m[v.index()] > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.uses(v)).collect()
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, v: Var, k: u32) -> Self {
        let i = v.index();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m[i] as u32 == k {
                let mut m2 = *m;
                m2[i] = 0;
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    /// Substitutes polynomials for variables simultaneously.
    pub fn substitute(&self, assignment: &[(Var, MultiPoly)]) -> Self {
        let mut out = Self::zero();
        let mut cache: BTreeMap<(usize, u16), MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut kept = *m;
            let mut factor = Self::one();
            for (v, val) in assignment {
                let i = v.index();
                let e = m[i];
                if e == 0 {
                    continue;
                }
                kept[i] = 0;
                let pw = cache
                    .entry((i, e))
                    .or_insert_with(|| val.pow(e as u32))
                    .clone();
                factor = &factor * &pw;
            }
            let term = Self::monomial(kept, c.clone());
            out += &(&term * &factor);
        }
        out
    }

    pub fn substitute_rational(&self, assignment: &[(Var, Rational)]) -> Self {
        let a: Vec<(Var, MultiPoly)> = assignment
            .iter()
            .map(|(v, q)| (*v, MultiPoly::constant(q.clone())))
            .collect();
        self.substitute(&a)
    }

    /// Dense coefficients (lowest degree first) if only `v` occurs.
    pub fn to_univariate(&self, v: Var) -> Option<Vec<Rational>> {
        let i = v.index();
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            out[m[i] as usize] = c.clone();
        }
        if self.is_zero() {
            out.clear();
        }
        Some(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[Rational]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut m = ONE_MONO;
            m[v.index()] = k as u16;
            p.add_term(m, c.clone());
        }
        p
    }

    /// Leading term in lexicographic order (variables in `Var::ALL` order).
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !rm.iter().zip(dm.iter()).all(|(a, b)| a >= b) {
                return None;
            }
            let mut qm = ONE_MONO;
            for j in 0..NVARS {
                qm[j] = rm[j] - dm[j];
            }
            let qc = rc / &dc;
            let t = Self::monomial(qm, qc);
            rem -= &(&t * divisor);
            quot += &t;
        }
        Some(quot)
    }

    /// Rational number that makes the leading coefficient one.
    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn parse(s: &str) -> Result<MultiPoly, String> {
        Parser::new(s).parse_all()
    }

    /// Renames variables (the map must be injective on the variables used).
    pub fn rename(&self, map: &[(Var, Var)]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            for (from, _) in map {
                m2[from.index()] = 0;
            }
            for (from, to) in map {
                m2[to.index()] += m[from.index()];
            }
            out.add_term(m2, c.clone());
        }
        out
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl<'a> AddAssign<&'a MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &'a MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &'a MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'b> Add<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = *ma;
                for j in 0..NVARS {
                    m[j] += mb[j];
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &'a MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::one()
    }
}

fn graded_key(m: &Monomial) -> (u32, Monomial) {
    (m.iter().map(|&e| e as u32).sum(), *m)
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms by descending total degree, then descending
    /// lexicographic exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| graded_key(b.0).cmp(&graded_key(a.0)));
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for v in Var::ALL {
                match m[v.index()] {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Recursive-descent parser for `+ - * ^ ( )`, rationals and variable names.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<MultiPoly, String> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(format!("unexpected input at byte {}", self.pos));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<MultiPoly, String> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, String> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly, String> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| format!("bad exponent at byte {start}"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err("missing ')'".into());
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'/')
                {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                parse_rational(s)
                    .map(MultiPoly::constant)
                    .ok_or_else(|| format!("bad number '{s}'"))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Var::from_name(s)
                    .map(MultiPoly::var)
                    .ok_or_else(|| format!("unknown variable '{s}'"))
            }
            _ => Err(format!("unexpected end or symbol at byte {}", self.pos)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{frac, rat};

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn eval_alpha_square_plus_alpha() {
        let q = p("alpha^2 + alpha");
        assert_eq!(q.substitute_rational(&[(Var::Alpha, rat(1))]), MultiPoly::from_int(2));
    }

    #[test]
    fn eval_sigma3() {
        let q = p("s3");
        let r = q.substitute(&[(Var::S3, p("-alpha - alpha^2"))]);
        assert_eq!(r, p("-alpha-alpha^2"));
    }

    #[test]
    fn eval_one_plus_alpha_times_n_squared() {
        let q = p("(1+alpha)*n^2");
        assert_eq!(q.substitute_rational(&[(Var::Alpha, rat(1))]), p("2*n^2"));
    }

    #[test]
    fn display_is_canonical() {
        let q = p("3 - n + 1/2*alpha*n + alpha^2");
        assert_eq!(q.to_string(), "alpha^2 + 1/2*alpha*n - n + 3");
        assert_eq!(p(&q.to_string()), q);
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("-alpha").to_string(), "-alpha");
    }

    #[test]
    fn exact_division() {
        let a = p("(alpha+1)^2*(n-3)*alpha");
        let d = p("alpha*(alpha+1)");
        assert_eq!(a.div_exact(&d).unwrap(), p("(alpha+1)*(n-3)"));
        assert!(p("alpha + 2").div_exact(&p("alpha+1")).is_none());
    }

    #[test]
    fn coefficient_extraction() {
        let q = p("n^2*alpha + 3*n^2 - n + 5");
        assert_eq!(q.coeff_in(Var::N, 2), p("alpha + 3"));
        assert_eq!(q.coeff_in(Var::N, 0), p("5"));
        assert_eq!(q.degree_in(Var::N), Some(2));
        assert_eq!(q.scale(&frac(1, 2)), p("1/2*n^2*alpha + 3/2*n^2 - 1/2*n + 5/2"));
    }
}
