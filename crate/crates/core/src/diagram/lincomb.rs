use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{canonicalize, Diagram};
use crate::arith::{rational::fmt_rational, Rational};

/// Linear combination of canonical diagrams with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Diagram, Rational>,
}

impl LinComb {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        let mut c = Self::new();
        c.add_diagram(d, &Rational::from_integer(1.into()));
        c
    }

    /// Adds `coeff * d` after canonicalising `d`.
    pub fn add_diagram(&mut self, d: &Diagram, coeff: &Rational) {
        let (c, s) = canonicalize(d);
        if s == 0 || coeff.is_zero() {
            return;
        }
        self.add_canonical(c, &(coeff * Rational::from_integer(s.into())));
    }

    fn add_canonical(&mut self, d: Diagram, coeff: &Rational) {
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff.clone());
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, coeff: &Rational) {
        for (d, c) in &other.terms {
            self.add_canonical(d.clone(), &(c * coeff));
        }
    }

    pub fn scale(&self, coeff: &Rational) -> LinComb {
        let mut out = LinComb::new();
        out.add_scaled(self, coeff);
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::from_integer(1.into()));
        out
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer(1.into()));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> Rational {
        let (c, s) = canonicalize(d);
        if s == 0 {
            return Rational::zero();
        }
        self.terms
            .get(&c)
            .map(|x| x * Rational::from_integer(s.into()))
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Diagram, Rational> {
        self.terms
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "coefficient {}", fmt_rational(c))?;
            write!(f, "{}", d.to_text().trim_end())?;
        }
        Ok(())
    }
}
