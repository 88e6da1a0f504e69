//! Z/2-graded Lie algebras with invariant form and Casimir tensor.

mod d21;
mod form;
mod sl2;
mod validate;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{
    rat, solve_linear_system, LinearSolution, MultiPoly, Rational, RationalFunction, SparseVec,
    Var,
};

pub use d21::{d21, e_index, f_index, h_index, v_index, v_label, AlphaMode, SIGNS};
pub use form::derive_invariant_form;
pub use sl2::sl2;
pub use validate::{validate, CheckResult, ValidationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{|a||b|}` as a sign.
    pub fn koszul(a: Parity, b: Parity) -> i32 {
        if a.is_odd() && b.is_odd() {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub parity: Parity,
    /// Weight in the basis of `H*` dual to the Cartan basis.
    pub weight: Vec<i32>,
}

/// Sparse linear combination of basis elements.
pub type Combo = Vec<(usize, MultiPoly)>;

#[derive(Clone, Debug)]
pub struct RootData {
    /// Basis indices of the Cartan elements.
    pub cartan: Vec<usize>,
    /// Bilinear form on `H*` in the dual basis.
    pub hstar_form: Vec<Vec<MultiPoly>>,
    pub positive_roots: Vec<(Vec<i32>, Parity)>,
    /// `(e_i, h_i, f_i)` labels of a choice of simple generators.
    pub simple_generators: Vec<(String, String, String)>,
    /// Weights of the `e_i`.
    pub simple_roots: Vec<Vec<i32>>,
}

impl RootData {
    /// `<a, b>` for weights given in the dual basis.
    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let c = ai * bj;
                if !c.is_zero() {
                    acc += &self.hstar_form[i][j].scale(&c);
                }
            }
        }
        acc
    }

    pub fn is_positive_root(&self, w: &[i32]) -> bool {
        self.positive_roots.iter().any(|(r, _)| r.as_slice() == w)
    }

    pub fn is_negative_root(&self, w: &[i32]) -> bool {
        self.positive_roots
            .iter()
            .any(|(r, _)| r.iter().zip(w).all(|(a, b)| *a == -*b))
    }

    /// Coordinates of a weight in the basis of simple roots, if it lies in
    /// their span.
    pub fn simple_root_coordinates(&self, w: &[i32]) -> Option<Vec<Rational>> {
        let n = self.simple_roots.len();
        let rows: Vec<SparseVec<Rational>> = (0..w.len())
            .map(|c| {
                (0..n)
                    .filter(|&k| self.simple_roots[k][c] != 0)
                    .map(|k| (k, rat(self.simple_roots[k][c] as i64)))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rational> = w.iter().map(|&x| rat(x as i64)).collect();
        match solve_linear_system(&rows, &rhs, n) {
            LinearSolution::Solved { particular, nullspace } if nullspace.is_empty() => {
                Some(particular)
            }
            _ => None,
        }
    }

    /// The positive root whose simple-root coordinates dominate those of
    /// every other positive root.
    pub fn highest_root(&self) -> Option<Vec<i32>> {
        let coords: Vec<(Vec<i32>, Vec<Rational>)> = self
            .positive_roots
            .iter()
            .map(|(r, _)| Some((r.clone(), self.simple_root_coordinates(r)?)))
            .collect::<Option<_>>()?;
        coords
            .iter()
            .find(|(_, c)| {
                coords
                    .iter()
                    .all(|(_, d)| c.iter().zip(d).all(|(x, y)| x >= y))
            })
            .map(|(r, _)| r.clone())
    }
}

/// A finite-dimensional Lie superalgebra with structure constants in
/// `Q[alpha]`, an invariant form and its Casimir tensor.
#[derive(Clone)]
pub struct SuperAlgebra {
    pub name: String,
    pub basis: Vec<BasisElement>,
    /// `bracket[i][j] = [b_i, b_j]`.
    pub bracket: Vec<Vec<Combo>>,
    /// Nonzero entries `(i, j, w)` of the Casimir `sum w b_i (x) b_j`.
    pub casimir: Vec<(usize, usize, MultiPoly)>,
    /// Invariant form `g_ij = <b_i, b_j>`.
    pub form: Vec<Vec<RationalFunction>>,
    pub roots: Option<RootData>,
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuperAlgebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .finish()
    }
}

impl SuperAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn even_dim(&self) -> usize {
        self.basis.iter().filter(|b| !b.parity.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Combo {
        &self.bracket[i][j]
    }

    /// Bracket of two combinations.
    pub fn bracket_combo(&self, x: &Combo, y: &Combo) -> Combo {
        let mut acc = vec![MultiPoly::zero(); self.dim()];
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (m, c) in &self.bracket[*i][*j] {
                    acc[*m] += &(&ab * c);
                }
            }
        }
        dense_to_combo(acc)
    }

    /// Casimir coefficients as a dense-keyed map `(i, j) -> w`.
    pub fn casimir_entry(&self, i: usize, j: usize) -> MultiPoly {
        self.casimir
            .iter()
            .find(|(a, b, _)| *a == i && *b == j)
            .map(|(_, _, w)| w.clone())
            .unwrap_or_default()
    }

    /// Returns `(d, d*g)` where `d` is a common denominator of the form
    /// entries and `d*g` is polynomial, as sparse rows.
    pub fn scaled_pairing(&self) -> (MultiPoly, Vec<Vec<(usize, MultiPoly)>>) {
        let mut d = MultiPoly::one();
        for row in &self.form {
            for e in row {
                let den = e.denominator();
                if den.is_one() {
                    continue;
                }
                let g = RationalFunction::new(d.clone(), den.clone());
                // lcm(d, den) = d * den / gcd; the reduced fraction d/den
                // has denominator den/gcd.
                d = &d * g.denominator();
            }
        }
        let rows = self
            .form
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, e)| !e.numerator().is_zero())
                    .map(|(j, e)| {
                        let scaled = (&d * e.numerator())
                            .div_exact(e.denominator())
                            .expect("common denominator divides");
                        (j, scaled)
                    })
                    .collect()
            })
            .collect();
        (d, rows)
    }

    /// Specialises a symbolic algebra at a rational value of `alpha`.
    pub fn specialize_alpha(&self, value: &Rational) -> SuperAlgebra {
        let a = [(Var::Alpha, value.clone())];
        let sub = |p: &MultiPoly| p.substitute_rational(&a);
        let mut out = self.clone();
        out.bracket = self
            .bracket
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        c.iter()
                            .map(|(m, w)| (*m, sub(w)))
                            .filter(|(_, w)| !w.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        out.casimir = self
            .casimir
            .iter()
            .map(|(i, j, w)| (*i, *j, sub(w)))
            .filter(|(_, _, w)| !w.is_zero())
            .collect();
        out.form = self
            .form
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.substitute_rational(&a).expect("alpha avoids poles"))
                    .collect()
            })
            .collect();
        if let Some(r) = &mut out.roots {
            for row in &mut r.hstar_form {
                for e in row.iter_mut() {
                    *e = sub(e);
                }
            }
        }
        out.name = format!("{}[alpha={}]", self.name, crate::arith::rational::fmt_rational(value));
        out
    }
}

pub(crate) fn dense_to_combo(v: Vec<MultiPoly>) -> Combo {
    v.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// The substitution `(a, b, c) -> (-alpha - 1, 1, alpha)` of Vogel's
/// parameters, with `a, b, c` carried by `lambda, mu, nu`.
pub fn specialize_vogel_ring() -> Vec<(Var, MultiPoly)> {
    let alpha = MultiPoly::var(Var::Alpha);
    vec![
        (Var::Lambda, -&(&alpha + &MultiPoly::one())),
        (Var::Mu, MultiPoly::one()),
        (Var::Nu, alpha),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn combo(alg: &SuperAlgebra, x: &str, y: &str) -> Combo {
        alg.bracket[alg.index_of(x).unwrap()][alg.index_of(y).unwrap()].clone()
    }

    #[test]
    fn d21_bracket_table_entries() {
        let d = d21(AlphaMode::Symbolic).unwrap();
        assert_eq!((d.even_dim(), d.odd_dim(), d.dim()), (9, 8, 17));
        let v = v_index([1, -1, -1]);
        assert_eq!(combo(&d, "H1", &v_label([1, -1, -1])), vec![(v, MultiPoly::one())]);
        assert_eq!(combo(&d, "E1", "F1"), vec![(h_index(0), MultiPoly::one())]);
        assert!(combo(&d, "E1", "F2").is_empty());
    }

    #[test]
    fn d21_symbolic_validates() {
        let d = d21(AlphaMode::Symbolic).unwrap();
        let r = validate(&d);
        for c in &r.checks {
            assert!(c.passed, "{}: {:?}", c.name, c.witness);
        }
        let e1 = &d.form[e_index(0)][f_index(0)];
        let p = |s: &str| MultiPoly::parse(s).unwrap();
        assert_eq!(e1, &RationalFunction::new(p("1"), p("alpha + 1")));
    }

    #[test]
    fn d21_numeric_and_forbidden_values() {
        assert!(d21(AlphaMode::Value(rat(0))).is_err());
        assert!(d21(AlphaMode::Value(rat(-1))).is_err());
        let d = d21(AlphaMode::Value(rat(2))).unwrap();
        assert!(validate(&d).all_passed);
    }

    #[test]
    fn corrupted_constant_is_caught() {
        let mut d = d21(AlphaMode::Value(frac(1, 3))).unwrap();
        let (i, j) = (e_index(0), f_index(0));
        d.bracket[i][j] = vec![(h_index(0), MultiPoly::from_int(2))];
        let r = validate(&d);
        assert!(!r.check("super_jacobi").unwrap().passed);
        assert!(r.check("super_jacobi").unwrap().witness.is_some());
    }

    #[test]
    fn opposite_odd_casimir_sign_is_not_invariant() {
        let mut d = d21(AlphaMode::Value(rat(2))).unwrap();
        for e in d.casimir.iter_mut() {
            if d.basis[e.0].parity.is_odd() {
                e.2 = -&e.2;
            }
        }
        let r = validate(&d);
        assert!(!r.check("casimir_ad_invariant").unwrap().passed);
        assert!(!r.check("casimir_inverse_of_form").unwrap().passed);
    }

    #[test]
    fn sl2_validates() {
        let s = sl2();
        assert!(validate(&s).all_passed);
        assert_eq!(s.bracket[1][0], vec![(0, MultiPoly::from_int(2))]);
    }

    #[test]
    fn highest_root_and_inner_products() {
        let d = d21(AlphaMode::Symbolic).unwrap();
        let rd = d.roots.as_ref().unwrap();
        assert_eq!(rd.positive_roots.len(), 7);
        assert_eq!(rd.highest_root(), Some(vec![2, 0, 0]));
        assert_eq!(
            rd.simple_root_coordinates(&[2, 0, 0]),
            Some(vec![rat(2), rat(1), rat(1)])
        );
        let lam: Vec<Rational> = [3, 1, 1].iter().map(|&x| rat(x)).collect();
        let at1: Vec<Rational> = rd
            .positive_roots
            .iter()
            .map(|(b, _)| {
                let b: Vec<Rational> = b.iter().map(|&x| rat(x as i64)).collect();
                rd.inner(&lam, &b)
                    .substitute_rational(&[(Var::Alpha, rat(1))])
                    .constant_term()
            })
            .collect();
        let want: Vec<Rational> = [6, -1, -1, 2, 3, 3, 4].iter().map(|&x| rat(x)).collect();
        assert_eq!(at1, want);
    }

    #[test]
    fn vogel_ring_specialisation() {
        let m = specialize_vogel_ring();
        let p = |s: &str| MultiPoly::parse(s).unwrap();
        assert!(p("lambda + mu + nu").substitute(&m).is_zero());
        assert_eq!(p("lambda*mu + lambda*nu + mu*nu").substitute(&m), p("-1 - alpha - alpha^2"));
        assert_eq!(p("lambda*mu*nu").substitute(&m), p("-alpha - alpha^2"));
    }
}
