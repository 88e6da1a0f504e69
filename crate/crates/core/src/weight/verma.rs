//! Action of word sums on the highest weight vector of a Verma module with
//! highest weight `n * lambda0`, by PBW straightening.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::atomic::{AtomicUsize, Ordering};


use super::network::WordSum;
use super::rep::divide;
use crate::arith::{rat, MultiPoly, Rational, Var};
use crate::lie::SuperAlgebra;
use crate::{Error, Result};

/// PBW monomial: exponents of the negative root vectors in basis order.
type Mono = Vec<u8>;
type Vector = BTreeMap<Mono, MultiPoly>;

static CHECKED: AtomicUsize = AtomicUsize::new(0);
static VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

/// `(evaluations checked, degree violations)` since process start.
pub fn verma_stats() -> (usize, usize) {
    (CHECKED.load(Ordering::Relaxed), VIOLATIONS.load(Ordering::Relaxed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Raise,
    Cartan(usize),
    Lower(usize),
}

pub struct Verma<'a> {
    alg: &'a SuperAlgebra,
    roles: Vec<Role>,
    lower: Vec<usize>,
    lambda: Vec<MultiPoly>,
    memo: HashMap<(usize, Mono), Rc<Vector>>,
}

fn axpy(out: &mut Vector, c: &MultiPoly, v: &Vector) {
    for (m, x) in v {
        let e = out.entry(m.clone()).or_default();
        *e += &(c * x);
        if e.is_zero() {
            out.remove(m);
        }
    }
}

impl<'a> Verma<'a> {
    /// `lambda0` lists the values on the Cartan basis, scaled by `n`.
    pub fn new(alg: &'a SuperAlgebra, lambda0: &[Rational]) -> Result<Self> {
        let roots = alg
            .roots
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument(format!("{} has no root data", alg.name)))?;
        if lambda0.len() != roots.cartan.len() {
            return Err(Error::InvalidArgument(format!(
                "highest weight needs {} coordinates",
                roots.cartan.len()
            )));
        }
        let mut roles = Vec::with_capacity(alg.dim());
        let mut lower = Vec::new();
        for (i, b) in alg.basis.iter().enumerate() {
            let role = if let Some(k) = roots.cartan.iter().position(|&c| c == i) {
                Role::Cartan(k)
            } else if roots.is_positive_root(&b.weight) {
                Role::Raise
            } else if roots.is_negative_root(&b.weight) {
                lower.push(i);
                Role::Lower(lower.len() - 1)
            } else {
                return Err(Error::InvalidArgument(format!(
                    "basis element {} is not a root vector",
                    b.label
                )));
            };
            roles.push(role);
        }
        let n = MultiPoly::var(Var::N);
        let lambda = lambda0.iter().map(|c| n.scale(c)).collect();
        Ok(Self {
            alg,
            roles,
            lower,
            lambda,
            memo: HashMap::new(),
        })
    }

    fn odd(&self, i: usize) -> bool {
        self.alg.parity(i).is_odd()
    }

    /// `b_x` applied to the PBW vector `mono * v_lambda`.
    fn act(&mut self, x: usize, mono: &Mono) -> Rc<Vector> {
        if let Some(v) = self.memo.get(&(x, mono.clone())) {
            return v.clone();
        }
        let v = Rc::new(self.act_raw(x, mono));
        self.memo.insert((x, mono.clone()), v.clone());
        v
    }

    fn act_combo(&mut self, combo: &[(usize, MultiPoly)], mono: &Mono, scale: &MultiPoly, out: &mut Vector) {
        for (m, c) in combo {
            let v = self.act(*m, mono);
            axpy(out, &(c * scale), &v);
        }
    }

    fn act_raw(&mut self, x: usize, mono: &Mono) -> Vector {
        let mut out = Vector::new();
        let Some(a) = mono.iter().position(|&e| e > 0) else {
            match self.roles[x] {
                Role::Raise => {}
                Role::Cartan(k) => {
                    if !self.lambda[k].is_zero() {
                        out.insert(mono.clone(), self.lambda[k].clone());
                    }
                }
                Role::Lower(p) => {
                    let mut m = mono.clone();
                    m[p] += 1;
                    out.insert(m, MultiPoly::one());
                }
            }
            return out;
        };
        let ya = self.lower[a];
        if let Role::Lower(p) = self.roles[x] {
            if p < a || (p == a && !self.odd(x)) {
                let mut m = mono.clone();
                m[p] += 1;
                out.insert(m, MultiPoly::one());
                return out;
            }
            if p == a {
                // x x = [x, x] / 2 for odd x.
                let mut rest = mono.clone();
                rest[a] -= 1;
                let br = self.alg.bracket[x][x].clone();
                self.act_combo(&br, &rest, &MultiPoly::constant(half()), &mut out);
                return out;
            }
        }
        // x ya rest = [x, ya] rest + (-1)^{|x||ya|} ya (x rest)
        let mut rest = mono.clone();
        rest[a] -= 1;
        let br = self.alg.bracket[x][ya].clone();
        self.act_combo(&br, &rest, &MultiPoly::one(), &mut out);
        let inner = self.act(x, &rest);
        let sign = if self.odd(x) && self.odd(ya) { -1 } else { 1 };
        let s = MultiPoly::from_int(sign);
        for (m, c) in inner.iter() {
            let v = self.act(ya, m);
            axpy(&mut out, &(c * &s), &v);
        }
        out
    }

    /// Applies a word sum to `v_lambda`.
    pub fn apply(&mut self, ws: &WordSum) -> Vector {
        let vac: Mono = vec![0; self.lower.len()];
        let mut suffix: HashMap<Vec<u8>, Rc<Vector>> = HashMap::new();
        suffix.insert(Vec::new(), Rc::new(BTreeMap::from([(vac, MultiPoly::one())])));
        let mut total = Vector::new();
        for (w, c) in &ws.words {
            let v = self.suffix_value(w, &mut suffix);
            axpy(&mut total, c, &v);
        }
        total
    }

    fn suffix_value(&mut self, w: &[u8], memo: &mut HashMap<Vec<u8>, Rc<Vector>>) -> Rc<Vector> {
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let tail = self.suffix_value(&w[1..], memo);
        let mut out = Vector::new();
        for (m, c) in tail.iter() {
            let v = self.act(w[0] as usize, m);
            axpy(&mut out, c, &v);
        }
        let out = Rc::new(out);
        memo.insert(w.to_vec(), out.clone());
        out
    }

    /// Scalar of a central word sum on the Verma module, a polynomial in
    /// `n` of degree at most the word length.
    pub fn scalar(&mut self, ws: &WordSum) -> Result<MultiPoly> {
        let v = self.apply(ws);
        let vac: Mono = vec![0; self.lower.len()];
        for (m, c) in &v {
            if *m != vac {
                return Err(Error::Assertion(format!(
                    "word sum is not central: PBW coefficient {c} off the highest weight vector"
                )));
            }
        }
        let s = divide(&v.get(&vac).cloned().unwrap_or_default(), &ws.denominator)?;
        CHECKED.fetch_add(1, Ordering::Relaxed);
        let deg = s.degree_in(Var::N).unwrap_or(0) as usize;
        if deg > ws.max_len() {
            VIOLATIONS.fetch_add(1, Ordering::Relaxed);
            return Err(Error::Assertion(format!(
                "degree {deg} in n exceeds word length {}",
                ws.max_len()
            )));
        }
        Ok(s)
    }
}

fn half() -> Rational {
    rat(1) / rat(2)
}
