//! Representations and the state-sum evaluation of word sums.


use super::network::WordSum;
use crate::arith::MultiPoly;
use crate::lie::{Parity, SuperAlgebra};
use crate::{Error, Result};

type Matrix = Vec<Vec<MultiPoly>>;

/// `rho(b_x)` stored by columns: `cols[x][i]` lists `(row, entry)`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub name: String,
    pub parity: Vec<Parity>,
    pub cols: Vec<Vec<Vec<(usize, MultiPoly)>>>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Dense matrix of `rho(b_x)`.
    pub fn matrix(&self, x: usize) -> Matrix {
        let n = self.dim();
        let mut m = vec![vec![MultiPoly::zero(); n]; n];
        for (i, col) in self.cols[x].iter().enumerate() {
            for (r, c) in col {
                m[*r][i] = c.clone();
            }
        }
        m
    }

    /// Supertrace of `rho(b_x)`.
    pub fn supertrace(&self, x: usize) -> MultiPoly {
        let mut t = MultiPoly::zero();
        for (i, col) in self.cols[x].iter().enumerate() {
            for (r, c) in col {
                if *r == i {
                    if self.parity[i].is_odd() {
                        t -= c;
                    } else {
                        t += c;
                    }
                }
            }
        }
        t
    }

    fn left_mul(&self, x: usize, m: &Matrix) -> Matrix {
        let n = self.dim();
        let mut out = vec![vec![MultiPoly::zero(); n]; n];
        for (i, col) in self.cols[x].iter().enumerate() {
            for (r, c) in col {
                for j in 0..n {
                    if !m[i][j].is_zero() {
                        out[*r][j] += &(c * &m[i][j]);
                    }
                }
            }
        }
        out
    }
}

/// The adjoint representation.
pub fn adjoint_rep(alg: &SuperAlgebra) -> Representation {
    let cols = (0..alg.dim())
        .map(|x| {
            (0..alg.dim())
                .map(|i| alg.bracket[x][i].clone())
                .collect()
        })
        .collect();
    Representation {
        name: format!("adjoint of {}", alg.name),
        parity: (0..alg.dim()).map(|i| alg.parity(i)).collect(),
        cols,
    }
}

fn eval_trie(rep: &Representation, words: &[(&Vec<u8>, &MultiPoly)], depth: usize) -> Matrix {
    let n = rep.dim();
    let mut out = vec![vec![MultiPoly::zero(); n]; n];
    let mut k = 0;
    while k < words.len() {
        let w = words[k].0;
        if w.len() == depth {
            for (i, row) in out.iter_mut().enumerate() {
                row[i] += words[k].1;
            }
            k += 1;
            continue;
        }
        let x = w[depth];
        let mut end = k;
        while end < words.len() && words[end].0.len() > depth && words[end].0[depth] == x {
            end += 1;
        }
        let inner = eval_trie(rep, &words[k..end], depth + 1);
        let prod = rep.left_mul(x as usize, &inner);
        for (orow, prow) in out.iter_mut().zip(prod) {
            for (o, p) in orow.iter_mut().zip(prow) {
                if !p.is_zero() {
                    *o += &p;
                }
            }
        }
        k = end;
    }
    out
}

/// Operator of a word sum in a representation, before dividing by the
/// denominator.
pub fn word_operator(ws: &WordSum, rep: &Representation) -> Vec<Vec<MultiPoly>> {
    let words: Vec<(&Vec<u8>, &MultiPoly)> = ws.words.iter().collect();
    eval_trie(rep, &words, 0)
}

/// Scalar by which a central word sum acts on an irreducible
/// representation. Fails if the operator is not a multiple of the identity.
pub fn state_sum_scalar(ws: &WordSum, rep: &Representation) -> Result<MultiPoly> {
    let m = word_operator(ws, rep);
    let n = rep.dim();
    let s = if n == 0 { MultiPoly::zero() } else { m[0][0].clone() };
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let expect = if i == j { &s } else { &MultiPoly::zero() };
            if e != expect {
                return Err(Error::Assertion(format!(
                    "operator is not scalar: entry ({i},{j}) is {e}, expected {expect}"
                )));
            }
        }
    }
    divide(&s, &ws.denominator)
}

pub(crate) fn divide(s: &MultiPoly, den: &MultiPoly) -> Result<MultiPoly> {
    if den.is_one() {
        return Ok(s.clone());
    }
    s.div_exact(den).ok_or_else(|| {
        Error::Assertion(format!("value {s} is not divisible by {den}"))
    })
}
