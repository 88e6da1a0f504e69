use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{
    solve_linear_system, LinearSolution, MultiPoly, RationalFunction, SparseVec,
};
use crate::{Error, Result};

use super::{Parity, SuperAlgebra};

/// Solves for the invariant supersymmetric even form of `alg` subject to the
/// prescribed entries `normalization`. Only pairs of opposite weight and equal
/// parity are allowed to be nonzero. Fails unless the solution is unique.
pub fn derive_invariant_form(
    alg: &SuperAlgebra,
    normalization: &[(usize, usize, RationalFunction)],
) -> Result<Vec<Vec<RationalFunction>>> {
    let n = alg.dim();
    let mut unknown: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let opposite = alg.basis[i]
                .weight
                .iter()
                .zip(&alg.basis[j].weight)
                .all(|(a, b)| a + b == 0);
            if opposite && alg.parity(i) == alg.parity(j) {
                let k = unknown.len();
                unknown.insert((i, j), k);
            }
        }
    }
    let nv = unknown.len();
    let mut rows: Vec<SparseVec<RationalFunction>> = Vec::new();
    let mut rhs: Vec<RationalFunction> = Vec::new();

    let mut push = |acc: BTreeMap<usize, MultiPoly>, b: RationalFunction| {
        let row: SparseVec<RationalFunction> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, RationalFunction::from_poly(c)))
            .collect();
        if !row.is_empty() || !b.is_zero() {
            rows.push(row);
            rhs.push(b);
        }
    };

    // <[b_i, b_j], b_k> - <b_i, [b_j, b_k]> = 0
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc: BTreeMap<usize, MultiPoly> = BTreeMap::new();
                for (m, c) in &alg.bracket[i][j] {
                    if let Some(&u) = unknown.get(&(*m, k)) {
                        *acc.entry(u).or_default() += c;
                    }
                }
                for (m, c) in &alg.bracket[j][k] {
                    if let Some(&u) = unknown.get(&(i, *m)) {
                        *acc.entry(u).or_default() -= c;
                    }
                }
                push(acc, RationalFunction::zero());
            }
        }
    }
    for (&(i, j), &u) in &unknown {
        if i < j {
            let v = unknown[&(j, i)];
            let s = Parity::koszul(alg.parity(i), alg.parity(j));
            let mut acc = BTreeMap::new();
            acc.insert(u, MultiPoly::from_int(1));
            acc.insert(v, MultiPoly::from_int(-s as i64));
            push(acc, RationalFunction::zero());
        }
    }
    for (i, j, val) in normalization {
        let u = *unknown.get(&(*i, *j)).ok_or_else(|| {
            Error::InvalidArgument(format!("normalization entry ({i},{j}) is forced to vanish"))
        })?;
        let mut acc = BTreeMap::new();
        acc.insert(u, MultiPoly::from_int(1));
        push(acc, val.clone());
    }

    match solve_linear_system(&rows, &rhs, nv) {
        LinearSolution::Inconsistent => Err(Error::Assertion(
            "no invariant form with the given normalization".into(),
        )),
        LinearSolution::Solved { nullspace, .. } if !nullspace.is_empty() => {
            Err(Error::Assertion(format!(
                "invariant form not determined: {} free parameters",
                nullspace.len()
            )))
        }
        LinearSolution::Solved { particular, .. } => {
            let mut g = vec![vec![RationalFunction::zero(); n]; n];
            for (&(i, j), &u) in &unknown {
                g[i][j] = particular[u].clone();
            }
            Ok(g)
        }
    }
}
