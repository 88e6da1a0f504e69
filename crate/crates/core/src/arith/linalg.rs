//! Sparse exact Gaussian elimination with deterministic pivoting.

use std::collections::BTreeMap;

use super::ratfun::Field;

pub type SparseVec<F> = BTreeMap<usize, F>;

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn axpy<F: Field>(target: &mut SparseVec<F>, factor: &F, row: &SparseVec<F>) {
    for (j, c) in row {
        let delta = factor.mul(c);
        let entry = target.entry(*j).or_insert_with(F::zero);
        *entry = Field::add(&*entry, &delta);
        if entry.is_zero() {
            target.remove(j);
        }
    }
}

/// A row space kept in reduced row echelon form. Pivots are the lowest
/// column index of each row.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec<F>)> {
        self.rows.iter()
    }

    /// Reduces `v` modulo the row space.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = out.get(p).cloned() {
                axpy(&mut out, &c.neg(), row);
            }
        }
        out
    }

    /// Adds a row; returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let mut r = self.reduce(&v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = F::one().div(lead);
        for c in r.values_mut() {
            *c = Field::mul(&*c, &inv);
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &c.neg(), &r);
            }
        }
        self.rows.insert(p, r);
        true
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution<F: Field> {
    Solved {
        particular: Vec<F>,
        nullspace: Vec<Vec<F>>,
    },
    Inconsistent,
}

/// Solves `rows · x = rhs` for `x` of length `ncols`.
pub fn solve_linear_system<F: Field>(
    rows: &[SparseVec<F>],
    rhs: &[F],
    ncols: usize,
) -> LinearSolution<F> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
    let mut ech = Echelon::new();
    for (row, b) in rows.iter().zip(rhs) {
        assert!(
            row.keys().all(|&j| j < ncols),
            "row index outside the ambient dimension"
        );
        let mut aug = row.clone();
        if !b.is_zero() {
            aug.insert(ncols, b.clone());
        }
        ech.insert(aug);
    }
    if ech.rows.contains_key(&ncols) {
        return LinearSolution::Inconsistent;
    }
    let mut particular = vec![F::zero(); ncols];
    for (p, row) in &ech.rows {
        if let Some(b) = row.get(&ncols) {
            particular[*p] = b.clone();
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|j| !ech.rows.contains_key(j)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (p, row) in &ech.rows {
                if let Some(c) = row.get(&f) {
                    v[*p] = c.neg();
                }
            }
            v
        })
        .collect();
    LinearSolution::Solved {
        particular,
        nullspace,
    }
}
