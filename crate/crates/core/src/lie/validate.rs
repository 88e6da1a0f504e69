use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{Echelon, Field, MultiPoly, RationalFunction, SparseVec};

use super::{Combo, Parity, SuperAlgebra};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of identities checked.
    pub checked: usize,
    /// First failing instance.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub dim: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

impl ValidationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    name: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.into(),
            passed: self.witness.is_none(),
            checked: self.checked,
            witness: self.witness,
        }
    }
}

fn sub_combo(x: &Combo, y: &Combo, n: usize) -> Vec<MultiPoly> {
    let mut acc = vec![MultiPoly::zero(); n];
    for (i, c) in x {
        acc[*i] += c;
    }
    for (i, c) in y {
        acc[*i] -= c;
    }
    acc
}

fn scale_combo(x: &Combo, s: &MultiPoly) -> Combo {
    x.iter().map(|(i, c)| (*i, c * s)).collect()
}

fn sign(s: i32) -> MultiPoly {
    MultiPoly::from_int(s as i64)
}

fn pairing(alg: &SuperAlgebra, x: &Combo, y: &Combo) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for (i, a) in x {
        for (j, b) in y {
            let g = &alg.form[*i][*j];
            if !g.is_zero() {
                let ab = RationalFunction::from_poly(a * b);
                acc = Field::add(&acc, &Field::mul(&ab, g));
            }
        }
    }
    acc
}

/// Runs every structural check on `alg`; all comparisons are exact.
pub fn validate(alg: &SuperAlgebra) -> ValidationReport {
    let n = alg.dim();
    let p = |i: usize| alg.parity(i);
    let lbl = |i: usize| alg.basis[i].label.as_str();
    let unit = |i: usize| -> Combo { vec![(i, MultiPoly::one())] };
    let mut checks = Vec::new();

    let mut t = Tally::new("super_antisymmetry");
    for i in 0..n {
        for j in 0..n {
            let s = sign(-Parity::koszul(p(i), p(j)));
            let diff = sub_combo(&alg.bracket[i][j], &scale_combo(&alg.bracket[j][i], &s), n);
            t.record(diff.iter().all(|c| c.is_zero()), || {
                format!("[{}, {}]", lbl(i), lbl(j))
            });
        }
    }
    checks.push(t.finish());

    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    let mut t = Tally::new("super_jacobi");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = alg.bracket_combo(&unit(i), &alg.bracket[j][k]);
                let r1 = alg.bracket_combo(&alg.bracket[i][j], &unit(k));
                let r2 = scale_combo(
                    &alg.bracket_combo(&unit(j), &alg.bracket[i][k]),
                    &sign(Parity::koszul(p(i), p(j))),
                );
                let mut acc = sub_combo(&lhs, &r1, n);
                for (m, c) in r2 {
                    acc[m] -= &c;
                }
                t.record(acc.iter().all(|c| c.is_zero()), || {
                    format!("({}, {}, {})", lbl(i), lbl(j), lbl(k))
                });
            }
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("form_supersymmetric_even");
    for i in 0..n {
        for j in 0..n {
            let g = &alg.form[i][j];
            let ok = if p(i) != p(j) {
                g.is_zero()
            } else {
                let s = RationalFunction::from_poly(sign(Parity::koszul(p(i), p(j))));
                *g == Field::mul(&s, &alg.form[j][i])
            };
            t.record(ok, || format!("<{}, {}>", lbl(i), lbl(j)));
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("form_invariant");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = pairing(alg, &alg.bracket[i][j], &unit(k));
                let b = pairing(alg, &unit(i), &alg.bracket[j][k]);
                t.record(a == b, || format!("({}, {}, {})", lbl(i), lbl(j), lbl(k)));
            }
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("form_regular");
    let mut ech: Echelon<RationalFunction> = Echelon::new();
    for row in &alg.form {
        let sv: SparseVec<RationalFunction> = row
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(j, e)| (j, e.clone()))
            .collect();
        ech.insert(sv);
    }
    let rank = ech.rank();
    t.record(rank == n, || format!("rank {rank} < {n}"));
    checks.push(t.finish());

    // sum_j w^{ij} g_{jk} = delta_{ik}
    let mut t = Tally::new("casimir_inverse_of_form");
    for i in 0..n {
        for k in 0..n {
            let mut acc = RationalFunction::zero();
            for (a, j, w) in &alg.casimir {
                if *a == i && !alg.form[*j][k].is_zero() {
                    let term = Field::mul(&RationalFunction::from_poly(w.clone()), &alg.form[*j][k]);
                    acc = Field::add(&acc, &term);
                }
            }
            let expect = if i == k {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            };
            t.record(acc == expect, || {
                format!("(w g)[{}, {}] = {}", lbl(i), lbl(k), acc)
            });
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("casimir_supersymmetric");
    for (i, j, w) in &alg.casimir {
        let back = alg.casimir_entry(*j, *i);
        let ok = back == w * &sign(Parity::koszul(p(*i), p(*j)));
        t.record(ok, || format!("w[{}, {}]", lbl(*i), lbl(*j)));
    }
    checks.push(t.finish());

    // sum w^{ij} ([x,b_i] (x) b_j + (-1)^{|x||b_i|} b_i (x) [x,b_j]) = 0
    let mut t = Tally::new("casimir_ad_invariant");
    for x in 0..n {
        let mut acc = vec![vec![MultiPoly::zero(); n]; n];
        for (i, j, w) in &alg.casimir {
            for (m, c) in &alg.bracket[x][*i] {
                acc[*m][*j] += &(w * c);
            }
            let s = sign(Parity::koszul(p(x), p(*i)));
            for (m, c) in &alg.bracket[x][*j] {
                acc[*i][*m] += &(&(w * c) * &s);
            }
        }
        let bad = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| !acc[a][b].is_zero());
        t.record(bad.is_none(), || {
            let (a, b) = bad.unwrap();
            format!("x = {}, component {} (x) {}", lbl(x), lbl(a), lbl(b))
        });
    }
    checks.push(t.finish());

    let all_passed = checks.iter().all(|c| c.passed);
    ValidationReport {
        algebra: alg.name.clone(),
        dim: n,
        even_dim: alg.even_dim(),
        odd_dim: alg.odd_dim(),
        checks,
        all_passed,
    }
}
