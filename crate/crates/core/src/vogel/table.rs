//! Parameter triples of the simple Lie algebra families.

use serde::Serialize;

use super::{p_factors, SymPoly};
use crate::arith::MultiPoly;
use crate::{Error, Result};

pub const DEFAULT_TABLE: &str = include_str!("../../data/vogel-table.txt");
const HEADER: &str = "vogel-table v1";

#[derive(Clone, Debug, Serialize)]
pub struct LieParamFamily {
    pub name: String,
    /// `(lambda, mu, nu)` as polynomials in the family parameter `n`.
    pub triple: [MultiPoly; 3],
    pub factor: usize,
}

pub fn parse_table(text: &str) -> Result<Vec<LieParamFamily>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, HEADER)) => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header '{HEADER}', found {:?}",
                other.map(|x| x.1)
            )))
        }
    }
    let mut out = Vec::new();
    for (no, line) in lines {
        let cols: Vec<&str> = line.split(';').map(str::trim).collect();
        if cols.len() != 5 {
            return Err(Error::Parse(format!("line {no}: expected 5 fields")));
        }
        let poly = |s: &str| {
            let p = MultiPoly::parse(s).map_err(|e| Error::Parse(format!("line {no}: {e}")))?;
            if p.vars().iter().any(|&v| v != crate::arith::Var::N) {
                return Err(Error::Parse(format!("line {no}: only the parameter n may occur")));
            }
            Ok(p)
        };
        let factor: usize = cols[4]
            .parse()
            .map_err(|_| Error::Parse(format!("line {no}: bad factor index")))?;
        if factor >= 15 {
            return Err(Error::Parse(format!("line {no}: factor index {factor} out of range")));
        }
        out.push(LieParamFamily {
            name: cols[0].to_string(),
            triple: [poly(cols[1])?, poly(cols[2])?, poly(cols[3])?],
            factor,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub expected_factor: usize,
    pub expected_factor_name: String,
    pub expected_factor_vanishes: bool,
    /// Factors of `P` that vanish identically on the family.
    pub vanishing_factors: Vec<usize>,
    /// The tested polynomial vanishes identically on the family.
    pub vanishes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VanishingReport {
    pub families: Vec<FamilyReport>,
    pub all_pass: bool,
}

/// Substitutes every family triple into `p` and into each factor of `P`.
pub fn vanishing_table(p: &SymPoly, table: &[LieParamFamily]) -> VanishingReport {
    let factors = p_factors();
    let families: Vec<FamilyReport> = table
        .iter()
        .map(|f| {
            let [l, m, n] = f.triple.clone();
            let sub = |q: &MultiPoly| {
                q.substitute(&[
                    (crate::arith::Var::Lambda, l.clone()),
                    (crate::arith::Var::Mu, m.clone()),
                    (crate::arith::Var::Nu, n.clone()),
                ])
            };
            let vanishing_factors: Vec<usize> = factors
                .iter()
                .enumerate()
                .filter(|(_, (_, q))| sub(q).is_zero())
                .map(|(i, _)| i)
                .collect();
            FamilyReport {
                family: f.name.clone(),
                expected_factor: f.factor,
                expected_factor_name: factors[f.factor].0.clone(),
                expected_factor_vanishes: vanishing_factors.contains(&f.factor),
                vanishing_factors,
                vanishes: sub(p.poly()).is_zero(),
            }
        })
        .collect();
    VanishingReport {
        all_pass: families
            .iter()
            .all(|f| f.vanishes && f.expected_factor_vanishes && f.vanishing_factors.len() == 1),
        families,
    }
}
