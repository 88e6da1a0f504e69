//! Leading coefficients of wheel values from the positive roots.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::univariate::{is_squarefree, rational_roots};
use crate::arith::{rat, MultiPoly, Rational, Var};
use crate::diagram::{Diagram, LinComb};
use crate::lie::{Parity, SuperAlgebra};
use crate::weight::eval_verma;
use crate::{Error, Result};

/// `3 H1* + H2* + H3*`.
pub fn default_lambda0() -> Vec<Rational> {
    vec![rat(3), rat(1), rat(1)]
}

/// `2 * sum_{beta > 0} (-1)^{deg beta} <lambda0, beta>^k`.
pub fn top_coefficient(alg: &SuperAlgebra, k: u32, lambda0: &[Rational]) -> Result<MultiPoly> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("k must be even and positive, got {k}")));
    }
    let roots = alg
        .roots
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument(format!("{} has no root data", alg.name)))?;
    if lambda0.len() != roots.cartan.len() {
        return Err(Error::InvalidArgument(format!(
            "weight needs {} coordinates",
            roots.cartan.len()
        )));
    }
    let mut sum = MultiPoly::zero();
    for (beta, parity) in &roots.positive_roots {
        let b: Vec<Rational> = beta.iter().map(|&x| rat(x as i64)).collect();
        let term = roots.inner(lambda0, &b).pow(k);
        if *parity == Parity::Odd {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    Ok(&sum * &MultiPoly::from_int(2))
}

/// `2 (6^k + 2 - 4^k - 2 * 3^k - 2^k)`.
pub fn closed_form(k: u32) -> BigInt {
    let p = |b: i64| BigInt::from(b).pow(k);
    BigInt::from(2) * (p(6) + 2 - p(4) - BigInt::from(2) * p(3) - p(2))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormRow {
    pub k: u32,
    pub top_coefficient: String,
    pub closed_form: String,
    pub equal: bool,
    pub positive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormReport {
    pub rows: Vec<ClosedFormRow>,
    pub all_equal: bool,
    /// Positivity for every `k >= 4` in range.
    pub positive_from_4: bool,
}

/// Compares `top_coefficient` at `alpha = 1` with the closed form.
pub fn closed_form_check(alg: &SuperAlgebra, ks: impl IntoIterator<Item = u32>) -> Result<ClosedFormReport> {
    let at1 = alg.specialize_alpha(&rat(1));
    let mut rows = Vec::new();
    for k in ks {
        let t = top_coefficient(&at1, k, &default_lambda0())?;
        let c = closed_form(k);
        let tv = t.as_constant().unwrap_or_else(Rational::zero);
        rows.push(ClosedFormRow {
            k,
            top_coefficient: t.to_string(),
            closed_form: c.to_string(),
            equal: t.is_constant() && tv == Rational::from_integer(c.clone()),
            positive: tv > Rational::zero(),
        });
    }
    Ok(ClosedFormReport {
        all_equal: rows.iter().all(|r| r.equal),
        positive_from_4: rows.iter().filter(|r| r.k >= 4).all(|r| r.positive),
        rows,
    })
}

/// Largest wheel order `find_n0` evaluates through Verma modules.
pub const MAX_WHEEL: u32 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct N0Certificate {
    pub k: u32,
    /// Value of the closed wheel on the Verma module, in `n` and `alpha`.
    pub wheel_value: MultiPoly,
    pub top_coefficient: MultiPoly,
    /// `coeff of n^k == k! * top_coefficient`.
    pub leading_matches: bool,
    pub n0: Option<u64>,
    /// Wheel value at `n0`, a polynomial in `alpha`.
    pub value_at_n0: Option<MultiPoly>,
    /// Rational `alpha` where the value at `n0` vanishes.
    #[serde(serialize_with = "crate::arith::rational::ser::many")]
    pub excluded_alpha: Vec<Rational>,
    pub exclusion_complete: bool,
    pub squarefree: Option<bool>,
}

/// Evaluates the closed `k`-wheel on the Verma modules of highest weight
/// `n * lambda0` and finds the least `n0` where it is not identically zero
/// in `alpha`.
pub fn find_n0(alg: &SuperAlgebra, k: u32, lambda0: &[Rational], n_max: u64) -> Result<N0Certificate> {
    if k > MAX_WHEEL {
        return Err(Error::CostBound(format!(
            "wheel order {k} exceeds the Verma evaluation bound {MAX_WHEEL}"
        )));
    }
    let top = top_coefficient(alg, k, lambda0)?;
    let wheel = LinComb::from_diagram(&Diagram::sun(k as usize)?);
    let value = eval_verma(alg, &wheel, lambda0)?;
    let fact: i64 = (1..=k as i64).product();
    let leading_matches = value.coeff_in(Var::N, k) == &top * &MultiPoly::from_int(fact);
    let mut cert = N0Certificate {
        k,
        wheel_value: value.clone(),
        top_coefficient: top,
        leading_matches,
        n0: None,
        value_at_n0: None,
        excluded_alpha: Vec::new(),
        exclusion_complete: true,
        squarefree: None,
    };
    if value.is_zero() {
        return Ok(cert);
    }
    for n in 1..=n_max {
        let v = value.substitute_rational(&[(Var::N, Rational::from_integer(n.into()))]);
        if v.is_zero() {
            continue;
        }
        cert.n0 = Some(n);
        if let Some(u) = v.to_univariate(Var::Alpha) {
            let r = rational_roots(&u);
            cert.excluded_alpha = r.roots.into_iter().map(|(x, _)| x).collect();
            cert.exclusion_complete = r.complete;
            cert.squarefree = Some(u.len() <= 1 || is_squarefree(&u));
        }
        cert.value_at_n0 = Some(v);
        break;
    }
    Ok(cert)
}
