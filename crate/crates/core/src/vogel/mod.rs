//! Character calculus on symmetric polynomials: the element `P`, the image
//! of `chi_0`, the reduction to `sigma2, sigma3`, the parameter table of the
//! simple Lie algebras and the certificate for the elements `P_d * S_k`.

mod cert;
mod sym;
mod table;

use serde::Serialize;

use crate::arith::univariate::{rational_roots, RationalRoots};
use crate::arith::{rat, MultiPoly, Rational, Var};
use crate::{Error, Result};

pub use cert::{build_d_element, default_q, Assertion, Certificate};
pub use sym::{expand_elementary, to_elementary, SymPoly};
pub use table::{parse_table, vanishing_table, FamilyReport, LieParamFamily, VanishingReport, DEFAULT_TABLE};

fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

/// The 15 linear factors of `P`, in table order.
pub fn p_factors() -> Vec<(String, MultiPoly)> {
    let names = ["lambda", "mu", "nu"];
    let a = [var(Var::Lambda), var(Var::Mu), var(Var::Nu)];
    let t = &(&a[0] + &a[1]) + &a[2];
    let mut out = Vec::with_capacity(15);
    for (x, n) in a.iter().zip(names) {
        out.push((format!("t+{n}"), &t + x));
    }
    for (x, n) in a.iter().zip(names) {
        out.push((format!("t-{n}"), &t - x));
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                out.push((
                    format!("{}+2{}", names[i], names[j]),
                    &a[i] + &a[j].scale(&rat(2)),
                ));
            }
        }
    }
    for (x, n) in a.iter().zip(names) {
        out.push((format!("3{n}-2t"), &x.scale(&rat(3)) - &t.scale(&rat(2))));
    }
    out
}

pub fn build_p() -> SymPoly {
    let mut p = MultiPoly::one();
    for (_, f) in p_factors() {
        p = &p * &f;
    }
    SymPoly::new(p).expect("the factor set is permutation stable")
}

/// Decomposition `p = f(t) + (t+lambda)(t+mu)(t+nu) * q(t, e2, e3)`.
#[derive(Clone, Debug, Serialize)]
pub struct Chi0Decomposition {
    pub member: bool,
    /// Polynomial in `t` (when a member).
    pub t_part: MultiPoly,
    /// Polynomial in `t, s2, s3` (when a member).
    pub quotient: Option<MultiPoly>,
    /// `p` with `s3 = -2t^3 - t*s2` substituted; must lie in `Q[t]`.
    pub reduced: MultiPoly,
}

/// `(t+lambda)(t+mu)(t+nu)` in elementary coordinates: `2t^3 + t e2 + e3`.
pub fn r_elementary() -> MultiPoly {
    MultiPoly::parse("2*t^3 + t*s2 + s3").unwrap()
}

pub fn chi0_image_test(p: &SymPoly) -> Chi0Decomposition {
    let ep = p.elementary();
    let r = r_elementary();
    let s3 = MultiPoly::parse("-2*t^3 - t*s2").unwrap();
    let reduced = ep.substitute(&[(Var::S3, s3)]);
    let member = reduced.vars().iter().all(|&v| v == Var::T);
    if !member {
        return Chi0Decomposition {
            member,
            t_part: MultiPoly::zero(),
            quotient: None,
            reduced,
        };
    }
    let quotient = (&ep - &reduced).div_exact(&r);
    Chi0Decomposition {
        member: quotient.is_some(),
        t_part: reduced.clone(),
        quotient,
        reduced,
    }
}

/// Reduction modulo `t`, written in `sigma2 = e2`, `sigma3 = e3` (carried
/// by the variables `s2`, `s3`).
pub fn chi_prime_d(p: &SymPoly) -> MultiPoly {
    p.elementary().substitute_rational(&[(Var::T, rat(0))])
}

/// Accepts any polynomial in `lambda, mu, nu`; fails unless symmetric.
pub fn chi_prime_d_poly(p: &MultiPoly) -> Result<MultiPoly> {
    Ok(chi_prime_d(&SymPoly::new(p.clone())?))
}

/// `-27 s3^3 (4 s2^3 + 27 s3^2)`.
pub fn expected_chi_prime_p() -> MultiPoly {
    MultiPoly::parse("-27*s3^3*(4*s2^3 + 27*s3^2)").unwrap()
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaSpecialization {
    pub polynomial: MultiPoly,
    pub degree: Option<u32>,
    #[serde(serialize_with = "crate::arith::rational::ser::many")]
    pub roots: Vec<Rational>,
    pub multiplicities: Vec<usize>,
    pub roots_complete: bool,
}

/// `s2 -> -1 - alpha - alpha^2`, `s3 -> -alpha - alpha^2`.
pub fn specialize_alpha(s: &MultiPoly) -> Result<AlphaSpecialization> {
    if s.vars().iter().any(|v| !matches!(v, Var::S2 | Var::S3)) {
        return Err(Error::InvalidArgument(format!("{s} is not a polynomial in s2, s3")));
    }
    let p = s.substitute(&[
        (Var::S2, MultiPoly::parse("-1 - alpha - alpha^2").unwrap()),
        (Var::S3, MultiPoly::parse("-alpha - alpha^2").unwrap()),
    ]);
    let u = p.to_univariate(Var::Alpha).unwrap_or_default();
    let RationalRoots { roots, complete } = rational_roots(&u);
    Ok(AlphaSpecialization {
        degree: p.degree(),
        roots: roots.iter().map(|(r, _)| r.clone()).collect(),
        multiplicities: roots.iter().map(|(_, m)| *m).collect(),
        roots_complete: complete,
        polynomial: p,
    })
}

/// Weighted degree with `deg s2 = 2`, `deg s3 = 3`.
pub fn sigma_degree(s: &MultiPoly) -> Option<u32> {
    let mut w = [0u32; crate::arith::poly::NVARS];
    w[Var::S2.index()] = 2;
    w[Var::S3.index()] = 3;
    s.weighted_degree(&w)
}
