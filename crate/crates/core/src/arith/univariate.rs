//! Dense univariate polynomials over Q, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

pub fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r: Vec<Rational> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    let lead = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn monic(p: &[Rational]) -> Vec<Rational> {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let l = p[d].clone();
            p[..=d].iter().map(|c| c / &l).collect()
        }
    }
}

/// Monic gcd.
pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while degree(&y).is_some() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

pub fn derivative(p: &[Rational]) -> Vec<Rational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect()
}

/// True if `p` has no repeated factor.
pub fn is_squarefree(p: &[Rational]) -> bool {
    let g = gcd(p, &derivative(p));
    degree(&g) == Some(0)
}

/// Rational roots with multiplicity, plus a flag that is `false` when
/// integer factorisation of the extreme coefficients was cut short (in which
/// case some rational roots may be missing).
#[derive(Clone, Debug, PartialEq)]
pub struct RationalRoots {
    pub roots: Vec<(Rational, usize)>,
    pub complete: bool,
}

const TRIAL_LIMIT: u64 = 2_000_000;

fn divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut complete = true;
    let mut d: u64 = 2;
    while !n.is_one() {
        if BigInt::from(d) * BigInt::from(d) > n {
            primes.push((n.clone(), 1));
            break;
        }
        if d > TRIAL_LIMIT {
            // Unfactored cofactor; treat it as prime.
            primes.push((n.clone(), 1));
            complete = false;
            break;
        }
        let bd = BigInt::from(d);
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            primes.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for dv in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pw);
                pw *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    (divs, complete)
}

pub fn rational_roots(p: &[Rational]) -> RationalRoots {
    let mut poly = p.to_vec();
    trim(&mut poly);
    let mut roots = Vec::new();
    if poly.is_empty() {
        return RationalRoots {
            roots,
            complete: false,
        };
    }
    let zero_mult = poly.iter().position(|c| !c.is_zero()).unwrap();
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
        poly.drain(..zero_mult);
    }
    if poly.len() <= 1 {
        return RationalRoots {
            roots,
            complete: true,
        };
    }
    // Integer coefficients.
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (ps, c1) = divisors(&ints[0]);
    let (qs, c2) = divisors(ints.last().unwrap());
    let mut cands: Vec<Rational> = Vec::new();
    for pd in &ps {
        for qd in &qs {
            let r = Rational::new(pd.clone(), qd.clone());
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    for r in cands {
        let mut mult = 0;
        let lin = vec![-r.clone(), Rational::one()];
        loop {
            if degree(&poly).unwrap_or(0) == 0 {
                break;
            }
            if !eval(&poly, &r).is_zero() {
                break;
            }
            let (q, _) = divrem(&poly, &lin);
            poly = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    RationalRoots {
        roots,
        complete: c1 && c2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{frac, rat};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = v(&[-2, -1, 1]);
        let b = v(&[3, 4, 1]);
        assert_eq!(gcd(&a, &b), v(&[1, 1]));
    }

    #[test]
    fn roots_with_multiplicity() {
        // x^2 (x+2)^2 (2x+1)
        let mut p = v(&[1]);
        for f in [v(&[0, 1]), v(&[0, 1]), v(&[2, 1]), v(&[2, 1]), v(&[1, 2])] {
            let mut out = vec![rat(0); p.len() + f.len() - 1];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            p = out;
        }
        let r = rational_roots(&p);
        assert!(r.complete);
        assert_eq!(
            r.roots,
            vec![(rat(-2), 2), (frac(-1, 2), 1), (rat(0), 2)]
        );
        assert!(!is_squarefree(&p));
    }
}
