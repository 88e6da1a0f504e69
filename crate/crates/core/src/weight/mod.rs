//! Weight systems of Lie superalgebras: universal words from a tensor
//! network, evaluated by a state sum on a representation or on a Verma
//! module.

mod network;
mod rep;
mod verma;

use serde::Serialize;

use crate::arith::{MultiPoly, Rational, RationalFunction};
use crate::diagram::{chi_bar, insert_at_vertex, Diagram, InsertionPiece, Kind, LinComb};
use crate::lie::SuperAlgebra;
use crate::{Error, Result};

pub use network::{Network, WordSum, MAX_ENTRIES};
pub use rep::{adjoint_rep, state_sum_scalar, word_operator, Representation};
pub use verma::{verma_stats, Verma};

/// How the central element is turned into a number.
#[derive(Clone, Debug)]
pub enum Evaluation {
    /// Scalar on an irreducible representation.
    StateSum(Representation),
    /// Scalar on the Verma module of highest weight `n * lambda0`.
    Verma(Vec<Rational>),
}

/// Universal word sum; skeleton-free input is first sent through `chi_bar`.
pub fn universal_words(alg: &SuperAlgebra, c: &LinComb) -> Result<WordSum> {
    let net = Network::new(alg)?;
    let skel = c.iter().map(|(d, _)| d.has_skeleton()).collect::<Vec<_>>();
    if skel.iter().any(|&s| s) && skel.iter().any(|&s| !s) {
        return Err(Error::InvalidArgument("mixed skeleton and skeleton-free terms".into()));
    }
    if skel.first() == Some(&false) {
        net.words_comb(&chi_bar(c)?)
    } else {
        net.words_comb(c)
    }
}

pub fn eval_words(alg: &SuperAlgebra, ws: &WordSum, ev: &Evaluation) -> Result<MultiPoly> {
    match ev {
        Evaluation::StateSum(rep) => state_sum_scalar(ws, rep),
        Evaluation::Verma(l) => Verma::new(alg, l)?.scalar(ws),
    }
}

pub fn weight_system(alg: &SuperAlgebra, c: &LinComb, ev: &Evaluation) -> Result<MultiPoly> {
    eval_words(alg, &universal_words(alg, c)?, ev)
}

pub fn eval_state_sum(alg: &SuperAlgebra, c: &LinComb, rep: &Representation) -> Result<MultiPoly> {
    weight_system(alg, c, &Evaluation::StateSum(rep.clone()))
}

pub fn eval_verma(alg: &SuperAlgebra, c: &LinComb, lambda0: &[Rational]) -> Result<MultiPoly> {
    weight_system(alg, c, &Evaluation::Verma(lambda0.to_vec()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeRatio {
    pub probe: String,
    pub base: MultiPoly,
    pub inserted: MultiPoly,
    pub ratio: Option<RationalFunction>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RatioReport {
    pub algebra: String,
    pub piece: String,
    pub probes: Vec<ProbeRatio>,
    /// Common value when every probe gives the same ratio.
    pub character: Option<RationalFunction>,
}

/// `W(piece inserted in D) / W(D)` for each skeleton-free probe
/// `D`, inserting at its first trivalent vertex.
pub fn ratio_character(
    alg: &SuperAlgebra,
    piece: &InsertionPiece,
    probes: &[(String, Diagram, Evaluation)],
) -> Result<RatioReport> {
    let mut out = Vec::new();
    for (name, d, ev) in probes {
        if d.has_skeleton() {
            return Err(Error::InvalidArgument(format!("probe {name} must be skeleton-free")));
        }
        let v = (0..d.num_vertices())
            .find(|&v| d.kind(v) == Kind::Tri)
            .ok_or_else(|| Error::InvalidArgument(format!("probe {name} has no trivalent vertex")))?;
        let base = weight_system(alg, &LinComb::from_diagram(d), ev)?;
        let inserted = weight_system(alg, &insert_at_vertex(d, v, piece, 0)?, ev)?;
        let ratio = (!base.is_zero())
            .then(|| RationalFunction::new(inserted.clone(), base.clone()));
        out.push(ProbeRatio {
            probe: name.clone(),
            base,
            inserted,
            ratio,
        });
    }
    let first = out.first().and_then(|p| p.ratio.clone());
    let character = first.filter(|r| out.iter().all(|p| p.ratio.as_ref() == Some(r)));
    Ok(RatioReport {
        algebra: alg.name.clone(),
        piece: piece.name.clone(),
        probes: out,
        character,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Var};
    use crate::diagram::{chord_diagrams, ihx_terms, stu_expand};
    use crate::lie::{d21, sl2, AlphaMode};

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    fn at_n(x: &MultiPoly, n: i64) -> MultiPoly {
        x.substitute_rational(&[(Var::N, rat(n))])
    }

    fn one(d: &Diagram) -> LinComb {
        LinComb::from_diagram(d)
    }

    #[test]
    fn casimir_eigenvalues() {
        let g = sl2();
        let adj = adjoint_rep(&g);
        assert_eq!(eval_state_sum(&g, &one(&Diagram::circle()), &adj).unwrap(), p("1"));
        let chord = Diagram::chord(&[(0, 1)]).unwrap();
        assert_eq!(eval_state_sum(&g, &one(&chord), &adj).unwrap(), p("4"));
        assert_eq!(eval_verma(&g, &one(&chord), &[rat(1)]).unwrap(), p("1/2*n^2 + n"));
        let d = d21(AlphaMode::Value(rat(2))).unwrap();
        assert!(eval_state_sum(&d, &one(&chord), &adjoint_rep(&d)).unwrap().is_zero());
    }

    #[test]
    fn vertex_tensor_is_cyclic() {
        for alg in [sl2(), d21(AlphaMode::Symbolic).unwrap()] {
            let net = Network::new(&alg).unwrap();
            let f = net.vertex_tensor();
            for (k, c) in f {
                let rot = vec![k[1], k[2], k[0]];
                let s = if net.odd(k[0] as usize) && (net.odd(k[1] as usize) != net.odd(k[2] as usize)) {
                    -1
                } else {
                    1
                };
                let other = f.get(&rot).cloned().unwrap_or_default();
                assert_eq!(&other * &MultiPoly::from_int(s), *c, "{k:?}");
            }
        }
    }

    #[test]
    fn state_sum_matches_verma_on_chord_diagrams() {
        let g = sl2();
        let ds: Vec<SuperAlgebra> = [rat(2), rat(3), rat(1) / rat(2)]
            .into_iter()
            .map(|a| d21(AlphaMode::Value(a)).unwrap())
            .collect();
        for m in 1..=3 {
            for cd in chord_diagrams(m) {
                let c = one(&cd);
                let a = eval_state_sum(&g, &c, &adjoint_rep(&g)).unwrap();
                let b = eval_verma(&g, &c, &[rat(2)]).unwrap();
                assert_eq!(at_n(&b, 1), a);
                for d in &ds {
                    let a = eval_state_sum(d, &c, &adjoint_rep(d)).unwrap();
                    let b = eval_verma(d, &c, &[rat(2), rat(0), rat(0)]).unwrap();
                    assert_eq!(at_n(&b, 1), a);
                }
            }
        }
    }

    #[test]
    fn stu_is_respected() {
        let g = sl2();
        let d = d21(AlphaMode::Symbolic).unwrap();
        let l0 = [rat(3), rat(1), rat(1)];
        for k in [2, 4] {
            let t = Diagram::sun_on_circle(k).unwrap();
            let leg = t.skeleton().unwrap()[0];
            let e = stu_expand(&t, leg).unwrap();
            assert!(!eval_verma(&g, &one(&t), &[rat(1)]).unwrap().is_zero());
            assert_eq!(
                eval_verma(&g, &one(&t), &[rat(1)]).unwrap(),
                eval_verma(&g, &e, &[rat(1)]).unwrap()
            );
            assert_eq!(
                eval_verma(&d, &one(&t), &l0).unwrap(),
                eval_verma(&d, &e, &l0).unwrap()
            );
        }
    }

    #[test]
    fn ihx_is_killed() {
        let d = d21(AlphaMode::Value(rat(2))).unwrap();
        let s = Diagram::sun(4).unwrap();
        let [i, h, x] = ihx_terms(&s, (0, 1)).unwrap();
        let mut c = one(&i);
        c.add_diagram(&h, &rat(1));
        c.add_diagram(&x, &rat(1));
        let l0 = [rat(3), rat(1), rat(1)];
        assert!(eval_verma(&d, &c, &l0).unwrap().is_zero());
        assert!(!eval_verma(&d, &one(&s), &l0).unwrap().is_zero());
    }

    #[test]
    fn adjoint_matrices() {
        let g = sl2();
        let adj = adjoint_rep(&g);
        let h = adj.matrix(1);
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { [2, 0, -2][i] } else { 0 };
                assert_eq!(h[i][j], MultiPoly::from_int(e));
            }
        }
        let d = d21(AlphaMode::Value(rat(2))).unwrap();
        let adj = adjoint_rep(&d);
        let mul = |a: &Vec<Vec<MultiPoly>>, b: &Vec<Vec<MultiPoly>>| {
            let n = a.len();
            let mut o = vec![vec![MultiPoly::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        o[i][j] += &(&a[i][k] * &b[k][j]);
                    }
                }
            }
            o
        };
        for x in 0..17 {
            for y in 0..17 {
                let (mx, my) = (adj.matrix(x), adj.matrix(y));
                let s = if d.parity(x).is_odd() && d.parity(y).is_odd() { -1 } else { 1 };
                let mut lhs = vec![vec![MultiPoly::zero(); 17]; 17];
                for (m, c) in &d.bracket[x][y] {
                    let bm = adj.matrix(*m);
                    for i in 0..17 {
                        for j in 0..17 {
                            lhs[i][j] += &(c * &bm[i][j]);
                        }
                    }
                }
                let (xy, yx) = (mul(&mx, &my), mul(&my, &mx));
                for i in 0..17 {
                    for j in 0..17 {
                        let r = &xy[i][j] - &(&yx[i][j] * &MultiPoly::from_int(s));
                        assert_eq!(lhs[i][j], r);
                    }
                }
            }
        }
        assert!(adj.supertrace(crate::lie::h_index(0)).is_zero());
    }

    #[test]
    fn relabelling_does_not_change_values() {
        // Contraction order follows vertex numbering, so a reversed labelling
        // processes the odd legs in the opposite order.
        let d = d21(AlphaMode::Value(rat(2))).unwrap();
        let l0 = [rat(3), rat(1), rat(1)];
        for t in [Diagram::sun_on_circle(2).unwrap(), Diagram::sun_on_circle(4).unwrap(), Diagram::chord(&[(0, 2), (1, 3)]).unwrap()] {
            let n = t.num_vertices();
            let rev: Vec<usize> = (0..n).rev().collect();
            let ws1 = Network::new(&d).unwrap().words(&t).unwrap();
            let ws2 = Network::new(&d).unwrap().words(&t.relabel(&rev)).unwrap();
            assert_eq!(ws1, ws2);
            assert_eq!(
                eval_verma(&d, &LinComb::from_diagram(&t), &l0).unwrap(),
                eval_verma(&d, &LinComb::from_diagram(&t.relabel(&rev)), &l0).unwrap()
            );
        }
    }

    #[test]
    fn two_leg_wheel_has_no_top_term() {
        let d = d21(AlphaMode::Symbolic).unwrap();
        let v = eval_verma(&d, &one(&Diagram::sun(2).unwrap()), &[rat(3), rat(1), rat(1)]).unwrap();
        assert!(v.degree_in(Var::N).unwrap_or(0) <= 2);
        assert!(v.coeff_in(Var::N, 2).is_zero());
    }

    #[test]
    fn four_leg_wheel_top_term_at_alpha_one() {
        let d = d21(AlphaMode::Value(rat(1))).unwrap();
        let v = eval_verma(&d, &one(&Diagram::sun(4).unwrap()), &[rat(3), rat(1), rat(1)]).unwrap();
        assert_eq!(v.coeff_in(Var::N, 4), MultiPoly::from_int(24 * 1728));
    }
}
