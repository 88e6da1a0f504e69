use super::canon::permutations;
use super::{Diagram, Draft, Kind, LinComb};
use crate::arith::Rational;
use crate::{Error, Result};

/// Sign in `Y = STU_SIGN * (S - U)`, where `Y` has a trivalent vertex with
/// cyclic order (stem, a, b) and `S` (resp. `U`) has the `a` (resp. `b`)
/// end first along the skeleton.
pub const STU_SIGN: i32 = 1;

fn sgn(s: i32) -> Rational {
    Rational::from_integer(s.into())
}

/// Applies STU to the edge joining skeleton vertex `leg` to a trivalent
/// vertex.
pub fn stu_expand(d: &Diagram, leg: usize) -> Result<LinComb> {
    let sk = d
        .skeleton()
        .ok_or_else(|| Error::InvalidArgument("STU needs a skeleton".into()))?;
    let pos = sk
        .iter()
        .position(|&v| v == leg)
        .ok_or_else(|| Error::InvalidArgument(format!("vertex {leg} is not on the skeleton")))?;
    let (u, su) = d.mate(leg, 0);
    if d.kind(u) != Kind::Tri {
        return Err(Error::InvalidArgument(format!(
            "edge at {leg} is a chord, not an STU-eligible edge"
        )));
    }
    let fa = d.mate(u, (su + 1) % 3);
    let fb = d.mate(u, (su + 2) % 3);
    let mut out = LinComb::new();
    if fa.0 == u {
        return Ok(out);
    }
    for (first, second, s) in [(fa, fb, 1), (fb, fa, -1)] {
        let mut dr = Draft::from(d);
        let mut seq: Vec<usize> = sk.to_vec();
        dr.kill(leg);
        dr.kill(u);
        let p = dr.add_vertex(Kind::Uni);
        let q = dr.add_vertex(Kind::Uni);
        dr.connect((p, 0), first);
        dr.connect((q, 0), second);
        seq.splice(pos..=pos, [p, q]);
        dr.skeleton = Some(seq);
        out.add_diagram(&dr.finish()?, &sgn(s * STU_SIGN));
    }
    Ok(out)
}

/// A skeleton vertex whose edge ends at a trivalent vertex.
pub fn first_stu_leg(d: &Diagram) -> Option<usize> {
    d.skeleton()?
        .iter()
        .copied()
        .find(|&x| d.kind(d.mate(x, 0).0) == Kind::Tri)
}

/// Repeated STU until only chord diagrams remain.
pub fn chord_reduce(c: &LinComb) -> Result<LinComb> {
    let mut done = LinComb::new();
    let mut todo = c.clone();
    while !todo.is_zero() {
        let mut next = LinComb::new();
        for (d, k) in todo.iter() {
            if !d.has_skeleton() {
                return Err(Error::InvalidArgument("chord reduction needs a skeleton".into()));
            }
            match first_stu_leg(d) {
                None if d.trivalent().is_empty() => done.add_scaled(&LinComb::from_diagram(d), k),
                None => {
                    return Err(Error::InvalidArgument(
                        "a trivalent component does not reach the skeleton".into(),
                    ))
                }
                Some(x) => next.add_scaled(&stu_expand(d, x)?, k),
            }
        }
        todo = next;
    }
    Ok(done)
}

fn check_skeleton_free(d: &Diagram) -> Result<()> {
    if d.has_skeleton() {
        return Err(Error::InvalidArgument("expected a skeleton-free diagram".into()));
    }
    if d.num_legs() == 0 {
        return Err(Error::InvalidArgument("diagram without legs".into()));
    }
    Ok(())
}

/// Largest leg count `chi_bar` will expand.
pub const MAX_CHI_BAR_LEGS: usize = 8;

/// Sum over all `k!` ways of attaching the legs to an oriented circle.
pub fn chi_bar(c: &LinComb) -> Result<LinComb> {
    let mut out = LinComb::new();
    for (d, k) in c.iter() {
        check_skeleton_free(d)?;
        if d.num_legs() > MAX_CHI_BAR_LEGS {
            return Err(Error::CostBound(format!(
                "{} legs exceed the symmetrisation bound {MAX_CHI_BAR_LEGS}",
                d.num_legs()
            )));
        }
        for p in permutations(&d.legs()) {
            out.add_diagram(&d.with_skeleton(Some(p))?, k);
        }
    }
    Ok(out)
}

/// Joins the legs at skeleton positions `i`, `i+1` into one leg through a
/// new trivalent vertex with cyclic order (new leg, first, second).
fn merge_adjacent(d: &Diagram, i: usize) -> Result<Option<Diagram>> {
    let sk = d.skeleton().unwrap().to_vec();
    let (l1, l2) = (sk[i], sk[i + 1]);
    let (f1, f2) = (d.mate(l1, 0), d.mate(l2, 0));
    if f1.0 == l2 {
        return Ok(None);
    }
    let mut dr = Draft::from(d);
    dr.kill(l1);
    dr.kill(l2);
    let x = dr.add_vertex(Kind::Uni);
    let u = dr.add_vertex(Kind::Tri);
    dr.connect((u, 0), (x, 0));
    dr.connect((u, 1), f1);
    dr.connect((u, 2), f2);
    let mut seq = sk;
    seq.splice(i..=i + 1, [x]);
    dr.skeleton = Some(seq);
    Ok(Some(dr.finish()?))
}

/// For a skeleton-free `d` with legs `l_1 < ... < l_k`, returns `C` with
/// `chi_bar(d) = k! * d[l_1 ... l_k] + C`, where every diagram in `C` has
/// `k - 1` skeleton vertices. Each permutation is sorted by adjacent
/// transpositions, each of which costs one STU term.
pub fn permutation_correction(d: &Diagram) -> Result<LinComb> {
    check_skeleton_free(d)?;
    let mut out = LinComb::new();
    let s = sgn(STU_SIGN);
    for p in permutations(&d.legs()) {
        let mut seq = p;
        while let Some(i) = (0..seq.len() - 1).find(|&i| seq[i] > seq[i + 1]) {
            let cur = d.with_skeleton(Some(seq.clone()))?;
            if let Some(y) = merge_adjacent(&cur, i)? {
                out.add_diagram(&y, &s);
            }
            seq.swap(i, i + 1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::GradedA;
    use num_traits::Zero;

    #[test]
    fn stu_paths_agree_modulo_four_term() {
        let t = Diagram::sun_on_circle(4).unwrap();
        let a = GradedA::get(4).unwrap();
        let base = a.reduce(&chord_reduce(&LinComb::from_diagram(&t)).unwrap()).unwrap();
        for leg in 4..8 {
            let e = chord_reduce(&stu_expand(&t, leg).unwrap()).unwrap();
            assert_eq!(a.reduce(&e).unwrap(), base);
        }
    }

    #[test]
    fn t2_expands_to_chords() {
        let t2 = Diagram::sun_on_circle(2).unwrap();
        let r = chord_reduce(&LinComb::from_diagram(&t2)).unwrap();
        assert!(r.iter().all(|(d, _)| d.is_chord_diagram()));
        assert!(!r.is_zero());
        let one = stu_expand(&t2, 2).unwrap();
        assert!(one.iter().all(|(d, _)| d.skeleton().unwrap().len() == 3));
        let chord = Diagram::chord(&[(0, 1)]).unwrap();
        assert!(stu_expand(&chord, 0).is_err());
        assert!(first_stu_leg(&chord).is_none());
    }

    #[test]
    fn chi_bar_of_s2_has_two_orderings() {
        let s2 = Diagram::sun(2).unwrap();
        let c = chi_bar(&LinComb::from_diagram(&s2)).unwrap();
        let total: Rational = c.iter().map(|(_, k)| k.clone()).sum();
        // Both orderings give the same diagram up to rotation.
        assert_eq!(num_traits::Signed::abs(&total), Rational::from_integer(2.into()));
        let strut = Diagram::from_adjacency(vec![Kind::Uni, Kind::Uni], &[vec![1], vec![0]], None).unwrap();
        assert!(chi_bar(&LinComb::from_diagram(&strut)).is_ok());
        let t2 = Diagram::sun_on_circle(2).unwrap();
        assert!(chi_bar(&LinComb::from_diagram(&t2)).is_err());
    }

    #[test]
    fn filtration_identity() {
        for k in [2usize, 4] {
            let s = Diagram::sun(k).unwrap();
            let t = Diagram::sun_on_circle(k).unwrap();
            let fact: i64 = (1..=k as i64).product();
            let corr = permutation_correction(&s).unwrap();
            for (d, _) in corr.iter() {
                assert_eq!(d.skeleton().unwrap().len(), k - 1);
            }
            let lhs = chord_reduce(&chi_bar(&LinComb::from_diagram(&s)).unwrap()).unwrap();
            let top = chord_reduce(&LinComb::from_diagram(&t)).unwrap();
            let rhs = top.scale(&Rational::from_integer(fact.into())).add(&chord_reduce(&corr).unwrap());
            let a = GradedA::get(k).unwrap();
            assert_eq!(a.reduce(&lhs).unwrap(), a.reduce(&rhs).unwrap());
            assert!(a.reduce(&top).unwrap().iter().any(|c| !c.is_zero()));
        }
    }
}
