//! Graded pieces of the diagram spaces: connected skeleton-free diagrams
//! modulo AS and IHX, and chord diagrams modulo STU-induced relations.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{canonicalize, connected_diagrams, stu_expand, Diagram, Draft, Kind, LinComb, Slot};
use crate::arith::{Echelon, Rational, SparseVec};
use crate::{Error, Result};

/// The `(m, k)` piece: enumerated diagrams, the IHX relation space and the
/// basis of the quotient (non-pivot columns).
#[derive(Clone, Debug)]
pub struct GradedB {
    pub degree: usize,
    pub legs: usize,
    pub diagrams: Vec<Diagram>,
    index: BTreeMap<Diagram, usize>,
    relations: Echelon<Rational>,
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BReduction {
    pub degree: usize,
    pub legs: usize,
    pub dimension: usize,
    #[serde(serialize_with = "crate::arith::rational::ser::many")]
    pub coordinates: Vec<Rational>,
}

impl BReduction {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| c.is_zero())
    }
}

/// The three terms of IHX at edge `(v.s, w.t)`: with `v = (a, b, e)` and
/// `w = (e, c, d)`, the outer ends `(b, c, d)` are rotated.
pub fn ihx_terms(d: &Diagram, (v, s): Slot) -> Result<[Diagram; 3]> {
    let (w, t) = d.mate(v, s);
    if d.kind(v) != Kind::Tri || d.kind(w) != Kind::Tri || v == w {
        return Err(Error::InvalidArgument("IHX needs an edge between two trivalent vertices".into()));
    }
    let ends: [Slot; 4] = [(v, (s + 1) % 3), (v, (s + 2) % 3), (w, (t + 1) % 3), (w, (t + 2) % 3)];
    let far: Vec<Slot> = ends.iter().map(|&h| d.mate(h.0, h.1)).collect();
    let mut out = Vec::with_capacity(3);
    for (x, y, z) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        let pos: [Slot; 4] = {
            let mut p = [(0, 0); 4];
            p[0] = (v, 0);
            p[x] = (v, 1);
            p[y] = (w, 1);
            p[z] = (w, 2);
            p
        };
        let mut dr = Draft::from(d);
        dr.mate[v] = vec![None; 3];
        dr.mate[w] = vec![None; 3];
        dr.connect((v, 2), (w, 0));
        for o in 0..4 {
            match ends.iter().position(|&h| h == far[o]) {
                Some(o2) => dr.connect(pos[o], pos[o2]),
                None => dr.connect(pos[o], far[o]),
            }
        }
        out.push(dr.finish()?);
    }
    Ok([out.remove(0), out.remove(0), out.remove(0)])
}

static PIECES: Mutex<BTreeMap<(usize, usize), GradedB>> = Mutex::new(BTreeMap::new());

impl GradedB {
    pub fn get(m: usize, k: usize) -> Result<GradedB> {
        if m > 6 {
            return Err(Error::CostBound(format!("degree {m} exceeds the enumeration bound 6")));
        }
        if let Some(g) = PIECES.lock().unwrap().get(&(m, k)) {
            return Ok(g.clone());
        }
        let g = Self::build(m, k)?;
        PIECES.lock().unwrap().insert((m, k), g.clone());
        Ok(g)
    }

    fn build(m: usize, k: usize) -> Result<GradedB> {
        let diagrams = connected_diagrams(m, k);
        let index: BTreeMap<Diagram, usize> =
            diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let mut relations = Echelon::new();
        for d in &diagrams {
            for v in d.trivalent() {
                for s in 0..3 {
                    let (w, _) = d.mate(v, s);
                    if d.kind(w) != Kind::Tri || w <= v {
                        continue;
                    }
                    let mut rel = LinComb::new();
                    for t in ihx_terms(d, (v, s))? {
                        rel.add_diagram(&t, &Rational::one());
                    }
                    relations.insert(to_vector(&index, &rel)?);
                }
            }
        }
        let pivots: Vec<usize> = relations.pivots().collect();
        let basis = (0..diagrams.len()).filter(|i| !pivots.contains(i)).collect();
        Ok(GradedB {
            degree: m,
            legs: k,
            diagrams,
            index,
            relations,
            basis,
        })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn reduce(&self, c: &LinComb) -> Result<BReduction> {
        let v = to_vector(&self.index, c)?;
        let r = self.relations.reduce(&v);
        let coordinates = self
            .basis
            .iter()
            .map(|i| r.get(i).cloned().unwrap_or_else(Rational::zero))
            .collect();
        Ok(BReduction {
            degree: self.degree,
            legs: self.legs,
            dimension: self.basis.len(),
            coordinates,
        })
    }
}

fn to_vector(index: &BTreeMap<Diagram, usize>, c: &LinComb) -> Result<SparseVec<Rational>> {
    let mut v = SparseVec::new();
    for (d, k) in c.iter() {
        let i = index.get(d).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "diagram of degree {} with {} legs lies outside the graded piece",
                d.degree(),
                d.num_legs()
            ))
        })?;
        v.insert(*i, k.clone());
    }
    Ok(v)
}

/// Coordinates of `c` in the computed basis of the degree-`m`, `k`-leg
/// connected piece modulo AS and IHX.
#[allow(non_snake_case)]
pub fn reduce_B(c: &LinComb, m: usize, k: usize) -> Result<BReduction> {
    GradedB::get(m, k)?.reduce(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct ADimension {
    pub degree: usize,
    pub chord_diagrams: usize,
    pub relation_rank: usize,
    pub dimension: usize,
    #[serde(skip)]
    pub basis: Vec<Diagram>,
}

fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let a = points[0];
    for i in 1..points.len() {
        let rest: Vec<usize> = points[1..].iter().copied().filter(|&p| p != points[i]).collect();
        for mut m in matchings(&rest) {
            m.push((a, points[i]));
            out.push(m);
        }
    }
    out
}

/// Canonical chord diagrams with `m` chords.
pub fn chord_diagrams(m: usize) -> Vec<Diagram> {
    let pts: Vec<usize> = (0..2 * m).collect();
    let mut set: Vec<Diagram> = matchings(&pts)
        .iter()
        .map(|p| canonicalize(&Diagram::chord(p).unwrap()).0)
        .collect();
    set.sort();
    set.dedup();
    set
}

/// Chord diagrams of degree `m` modulo the STU-induced relations.
#[derive(Clone, Debug)]
pub struct GradedA {
    pub degree: usize,
    pub chords: Vec<Diagram>,
    index: BTreeMap<Diagram, usize>,
    relations: Echelon<Rational>,
    pub basis: Vec<usize>,
}

static A_PIECES: Mutex<BTreeMap<usize, GradedA>> = Mutex::new(BTreeMap::new());

impl GradedA {
    fn from_relations(m: usize, rels: Vec<LinComb>) -> Result<GradedA> {
        let chords = chord_diagrams(m);
        let index: BTreeMap<Diagram, usize> =
            chords.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let mut relations = Echelon::new();
        for r in rels {
            relations.insert(to_vector(&index, &r)?);
        }
        let pivots: Vec<usize> = relations.pivots().collect();
        let basis = (0..chords.len()).filter(|i| !pivots.contains(i)).collect();
        Ok(GradedA {
            degree: m,
            chords,
            index,
            relations,
            basis,
        })
    }

    pub fn get(m: usize) -> Result<GradedA> {
        if let Some(g) = A_PIECES.lock().unwrap().get(&m) {
            return Ok(g.clone());
        }
        check_degree(m)?;
        let g = Self::from_relations(m, stu_relations(m)?)?;
        A_PIECES.lock().unwrap().insert(m, g.clone());
        Ok(g)
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a combination of chord diagrams.
    pub fn reduce(&self, c: &LinComb) -> Result<Vec<Rational>> {
        let r = self.relations.reduce(&to_vector(&self.index, c)?);
        Ok(self
            .basis
            .iter()
            .map(|i| r.get(i).cloned().unwrap_or_else(Rational::zero))
            .collect())
    }

    fn summary(&self) -> ADimension {
        ADimension {
            degree: self.degree,
            chord_diagrams: self.chords.len(),
            relation_rank: self.relations.rank(),
            dimension: self.basis.len(),
            basis: self.basis.iter().map(|&i| self.chords[i].clone()).collect(),
        }
    }
}

fn check_degree(m: usize) -> Result<()> {
    if m == 0 || m > 5 {
        return Err(Error::CostBound(format!("chord degree {m} outside 1..=5")));
    }
    Ok(())
}

/// Degree-`m` chord diagrams modulo the relations saying that STU applied
/// at any two legs of a single trivalent vertex agrees.
#[allow(non_snake_case)]
pub fn basis_A(m: usize) -> Result<ADimension> {
    Ok(GradedA::get(m)?.summary())
}

fn stu_relations(m: usize) -> Result<Vec<LinComb>> {
    let mut rels = Vec::new();
    let n = 2 * m - 1;
    if m >= 2 {
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let rest: Vec<usize> = (0..n).filter(|&p| p != i && p != j && p != l).collect();
                    for mt in matchings(&rest) {
                        let y = n;
                        let mut adj = vec![Vec::new(); n + 1];
                        for &(a, b) in &mt {
                            adj[a].push(b);
                            adj[b].push(a);
                        }
                        for p in [i, j, l] {
                            adj[p].push(y);
                            adj[y].push(p);
                        }
                        let mut kinds = vec![Kind::Uni; n];
                        kinds.push(Kind::Tri);
                        let d = Diagram::from_adjacency(kinds, &adj, Some((0..n).collect()))?;
                        let e: Vec<LinComb> = [i, j, l]
                            .iter()
                            .map(|&p| stu_expand(&d, p))
                            .collect::<Result<_>>()?;
                        rels.push(e[0].sub(&e[1]));
                        rels.push(e[1].sub(&e[2]));
                    }
                }
            }
        }
    }
    Ok(rels)
}

/// Same space via the four-term relation written directly on chord
/// diagrams: moving a chord end `z` across both ends of another chord.
#[allow(non_snake_case)]
pub fn basis_A_four_term(m: usize) -> Result<ADimension> {
    check_degree(m)?;
    let mut rels = Vec::new();
    for d in chord_diagrams(m) {
        let seq = d.skeleton().unwrap().to_vec();
        for &z in &seq {
            let zp = d.mate(z, 0).0;
            let rest: Vec<usize> = seq.iter().copied().filter(|&x| x != z).collect();
            for &x in &rest {
                let y = d.mate(x, 0).0;
                if x > y || x == zp || y == zp {
                    continue;
                }
                let mut rel = LinComb::new();
                for e in [x, y] {
                    let p = rest.iter().position(|&q| q == e).unwrap();
                    for (at, sign) in [(p + 1, 1), (p, -1)] {
                        let mut s = rest.clone();
                        s.insert(at, z);
                        rel.add_diagram(&d.with_skeleton(Some(s))?, &Rational::from_integer(sign.into()));
                    }
                }
                rels.push(rel);
            }
        }
    }
    Ok(GradedA::from_relations(m, rels)?.summary())
}
