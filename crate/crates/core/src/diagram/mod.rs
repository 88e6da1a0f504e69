//! Unitrivalent diagrams, with or without an oriented skeleton circle.

mod canon;
mod enumerate;
mod lincomb;
mod piece;
mod spaces;
mod stu;
mod text;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::{Error, Result};

pub use canon::canonicalize;
pub use enumerate::connected_diagrams;
pub use lincomb::LinComb;
pub use piece::{insert_at_vertex, InsertionPiece};
pub use spaces::{
    basis_A, basis_A_four_term, chord_diagrams, ihx_terms, reduce_B, ADimension, BReduction, GradedA,
    GradedB,
};
pub use stu::{chi_bar, chord_reduce, first_stu_leg, permutation_correction, stu_expand, MAX_CHI_BAR_LEGS, STU_SIGN};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Kind {
    Uni,
    Tri,
}

impl Kind {
    pub fn valence(self) -> usize {
        match self {
            Kind::Uni => 1,
            Kind::Tri => 3,
        }
    }
}

/// Half-edge `(vertex, slot)`.
pub type Slot = (usize, usize);

/// `mate[v][s]` is the half-edge joined to slot `s` of `v`. The slot order
/// of a trivalent vertex is its cyclic order. The skeleton, if present, is
/// the cyclic sequence of univalent vertices along the oriented circle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    kinds: Vec<Kind>,
    mate: Vec<Vec<Slot>>,
    skeleton: Option<Vec<usize>>,
}

impl Diagram {
    pub fn new(kinds: Vec<Kind>, mate: Vec<Vec<Slot>>, skeleton: Option<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if kinds.len() != mate.len() {
            return bad("one slot list per vertex".into());
        }
        for (v, slots) in mate.iter().enumerate() {
            if slots.len() != kinds[v].valence() {
                return bad(format!("vertex {v} has degree {}", slots.len()));
            }
            for (s, &(w, t)) in slots.iter().enumerate() {
                if w >= mate.len() || t >= mate[w].len() || mate[w][t] != (v, s) || (w, t) == (v, s) {
                    return bad(format!("half-edge {v}.{s} is not paired consistently"));
                }
            }
        }
        if let Some(sk) = &skeleton {
            let set: BTreeSet<usize> = sk.iter().copied().collect();
            if set.len() != sk.len() {
                return bad("skeleton repeats a vertex".into());
            }
            let unis: BTreeSet<usize> = (0..kinds.len()).filter(|&v| kinds[v] == Kind::Uni).collect();
            if set != unis {
                return bad("skeleton must list every univalent vertex exactly once".into());
            }
        }
        Ok(Self {
            kinds,
            mate,
            skeleton,
        })
    }

    /// Builds from per-vertex neighbour lists in cyclic order. Parallel
    /// edges are paired in order of occurrence, loops by consecutive
    /// occurrences.
    pub fn from_adjacency(kinds: Vec<Kind>, adj: &[Vec<usize>], skeleton: Option<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        let mut mate: Vec<Vec<Option<Slot>>> = adj.iter().map(|a| vec![None; a.len()]).collect();
        for v in 0..n {
            for s in 0..adj[v].len() {
                if mate[v][s].is_some() {
                    continue;
                }
                let w = adj[v][s];
                if w >= n {
                    return Err(Error::InvalidArgument(format!("unknown vertex {w}")));
                }
                let t = (0..adj[w].len())
                    .find(|&t| adj[w][t] == v && mate[w][t].is_none() && (w, t) != (v, s))
                    .ok_or_else(|| Error::InvalidArgument(format!("edge {v}-{w} is one-sided")))?;
                mate[v][s] = Some((w, t));
                mate[w][t] = Some((v, s));
            }
        }
        let mate = mate.into_iter().map(|m| m.into_iter().map(Option::unwrap).collect()).collect();
        Self::new(kinds, mate, skeleton)
    }

    /// Builds from planar positions: each trivalent vertex gets the
    /// counterclockwise order of its neighbours.
    pub fn from_planar(
        kinds: Vec<Kind>,
        points: &[(f64, f64)],
        edges: &[(usize, usize)],
        skeleton: Option<Vec<usize>>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); kinds.len()];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            let (x0, y0) = points[v];
            list.sort_by(|&a, &b| {
                let ang = |w: usize| (points[w].1 - y0).atan2(points[w].0 - x0);
                ang(a).partial_cmp(&ang(b)).unwrap()
            });
        }
        Self::from_adjacency(kinds, &adj, skeleton)
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, v: usize) -> Kind {
        self.kinds[v]
    }

    pub fn kinds(&self) -> &[Kind] {
        &self.kinds
    }

    pub fn mate(&self, v: usize, s: usize) -> Slot {
        self.mate[v][s]
    }

    pub fn slots(&self, v: usize) -> &[Slot] {
        &self.mate[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.mate[v].iter().map(|&(w, _)| w)
    }

    pub fn skeleton(&self) -> Option<&[usize]> {
        self.skeleton.as_deref()
    }

    pub fn has_skeleton(&self) -> bool {
        self.skeleton.is_some()
    }

    pub fn degree(&self) -> usize {
        self.kinds.len() / 2
    }

    pub fn legs(&self) -> Vec<usize> {
        (0..self.kinds.len()).filter(|&v| self.kinds[v] == Kind::Uni).collect()
    }

    pub fn trivalent(&self) -> Vec<usize> {
        (0..self.kinds.len()).filter(|&v| self.kinds[v] == Kind::Tri).collect()
    }

    pub fn num_legs(&self) -> usize {
        self.legs().len()
    }

    pub fn is_chord_diagram(&self) -> bool {
        self.has_skeleton() && self.kinds.iter().all(|&k| k == Kind::Uni)
    }

    pub fn has_loop(&self) -> bool {
        (0..self.kinds.len()).any(|v| self.neighbors(v).any(|w| w == v))
    }

    /// Connectivity of the graph together with the skeleton.
    pub fn is_connected(&self) -> bool {
        let n = self.kinds.len();
        if n == 0 {
            return true;
        }
        let mut extra = vec![Vec::new(); n];
        if let Some(sk) = &self.skeleton {
            for i in 0..sk.len() {
                let (a, b) = (sk[i], sk[(i + 1) % sk.len()]);
                extra[a].push(b);
                extra[b].push(a);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v).chain(extra[v].iter().copied()) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Same graph with the given skeleton.
    pub fn with_skeleton(&self, skeleton: Option<Vec<usize>>) -> Result<Self> {
        Self::new(self.kinds.clone(), self.mate.clone(), skeleton)
    }

    /// Reverses the cyclic order at trivalent vertex `v`.
    pub fn flip(&self, v: usize) -> Self {
        assert_eq!(self.kinds[v], Kind::Tri, "only trivalent vertices carry an order");
        let mut d = Draft::from(self);
        let (a, b) = (d.mate[v][1], d.mate[v][2]);
        d.mate[v][1] = None;
        d.mate[v][2] = None;
        // Loops at v map to themselves under the swap.
        let fix = |x: Slot| if x.0 == v && x.1 != 0 { (v, 3 - x.1) } else { x };
        d.connect((v, 2), fix(a.unwrap()));
        d.connect((v, 1), fix(b.unwrap()));
        d.finish().expect("flipping keeps validity")
    }

    /// Relabels vertices by `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.kinds.len();
        let mut kinds = vec![Kind::Uni; n];
        let mut mate = vec![Vec::new(); n];
        for v in 0..n {
            kinds[perm[v]] = self.kinds[v];
            mate[perm[v]] = self.mate[v].iter().map(|&(w, t)| (perm[w], t)).collect();
        }
        let skeleton = self.skeleton.as_ref().map(|s| s.iter().map(|&v| perm[v]).collect());
        Self {
            kinds,
            mate,
            skeleton,
        }
    }

    /// `S_k`: an inner cycle of `k` trivalent vertices, each with one leg.
    /// Each cycle vertex has cyclic order (leg, next, previous).
    pub fn sun(k: usize) -> Result<Self> {
        if k < 2 || !k.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("S_k needs even k >= 2, got {k}")));
        }
        let mut mate = vec![vec![(0, 0); 3]; k];
        mate.extend((0..k).map(|i| vec![(i, 0)]));
        for i in 0..k {
            mate[i][0] = (k + i, 0);
            mate[i][1] = ((i + 1) % k, 2);
            mate[i][2] = ((i + k - 1) % k, 1);
        }
        let mut kinds = vec![Kind::Tri; k];
        kinds.extend(vec![Kind::Uni; k]);
        Self::new(kinds, mate, None)
    }

    /// Skeleton-free disjoint union; `other` is renumbered after `self`.
    pub fn disjoint_union(&self, other: &Diagram) -> Result<Self> {
        if self.has_skeleton() || other.has_skeleton() {
            return Err(Error::InvalidArgument("disjoint union of skeleton-free diagrams only".into()));
        }
        let off = self.num_vertices();
        let mut kinds = self.kinds.clone();
        kinds.extend_from_slice(&other.kinds);
        let mut mate = self.mate.clone();
        mate.extend(other.mate.iter().map(|ss| ss.iter().map(|&(w, t)| (w + off, t)).collect()));
        Self::new(kinds, mate, None)
    }

    /// The strut: one edge between two legs.
    pub fn strut() -> Self {
        Self {
            kinds: vec![Kind::Uni; 2],
            mate: vec![vec![(1, 0)], vec![(0, 0)]],
            skeleton: None,
        }
    }

    /// `T_k`: `S_k` with its legs glued to the skeleton in cycle order.
    pub fn sun_on_circle(k: usize) -> Result<Self> {
        let s = Self::sun(k)?;
        s.with_skeleton(Some((k..2 * k).collect()))
    }

    /// The chord diagram with chords given as pairs of skeleton positions.
    pub fn chord(pairs: &[(usize, usize)]) -> Result<Self> {
        let n = 2 * pairs.len();
        let mut mate = vec![vec![(0, 0)]; n];
        for &(a, b) in pairs {
            mate[a][0] = (b, 0);
            mate[b][0] = (a, 0);
        }
        Self::new(vec![Kind::Uni; n], mate, Some((0..n).collect()))
    }

    /// Bare oriented circle.
    pub fn circle() -> Self {
        Self {
            kinds: Vec::new(),
            mate: Vec::new(),
            skeleton: Some(Vec::new()),
        }
    }

    pub fn to_text(&self) -> String {
        text::to_text(self)
    }

    pub fn from_text(s: &str) -> Result<Self> {
        text::from_text(s)
    }
}

/// Mutable diagram under surgery; vertices may be removed and half-edges
/// reconnected before `finish` compacts and validates.
#[derive(Clone, Debug)]
pub(crate) struct Draft {
    pub kinds: Vec<Kind>,
    pub mate: Vec<Vec<Option<Slot>>>,
    pub skeleton: Option<Vec<usize>>,
    pub dead: Vec<bool>,
}

impl From<&Diagram> for Draft {
    fn from(d: &Diagram) -> Self {
        Self {
            kinds: d.kinds.clone(),
            mate: d.mate.iter().map(|m| m.iter().map(|&x| Some(x)).collect()).collect(),
            skeleton: d.skeleton.clone(),
            dead: vec![false; d.kinds.len()],
        }
    }
}

impl Draft {
    pub fn add_vertex(&mut self, kind: Kind) -> usize {
        self.kinds.push(kind);
        self.mate.push(vec![None; kind.valence()]);
        self.dead.push(false);
        self.kinds.len() - 1
    }

    pub fn connect(&mut self, a: Slot, b: Slot) {
        self.mate[a.0][a.1] = Some(b);
        self.mate[b.0][b.1] = Some(a);
    }

    pub fn get(&self, a: Slot) -> Slot {
        self.mate[a.0][a.1].expect("half-edge is connected")
    }

    pub fn kill(&mut self, v: usize) {
        self.dead[v] = true;
        if let Some(sk) = &mut self.skeleton {
            sk.retain(|&x| x != v);
        }
    }

    pub fn finish(self) -> Result<Diagram> {
        let mut newid = vec![usize::MAX; self.kinds.len()];
        let mut n = 0;
        for v in 0..self.kinds.len() {
            if !self.dead[v] {
                newid[v] = n;
                n += 1;
            }
        }
        let mut kinds = Vec::with_capacity(n);
        let mut mate = Vec::with_capacity(n);
        for v in 0..self.kinds.len() {
            if self.dead[v] {
                continue;
            }
            kinds.push(self.kinds[v]);
            let mut slots = Vec::new();
            for (s, m) in self.mate[v].iter().enumerate() {
                let (w, t) = m.ok_or_else(|| Error::Assertion(format!("dangling half-edge {v}.{s}")))?;
                if self.dead[w] {
                    return Err(Error::Assertion(format!("half-edge {v}.{s} joins a removed vertex")));
                }
                slots.push((newid[w], t));
            }
            mate.push(slots);
        }
        let skeleton = self.skeleton.map(|s| s.into_iter().map(|v| newid[v]).collect());
        Diagram::new(kinds, mate, skeleton)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_union_renumbers() {
        let s2 = Diagram::sun(2).unwrap();
        let u = s2.disjoint_union(&Diagram::strut()).unwrap();
        assert_eq!((u.num_vertices(), u.num_legs(), u.degree()), (6, 4, 3));
        assert!(!u.is_connected());
        assert_eq!(u.mate(4, 0), (5, 0));
        assert!(Diagram::circle().disjoint_union(&s2).is_err());
    }

    #[test]
    fn sun_counts() {
        let s2 = Diagram::sun(2).unwrap();
        assert_eq!((s2.num_vertices(), s2.num_legs()), (4, 2));
        assert_eq!(Diagram::sun_on_circle(2).unwrap().skeleton().unwrap().len(), 2);
        for k in [2, 4, 6, 8] {
            assert_eq!(Diagram::sun(k).unwrap().degree(), k);
        }
        assert!(Diagram::sun(3).is_err());
        assert!(Diagram::sun(0).is_err());
    }

    #[test]
    fn rejects_bad_degree() {
        let adj = vec![vec![1], vec![0, 2], vec![1]];
        assert!(Diagram::from_adjacency(vec![Kind::Uni, Kind::Tri, Kind::Uni], &adj, None).is_err());
    }

    #[test]
    fn flip_is_involution() {
        let s = Diagram::sun(4).unwrap();
        assert_eq!(s.flip(0).flip(0), s);
        assert_ne!(s.flip(0), s);
    }
}
