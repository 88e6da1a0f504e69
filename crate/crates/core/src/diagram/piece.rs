use serde::Serialize;

use super::{Diagram, Draft, Kind, LinComb};
use crate::{Error, Result};

/// Connected skeleton-free diagram with three legs in cyclic order, to be
/// substituted for a trivalent vertex.
#[derive(Clone, Debug, Serialize)]
pub struct InsertionPiece {
    pub name: String,
    #[serde(skip)]
    pub diagram: Diagram,
    pub legs: [usize; 3],
}

impl InsertionPiece {
    pub fn new(name: &str, diagram: Diagram, legs: [usize; 3]) -> Result<Self> {
        let mut l = diagram.legs();
        let mut given = legs.to_vec();
        l.sort_unstable();
        given.sort_unstable();
        if diagram.has_skeleton() || l != given || !diagram.is_connected() {
            return Err(Error::InvalidArgument(
                "a piece is a connected skeleton-free diagram with exactly its three legs".into(),
            ));
        }
        Ok(Self {
            name: name.into(),
            diagram,
            legs,
        })
    }

    /// Degree added by an insertion.
    pub fn degree(&self) -> usize {
        (self.diagram.num_vertices() - 4) / 2
    }

    /// Two rails of `r` vertices joined by `r` rungs, closed by a vertex
    /// carrying the third leg. Legs, counterclockwise: upper rail start,
    /// lower rail start, far end.
    pub fn ladder(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("a ladder needs at least one rung".into()));
        }
        let (la, lb, lc, j) = (0, 1, 2, 3);
        let a = |i: usize| 4 + i;
        let b = |i: usize| 4 + r + i;
        let n = 4 + 2 * r;
        let mut kinds = vec![Kind::Uni; 3];
        kinds.extend(vec![Kind::Tri; n - 3]);
        let mut pts = vec![(0.0, 1.0), (0.0, 0.0), (r as f64 + 2.0, 0.5), (r as f64 + 1.0, 0.5)];
        pts.extend((1..=r).map(|i| (i as f64, 1.0)));
        pts.extend((1..=r).map(|i| (i as f64, 0.0)));
        let mut edges = vec![(la, a(0)), (lb, b(0)), (j, lc), (a(r - 1), j), (b(r - 1), j)];
        for i in 0..r {
            edges.push((a(i), b(i)));
            if i + 1 < r {
                edges.push((a(i), a(i + 1)));
                edges.push((b(i), b(i + 1)));
            }
        }
        let d = Diagram::from_planar(kinds, &pts, &edges, None)?;
        let name = if r == 1 { "triangle".to_string() } else { format!("ladder({r})") };
        Self::new(&name, d, [la, lb, lc])
    }

    pub fn triangle() -> Self {
        Self::ladder(1).expect("one rung is valid")
    }
}

/// Replaces trivalent vertex `v` of `d` by `piece`; slot `i` of `v` is
/// glued to leg `(i + rotation) % 3` of the piece.
pub fn insert_at_vertex(
    d: &Diagram,
    v: usize,
    piece: &InsertionPiece,
    rotation: usize,
) -> Result<LinComb> {
    if v >= d.num_vertices() || d.kind(v) != Kind::Tri {
        return Err(Error::InvalidArgument(format!("vertex {v} is not trivalent")));
    }
    if d.neighbors(v).any(|w| w == v) {
        return Ok(LinComb::new());
    }
    let mut dr = Draft::from(d);
    let off = d.num_vertices();
    for x in 0..piece.diagram.num_vertices() {
        dr.add_vertex(piece.diagram.kind(x));
    }
    for x in 0..piece.diagram.num_vertices() {
        for (s, &(y, t)) in piece.diagram.slots(x).iter().enumerate() {
            dr.mate[off + x][s] = Some((off + y, t));
        }
    }
    for i in 0..3 {
        let outer = d.mate(v, i);
        let leg = off + piece.legs[(i + rotation) % 3];
        let inner = dr.get((leg, 0));
        dr.connect(outer, inner);
        dr.kill(leg);
    }
    dr.kill(v);
    Ok(LinComb::from_diagram(&dr.finish()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(InsertionPiece::triangle().degree(), 1);
        assert_eq!(InsertionPiece::ladder(3).unwrap().degree(), 3);
        let s6 = Diagram::sun(6).unwrap();
        let r = insert_at_vertex(&s6, 0, &InsertionPiece::triangle(), 0).unwrap();
        let (d, _) = r.iter().next().unwrap();
        assert_eq!(d.degree(), 7);
        assert_eq!(d.num_legs(), 6);
    }

    #[test]
    fn rejects_univalent_vertex() {
        let s2 = Diagram::sun(2).unwrap();
        assert!(insert_at_vertex(&s2, 2, &InsertionPiece::triangle(), 0).is_err());
    }

    #[test]
    fn triangle_is_planar_triangle() {
        let t = InsertionPiece::triangle();
        assert_eq!(t.diagram.num_vertices(), 6);
        assert_eq!(t.diagram.trivalent().len(), 3);
    }
}
