//! All connected unitrivalent graphs of a given size, grown from the strut.
//!
//! Graphs with loops are kept as intermediates: every connected graph with
//! at least one leg is reached from the strut by subdividing an edge and
//! adding a leg, joining two subdivision points by a new edge, and closing a
//! leg into a loop.

use std::collections::BTreeSet;
use std::sync::Mutex;

use super::{canonicalize, Diagram, Draft, Kind, Slot};

static LEVELS: Mutex<Vec<Vec<Diagram>>> = Mutex::new(Vec::new());

fn edges(d: &Diagram) -> Vec<(Slot, Slot)> {
    let mut out = Vec::new();
    for v in 0..d.num_vertices() {
        for (s, &m) in d.slots(v).iter().enumerate() {
            if (v, s) < m {
                out.push(((v, s), m));
            }
        }
    }
    out
}

fn canon(d: &Diagram) -> Diagram {
    canonicalize(d).0
}

fn add_leg(d: &Diagram, (a, b): (Slot, Slot)) -> Diagram {
    let mut dr = Draft::from(d);
    let x = dr.add_vertex(Kind::Tri);
    let u = dr.add_vertex(Kind::Uni);
    dr.connect((x, 0), a);
    dr.connect((x, 1), b);
    dr.connect((x, 2), (u, 0));
    dr.finish().expect("subdivision is valid")
}

fn add_edge(d: &Diagram, (a, b): (Slot, Slot), (c, e): (Slot, Slot)) -> Diagram {
    let mut dr = Draft::from(d);
    let x = dr.add_vertex(Kind::Tri);
    let y = dr.add_vertex(Kind::Tri);
    if (a, b) == (c, e) {
        dr.connect((x, 0), a);
        dr.connect((x, 1), (y, 0));
        dr.connect((y, 1), b);
    } else {
        dr.connect((x, 0), a);
        dr.connect((x, 1), b);
        dr.connect((y, 0), c);
        dr.connect((y, 1), e);
    }
    dr.connect((x, 2), (y, 2));
    dr.finish().expect("subdivision is valid")
}

fn close_leg(d: &Diagram, u: usize) -> Diagram {
    let mut dr = Draft::from(d);
    dr.kinds[u] = Kind::Tri;
    dr.mate[u].push(None);
    dr.mate[u].push(None);
    dr.connect((u, 1), (u, 2));
    dr.finish().expect("closing a leg is valid")
}

fn close_under_loops(set: &mut BTreeSet<Diagram>) {
    let mut frontier: Vec<Diagram> = set.iter().cloned().collect();
    while let Some(d) = frontier.pop() {
        if d.num_legs() <= 1 {
            continue;
        }
        for u in d.legs() {
            let c = canon(&close_leg(&d, u));
            if set.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
}

fn level(m: usize) -> Vec<Diagram> {
    let mut levels = LEVELS.lock().unwrap();
    if levels.is_empty() {
        let strut = Diagram::new(vec![Kind::Uni, Kind::Uni], vec![vec![(1, 0)], vec![(0, 0)]], None)
            .expect("strut is valid");
        let mut set = BTreeSet::from([canon(&strut)]);
        close_under_loops(&mut set);
        levels.push(set.into_iter().collect());
    }
    while levels.len() < m {
        let mut set = BTreeSet::new();
        for d in levels.last().unwrap() {
            let es = edges(d);
            for (i, &e) in es.iter().enumerate() {
                set.insert(canon(&add_leg(d, e)));
                for &f in &es[i..] {
                    set.insert(canon(&add_edge(d, e, f)));
                }
            }
        }
        close_under_loops(&mut set);
        levels.push(set.into_iter().collect());
    }
    levels[m - 1].clone()
}

/// Canonical representatives of the connected skeleton-free diagrams of
/// degree `m` with `k` legs that do not vanish by antisymmetry.
pub fn connected_diagrams(m: usize, k: usize) -> Vec<Diagram> {
    if m == 0 {
        return Vec::new();
    }
    level(m)
        .into_iter()
        .filter(|d| d.num_legs() == k && !d.has_loop())
        .filter(|d| canonicalize(d).1 != 0)
        .collect()
}
