//! Canonical labelling by colour refinement and a pruned search over
//! breadth-first labellings. Cyclic orders do not influence the labelling;
//! they only contribute the sign relative to the canonical orientation.

use std::cmp::Ordering;

use super::{Diagram, Kind, Slot};

type Entry = (u32, Vec<u32>, Option<u32>, Option<u32>);

const UNSET: usize = usize::MAX;

/// Returns the canonical representative and the sign `s` with
/// `d = s * canonical`; `s = 0` when `d` vanishes by antisymmetry (a loop
/// or an orientation-reversing automorphism).
pub fn canonicalize(d: &Diagram) -> (Diagram, i32) {
    let n = d.num_vertices();
    let (succ, pred) = skeleton_links(d);
    let colors = refine(d, &succ, &pred);
    let mut s = Search {
        d,
        succ: &succ,
        pred: &pred,
        colors: &colors,
        label: vec![UNSET; n],
        order: Vec::with_capacity(n),
        code: Vec::with_capacity(n),
        best: None,
        best_order: Vec::new(),
        best_sign: 0,
        odd: false,
    };
    s.recurse(0);
    let order = std::mem::take(&mut s.best_order);
    let sign = if d.has_loop() || s.odd { 0 } else { s.best_sign };
    (build(d, &order), sign)
}

fn skeleton_links(d: &Diagram) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n = d.num_vertices();
    let mut succ = vec![None; n];
    let mut pred = vec![None; n];
    if let Some(sk) = d.skeleton() {
        for i in 0..sk.len() {
            let (a, b) = (sk[i], sk[(i + 1) % sk.len()]);
            succ[a] = Some(b);
            pred[b] = Some(a);
        }
    }
    (succ, pred)
}

fn refine(d: &Diagram, succ: &[Option<usize>], pred: &[Option<usize>]) -> Vec<u32> {
    let n = d.num_vertices();
    let mut colors: Vec<u32> = (0..n)
        .map(|v| 2 * (d.kind(v) == Kind::Tri) as u32 + succ[v].is_some() as u32)
        .collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<Entry> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = d.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, succ[v].map(|w| colors[w]), pred[v].map(|w| colors[w]))
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    d: &'a Diagram,
    succ: &'a [Option<usize>],
    pred: &'a [Option<usize>],
    colors: &'a [u32],
    label: Vec<usize>,
    order: Vec<usize>,
    code: Vec<Entry>,
    best: Option<Vec<Entry>>,
    best_order: Vec<usize>,
    best_sign: i32,
    odd: bool,
}

impl Search<'_> {
    fn lab(&self, v: Option<usize>) -> Option<u32> {
        v.filter(|&w| self.label[w] != UNSET).map(|w| self.label[w] as u32)
    }

    /// Labels `v` next; returns `false` if the code prefix is already worse
    /// than the best complete code.
    fn assign(&mut self, v: usize) -> bool {
        self.label[v] = self.order.len();
        self.order.push(v);
        let mut nb: Vec<u32> = self
            .d
            .neighbors(v)
            .filter(|&w| self.label[w] != UNSET)
            .map(|w| self.label[w] as u32)
            .collect();
        nb.sort_unstable();
        let e = (self.colors[v], nb, self.lab(self.succ[v]), self.lab(self.pred[v]));
        self.code.push(e);
        match &self.best {
            None => true,
            Some(b) => self.code.as_slice().cmp(&b[..self.code.len()]) != Ordering::Greater,
        }
    }

    fn unassign(&mut self) {
        let v = self.order.pop().unwrap();
        self.label[v] = UNSET;
        self.code.pop();
    }

    fn recurse(&mut self, ptr: usize) {
        let n = self.d.num_vertices();
        if self.order.len() == n {
            self.complete();
            return;
        }
        if ptr == self.order.len() {
            let c = (0..n)
                .filter(|&v| self.label[v] == UNSET)
                .map(|v| self.colors[v])
                .min()
                .unwrap();
            for v in 0..n {
                if self.label[v] == UNSET && self.colors[v] == c {
                    if self.assign(v) {
                        self.recurse(ptr);
                    }
                    self.unassign();
                }
            }
            return;
        }
        let v = self.order[ptr];
        let mut cands: Vec<(u8, u32, usize)> = Vec::new();
        let push = |ty: u8, w: usize, cands: &mut Vec<(u8, u32, usize)>| {
            if self.label[w] == UNSET && !cands.iter().any(|c| c.2 == w) {
                cands.push((ty, self.colors[w], w));
            }
        };
        for w in self.d.neighbors(v) {
            push(0, w, &mut cands);
        }
        if let Some(w) = self.succ[v] {
            push(1, w, &mut cands);
        }
        if let Some(w) = self.pred[v] {
            push(2, w, &mut cands);
        }
        cands.sort();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (i, c) in cands.iter().enumerate() {
            if i > 0 && (cands[i - 1].0, cands[i - 1].1) == (c.0, c.1) {
                groups.last_mut().unwrap().push(c.2);
            } else {
                groups.push(vec![c.2]);
            }
        }
        let orders = group_orders(&groups);
        for seq in orders {
            let mut k = 0;
            let mut ok = true;
            for &w in &seq {
                k += 1;
                if !self.assign(w) {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.recurse(ptr + 1);
            }
            for _ in 0..k {
                self.unassign();
            }
        }
    }

    fn complete(&mut self) {
        let sign = orientation_sign(self.d, &self.label);
        let better = match &self.best {
            None => true,
            Some(b) => self.code < *b,
        };
        if better {
            self.best = Some(self.code.clone());
            self.best_order = self.order.clone();
            self.best_sign = sign;
            self.odd = false;
        } else if sign != self.best_sign {
            self.odd = true;
        }
    }
}

pub(crate) fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn group_orders(groups: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for g in groups {
        let perms = permutations(g);
        out = out
            .into_iter()
            .flat_map(|pre| {
                perms.iter().map(move |p| {
                    let mut x = pre.clone();
                    x.extend(p);
                    x
                })
            })
            .collect();
    }
    out
}

/// Sort key of the edge at half-edge `(v, s)` under `label`: endpoint labels
/// and the slot at the lower endpoint to separate parallel edges.
fn edge_key(d: &Diagram, label: &[usize], v: usize, s: usize) -> (usize, usize, usize) {
    let (w, t) = d.mate(v, s);
    let (lv, lw) = (label[v], label[w]);
    match lv.cmp(&lw) {
        Ordering::Less => (lv, lw, s),
        Ordering::Greater => (lw, lv, t),
        Ordering::Equal => (lv, lv, s.min(t)),
    }
}

fn orientation_sign(d: &Diagram, label: &[usize]) -> i32 {
    let mut sign = 1;
    for v in 0..d.num_vertices() {
        if d.kind(v) != Kind::Tri {
            continue;
        }
        let k: Vec<_> = (0..3).map(|s| edge_key(d, label, v, s)).collect();
        let inv = (k[0] > k[1]) as u32 + (k[0] > k[2]) as u32 + (k[1] > k[2]) as u32;
        if inv % 2 == 1 {
            sign = -sign;
        }
    }
    sign
}

fn build(d: &Diagram, order: &[usize]) -> Diagram {
    let n = d.num_vertices();
    let mut label = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }
    // New slot index of each old half-edge.
    let mut newslot = vec![Vec::new(); n];
    for v in 0..n {
        let mut idx: Vec<usize> = (0..d.slots(v).len()).collect();
        idx.sort_by_key(|&s| (edge_key(d, &label, v, s), s));
        let mut pos = vec![0; idx.len()];
        for (p, &s) in idx.iter().enumerate() {
            pos[s] = p;
        }
        newslot[v] = pos;
    }
    let mut kinds = vec![Kind::Uni; n];
    let mut mate: Vec<Vec<Slot>> = (0..n).map(|x| vec![(0, 0); d.kind(order[x]).valence()]).collect();
    for v in 0..n {
        kinds[label[v]] = d.kind(v);
        for (s, &(w, t)) in d.slots(v).iter().enumerate() {
            mate[label[v]][newslot[v][s]] = (label[w], newslot[w][t]);
        }
    }
    let skeleton = d.skeleton().map(|sk| {
        let mut s: Vec<usize> = sk.iter().map(|&v| label[v]).collect();
        if let Some(p) = (0..s.len()).min_by_key(|&i| s[i]) {
            s.rotate_left(p);
        }
        s
    });
    Diagram::new(kinds, mate, skeleton).expect("relabelling preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm_of(n: usize, seed: u64) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (x >> 33) as usize % (i + 1);
            p.swap(i, j);
        }
        p
    }

    #[test]
    fn relabelling_invariance_and_as_sign() {
        let s2 = Diagram::sun(2).unwrap();
        let (c, sg) = canonicalize(&s2);
        for seed in 0..20 {
            let r = s2.relabel(&perm_of(4, seed));
            assert_eq!(canonicalize(&r), (c.clone(), sg));
        }
        let (c2, sg2) = canonicalize(&s2.flip(0));
        assert_eq!(c2, c);
        assert_eq!(sg2, -sg);
        assert_eq!(canonicalize(&c), (c.clone(), 1));
    }

    #[test]
    fn odd_wheel_vanishes() {
        let mut adj = Vec::new();
        for i in 0..3 {
            adj.push(vec![3 + i, (i + 1) % 3, (i + 2) % 3]);
        }
        for i in 0..3 {
            adj.push(vec![i]);
        }
        let mut kinds = vec![Kind::Tri; 3];
        kinds.extend([Kind::Uni; 3]);
        let w3 = Diagram::from_adjacency(kinds, &adj, None).unwrap();
        assert_eq!(canonicalize(&w3).1, 0);
        assert_ne!(canonicalize(&Diagram::sun(4).unwrap()).1, 0);
    }

    #[test]
    fn skeleton_orientation_matters() {
        // Chords (0,2),(1,3) vs (0,1),(2,3) on the circle.
        let a = Diagram::chord(&[(0, 2), (1, 3)]).unwrap();
        let b = Diagram::chord(&[(0, 1), (2, 3)]).unwrap();
        let b2 = Diagram::chord(&[(0, 3), (1, 2)]).unwrap();
        assert_ne!(canonicalize(&a).0, canonicalize(&b).0);
        assert_eq!(canonicalize(&b).0, canonicalize(&b2).0);
    }
}
