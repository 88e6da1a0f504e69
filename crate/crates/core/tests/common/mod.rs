//! Independent brute-force oracles shared by the integration tests.

use std::collections::HashMap;

use vassiliev_core::arith::{rat, Echelon, Rational, SparseVec};

// ---- chord diagrams on a circle modulo 4T ----

/// Chord diagram as the partner map of `2m` points on a circle.
fn canon_circle(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    (0..n)
        .map(|r| (0..n).map(|i| (p[(i + r) % n] + n - r) % n).collect::<Vec<_>>())
        .min()
        .unwrap()
}

fn all_matchings(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = p.iter().position(|&x| x == usize::MAX) else {
            out.push(p.clone());
            return;
        };
        for j in i + 1..p.len() {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                go(p, out);
                p[i] = usize::MAX;
                p[j] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], &mut out);
    out
}

/// Moves the endpoint at position `from` to sit just after position `after`
/// (positions taken before the move).
fn move_end(p: &[usize], from: usize, after: usize) -> Vec<usize> {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).filter(|&i| i != from).collect();
    let at = order.iter().position(|&i| i == after).unwrap() + 1;
    order.insert(at, from);
    let mut new_pos = vec![0; n];
    for (k, &old) in order.iter().enumerate() {
        new_pos[old] = k;
    }
    let mut q = vec![0; n];
    for i in 0..n {
        q[new_pos[i]] = new_pos[p[i]];
    }
    q
}

pub fn four_term_dimension(m: usize) -> usize {
    let n = 2 * m;
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for p in all_matchings(n) {
        let c = canon_circle(&p);
        let k = index.len();
        index.entry(c).or_insert(k);
    }
    let mut ech: Echelon<Rational> = Echelon::new();
    let id = |p: &[usize]| index[&canon_circle(p)];
    // 4T: the end z commutes with the chord (x, y) as a whole,
    // (z x - x z) + (z y - y z) = 0, written by the position of z.
    for p in all_matchings(n) {
        let z = 0;
        for x in 1..n {
            let y = p[x];
            if x == p[z] || y == p[z] || y < x {
                continue;
            }
            // z just before x and just after x, before y and after y.
            let before = |q: usize| move_end(&p, z, (q + n - 1) % n);
            let bx = if x == 1 { p.clone() } else { before(x) };
            let ax = move_end(&p, z, x);
            let by = before(y);
            let ay = move_end(&p, z, y);
            let mut row: SparseVec<Rational> = SparseVec::new();
            for (q, s) in [(bx, 1), (ax, -1), (by, 1), (ay, -1)] {
                let e = row.entry(id(&q)).or_insert_with(|| rat(0));
                *e += rat(s);
            }
            row.retain(|_, c| *c != rat(0));
            ech.insert(row);
        }
    }
    index.len() - ech.rank()
}
