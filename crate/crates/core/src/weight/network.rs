//! Universal weight system as a super tensor network: trivalent vertices
//! carry the structure tensor with both Casimir legs raised, chords carry
//! the Casimir, internal edges are contracted with the invariant form.

use std::collections::{BTreeMap, HashMap};


use crate::arith::MultiPoly;
use crate::diagram::{Diagram, Kind, LinComb};
use crate::lie::SuperAlgebra;
use crate::{Error, Result};

/// Largest intermediate tensor (number of stored entries).
pub const MAX_ENTRIES: usize = 4_000_000;

/// `sum_w c_w * b_{w_1} ... b_{w_r}` divided by `denominator`.
#[derive(Clone, Debug, PartialEq)]
pub struct WordSum {
    pub words: BTreeMap<Vec<u8>, MultiPoly>,
    /// `scale^scale_power`, with `scale` the common denominator of the form.
    pub denominator: MultiPoly,
    pub scale_power: u32,
}

impl WordSum {
    pub fn max_len(&self) -> usize {
        self.words.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Port {
    Leg(usize),
    Edge(usize),
}

#[derive(Clone, Debug)]
struct Tensor {
    ports: Vec<Port>,
    entries: HashMap<Vec<u8>, MultiPoly>,
}

/// Precomputed data of an algebra for contractions.
pub struct Network<'a> {
    alg: &'a SuperAlgebra,
    odd: Vec<bool>,
    /// Unique form partner of each basis element and the scaled pairing
    /// `d * <b_i, b_partner>`.
    partner: Vec<(usize, MultiPoly)>,
    scale: MultiPoly,
    vertex: HashMap<Vec<u8>, MultiPoly>,
}

fn add_into(map: &mut HashMap<Vec<u8>, MultiPoly>, key: Vec<u8>, c: MultiPoly) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl<'a> Network<'a> {
    pub fn new(alg: &'a SuperAlgebra) -> Result<Self> {
        if alg.dim() > 255 {
            return Err(Error::CostBound("algebra dimension above 255".into()));
        }
        let odd: Vec<bool> = (0..alg.dim()).map(|i| alg.parity(i).is_odd()).collect();
        let (scale, rows) = alg.scaled_pairing();
        let mut partner = Vec::with_capacity(alg.dim());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "basis element {i} must pair with exactly one basis element"
                )));
            }
            partner.push(row[0].clone());
        }
        // F = sum (-1)^{|i'||j|} w^{ii'} w^{jj'} b_i (x) b_j (x) [b_i', b_j']
        let mut vertex = HashMap::new();
        for (i, i2, w1) in &alg.casimir {
            for (j, j2, w2) in &alg.casimir {
                let s = if odd[*i2] && odd[*j] { -1 } else { 1 };
                let w = &(w1 * w2) * &MultiPoly::from_int(s);
                for (m, c) in &alg.bracket[*i2][*j2] {
                    add_into(&mut vertex, vec![*i as u8, *j as u8, *m as u8], &w * c);
                }
            }
        }
        Ok(Self {
            alg,
            odd,
            partner,
            scale,
            vertex,
        })
    }

    /// Entries of the vertex tensor, slot order (a, b, stem).
    pub fn vertex_tensor(&self) -> &HashMap<Vec<u8>, MultiPoly> {
        &self.vertex
    }

    pub fn odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    fn casimir_tensor(&self, x: usize, y: usize) -> Tensor {
        let mut entries = HashMap::new();
        for (i, j, w) in &self.alg.casimir {
            add_into(&mut entries, vec![*i as u8, *j as u8], w.clone());
        }
        Tensor {
            ports: vec![Port::Leg(x), Port::Leg(y)],
            entries,
        }
    }

    /// Contracts `a` and `b` over their shared edges.
    fn contract(&self, a: &Tensor, b: &Tensor) -> Result<Tensor> {
        let na = a.ports.len();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (p, pa) in a.ports.iter().enumerate() {
            if let Port::Edge(e) = pa {
                if let Some(q) = b.ports.iter().position(|pb| *pb == Port::Edge(*e)) {
                    pairs.push((p, na + q));
                }
            }
        }
        let keep: Vec<usize> = (0..na + b.ports.len())
            .filter(|x| !pairs.iter().any(|&(p, q)| p == *x || q == *x))
            .collect();
        let ports: Vec<Port> = keep
            .iter()
            .map(|&x| if x < na { a.ports[x] } else { b.ports[x - na] })
            .collect();
        // Index b by its contracted positions.
        let mut by_key: HashMap<Vec<u8>, Vec<(&Vec<u8>, &MultiPoly)>> = HashMap::new();
        for (kb, cb) in &b.entries {
            let key: Vec<u8> = pairs.iter().map(|&(_, q)| kb[q - na]).collect();
            by_key.entry(key).or_default().push((kb, cb));
        }
        let mut out: HashMap<Vec<u8>, MultiPoly> = HashMap::new();
        let mut full = vec![0u8; na + b.ports.len()];
        for (ka, ca) in &a.entries {
            let key: Vec<u8> = pairs
                .iter()
                .map(|&(p, _)| self.partner[ka[p] as usize].0 as u8)
                .collect();
            let Some(list) = by_key.get(&key) else {
                continue;
            };
            let mut factor = ca.clone();
            for &(p, _) in &pairs {
                factor = &factor * &self.partner[ka[p] as usize].1;
            }
            full[..na].copy_from_slice(ka);
            for (kb, cb) in list {
                full[na..].copy_from_slice(kb);
                let sign = self.contraction_sign(&full, &pairs);
                let mut c = &factor * *cb;
                if sign < 0 {
                    c = -c;
                }
                add_into(&mut out, keep.iter().map(|&x| full[x]).collect(), c);
            }
            if out.len() > MAX_ENTRIES {
                return Err(Error::CostBound(format!(
                    "intermediate tensor exceeds {MAX_ENTRIES} entries"
                )));
            }
        }
        Ok(Tensor {
            ports,
            entries: out,
        })
    }

    /// Sign of moving each contracted factor `q` next to `p`, pairs taken in
    /// order and removed as they are used.
    fn contraction_sign(&self, idx: &[u8], pairs: &[(usize, usize)]) -> i32 {
        let mut par: Vec<bool> = idx.iter().map(|&i| self.odd[i as usize]).collect();
        let mut alive = vec![true; par.len()];
        let mut sign = 1;
        for &(p, q) in pairs {
            if par[q] {
                let between = (p + 1..q).filter(|&r| alive[r] && par[r]).count();
                if between % 2 == 1 {
                    sign = -sign;
                }
            }
            alive[p] = false;
            alive[q] = false;
            par[p] = false;
            par[q] = false;
        }
        sign
    }

    /// Universal word sum of a diagram with skeleton.
    pub fn words(&self, d: &Diagram) -> Result<WordSum> {
        let sk = d
            .skeleton()
            .ok_or_else(|| Error::InvalidArgument("weight systems need a skeleton".into()))?;
        if d.has_loop() {
            return Ok(WordSum {
                words: BTreeMap::new(),
                denominator: MultiPoly::one(),
                scale_power: 0,
            });
        }
        let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
        let mut internal = 0u32;
        let mut tensors = Vec::new();
        for v in 0..d.num_vertices() {
            match d.kind(v) {
                Kind::Tri => {
                    let ports = (0..3)
                        .map(|s| {
                            let (w, t) = d.mate(v, s);
                            if d.kind(w) == Kind::Uni {
                                Port::Leg(w)
                            } else {
                                let key = (v, s).min((w, t));
                                let n = edge_id.len();
                                let id = *edge_id.entry(key).or_insert_with(|| {
                                    internal += 1;
                                    n
                                });
                                Port::Edge(id)
                            }
                        })
                        .collect();
                    tensors.push(Tensor {
                        ports,
                        entries: self.vertex.clone(),
                    });
                }
                Kind::Uni => {
                    let (w, _) = d.mate(v, 0);
                    if d.kind(w) == Kind::Uni && v < w {
                        tensors.push(self.casimir_tensor(v, w));
                    }
                }
            }
        }
        let mut result = if tensors.is_empty() {
            Tensor {
                ports: Vec::new(),
                entries: HashMap::from([(Vec::new(), MultiPoly::one())]),
            }
        } else {
            self.contract_all(tensors)?
        };
        // Reorder legs along the skeleton.
        let pos_of: HashMap<usize, usize> = sk.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let target: Vec<usize> = result
            .ports
            .iter()
            .map(|p| match p {
                Port::Leg(x) => pos_of[x],
                Port::Edge(_) => unreachable!("all edges contracted"),
            })
            .collect();
        let mut words = BTreeMap::new();
        for (k, c) in result.entries.drain() {
            let mut sign = 1;
            for i in 0..k.len() {
                for j in i + 1..k.len() {
                    if target[i] > target[j] && self.odd[k[i] as usize] && self.odd[k[j] as usize] {
                        sign = -sign;
                    }
                }
            }
            let mut w = vec![0u8; k.len()];
            for (i, &t) in target.iter().enumerate() {
                w[t] = k[i];
            }
            words.insert(w, if sign < 0 { -c } else { c });
        }
        Ok(WordSum {
            words,
            denominator: self.scale.pow(internal),
            scale_power: internal,
        })
    }

    fn contract_all(&self, mut ts: Vec<Tensor>) -> Result<Tensor> {
        while ts.len() > 1 {
            let mut best: Option<((usize, usize, usize), usize, usize)> = None;
            for i in 0..ts.len() {
                for j in i + 1..ts.len() {
                    let shared = ts[i]
                        .ports
                        .iter()
                        .filter(|p| matches!(p, Port::Edge(_)) && ts[j].ports.contains(p))
                        .count();
                    let rank = ts[i].ports.len() + ts[j].ports.len() - 2 * shared;
                    let size = ts[i].entries.len() * ts[j].entries.len();
                    let key = (usize::from(shared == 0), rank, size);
                    if best.as_ref().is_none_or(|b| key < b.0) {
                        best = Some((key, i, j));
                    }
                }
            }
            let (_, i, j) = best.unwrap();
            let b = ts.remove(j);
            let a = ts.remove(i);
            ts.push(self.contract(&a, &b)?);
        }
        Ok(ts.pop().unwrap())
    }

    /// Word sum of a combination, over the common denominator.
    pub fn words_comb(&self, c: &LinComb) -> Result<WordSum> {
        let parts: Vec<(WordSum, MultiPoly)> = c
            .iter()
            .map(|(d, k)| Ok((self.words(d)?, MultiPoly::constant(k.clone()))))
            .collect::<Result<_>>()?;
        let top = parts.iter().map(|p| p.0.scale_power).max().unwrap_or(0);
        let mut words: BTreeMap<Vec<u8>, MultiPoly> = BTreeMap::new();
        for (p, k) in parts {
            let f = &self.scale.pow(top - p.scale_power) * &k;
            for (w, c) in p.words {
                let e = words.entry(w).or_default();
                *e += &(&c * &f);
            }
        }
        words.retain(|_, c| !c.is_zero());
        Ok(WordSum {
            words,
            denominator: self.scale.pow(top),
            scale_power: top,
        })
    }
}
