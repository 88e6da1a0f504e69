//! Line-based serialisation:
//!
//! ```text
//! v 0 tri
//! v 1 uni
//! e 0.0 1.0
//! skeleton 1
//! ```
//!
//! `v <id> uni|tri` declares vertices, `e a.s b.t` joins slot `s` of `a`
//! to slot `t` of `b` (slot order is the cyclic order), and an optional
//! `skeleton` line lists the univalent vertices along the oriented circle.
//! Blank lines and `#` comments are ignored.

use super::{Diagram, Kind, Slot};
use crate::{Error, Result};

pub fn to_text(d: &Diagram) -> String {
    let mut out = String::new();
    for v in 0..d.num_vertices() {
        let k = match d.kind(v) {
            Kind::Uni => "uni",
            Kind::Tri => "tri",
        };
        out.push_str(&format!("v {v} {k}\n"));
    }
    for v in 0..d.num_vertices() {
        for (s, &(w, t)) in d.slots(v).iter().enumerate() {
            if (v, s) < (w, t) {
                out.push_str(&format!("e {v}.{s} {w}.{t}\n"));
            }
        }
    }
    if let Some(sk) = d.skeleton() {
        out.push_str("skeleton");
        for v in sk {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

fn parse_slot(s: &str) -> Option<Slot> {
    let (a, b) = s.split_once('.')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

pub fn from_text(src: &str) -> Result<Diagram> {
    let err = |line: usize, m: &str| Error::Parse(format!("line {}: {m}", line + 1));
    let mut kinds: Vec<Option<Kind>> = Vec::new();
    let mut edges = Vec::new();
    let mut skeleton = None;
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        match f[0] {
            "v" => {
                if f.len() != 3 {
                    return Err(err(i, "expected `v <id> uni|tri`"));
                }
                let id: usize = f[1].parse().map_err(|_| err(i, "bad vertex id"))?;
                let k = match f[2] {
                    "uni" => Kind::Uni,
                    "tri" => Kind::Tri,
                    _ => return Err(err(i, "vertex kind must be uni or tri")),
                };
                if kinds.len() <= id {
                    kinds.resize(id + 1, None);
                }
                if kinds[id].replace(k).is_some() {
                    return Err(err(i, "vertex declared twice"));
                }
            }
            "e" => {
                if f.len() != 3 {
                    return Err(err(i, "expected `e a.s b.t`"));
                }
                let a = parse_slot(f[1]).ok_or_else(|| err(i, "bad half-edge"))?;
                let b = parse_slot(f[2]).ok_or_else(|| err(i, "bad half-edge"))?;
                edges.push((i, a, b));
            }
            "skeleton" => {
                let ids: std::result::Result<Vec<usize>, _> = f[1..].iter().map(|x| x.parse()).collect();
                skeleton = Some(ids.map_err(|_| err(i, "bad skeleton id"))?);
            }
            _ => return Err(err(i, "unknown record")),
        }
    }
    let kinds: Vec<Kind> = kinds
        .into_iter()
        .enumerate()
        .map(|(v, k)| k.ok_or_else(|| Error::Parse(format!("vertex {v} not declared"))))
        .collect::<Result<_>>()?;
    let mut mate: Vec<Vec<Option<Slot>>> = kinds.iter().map(|k| vec![None; k.valence()]).collect();
    for (i, a, b) in edges {
        for (x, y) in [(a, b), (b, a)] {
            let slot = mate
                .get_mut(x.0)
                .and_then(|m| m.get_mut(x.1))
                .ok_or_else(|| err(i, "half-edge out of range"))?;
            if slot.replace(y).is_some() {
                return Err(err(i, "half-edge used twice"));
            }
        }
    }
    let mate = mate
        .into_iter()
        .enumerate()
        .map(|(v, m)| {
            m.into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Parse(format!("vertex {v} has a free half-edge")))
        })
        .collect::<Result<_>>()?;
    Diagram::new(kinds, mate, skeleton)
}
