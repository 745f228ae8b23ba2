//! Named graphs and cones.

use crate::cone::{curve_cone_graph, PolarizedCone};
use crate::error::{Error, Result};
use crate::graph::{Edge, ResolutionGraph, Vertex};

/// Expected singularity class of a catalog graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    /// Canonical (ADE): all discrepancies zero.
    Canonical,
    /// Log canonical but not klt: some log discrepancy is zero.
    LcNotKlt,
    NotLc,
}

impl Class {
    pub fn as_str(self) -> &'static str {
        match self {
            Class::Canonical => "canonical",
            Class::LcNotKlt => "lc, not klt",
            Class::NotLc => "not lc",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub description: String,
    pub class: Class,
}

fn rational(n: usize, self_int: i64) -> Vec<Vertex> {
    (0..n).map(|k| Vertex { id: format!("E{}", k + 1), self_int, genus: 0 }).collect()
}

fn path(n: usize) -> Vec<Edge> {
    (1..n).map(|k| Edge { i: k - 1, j: k, mult: 1 }).collect()
}

pub fn a_n(n: usize) -> Result<ResolutionGraph> {
    if n == 0 {
        return Err(Error::MalformedInput("A_n needs n >= 1".into()));
    }
    ResolutionGraph::new(rational(n, -2), path(n))
}

pub fn d_n(n: usize) -> Result<ResolutionGraph> {
    if n < 4 {
        return Err(Error::MalformedInput("D_n needs n >= 4".into()));
    }
    let mut edges = path(n - 1);
    edges.push(Edge { i: n - 3, j: n - 1, mult: 1 });
    ResolutionGraph::new(rational(n, -2), edges)
}

pub fn e_n(n: usize) -> Result<ResolutionGraph> {
    if !(6..=8).contains(&n) {
        return Err(Error::MalformedInput("E_n needs n in 6..=8".into()));
    }
    let mut edges = path(n - 1);
    edges.push(Edge { i: 2, j: n - 1, mult: 1 });
    ResolutionGraph::new(rational(n, -2), edges)
}

pub fn simple_elliptic(d: i64) -> Result<ResolutionGraph> {
    ResolutionGraph::new(vec![Vertex { id: "E".into(), self_int: -d, genus: 1 }], vec![])
}

/// Cycle of `self_ints.len()` rational curves.
pub fn cusp(self_ints: &[i64]) -> Result<ResolutionGraph> {
    let n = self_ints.len();
    if n < 3 {
        return Err(Error::MalformedInput("cusp cycles need at least 3 curves".into()));
    }
    let vertices = self_ints
        .iter()
        .enumerate()
        .map(|(k, &s)| Vertex { id: format!("E{}", k + 1), self_int: s, genus: 0 })
        .collect();
    let edges = (0..n).map(|k| Edge { i: k, j: (k + 1) % n, mult: 1 }).collect();
    ResolutionGraph::new(vertices, edges)
}

fn num<T: std::str::FromStr>(s: &str, name: &str) -> Result<T> {
    s.parse().map_err(|_| Error::MalformedInput(format!("unknown catalog graph {name:?}")))
}

/// Resolves `A<n>`, `D<n>`, `E6`–`E8`, `simple-elliptic-<d>`, `cusp-<n>`
/// (a cycle of `n` (-3)-curves), and `cone-g<g>-d<d>`.
pub fn graph(name: &str) -> Result<ResolutionGraph> {
    let unknown = || Error::MalformedInput(format!("unknown catalog graph {name:?}"));
    if let Some(rest) = name.strip_prefix("simple-elliptic-") {
        return simple_elliptic(num(rest, name)?);
    }
    if let Some(rest) = name.strip_prefix("cusp-") {
        return cusp(&vec![-3; num::<usize>(rest, name)?]);
    }
    if let Some(rest) = name.strip_prefix("cone-g") {
        let (g, d) = rest.split_once("-d").ok_or_else(unknown)?;
        return curve_cone_graph(num(g, name)?, num(d, name)?);
    }
    let (head, tail) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    match head {
        "A" => a_n(num(tail, name)?),
        "D" => d_n(num(tail, name)?),
        "E" => e_n(num(tail, name)?),
        _ => Err(unknown()),
    }
}

/// `paper-ruled-surface`, `elliptic-cone` (degree 3), or `curve-cone-g<g>-d<d>`.
pub fn cone(name: &str) -> Result<PolarizedCone> {
    match name {
        "paper-ruled-surface" => Ok(PolarizedCone::ruled_surface()),
        "elliptic-cone" => PolarizedCone::curve(1, 3),
        _ => {
            let unknown = || Error::MalformedInput(format!("unknown catalog cone {name:?}"));
            let rest = name.strip_prefix("curve-cone-g").ok_or_else(unknown)?;
            let (g, d) = rest.split_once("-d").ok_or_else(unknown)?;
            PolarizedCone::curve(num(g, name)?, num(d, name)?)
        }
    }
}

/// Listed graph entries with their expected classification.
pub fn graph_entries() -> Vec<Entry> {
    let mut out = Vec::new();
    let mut push = |name: String, description: String, class| out.push(Entry { name, description, class });
    for n in 1..=8 {
        push(format!("A{n}"), format!("A_{n} chain of (-2)-curves"), Class::Canonical);
    }
    for n in 4..=8 {
        push(format!("D{n}"), format!("D_{n} tree of (-2)-curves"), Class::Canonical);
    }
    for n in 6..=8 {
        push(format!("E{n}"), format!("E_{n} tree of (-2)-curves"), Class::Canonical);
    }
    for d in 1..=5 {
        push(format!("simple-elliptic-{d}"), format!("elliptic curve of self-intersection -{d}"), Class::LcNotKlt);
    }
    for n in 3..=6 {
        push(format!("cusp-{n}"), format!("cycle of {n} (-3)-curves"), Class::LcNotKlt);
    }
    for (g, d) in [(2, 1), (2, 2), (3, 1), (3, 4)] {
        push(format!("cone-g{g}-d{d}"), format!("cone over a genus {g} curve of degree {d}"), Class::NotLc);
    }
    out
}

pub fn cone_entries() -> Vec<(String, String)> {
    vec![
        (
            "paper-ruled-surface".into(),
            "ruled surface over an elliptic curve from a semistable rank 2 degree 0 bundle, H = C0 + F".into(),
        ),
        ("elliptic-cone".into(), "cone over an elliptic curve of degree 3".into()),
        ("curve-cone-g<g>-d<d>".into(), "cone over a genus g curve of degree d".into()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::volume;
    use num::{Signed, Zero};

    #[test]
    fn every_entry_validates_and_matches_its_class() {
        for e in graph_entries() {
            let g = graph(&e.name).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            let r = g.discrepancy_report().unwrap();
            let v = volume(&g).unwrap();
            match e.class {
                Class::Canonical => {
                    assert!(r.b.iter().all(Zero::is_zero), "{}", e.name);
                    assert!(v.volume.is_zero());
                }
                Class::LcNotKlt => {
                    assert!(r.is_lc && r.ell.iter().any(Zero::is_zero), "{}", e.name);
                    assert!(v.volume.is_zero());
                }
                Class::NotLc => {
                    assert!(!r.is_lc, "{}", e.name);
                    assert!(v.volume.is_positive());
                }
            }
        }
    }

    #[test]
    fn shapes() {
        assert_eq!(graph("D4").unwrap().edges().len(), 3);
        assert_eq!(graph("E8").unwrap().len(), 8);
        assert_eq!(graph("E8").unwrap().form().determinant(), crate::lattice::qi(1));
        assert_eq!(graph("A3").unwrap().form().determinant(), crate::lattice::qi(-4));
        assert!(graph("E9").is_err());
        assert!(graph("F4").is_err());
        assert!(graph("cone-g2").is_err());
        assert!(cone("nope").is_err());
        assert!(cone("curve-cone-g2-d1").is_ok());
    }
}
