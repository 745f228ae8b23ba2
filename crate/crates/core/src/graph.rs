//! Weighted dual graphs of surface resolutions and their discrepancies.
//!
//! A divisor supported on the exceptional locus is a [`QVector`] indexed by
//! the graph's vertex order.

use std::collections::{BTreeMap, VecDeque};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{format_rational, qi, zeros, QVector, Rational, SymForm};

/// Coefficient vector of an exceptional divisor, in vertex order.
pub type ExcDivisor = QVector;

/// Vertex ids may be written as strings or bare integers.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Token {
    Str(String),
    Int(i64),
}

impl From<Token> for String {
    fn from(t: Token) -> String {
        match t {
            Token::Str(s) => s,
            Token::Int(n) => n.to_string(),
        }
    }
}

fn token<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<String, D::Error> {
    Token::deserialize(d).map(String::from)
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Vertex {
    #[serde(deserialize_with = "token")]
    pub id: String,
    pub self_int: i64,
    #[serde(default)]
    pub genus: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    #[serde(deserialize_with = "token")]
    pub i: String,
    #[serde(deserialize_with = "token")]
    pub j: String,
    #[serde(default = "one")]
    pub mult: u32,
}

/// On-disk graph document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<Vertex>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub mult: u32,
}

/// A validated resolution graph: connected, with negative definite
/// intersection matrix. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: BTreeMap<String, usize>,
    form: SymForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    /// `f*K_X = K_Y + B`.
    pub b: ExcDivisor,
    /// Log discrepancies `1 - b_i`.
    pub ell: ExcDivisor,
    pub is_lc: bool,
    /// Vertex indices with negative log discrepancy.
    pub lc_mod_support: Vec<usize>,
}

impl ResolutionGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        let mut index = BTreeMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if v.self_int > -1 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {:?} has self-intersection {} (must be <= -1)",
                    v.id, v.self_int
                )));
            }
            if index.insert(v.id.clone(), k).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let mut m: Vec<Vec<Rational>> = vec![zeros(n); n];
        let mut adj = vec![Vec::new(); n];
        for (k, v) in vertices.iter().enumerate() {
            m[k][k] = qi(v.self_int);
        }
        for e in &edges {
            if e.i >= n || e.j >= n {
                return Err(Error::InvalidGraph("edge references a missing vertex".into()));
            }
            if e.i == e.j {
                return Err(Error::InvalidGraph(format!("self-loop at {:?}", vertices[e.i].id)));
            }
            if e.mult == 0 {
                return Err(Error::InvalidGraph("edge multiplicity must be positive".into()));
            }
            let w = qi(e.mult as i64);
            m[e.i][e.j] += &w;
            m[e.j][e.i] += &w;
            adj[e.i].push(e.j);
            adj[e.j].push(e.i);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidGraph(format!(
                "graph is disconnected (vertex {:?} unreachable)",
                vertices[k].id
            )));
        }
        let form = SymForm::new(m)?;
        if !form.is_negative_definite() {
            return Err(Error::InvalidGraph("intersection matrix is not negative definite".into()));
        }
        Ok(ResolutionGraph { vertices, edges, index, form })
    }

    pub fn from_doc(doc: GraphDoc) -> Result<Self> {
        let ids: BTreeMap<&str, usize> =
            doc.vertices.iter().enumerate().map(|(k, v)| (v.id.as_str(), k)).collect();
        let lookup = |id: &str| {
            ids.get(id)
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("edge references unknown vertex {id:?}")))
        };
        let edges = doc
            .edges
            .iter()
            .map(|e| Ok(Edge { i: lookup(&e.i)?, j: lookup(&e.j)?, mult: e.mult }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.vertices, edges)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        Self::from_doc(doc)
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    i: self.vertices[e.i].id.clone(),
                    j: self.vertices[e.j].id.clone(),
                    mult: e.mult,
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn form(&self) -> &SymForm {
        &self.form
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn id(&self, k: usize) -> &str {
        &self.vertices[k].id
    }

    pub fn ids(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&k| self.vertices[k].id.clone()).collect()
    }

    /// Id → "p/q" map in vertex order, for reports.
    pub fn labelled(&self, d: &[Rational]) -> Vec<(String, String)> {
        self.vertices.iter().zip(d).map(|(v, c)| (v.id.clone(), format_rational(c))).collect()
    }

    /// `D · E_j` for every vertex `j`.
    pub fn intersections(&self, d: &[Rational]) -> Result<QVector> {
        self.form.apply(d)
    }

    /// `K_Y · E_j = 2g_j - 2 - E_j²` by adjunction on a smooth component.
    pub fn canonical_intersections(&self) -> QVector {
        self.vertices
            .iter()
            .map(|v| qi(2 * v.genus as i64 - 2 - v.self_int))
            .collect()
    }

    /// `K_Y` is nef over the base, i.e. there are no rational (-1)-curves.
    pub fn is_minimal(&self) -> bool {
        self.canonical_intersections().iter().all(|k| !k.is_negative())
    }

    /// The exceptional part `B` of `f*K_X = K_Y + B`, characterised by
    /// `(K_Y + B) · E_j = 0` for every exceptional curve.
    pub fn mumford_pullback_canonical(&self) -> Result<ExcDivisor> {
        let k = self.canonical_intersections();
        let rhs: QVector = k.iter().map(|x| -x).collect();
        let b = self.form.solve(&rhs)?;
        let check = self.form.apply(&b)?;
        if check.iter().zip(&k).any(|(mb, kj)| !(mb + kj).is_zero()) {
            return Err(Error::Internal("numerical pullback does not annihilate E_j".into()));
        }
        // negativity lemma: -B is nef-anti-effective when K_Y is relatively nef
        if self.is_minimal() && b.iter().any(|x| x.is_negative()) {
            return Err(Error::Internal(
                "negative discrepancy coefficient on a minimal resolution".into(),
            ));
        }
        Ok(b)
    }

    /// Trace of `A_{Y/X} = K_Y + E - f*K_X`: coefficients `1 - b_i`.
    pub fn log_discrepancy_divisor(&self) -> Result<ExcDivisor> {
        let b = self.mumford_pullback_canonical()?;
        Ok(b.iter().map(|x| Rational::one() - x).collect())
    }

    pub fn is_log_canonical(&self) -> Result<bool> {
        Ok(self.log_discrepancy_divisor()?.iter().all(|l| !l.is_negative()))
    }

    /// Curves surviving on the log canonical modification: `b_i > 1`.
    pub fn lc_modification_support(&self) -> Result<Vec<usize>> {
        Ok(self.discrepancy_report()?.lc_mod_support)
    }

    pub fn discrepancy_report(&self) -> Result<DiscrepancyReport> {
        let b = self.mumford_pullback_canonical()?;
        let ell: QVector = b.iter().map(|x| Rational::one() - x).collect();
        let lc_mod_support: Vec<usize> =
            (0..ell.len()).filter(|&k| ell[k].is_negative()).collect();
        if !lc_mod_support.is_empty() && !b.iter().any(|x| x > &Rational::one()) {
            return Err(Error::Internal("non-lc graph without a coefficient b_i > 1".into()));
        }
        Ok(DiscrepancyReport { is_lc: lc_mod_support.is_empty(), b, ell, lc_mod_support })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{q, qvec};

    pub(crate) fn single(self_int: i64, genus: u32) -> ResolutionGraph {
        ResolutionGraph::new(vec![Vertex { id: "E".into(), self_int, genus }], vec![]).unwrap()
    }

    fn chain(self_ints: &[(i64, u32)]) -> ResolutionGraph {
        let vertices = self_ints
            .iter()
            .enumerate()
            .map(|(k, &(s, g))| Vertex { id: format!("v{k}"), self_int: s, genus: g })
            .collect();
        let edges = (1..self_ints.len()).map(|k| Edge { i: k - 1, j: k, mult: 1 }).collect();
        ResolutionGraph::new(vertices, edges).unwrap()
    }

    fn cycle(n: usize, self_int: i64) -> ResolutionGraph {
        let vertices = (0..n).map(|k| Vertex { id: format!("c{k}"), self_int, genus: 0 }).collect();
        let edges = (0..n).map(|k| Edge { i: k, j: (k + 1) % n, mult: 1 }).collect();
        ResolutionGraph::new(vertices, edges).unwrap()
    }

    #[test]
    fn canonical_intersection_examples() {
        assert_eq!(single(-2, 0).canonical_intersections(), qvec(&[0]));
        assert_eq!(single(-1, 2).canonical_intersections(), qvec(&[3]));
        assert_eq!(chain(&[(-2, 0), (-2, 0)]).canonical_intersections(), qvec(&[0, 0]));
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(single(-2, 0).mumford_pullback_canonical().unwrap(), qvec(&[0]));
        assert_eq!(single(-1, 2).mumford_pullback_canonical().unwrap(), qvec(&[3]));
        for g in 0..5u32 {
            for d in 1..7i64 {
                if g == 0 && d == 1 {
                    continue;
                }
                let b = single(-d, g).mumford_pullback_canonical().unwrap();
                assert_eq!(b, vec![q(2 * g as i64 - 2 + d, d)]);
            }
        }
    }

    #[test]
    fn log_discrepancy_examples() {
        assert_eq!(single(-2, 0).log_discrepancy_divisor().unwrap(), qvec(&[1]));
        assert_eq!(single(-1, 1).log_discrepancy_divisor().unwrap(), qvec(&[0]));
        for d in 1..6 {
            assert_eq!(single(-d, 2).log_discrepancy_divisor().unwrap(), vec![q(-2, d)]);
        }
    }

    #[test]
    fn lc_examples() {
        assert!(single(-2, 0).is_log_canonical().unwrap());
        let cusp = cycle(3, -3);
        assert!(cusp.is_log_canonical().unwrap());
        assert_eq!(cusp.log_discrepancy_divisor().unwrap(), qvec(&[0, 0, 0]));
        assert!(!single(-1, 2).is_log_canonical().unwrap());
    }

    #[test]
    fn lc_modification_examples() {
        assert!(single(-2, 0).lc_modification_support().unwrap().is_empty());
        assert_eq!(single(-1, 2).lc_modification_support().unwrap(), vec![0]);
        // M = [[-2,1],[1,-2]], k = [4,0]: b = [8/3, 4/3], ell = [-5/3, -1/3]
        let g = chain(&[(-2, 2), (-2, 0)]);
        let r = g.discrepancy_report().unwrap();
        assert_eq!(r.b, vec![q(8, 3), q(4, 3)]);
        assert_eq!(r.ell, vec![q(-5, 3), q(-1, 3)]);
        assert_eq!(r.lc_mod_support, vec![0, 1]);
    }

    #[test]
    fn rejects_invalid_graphs() {
        let v = |id: &str, s| Vertex { id: id.into(), self_int: s, genus: 0 };
        assert!(ResolutionGraph::new(vec![], vec![]).is_err());
        assert!(ResolutionGraph::new(vec![v("a", 0)], vec![]).is_err());
        assert!(ResolutionGraph::new(vec![v("a", -2), v("a", -2)], vec![]).is_err());
        // disconnected
        assert!(ResolutionGraph::new(vec![v("a", -2), v("b", -2)], vec![]).is_err());
        // (-1)-(-1) chain is not negative definite
        let e = vec![Edge { i: 0, j: 1, mult: 1 }];
        assert!(matches!(
            ResolutionGraph::new(vec![v("a", -1), v("b", -1)], e),
            Err(Error::InvalidGraph(_))
        ));
        assert!(ResolutionGraph::new(vec![v("a", -2)], vec![Edge { i: 0, j: 0, mult: 1 }]).is_err());
    }

    #[test]
    fn json_schema() {
        let g = ResolutionGraph::from_json(
            r#"{"vertices":[{"id":"a","self_int":-2,"genus":0},{"id":1,"self_int":-2,"genus":0}],
                "edges":[{"i":"a","j":1,"mult":1}]}"#,
        )
        .unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.index_of("1"), Some(1));
        let unknown = r#"{"vertices":[{"id":"a","self_int":-2,"genus":0,"x":1}],"edges":[]}"#;
        assert!(matches!(ResolutionGraph::from_json(unknown), Err(Error::MalformedInput(_))));
        let top = r#"{"vertices":[{"id":"a","self_int":-2,"genus":0}],"edges":[],"extra":0}"#;
        assert!(ResolutionGraph::from_json(top).is_err());
        let missing = r#"{"vertices":[{"id":"a","self_int":-2}],"edges":[{"i":"a","j":"z","mult":1}]}"#;
        assert!(matches!(ResolutionGraph::from_json(missing), Err(Error::InvalidGraph(_))));
        let round = ResolutionGraph::from_doc(g.to_doc()).unwrap();
        assert_eq!(round, g);
    }
}
