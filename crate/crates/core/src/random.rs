//! Seeded generators for random negative definite graphs and blowup towers,
//! and the randomized consistency suite built on them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::envelope::{nef_envelope_trace, zariski_oracle, ORACLE_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{Edge, ResolutionGraph, Vertex};
use crate::lattice::{q, QVector};
use crate::tower::{invariance_report, BlowupStep, Check, ModelTower};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rejection-samples a connected negative definite graph with
/// `1..=max_vertices` vertices.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> ResolutionGraph {
    assert!(max_vertices >= 1);
    loop {
        let n = rng.random_range(1..=max_vertices);
        let vertices: Vec<Vertex> = (0..n)
            .map(|k| {
                let genus = if rng.random_bool(0.75) { 0 } else { rng.random_range(1..=2) };
                Vertex { id: format!("v{k}"), self_int: -rng.random_range(1..=5), genus }
            })
            .collect();
        let mut edges: Vec<Edge> = (1..n)
            .map(|k| Edge {
                i: rng.random_range(0..k),
                j: k,
                mult: if rng.random_bool(0.9) { 1 } else { 2 },
            })
            .collect();
        if n >= 3 && rng.random_bool(0.2) {
            let i = rng.random_range(0..n);
            let j = (i + rng.random_range(1..n)) % n;
            edges.push(Edge { i, j, mult: 1 });
        }
        if let Ok(g) = ResolutionGraph::new(vertices, edges) {
            return g;
        }
    }
}

pub fn random_step<R: Rng>(rng: &mut R, g: &ResolutionGraph) -> BlowupStep {
    if g.edges().is_empty() || rng.random_bool(0.5) {
        BlowupStep::free(g.id(rng.random_range(0..g.len())))
    } else {
        let k = rng.random_range(0..g.edges().len());
        let e = g.edges()[k];
        BlowupStep::satellite(g.id(e.i), g.id(e.j), k)
    }
}

pub fn random_tower<R: Rng>(rng: &mut R, max_vertices: usize, max_steps: usize) -> Result<ModelTower> {
    let base = random_graph(rng, max_vertices);
    let n = rng.random_range(0..=max_steps);
    let mut g = base.clone();
    let mut steps = Vec::with_capacity(n);
    for _ in 0..n {
        let s = random_step(rng, &g);
        g = crate::tower::blow_up(&g, &s)?;
        steps.push(s);
    }
    ModelTower::new(base, steps)
}

/// Rational coefficients `p/q` with `q ∈ 1..=3`, within `[-bound, bound]`.
pub fn random_divisor<R: Rng>(rng: &mut R, len: usize, bound: i64) -> QVector {
    (0..len)
        .map(|_| {
            let d = rng.random_range(1..=3);
            q(rng.random_range(-bound * d..=bound * d), d)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteFailure {
    pub case: usize,
    pub kind: String,
    pub graph: crate::graph::GraphDoc,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    pub envelope_oracle_agree: usize,
    /// Graphs too large for the exhaustive oracle.
    pub envelope_oracle_skipped: usize,
    pub towers_passed: usize,
    pub total_blowups: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For each case: the active-set envelope against the exhaustive oracle on a
/// random divisor, then the invariance report along a random tower of at most
/// three blowups.
pub fn run_suite(count: usize, max_vertices: usize, seed: u64) -> Result<SuiteReport> {
    if max_vertices == 0 {
        return Err(Error::Domain("max-vertices must be at least 1".into()));
    }
    let mut rng = rng(seed);
    let mut report = SuiteReport {
        seed,
        count,
        max_vertices,
        envelope_oracle_agree: 0,
        envelope_oracle_skipped: 0,
        towers_passed: 0,
        total_blowups: 0,
        failures: Vec::new(),
    };
    for case in 0..count {
        let g = random_graph(&mut rng, max_vertices);
        let a = random_divisor(&mut rng, g.len(), 3);
        if g.len() > ORACLE_MAX_VERTICES {
            report.envelope_oracle_skipped += 1;
        } else {
            let fast = nef_envelope_trace(&g, &a)?;
            let slow = zariski_oracle(&g, &a, ORACLE_MAX_VERTICES)?;
            if fast == slow {
                report.envelope_oracle_agree += 1;
            } else {
                report.failures.push(SuiteFailure {
                    case,
                    kind: "envelope_oracle".into(),
                    graph: g.to_doc(),
                    detail: format!("active-set {fast:?} vs oracle {slow:?}"),
                });
            }
        }

        let n = rng.random_range(0..=3);
        let mut top = g.clone();
        let mut steps = Vec::with_capacity(n);
        for _ in 0..n {
            let s = random_step(&mut rng, &top);
            top = crate::tower::blow_up(&top, &s)?;
            steps.push(s);
        }
        report.total_blowups += n;
        let tower = ModelTower::new(g, steps)?;
        let inv = invariance_report(&tower)?;
        if inv.passed {
            report.towers_passed += 1;
        } else {
            let failed: Vec<&Check> = inv.failures().collect();
            report.failures.push(SuiteFailure {
                case,
                kind: "invariance".into(),
                graph: tower.base().to_doc(),
                detail: format!("steps {:?}: {failed:?}", tower.steps()),
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let a: Vec<_> = (0..5).map(|_| random_graph(&mut rng(7), 6).to_doc()).collect();
        let b: Vec<_> = (0..5).map(|_| random_graph(&mut rng(7), 6).to_doc()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn small_suite_passes() {
        let r = run_suite(20, 5, 1).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.envelope_oracle_agree, 20);
    }
}
