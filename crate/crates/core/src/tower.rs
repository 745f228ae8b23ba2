//! Finite towers of point blowups over a resolution graph.
//!
//! Only points on the exceptional locus are blown up: a general point of one
//! curve (`free`) or an intersection point of two curves (`satellite`).

use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::envelope::{nef_envelope_trace, volume};
use crate::error::{Error, Result};
use crate::graph::{Edge, ExcDivisor, GraphDoc, ResolutionGraph, Vertex};
use crate::lattice::{format_rational, format_vector, leq, sub, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum BlowupStep {
    Free { i: String },
    /// `edge` indexes the graph's edge list; that edge must join `i` and `j`.
    Satellite { i: String, j: String, edge: usize },
}

impl BlowupStep {
    pub fn free(i: impl Into<String>) -> Self {
        BlowupStep::Free { i: i.into() }
    }

    pub fn satellite(i: impl Into<String>, j: impl Into<String>, edge: usize) -> Self {
        BlowupStep::Satellite { i: i.into(), j: j.into(), edge }
    }

    /// Vertex indices of the centre's curves in `g`.
    fn centre(&self, g: &ResolutionGraph) -> Result<Vec<usize>> {
        let find = |id: &str| {
            g.index_of(id).ok_or_else(|| Error::InvalidStep(format!("unknown vertex {id:?}")))
        };
        match self {
            BlowupStep::Free { i } => Ok(vec![find(i)?]),
            BlowupStep::Satellite { i, j, edge } => {
                let (a, b) = (find(i)?, find(j)?);
                let e = g
                    .edges()
                    .get(*edge)
                    .ok_or_else(|| Error::InvalidStep(format!("edge index {edge} out of range")))?;
                if !((e.i == a && e.j == b) || (e.i == b && e.j == a)) {
                    return Err(Error::InvalidStep(format!(
                        "edge {edge} does not join {i:?} and {j:?}"
                    )));
                }
                Ok(vec![a, b])
            }
        }
    }
}

fn fresh_id(g: &ResolutionGraph) -> String {
    (g.len()..)
        .map(|k| format!("x{k}"))
        .find(|id| g.index_of(id).is_none())
        .expect("unbounded id space")
}

/// Blow up a point of the exceptional locus. The new (-1)-curve is appended
/// as the last vertex.
pub fn blow_up(g: &ResolutionGraph, step: &BlowupStep) -> Result<ResolutionGraph> {
    let centre = step.centre(g)?;
    let mut vertices: Vec<Vertex> = g.vertices().to_vec();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    let new = vertices.len();
    if let BlowupStep::Satellite { edge, .. } = step {
        edges[*edge].mult -= 1;
        if edges[*edge].mult == 0 {
            edges.remove(*edge);
        }
    }
    for &c in &centre {
        vertices[c].self_int -= 1;
        edges.push(Edge { i: new, j: c, mult: 1 });
    }
    vertices.push(Vertex { id: fresh_id(g), self_int: -1, genus: 0 });
    ResolutionGraph::new(vertices, edges)
        .map_err(|e| Error::Internal(format!("blowup produced an invalid graph: {e}")))
}

fn check_len(g: &ResolutionGraph, d: &[Rational]) -> Result<()> {
    if d.len() != g.len() {
        return Err(Error::MalformedInput(format!(
            "divisor has {} coefficients for {} vertices",
            d.len(),
            g.len()
        )));
    }
    Ok(())
}

/// Total transform: the new coefficient is the multiplicity of `D` at the centre.
pub fn pullback(g: &ResolutionGraph, step: &BlowupStep, d: &[Rational]) -> Result<ExcDivisor> {
    check_len(g, d)?;
    let centre = step.centre(g)?;
    let mut out = d.to_vec();
    out.push(centre.iter().map(|&c| &d[c]).sum());
    Ok(out)
}

/// Drops the coefficient of the curve created by `step`.
pub fn pushforward(g_up: &ResolutionGraph, d: &[Rational], _step: &BlowupStep) -> Result<ExcDivisor> {
    check_len(g_up, d)?;
    let last = g_up.vertices().last().expect("graphs are non-empty");
    if last.self_int != -1 || last.genus != 0 {
        return Err(Error::InvalidStep("top vertex is not a blowup curve".into()));
    }
    Ok(d[..d.len() - 1].to_vec())
}

/// `B' = pullback(B) - E_new`, from `K_{Y'} = g*K_Y + E_new`.
pub fn transform_discrepancy(g: &ResolutionGraph, step: &BlowupStep, b: &[Rational]) -> Result<ExcDivisor> {
    let mut out = pullback(g, step, b)?;
    *out.last_mut().expect("pullback appends") -= Rational::one();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerDoc {
    pub base: GraphDoc,
    #[serde(default)]
    pub steps: Vec<BlowupStep>,
}

#[derive(Debug, Clone)]
pub struct ModelTower {
    steps: Vec<BlowupStep>,
    models: Vec<ResolutionGraph>,
}

impl ModelTower {
    pub fn new(base: ResolutionGraph, steps: Vec<BlowupStep>) -> Result<Self> {
        let mut models = vec![base];
        for step in &steps {
            let next = blow_up(models.last().expect("non-empty"), step)?;
            models.push(next);
        }
        Ok(ModelTower { steps, models })
    }

    pub fn from_doc(doc: TowerDoc) -> Result<Self> {
        Self::new(ResolutionGraph::from_doc(doc.base)?, doc.steps)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TowerDoc =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        Self::from_doc(doc)
    }

    pub fn to_doc(&self) -> TowerDoc {
        TowerDoc { base: self.base().to_doc(), steps: self.steps.clone() }
    }

    pub fn base(&self) -> &ResolutionGraph {
        &self.models[0]
    }

    pub fn top(&self) -> &ResolutionGraph {
        self.models.last().expect("non-empty")
    }

    pub fn steps(&self) -> &[BlowupStep] {
        &self.steps
    }

    pub fn models(&self) -> &[ResolutionGraph] {
        &self.models
    }
}

/// One comparison in an invariance report; both sides are kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    /// Index of the lower model of the comparison.
    pub level: usize,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub volumes: Vec<String>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl InvarianceReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn vec_text(v: &[Rational]) -> String {
    format!("[{}]", format_vector(v).join(", "))
}

fn eq_check(name: &'static str, level: usize, lhs: &[Rational], rhs: &[Rational]) -> Check {
    Check { name, level, passed: lhs == rhs, lhs: vec_text(lhs), rhs: vec_text(rhs) }
}

/// Compares every consecutive pair of models: volume, envelope pullback,
/// negativity, discrepancy transform, and two-step composition.
pub fn invariance_report(tower: &ModelTower) -> Result<InvarianceReport> {
    let models = tower.models();
    let mut checks = Vec::new();
    let mut vols = Vec::with_capacity(models.len());
    let mut envs = Vec::with_capacity(models.len());
    let mut bs = Vec::with_capacity(models.len());
    for g in models {
        let v = volume(g)?;
        envs.push(nef_envelope_trace(g, &v.log_discrepancy)?);
        bs.push(g.mumford_pullback_canonical()?);
        vols.push(v);
    }

    for (k, step) in tower.steps().iter().enumerate() {
        let (g, g_up) = (&models[k], &models[k + 1]);
        checks.push(Check {
            name: "volume_constant",
            level: k,
            passed: vols[k].volume == vols[k + 1].volume,
            lhs: format_rational(&vols[k + 1].volume),
            rhs: format_rational(&vols[k].volume),
        });
        let p_pulled = pullback(g, step, &envs[k].p)?;
        checks.push(eq_check("envelope_pullback", k, &envs[k + 1].p, &p_pulled));
        checks.push(Check {
            name: "negativity",
            level: k,
            passed: leq(&envs[k + 1].p, &p_pulled),
            lhs: vec_text(&envs[k + 1].p),
            rhs: vec_text(&p_pulled),
        });
        let b_transformed = transform_discrepancy(g, step, &bs[k])?;
        checks.push(eq_check("discrepancy_transform", k, &bs[k + 1], &b_transformed));

        let a = &vols[k].log_discrepancy;
        let growth = sub(&vols[k + 1].log_discrepancy, &pullback(g, step, a)?);
        checks.push(Check {
            name: "log_discrepancy_growth",
            level: k,
            passed: growth.iter().all(|x| !x.is_negative()),
            lhs: vec_text(&growth),
            rhs: "0".into(),
        });
        for (name, d) in [("pushforward_pullback_p", &envs[k].p), ("pushforward_pullback_a", a)] {
            let round = pushforward(g_up, &pullback(g, step, d)?, step)?;
            checks.push(eq_check(name, k, &round, d));
        }
        if k >= 1 {
            let two = transform_discrepancy(
                &models[k],
                step,
                &transform_discrepancy(&models[k - 1], &tower.steps()[k - 1], &bs[k - 1])?,
            )?;
            checks.push(eq_check("composition", k - 1, &bs[k + 1], &two));
        }
    }
    if tower.steps().len() >= 2 {
        let mut b = bs[0].clone();
        for (k, step) in tower.steps().iter().enumerate() {
            b = transform_discrepancy(&models[k], step, &b)?;
        }
        checks.push(eq_check("composition_full", 0, bs.last().expect("non-empty"), &b));
    }
    Ok(InvarianceReport {
        volumes: vols.iter().map(|v| format_rational(&v.volume)).collect(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
