//! Cone singularities `X = C(V, H)` over a polarized smooth variety with
//! polyhedral numerical data.
//!
//! The blowup of the vertex `Y → X` has exceptional divisor `E ≅ V` with
//! co-normal bundle `O_V(H)`. A boundary on `X` that is a cone `C_Δ` has
//! `K_V + Δ ≡ a·H` and log discrepancy `-a` along `E`.
//!
//! Intersections on `Y` follow from the co-normal identity:
//! `E^n = (-H)^{n-1}`, `E^{n-1}·π*α = (-H)^{n-2}·α`, and products with two
//! or more pulled-back classes reduce to intersections on `V` (or vanish).

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::envelope::volume;
use crate::error::{Error, Result};
use crate::graph::{ResolutionGraph, Vertex};
use crate::lattice::{add, dot, format_rational, q, qi, qserde, scale, QVector, Rational, SymForm};
use crate::lp::{minimize, LpOutcome};
use crate::polyhedral::PolyCone;

/// A class with a unique effective representative along its ray:
/// every effective divisor numerically equal to `t·class` (`t > 0`) is
/// `Σ t·c_k C_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rigid {
    #[serde(with = "qserde::vec")]
    pub class: QVector,
    pub only_rep: Vec<RepComponent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepComponent {
    pub component: String,
    #[serde(with = "qserde")]
    pub coeff: Rational,
}

/// On-disk cone document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    #[serde(rename = "dim_X")]
    pub dim_x: u32,
    pub num_basis: Vec<String>,
    #[serde(with = "qserde::matrix")]
    pub form: Vec<QVector>,
    #[serde(with = "qserde::matrix")]
    pub nef_gens: Vec<QVector>,
    #[serde(with = "qserde::matrix")]
    pub pseff_gens: Vec<QVector>,
    #[serde(rename = "K_V", with = "qserde::vec")]
    pub k_v: QVector,
    #[serde(rename = "H", with = "qserde::vec")]
    pub h: QVector,
    #[serde(default)]
    pub rigid: Vec<Rigid>,
}

#[derive(Debug, Clone)]
pub struct PolarizedCone {
    doc: ConeDoc,
    form: SymForm,
    nef: PolyCone,
    pseff: PolyCone,
}

/// Class of `Δ ≡ -K_V + a·H` with its effectivity flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryClass {
    #[serde(with = "qserde")]
    pub a: Rational,
    #[serde(with = "qserde::vec")]
    pub class: QVector,
    pub effective: bool,
    /// On a facet of the pseudo-effective cone.
    pub on_boundary: bool,
    /// Unique effective representative, when a rigidity annotation applies.
    pub rigid_rep: Option<Vec<RepComponent>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Existence {
    True,
    False,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub reason: String,
    /// Named classes involved, as `(label, class)` with `"p/q"` entries.
    pub classes: Vec<(String, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcVerdict {
    pub exists: Existence,
    #[serde(with = "qserde::opt")]
    pub forced_a: Option<Rational>,
    #[serde(with = "qserde::opt")]
    pub witness_a: Option<Rational>,
    pub certificate: Vec<CertificateStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    /// Exact value computed from the input.
    Computed,
    /// An upper bound, not the value itself.
    Bound,
    /// Follows from a cited implication applied to computed values.
    VerdictByCitation,
    /// No finite procedure exists in this tool; nothing is claimed.
    NotComputed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub quantity: String,
    pub statement: String,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    #[serde(with = "qserde")]
    pub a: Rational,
    #[serde(with = "qserde::vec")]
    pub boundary: QVector,
    /// `-(A^{C_Δ}_{Y/X})^n = a^n · H^{n-1}`, an upper bound on `Vol_m`.
    #[serde(with = "qserde")]
    pub bound: Rational,
    /// Smallest bound so far; the liminf of this column bounds `Vol⁺`.
    #[serde(with = "qserde")]
    pub running_min: Rational,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VolPlusReport {
    pub rows: Vec<BoundRow>,
    pub bounds_non_increasing: bool,
    /// Infimum of admissible slopes `a` with an effective boundary.
    #[serde(with = "qserde")]
    pub min_admissible_a: Rational,
    pub lc_boundary: LcVerdict,
    pub verdicts: Vec<Verdict>,
}

impl Verdict {
    fn new(quantity: &str, statement: impl Into<String>, label: Label) -> Self {
        Verdict { quantity: quantity.into(), statement: statement.into(), label }
    }
}

fn text(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn ceil_u64(r: &Rational) -> Result<u64> {
    r.ceil()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("valuation {r} out of range")))
}

impl PolarizedCone {
    pub fn new(doc: ConeDoc) -> Result<Self> {
        let r = doc.num_basis.len();
        let bad = |m: String| Err(Error::InvalidCone(m));
        if doc.dim_x != 2 && doc.dim_x != 3 {
            return bad(format!("dim_X must be 2 or 3, got {}", doc.dim_x));
        }
        if r == 0 {
            return bad("empty num_basis".into());
        }
        if doc.dim_x == 2 && r != 1 {
            return bad("a curve has a rank-1 numerical group".into());
        }
        let lengths_ok = doc
            .nef_gens
            .iter()
            .chain(&doc.pseff_gens)
            .chain([&doc.k_v, &doc.h])
            .all(|v| v.len() == r);
        if !lengths_ok {
            return bad("class length differs from num_basis".into());
        }
        let form = SymForm::new(doc.form.clone())?;
        if form.dim() != r {
            return bad("form dimension differs from num_basis".into());
        }
        let nef = PolyCone::new(doc.nef_gens.clone())?;
        let pseff = PolyCone::new(doc.pseff_gens.clone())?;
        if !nef.generators().iter().all(|g| pseff.contains(g)) {
            return bad("nef cone is not contained in the pseudo-effective cone".into());
        }
        let cone = PolarizedCone { doc, form, nef, pseff };
        let h = &cone.doc.h;
        if !cone.nef.is_interior(h) {
            return bad("H is not in the interior of the nef cone".into());
        }
        for g in cone.pseff.generators() {
            if !cone.degree_against_h(g)?.is_positive() {
                return bad("H is not positive on a pseudo-effective generator".into());
            }
        }
        for rg in &cone.doc.rigid {
            if rg.class.len() != r {
                return bad("rigid class length differs from num_basis".into());
            }
            if let Some(c) = rg.only_rep.iter().find(|c| !cone.doc.num_basis.contains(&c.component)) {
                return bad(format!("rigid component {:?} is not a basis class", c.component));
            }
        }
        Ok(cone)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ConeDoc =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        Self::new(doc)
    }

    /// Ruled surface `P(U)` over an elliptic curve, `U` semistable of rank 2
    /// and degree 0, polarized by `H = C₀ + F`.
    pub fn ruled_surface() -> Self {
        Self::ruled_surface_with(qi(1), qi(1)).expect("built-in cone is valid")
    }

    /// The same surface polarized by `H = x·C₀ + y·F` (`x, y > 0`).
    pub fn ruled_surface_with(x: Rational, y: Rational) -> Result<Self> {
        let e = |k: i64| qi(k);
        Self::new(ConeDoc {
            dim_x: 3,
            num_basis: vec!["C0".into(), "F".into()],
            form: vec![vec![e(0), e(1)], vec![e(1), e(0)]],
            nef_gens: vec![vec![e(1), e(0)], vec![e(0), e(1)]],
            pseff_gens: vec![vec![e(1), e(0)], vec![e(0), e(1)]],
            k_v: vec![e(-2), e(0)],
            h: vec![x, y],
            rigid: vec![Rigid {
                class: vec![e(1), e(0)],
                only_rep: vec![RepComponent { component: "C0".into(), coeff: e(1) }],
            }],
        })
    }

    /// Cone over a smooth curve of genus `g` embedded by a degree `d` divisor.
    pub fn curve(genus: u32, degree: i64) -> Result<Self> {
        Self::new(ConeDoc {
            dim_x: 2,
            num_basis: vec!["pt".into()],
            form: vec![vec![qi(1)]],
            nef_gens: vec![vec![qi(1)]],
            pseff_gens: vec![vec![qi(1)]],
            k_v: vec![qi(2 * genus as i64 - 2)],
            h: vec![qi(degree)],
            rigid: vec![],
        })
    }

    pub fn doc(&self) -> &ConeDoc {
        &self.doc
    }

    pub fn dim_x(&self) -> u32 {
        self.doc.dim_x
    }

    pub fn h(&self) -> &QVector {
        &self.doc.h
    }

    pub fn k_v(&self) -> &QVector {
        &self.doc.k_v
    }

    pub fn pseff(&self) -> &PolyCone {
        &self.pseff
    }

    /// `H^{n-2} · α` on `V`.
    fn degree_against_h(&self, alpha: &[Rational]) -> Result<Rational> {
        match self.doc.dim_x {
            2 => Ok(self.form.entry(0, 0) * &alpha[0]),
            _ => self.form.pair(&self.doc.h, alpha),
        }
    }

    /// `H^{n-1}` on `V`.
    pub fn h_top_power(&self) -> Rational {
        self.degree_against_h(&self.doc.h).expect("validated lengths")
    }

    /// `(x·E + π*α)^n` on `Y`.
    pub fn y_self_intersection(&self, x: &Rational, alpha: &[Rational]) -> Result<Rational> {
        let h_alpha = self.degree_against_h(alpha)?;
        let h_top = self.h_top_power();
        Ok(match self.doc.dim_x {
            // E² = -H, E·π*α = deg α, (π*α)² = 0
            2 => x * x * -h_top + qi(2) * x * h_alpha,
            // E³ = H², E²·π*α = -H·α, E·π*α·π*β = α·β, (π*α)³ = 0
            _ => {
                let aa = self.form.pair(alpha, alpha)?;
                x * x * x * h_top - qi(3) * x * x * h_alpha + qi(3) * x * aa
            }
        })
    }

    fn rigid_rep(&self, class: &[Rational]) -> Option<Vec<RepComponent>> {
        if class.iter().all(Zero::is_zero) {
            return None;
        }
        self.doc.rigid.iter().find_map(|rg| {
            let k = (0..class.len()).find(|&i| !rg.class[i].is_zero())?;
            let t = &class[k] / &rg.class[k];
            if !t.is_positive() || scale(&t, &rg.class) != class {
                return None;
            }
            Some(
                rg.only_rep
                    .iter()
                    .map(|c| RepComponent { component: c.component.clone(), coeff: &t * &c.coeff })
                    .collect(),
            )
        })
    }

    /// `Δ ≡ -K_V + a·H`, flagged by an exact LP membership test.
    pub fn boundary_class(&self, a: &Rational) -> BoundaryClass {
        let neg_k: QVector = self.doc.k_v.iter().map(|x| -x).collect();
        let class = add(&neg_k, &scale(a, &self.doc.h));
        let effective = self.pseff.contains_lp(&class);
        let on_boundary = effective && self.pseff.facets().iter().any(|n| dot(n, &class).is_zero());
        let rigid_rep = if effective { self.rigid_rep(&class) } else { None };
        BoundaryClass { a: a.clone(), class, effective, on_boundary, rigid_rep }
    }

    /// Coefficient of `E` in `A^{C_Δ}_{Y/X}`: `-a`.
    pub fn cone_log_discrepancy(&self, a: &Rational) -> Result<Rational> {
        let b = self.boundary_class(a);
        if !b.effective {
            return Err(Error::NoBoundary(format!(
                "-K_V + ({})·H is not pseudo-effective",
                format_rational(a)
            )));
        }
        Ok(-a.clone())
    }

    /// `-(A^{C_Δ}_{Y/X})^n = -(-a·E)^n = a^n · H^{n-1}`.
    pub fn vol_upper_bound(&self, a: &Rational) -> Result<Rational> {
        if !a.is_positive() {
            return Err(Error::Domain(format!("slope a = {} must be positive", format_rational(a))));
        }
        self.cone_log_discrepancy(a)?;
        let zero = vec![Rational::zero(); self.doc.h.len()];
        Ok(-self.y_self_intersection(&-a.clone(), &zero)?)
    }

    /// `v♮_E(k·C_D) = min { j >= 0 : j·H - k·D effective }`.
    pub fn natural_valuation(&self, d: &[Rational], k: u64) -> Result<u64> {
        if d.len() != self.doc.h.len() {
            return Err(Error::MalformedInput("class length differs from num_basis".into()));
        }
        if k == 0 {
            return Err(Error::Domain("k must be positive".into()));
        }
        let kd = scale(&qi(k as i64), d);
        // facet pairings of H and kD, so that n·(jH - kD) = j·(n·H) - n·kD
        let pairings: Vec<(Rational, Rational)> =
            self.pseff.facets().iter().map(|n| (dot(n, &self.doc.h), dot(n, &kd))).collect();
        let member = |j: u64| {
            let j = qi(j as i64);
            pairings.iter().all(|(nh, nd)| &j * nh >= *nd)
        };
        // H is interior, so j·H - kD is effective for all large j
        let hi = ceil_u64(&self.pseff.min_shift(&self.doc.h, &kd))?;
        if !member(hi) || !self.pseff.contains(&add(&scale(&qi(hi as i64), &self.doc.h), &scale(&qi(-1), &kd))) {
            return Err(Error::Internal("valuation search bound is not effective".into()));
        }
        let (mut lo, mut hi) = (0u64, hi);
        if member(lo) {
            return Ok(0);
        }
        // member(lo) false, member(hi) true
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if member(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }

    /// `inf_k v♮(kD)/k`, as the LP optimum `min { t >= 0 : t·H - D effective }`.
    pub fn valuation_limit(&self, d: &[Rational]) -> Result<Rational> {
        if d.len() != self.doc.h.len() {
            return Err(Error::MalformedInput("class length differs from num_basis".into()));
        }
        self.pseff.min_shift_lp(&self.doc.h, d)
    }

    /// `E`-coefficient of `A_{m,Y/X}`: `-(1/m)·v♮_E(m·K_X)`, using
    /// `K_Y + E = π*K_V`.
    pub fn limiting_discrepancy(&self, m: u64) -> Result<Rational> {
        let v = self.natural_valuation(&self.doc.k_v, m)?;
        Ok(-q(v as i64, m as i64))
    }

    /// The `a` with `K_V ≡ a·H`, if `K_V` is proportional to `H`.
    pub fn slope_without_boundary(&self) -> Option<Rational> {
        let h = &self.doc.h;
        let k = (0..h.len()).find(|&i| !h[i].is_zero())?;
        let a = &self.doc.k_v[k] / &h[k];
        (scale(&a, h) == self.doc.k_v).then_some(a)
    }

    /// Decides whether some cone boundary `C_Δ` makes `(X, C_Δ)` log canonical.
    ///
    /// Log canonicity forces `a <= 0`; effectivity of `Δ` forces
    /// `a >= a_min`. When the two pin `a = 0`, the pinned class `-K_V` is
    /// settled by its rigidity annotation, or left unknown without one.
    pub fn lc_boundary_exists(&self) -> Result<LcVerdict> {
        let neg_k: QVector = self.doc.k_v.iter().map(|x| -x).collect();
        let a_min = self.pseff.min_offset_lp(&neg_k, &self.doc.h)?;
        // independent route through the facet inequalities n·(-K + aH) >= 0
        let a_facets = self
            .pseff
            .facets()
            .iter()
            .map(|n| dot(n, &self.doc.k_v) / dot(n, &self.doc.h))
            .max()
            .expect("cones have facets");
        if a_min != a_facets {
            return Err(Error::Internal("LP and facet slopes disagree".into()));
        }
        let class_of = |a: &Rational| text(&add(&neg_k, &scale(a, &self.doc.h)));
        let mut certificate = vec![
            CertificateStep {
                reason: format!(
                    "effectivity: Δ ≡ -K_V + a·H lies in the pseudo-effective cone only for a >= {}",
                    format_rational(&a_min)
                ),
                classes: vec![("-K_V".into(), text(&neg_k)), ("H".into(), text(&self.doc.h))],
            },
            CertificateStep {
                reason: "log canonicity: A_{Y/X} = -a·E >= 0 forces a <= 0".into(),
                classes: vec![],
            },
        ];
        let verdict = |exists, forced_a, witness_a, certificate| LcVerdict {
            exists,
            forced_a,
            witness_a,
            certificate,
        };

        if a_min.is_positive() {
            certificate.push(CertificateStep {
                reason: format!("contradiction: a >= {} > 0 and a <= 0", format_rational(&a_min)),
                classes: vec![],
            });
            return Ok(verdict(Existence::False, None, None, certificate));
        }
        if a_min.is_zero() {
            let pinned = self.boundary_class(&Rational::zero());
            if pinned.class.iter().all(Zero::is_zero) {
                certificate.push(CertificateStep {
                    reason: "a = 0 pins Δ ≡ 0; the empty boundary is log canonical".into(),
                    classes: vec![("Δ".into(), class_of(&Rational::zero()))],
                });
                return Ok(verdict(Existence::True, Some(Rational::zero()), Some(Rational::zero()), certificate));
            }
            return Ok(match pinned.rigid_rep {
                Some(rep) => {
                    let bad = rep.iter().find(|c| c.coeff > Rational::one());
                    let rep_text = rep
                        .iter()
                        .map(|c| format!("{}·{}", format_rational(&c.coeff), c.component))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    match bad {
                        Some(c) => {
                            certificate.push(CertificateStep {
                                reason: format!(
                                    "rigidity: a = 0 pins Δ ≡ -K_V, whose only effective representative is {rep_text}; coefficient {} > 1 along {} is not log canonical",
                                    format_rational(&c.coeff),
                                    c.component
                                ),
                                classes: vec![("Δ".into(), class_of(&Rational::zero()))],
                            });
                            verdict(Existence::False, Some(Rational::zero()), None, certificate)
                        }
                        None => {
                            certificate.push(CertificateStep {
                                reason: format!("rigidity: a = 0 pins Δ = {rep_text}, all coefficients <= 1"),
                                classes: vec![("Δ".into(), class_of(&Rational::zero()))],
                            });
                            verdict(Existence::True, Some(Rational::zero()), Some(Rational::zero()), certificate)
                        }
                    }
                }
                None => {
                    certificate.push(CertificateStep {
                        reason: "a = 0 pins Δ ≡ -K_V, which carries no rigidity annotation".into(),
                        classes: vec![("Δ".into(), class_of(&Rational::zero()))],
                    });
                    verdict(Existence::Unknown, Some(Rational::zero()), None, certificate)
                }
            });
        }

        // a_min < 0: an interval of slopes is available
        if let Some(a) = self.slope_without_boundary().filter(|a| !a.is_positive()) {
            certificate.push(CertificateStep {
                reason: format!("K_V ≡ ({})·H, so Δ = 0 is admissible with a <= 0", format_rational(&a)),
                classes: vec![("K_V".into(), text(&self.doc.k_v))],
            });
            return Ok(verdict(Existence::True, None, Some(a), certificate));
        }
        for rg in &self.doc.rigid {
            // -s·H - t·R = K_V with s, t >= 0
            let a_mat: Vec<QVector> = (0..self.doc.h.len())
                .map(|r| vec![-self.doc.h[r].clone(), -rg.class[r].clone()])
                .collect();
            if let LpOutcome::Optimal { x, .. } = minimize(&a_mat, &self.doc.k_v, &[qi(0), qi(-1)]) {
                let (s, t) = (&x[0], &x[1]);
                if t.is_positive() && rg.only_rep.iter().all(|c| t * &c.coeff <= Rational::one()) {
                    let a = -s.clone();
                    certificate.push(CertificateStep {
                        reason: format!(
                            "a = {} gives a rigid boundary with coefficients <= 1",
                            format_rational(&a)
                        ),
                        classes: vec![("Δ".into(), class_of(&a))],
                    });
                    return Ok(verdict(Existence::True, None, Some(a), certificate));
                }
            }
        }
        certificate.push(CertificateStep {
            reason: "no annotated boundary class with a <= 0 is known to be log canonical".into(),
            classes: vec![],
        });
        Ok(verdict(Existence::Unknown, None, None, certificate))
    }

    /// Upper bounds on `Vol_m(X)` along a slope sequence tending to zero,
    /// with verdicts on `Vol⁺`, `Vol_BdFF` and log canonicity.
    pub fn vol_plus_table(&self, a_seq: &[Rational]) -> Result<VolPlusReport> {
        if a_seq.is_empty() {
            return Err(Error::Domain("empty slope sequence".into()));
        }
        if a_seq.iter().any(|a| !a.is_positive()) {
            return Err(Error::Domain("slopes must be positive".into()));
        }
        if a_seq.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::Domain("slope sequence must be strictly decreasing".into()));
        }
        let mut rows: Vec<BoundRow> = Vec::with_capacity(a_seq.len());
        for a in a_seq {
            let bound = self.vol_upper_bound(a)?;
            let running_min = match rows.last() {
                Some(r) if r.running_min < bound => r.running_min.clone(),
                _ => bound.clone(),
            };
            rows.push(BoundRow {
                a: a.clone(),
                boundary: self.boundary_class(a).class,
                bound,
                running_min,
                label: Label::Bound,
            });
        }
        let bounds_non_increasing = rows.windows(2).all(|w| w[1].bound <= w[0].bound);
        let neg_k: QVector = self.doc.k_v.iter().map(|x| -x).collect();
        let min_admissible_a = self.pseff.min_offset_lp(&neg_k, &self.doc.h)?;
        let lc_boundary = self.lc_boundary_exists()?;
        let n = self.doc.dim_x;

        let mut verdicts = Vec::new();
        let vol_plus_zero = !min_admissible_a.is_positive();
        if vol_plus_zero {
            verdicts.push(Verdict::new(
                "Vol+",
                format!(
                    "Vol+ = 0: every a > 0 admits an effective boundary and Vol_m <= a^{n}·H^{} -> 0",
                    n - 1
                ),
                Label::VerdictByCitation,
            ));
            verdicts.push(Verdict::new(
                "Vol_BdFF",
                "Vol_BdFF(X,0) = 0, since 0 <= Vol_BdFF <= Vol+ = 0",
                Label::VerdictByCitation,
            ));
            verdicts.push(Verdict::new(
                "A_{X/X}",
                "A_{X/X} >= 0, equivalent to Vol_BdFF(X,0) = 0",
                Label::VerdictByCitation,
            ));
        } else {
            let best = self.vol_upper_bound(&min_admissible_a)?;
            verdicts.push(Verdict::new(
                "Vol+",
                format!("Vol+ <= {} (slopes are bounded below by {})", format_rational(&best), format_rational(&min_admissible_a)),
                Label::Bound,
            ));
        }
        match lc_boundary.exists {
            Existence::False => verdicts.push(Verdict::new(
                "log canonical",
                if vol_plus_zero {
                    "no effective boundary makes X log canonical, although A_{X/X} >= 0: X is not log canonical"
                } else {
                    "no effective boundary makes X log canonical"
                },
                Label::Computed,
            )),
            Existence::True => verdicts.push(Verdict::new(
                "log canonical",
                "an lc boundary exists, hence Vol_m(X) = 0 for some m and Vol_BdFF(X,0) = 0",
                Label::VerdictByCitation,
            )),
            Existence::Unknown => verdicts.push(Verdict::new(
                "log canonical",
                "undecided from the numerical and rigidity data",
                Label::NotComputed,
            )),
        }
        verdicts.push(Verdict::new(
            "Vol_m",
            "positivity of Vol_m(X) for each m is not computed; the table holds upper bounds only",
            Label::NotComputed,
        ));
        verdicts.push(Verdict::new(
            "Vol+ vs Vol_BdFF",
            "the b-divisor limit comparison of Vol+ and Vol_BdFF is not computed beyond the bounds above",
            Label::NotComputed,
        ));
        Ok(VolPlusReport { rows, bounds_non_increasing, min_admissible_a, lc_boundary, verdicts })
    }
}

/// `a = 2^{-k}` for `k = 0..=k_max`.
pub fn dyadic_slopes(k_max: u32) -> Vec<Rational> {
    (0..=k_max).map(|k| Rational::new(BigInt::one(), BigInt::from(2).pow(k))).collect()
}

/// Single-vertex graph of the minimal resolution of the cone over a genus
/// `g` curve of degree `d`.
pub fn curve_cone_graph(genus: u32, degree: i64) -> Result<ResolutionGraph> {
    ResolutionGraph::new(vec![Vertex { id: "E".into(), self_int: -degree, genus }], vec![])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DccEntry {
    pub genus: u32,
    pub a: u32,
    pub degree: i64,
    #[serde(with = "qserde")]
    pub volume: Rational,
    #[serde(with = "qserde")]
    pub closed_form: Rational,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DccReport {
    pub g_max: u32,
    pub a_max: u32,
    pub entries: Vec<DccEntry>,
    #[serde(with = "qserde::opt")]
    pub min_positive_volume: Option<Rational>,
    /// `(g, a, d)` attaining the minimum.
    pub witnesses: Vec<(u32, u32, i64)>,
    #[serde(with = "qserde::vec")]
    pub distinct_volumes: Vec<Rational>,
    /// Sorted distinct values ascend strictly from the minimum.
    pub well_ordered: bool,
    pub all_agree: bool,
}

/// Gorenstein cones over curves of genus `2..=g_max` with integral slope
/// `1..=a_max`; volumes come from the graph pipeline, checked against `a²·d`.
pub fn dcc_scan(g_max: u32, a_max: u32) -> Result<DccReport> {
    if g_max < 2 || a_max < 1 {
        return Err(Error::Domain("dcc scan needs g_max >= 2 and a_max >= 1".into()));
    }
    let mut entries = Vec::new();
    for genus in 2..=g_max {
        let two_g_minus_2 = 2 * genus as i64 - 2;
        for a in 1..=a_max {
            let (degree, rem) = two_g_minus_2.div_rem(&(a as i64));
            if rem != 0 {
                continue;
            }
            let vol = volume(&curve_cone_graph(genus, degree)?)?.volume;
            let closed_form = qi(a as i64 * a as i64 * degree);
            entries.push(DccEntry { genus, a, degree, agree: vol == closed_form, volume: vol, closed_form });
        }
    }
    let mut distinct: Vec<Rational> = entries.iter().map(|e| e.volume.clone()).collect();
    distinct.sort();
    distinct.dedup();
    let min_positive_volume = distinct.iter().find(|v| v.is_positive()).cloned();
    let witnesses = entries
        .iter()
        .filter(|e| Some(&e.volume) == min_positive_volume.as_ref())
        .map(|e| (e.genus, e.a, e.degree))
        .collect();
    let well_ordered = distinct.windows(2).all(|w| w[0] < w[1])
        && min_positive_volume.as_ref().is_some_and(|m| distinct.iter().all(|v| v >= m));
    Ok(DccReport {
        g_max,
        a_max,
        all_agree: entries.iter().all(|e| e.agree),
        entries,
        min_positive_volume,
        witnesses,
        distinct_volumes: distinct,
        well_ordered,
    })
}
